//! Scene data model: nested plot nodes, transforms, axes, layers, graphs,
//! styles and annotations, plus property-path mutation and batching.
//!
//! Scenes are immutable once built. Mutation goes through
//! [`apply_change`], which returns a fresh scene together with a
//! [`ChangeRecord`] naming the components a renderer must redraw.

mod change;
mod error;
mod model;
mod path;
mod session;
mod tree;
mod validate;

pub use change::{apply_change, apply_changes, node_components, ChangeRecord, ComponentId};
pub use error::{ErrorCode, SceneError};
pub use model::*;
pub use path::{enumerate_paths, resolve, FieldHandle, FieldKind, PropertyPath, Segment};
pub use session::{Publication, SceneSession, Snapshot};
pub use tree::property_tree;
pub use validate::{check, normalize, validate};

use crate::spec::SpecDoc;

/// Builds a validated scene from a parsed spec document.
pub fn build_scene(spec: SpecDoc) -> Result<Scene, SceneError> {
    let mut scene = Scene { plots: spec.plots };
    normalize(&mut scene);
    check(&scene)?;
    Ok(scene)
}

/// Property path addressing the node with `id`, e.g. `plots[0].children[1]`.
pub fn node_path(scene: &Scene, id: &str) -> Option<PropertyPath> {
    fn go(n: &PlotNode, id: &str, at: PropertyPath) -> Option<PropertyPath> {
        if n.id == id {
            return Some(at);
        }
        n.children
            .iter()
            .enumerate()
            .find_map(|(i, c)| go(c, id, at.clone().field("children").index(i)))
    }
    scene
        .plots
        .iter()
        .enumerate()
        .find_map(|(i, p)| go(p, id, PropertyPath::root().field("plots").index(i)))
}
