use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

use super::error::{ErrorCode, SceneError};
use super::model::{PlotNode, Scene};
use super::path::{FieldKind, PropertyPath, Segment};
use super::validate;

/// One independently cached piece of rendered output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "component", rename_all = "snake_case")]
pub enum ComponentId {
    Layer { node: String, layer: String },
    Axis { node: String, index: usize },
    Annotations { node: String },
    Decoration { node: String },
}

impl ComponentId {
    pub fn node(&self) -> &str {
        match self {
            ComponentId::Layer { node, .. }
            | ComponentId::Axis { node, .. }
            | ComponentId::Annotations { node }
            | ComponentId::Decoration { node } => node,
        }
    }
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentId::Layer { node, layer } => write!(f, "{node}/layer:{layer}"),
            ComponentId::Axis { node, index } => write!(f, "{node}/axis:{index}"),
            ComponentId::Annotations { node } => write!(f, "{node}/annotations"),
            ComponentId::Decoration { node } => write!(f, "{node}/decoration"),
        }
    }
}

/// What a mutation invalidated.
///
/// `components` is the set of tiles whose content changed. `relayout` lists
/// nodes whose geometry may have moved (tick label widths, title bands,
/// grid weights); every component in those subtrees may land on new pixels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChangeRecord {
    pub paths: Vec<PropertyPath>,
    pub components: BTreeSet<ComponentId>,
    pub relayout: BTreeSet<String>,
    pub whole_tree: bool,
}

impl ChangeRecord {
    pub fn whole_tree() -> Self {
        ChangeRecord {
            whole_tree: true,
            ..Default::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty() && self.components.is_empty() && self.relayout.is_empty() && !self.whole_tree
    }

    pub fn merge(&mut self, other: ChangeRecord) {
        self.paths.extend(other.paths);
        self.components.extend(other.components);
        self.relayout.extend(other.relayout);
        self.whole_tree |= other.whole_tree;
    }

    /// Whether a tile for `id` in `scene` must be redrawn after this change.
    pub fn invalidates(&self, id: &ComponentId, scene: &Scene) -> bool {
        if self.whole_tree || self.components.contains(id) {
            return true;
        }
        if self.relayout.is_empty() {
            return false;
        }
        ancestors_or_self(scene, id.node())
            .iter()
            .any(|n| self.relayout.contains(n))
    }
}

fn ancestors_or_self(scene: &Scene, id: &str) -> Vec<String> {
    fn go(n: &PlotNode, id: &str, trail: &mut Vec<String>) -> bool {
        trail.push(n.id.clone());
        if n.id == id {
            return true;
        }
        for c in &n.children {
            if go(c, id, trail) {
                return true;
            }
        }
        trail.pop();
        false
    }
    let mut trail = Vec::new();
    for p in &scene.plots {
        if go(p, id, &mut trail) {
            break;
        }
    }
    trail
}

/// Applies one property write, returning the new snapshot and its scope.
/// `scene` is left untouched.
pub fn apply_change(
    scene: &Scene,
    path: &PropertyPath,
    value: Value,
) -> Result<(Scene, ChangeRecord), SceneError> {
    apply_changes(scene, vec![(path.clone(), value)])
}

/// Applies several writes atomically: either all land and validate, or
/// none do.
pub fn apply_changes(
    scene: &Scene,
    changes: Vec<(PropertyPath, Value)>,
) -> Result<(Scene, ChangeRecord), SceneError> {
    let mut root = serde_json::to_value(scene).expect("scene serializes");
    let mut paths = Vec::with_capacity(changes.len());
    for (path, value) in changes {
        check_writable(&path)?;
        let slot = path.lookup_mut(&mut root)?;
        let (have, want) = (FieldKind::of(slot), FieldKind::of(&value));
        if have != FieldKind::Null && want != FieldKind::Null && have != want {
            return Err(SceneError::new(
                ErrorCode::TypeMismatch,
                path.to_string(),
                format!("expected {}, got {}", have.name(), want.name()),
            ));
        }
        *slot = value;
        paths.push(path);
    }

    let mut next: Scene = serde_path_to_error::deserialize(root).map_err(|e| {
        let at = e.path().to_string();
        SceneError::new(ErrorCode::TypeMismatch, at, e.into_inner().to_string())
    })?;
    validate::normalize(&mut next);
    validate::check(&next)?;

    let mut record = ChangeRecord::default();
    for p in paths {
        record.merge(scope(scene, &next, &p));
    }
    Ok((next, record))
}

fn check_writable(path: &PropertyPath) -> Result<(), SceneError> {
    match path.segments().first() {
        Some(Segment::Field(f)) if f == "plots" => {}
        _ => {
            return Err(SceneError::new(
                ErrorCode::BadPath,
                path.to_string(),
                "paths start at plots[<i>]",
            ))
        }
    }
    if let Some(Segment::Field(f)) = path.segments().last() {
        if f == "id" {
            return Err(SceneError::new(
                ErrorCode::ReadOnly,
                path.to_string(),
                "ids are stable and cannot be changed",
            ));
        }
    }
    Ok(())
}

/// Maps a written path to its invalidation scope.
///
/// style / graph data -> owning layer; tick config / axis label -> owning
/// axis and node layout; transform -> every layer, axis and annotation
/// group reading it; title -> node decoration, plus layout when the title
/// appears or disappears; margins / layout hints -> node decoration and
/// layout; children -> whole subtree.
fn scope(old: &Scene, new: &Scene, path: &PropertyPath) -> ChangeRecord {
    let mut rec = ChangeRecord {
        paths: vec![path.clone()],
        ..Default::default()
    };
    let segs = path.segments();
    let Some(Segment::Index(root_idx)) = segs.get(1) else {
        rec.whole_tree = true;
        return rec;
    };
    let (Some(mut o), Some(mut n)) = (old.plots.get(*root_idx), new.plots.get(*root_idx)) else {
        rec.whole_tree = true;
        return rec;
    };
    let mut parent: Option<&str> = None;
    let mut i = 2;
    loop {
        match (segs.get(i), segs.get(i + 1)) {
            (Some(Segment::Field(f)), Some(Segment::Index(j))) if f == "children" => {
                match (o.children.get(*j), n.children.get(*j)) {
                    (Some(oc), Some(nc)) => {
                        parent = Some(&o.id);
                        o = oc;
                        n = nc;
                        i += 2;
                    }
                    _ => {
                        subtree(o, &mut rec);
                        subtree(n, &mut rec);
                        rec.relayout.insert(n.id.clone());
                        return rec;
                    }
                }
            }
            _ => break,
        }
    }

    let field = match segs.get(i) {
        Some(Segment::Field(f)) => f.as_str(),
        _ => {
            subtree(o, &mut rec);
            subtree(n, &mut rec);
            rec.relayout.insert(parent.unwrap_or(&n.id).to_string());
            return rec;
        }
    };
    let index = match segs.get(i + 1) {
        Some(Segment::Index(j)) => Some(*j),
        _ => None,
    };
    let node = n.id.clone();
    match field {
        "title" => {
            rec.components.insert(ComponentId::Decoration { node: node.clone() });
            // the title band has a fixed height, so only its presence moves things
            if has_title(o) != has_title(n) {
                rec.relayout.insert(node);
            }
        }
        "margins" => {
            rec.components.insert(ComponentId::Decoration { node: node.clone() });
            rec.relayout.insert(node);
        }
        "layout_hints" => {
            rec.components.insert(ComponentId::Decoration { node: node.clone() });
            rec.relayout.insert(parent.unwrap_or(&node).to_string());
        }
        "children" => {
            subtree(o, &mut rec);
            subtree(n, &mut rec);
            rec.relayout.insert(node);
        }
        "annotations" => {
            rec.components.insert(ComponentId::Annotations { node });
        }
        "axes" => {
            match index {
                Some(j) => {
                    rec.components.insert(ComponentId::Axis { node: node.clone(), index: j });
                }
                None => {
                    for j in 0..o.axes.len().max(n.axes.len()) {
                        rec.components.insert(ComponentId::Axis { node: node.clone(), index: j });
                    }
                    rec.components.insert(ComponentId::Decoration { node: node.clone() });
                }
            }
            rec.relayout.insert(node);
        }
        "layers" => {
            let ids: Vec<&str> = match index {
                Some(j) => o.layers.get(j).into_iter().chain(n.layers.get(j)).map(|l| l.id.as_str()).collect(),
                None => o.layers.iter().chain(&n.layers).map(|l| l.id.as_str()).collect(),
            };
            for id in ids {
                rec.components.insert(ComponentId::Layer {
                    node: node.clone(),
                    layer: id.to_string(),
                });
            }
            let has_ann = !o.annotations.is_empty() || !n.annotations.is_empty();
            if has_ann && o.default_transform_pair() != n.default_transform_pair() {
                rec.components.insert(ComponentId::Annotations { node });
            }
        }
        "transforms" => {
            let ids: Vec<String> = match index {
                Some(j) => o
                    .transforms
                    .get(j)
                    .into_iter()
                    .chain(n.transforms.get(j))
                    .map(|t| t.id.clone())
                    .collect(),
                None => o.transforms.iter().chain(&n.transforms).map(|t| t.id.clone()).collect(),
            };
            for tid in &ids {
                readers(o, tid, &mut rec);
                readers(n, tid, &mut rec);
            }
        }
        _ => {
            subtree(o, &mut rec);
            subtree(n, &mut rec);
            rec.relayout.insert(node);
        }
    }
    rec
}

fn has_title(node: &PlotNode) -> bool {
    node.title.as_deref().is_some_and(|t| !t.is_empty())
}

fn readers(node: &PlotNode, tid: &str, rec: &mut ChangeRecord) {
    for l in &node.layers {
        if l.x_transform_ref == tid || l.y_transform_ref == tid {
            rec.components.insert(ComponentId::Layer {
                node: node.id.clone(),
                layer: l.id.clone(),
            });
        }
    }
    for (j, a) in node.axes.iter().enumerate() {
        if a.transform_ref == tid {
            rec.components.insert(ComponentId::Axis {
                node: node.id.clone(),
                index: j,
            });
            if a.visible {
                rec.relayout.insert(node.id.clone());
            }
        }
    }
    let reads = node.annotations.iter().any(|a| {
        let (ux, uy) = a.uses_data_axes();
        let (x, y) = node.annotation_pair(a);
        (ux && x == Some(tid)) || (uy && y == Some(tid))
    });
    if reads {
        rec.components.insert(ComponentId::Annotations { node: node.id.clone() });
    }
}

fn subtree(node: &PlotNode, rec: &mut ChangeRecord) {
    for id in node_components(node) {
        rec.components.insert(id);
    }
    for c in &node.children {
        subtree(c, rec);
    }
}

/// Every component a node can contribute, whether or not it currently
/// draws anything.
pub fn node_components(node: &PlotNode) -> Vec<ComponentId> {
    let mut out = Vec::new();
    for l in &node.layers {
        out.push(ComponentId::Layer {
            node: node.id.clone(),
            layer: l.id.clone(),
        });
    }
    for j in 0..node.axes.len() {
        out.push(ComponentId::Axis {
            node: node.id.clone(),
            index: j,
        });
    }
    if !node.annotations.is_empty() {
        out.push(ComponentId::Annotations { node: node.id.clone() });
    }
    out.push(ComponentId::Decoration { node: node.id.clone() });
    out
}
