//! Scene model, axis math, layout, tile rendering, export and the
//! interactive engine of the plotforge plotting library.

pub mod axes;
pub mod engine;
pub mod export;
pub mod layout;
pub mod render;
pub mod scene;
pub mod spec;

pub use scene::{Scene, SceneError};
pub use spec::{load_spec, parse_spec, SpecDoc, SpecError};
