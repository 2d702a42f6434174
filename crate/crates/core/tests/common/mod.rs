#![allow(dead_code)]

use std::path::PathBuf;

use plotforge::scene::{node_path, Graph, PropertyPath, Scene};
use plotforge::load_spec;
use serde_json::{json, Value};

pub const W: u32 = 480;
pub const H: u32 = 360;

pub fn corpus_dir(kind: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(kind)
}

/// Every golden spec, loaded, in file-name order.
pub fn golden() -> Vec<(String, Scene)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir("golden"))
        .expect("golden corpus exists")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let scene = load_spec(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, scene)
        })
        .collect()
}

/// A data-style change to the first visible layer found in pre-order.
pub fn layer_change(scene: &Scene) -> (PropertyPath, Value) {
    let mut found = None;
    scene.walk(|n| {
        if found.is_some() {
            return;
        }
        if let Some((i, l)) = n.layers.iter().enumerate().find(|(_, l)| l.visible && !l.graphs.is_empty()) {
            let g = node_path(scene, &n.id).unwrap().field("layers").index(i).field("graphs").index(0);
            found = Some(match &l.graphs[0] {
                Graph::Xy(_) | Graph::XyError(_) => (g.field("style").field("color"), json!("#d02090")),
                Graph::Grid(gr) => {
                    let other = if gr.ramp == Default::default() { "heat" } else { "gray" };
                    (g.field("ramp"), json!(other))
                }
                Graph::Rgb(rgb) => {
                    let v = rgb.r[0].as_slice()[0];
                    (g.field("r").index(0).index(0), json!(if v > 0.5 { 0.0 } else { 1.0 }))
                }
            });
        }
    });
    found.expect("every golden spec has a visible layer")
}
