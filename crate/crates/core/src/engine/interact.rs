use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use super::EngineError;
use crate::axes::{inverse, wheel_zoom, zoom_to_fraction};
use crate::layout::{GeometryMap, NodeGeometry};
use crate::scene::{node_path, PlotNode, PropertyPath, Range, Scene};

/// A rectangle in device pixels; corners may come in any order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct DeviceRect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

/// One range update produced by an interaction.
#[derive(Debug, Clone, PartialEq)]
pub struct RangeChange {
    pub node: String,
    pub transform: String,
    pub path: PropertyPath,
    pub old: Range,
    pub new: Range,
}

/// Data coordinates under a device point for one (x, y) transform pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClickCoord {
    pub node: String,
    pub x_transform: String,
    pub y_transform: String,
    pub x: f64,
    pub y: f64,
}

/// Transforms a zoom on `node` acts on, as (transform index, is_x), in
/// declaration order: those read by layers plus those shown on axes.
fn zoom_targets(node: &PlotNode) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for (i, t) in node.transforms.iter().enumerate() {
        let as_x = node.layers.iter().any(|l| l.x_transform_ref == t.id)
            || node.axes.iter().any(|a| a.side.is_horizontal() && a.transform_ref == t.id);
        let as_y = node.layers.iter().any(|l| l.y_transform_ref == t.id)
            || node.axes.iter().any(|a| !a.side.is_horizontal() && a.transform_ref == t.id);
        if as_x {
            out.push((i, true));
        } else if as_y {
            out.push((i, false));
        }
    }
    out
}

fn outside() -> EngineError {
    EngineError::new("RECT_OUTSIDE_PLOT", "no plot drawing box under the given position")
}

fn range_path(scene: &Scene, node: &str, index: usize) -> PropertyPath {
    node_path(scene, node)
        .expect("hit node is in the scene")
        .field("transforms")
        .index(index)
        .field("range")
}

/// Normalized device coordinates of a point within a drawing box.
fn device_t(g: &NodeGeometry, x: f64, y: f64) -> (f64, f64) {
    (g.t_of_x(x), g.t_of_y(y))
}

/// Range updates for a rubber-band zoom over `rect`.
///
/// The target is the deepest drawing box containing the rectangle center.
/// The rectangle is clamped to that box.
pub fn zoom_rect_changes(scene: &Scene, geo: &GeometryMap, rect: DeviceRect) -> Result<Vec<RangeChange>, EngineError> {
    let (cx, cy) = ((rect.x0 + rect.x1) / 2.0, (rect.y0 + rect.y1) / 2.0);
    let g = geo.hit(cx, cy).ok_or_else(outside)?;
    let node = scene.node(&g.id).expect("geometry matches scene");
    let (ta, tb) = device_t(g, rect.x0.min(rect.x1), rect.y0.max(rect.y1));
    let (tc, td) = device_t(g, rect.x0.max(rect.x1), rect.y0.min(rect.y1));
    let clamp = |v: f64| v.clamp(0.0, 1.0);
    let mut out = Vec::new();
    for (i, is_x) in zoom_targets(node) {
        let tr = &node.transforms[i];
        let (t0, t1) = if is_x { (clamp(ta), clamp(tc)) } else { (clamp(tb), clamp(td)) };
        let (f0, f1) = if tr.inverted { (1.0 - t1, 1.0 - t0) } else { (t0, t1) };
        let new = zoom_to_fraction(tr, f0, f1).map_err(EngineError::from_axis)?;
        out.push(RangeChange {
            node: node.id.clone(),
            transform: tr.id.clone(),
            path: range_path(scene, &node.id, i),
            old: tr.range,
            new,
        });
    }
    Ok(out)
}

/// Range updates for a wheel zoom anchored at a device point.
pub fn wheel_changes(
    scene: &Scene,
    geo: &GeometryMap,
    x: f64,
    y: f64,
    notches: i32,
) -> Result<Vec<RangeChange>, EngineError> {
    let g = geo.hit(x, y).ok_or_else(outside)?;
    let node = scene.node(&g.id).expect("geometry matches scene");
    let (tx, ty) = device_t(g, x, y);
    let mut out = Vec::new();
    for (i, is_x) in zoom_targets(node) {
        let tr = &node.transforms[i];
        let t = if is_x { tx } else { ty }.clamp(0.0, 1.0);
        let a = if tr.inverted { 1.0 - t } else { t };
        let new = wheel_zoom(tr, a, notches).map_err(EngineError::from_axis)?;
        out.push(RangeChange {
            node: node.id.clone(),
            transform: tr.id.clone(),
            path: range_path(scene, &node.id, i),
            old: tr.range,
            new,
        });
    }
    Ok(out)
}

/// Data coordinates under a device point, one entry per distinct layer
/// transform pair of the deepest plot there. Empty outside all plots.
pub fn click_to_data(scene: &Scene, geo: &GeometryMap, x: f64, y: f64) -> Vec<ClickCoord> {
    let Some(g) = geo.hit(x, y) else {
        return Vec::new();
    };
    let node = scene.node(&g.id).expect("geometry matches scene");
    let (tx, ty) = device_t(g, x, y);
    node.layer_transform_pairs()
        .into_iter()
        .filter_map(|(xr, yr)| {
            let (a, b) = (node.transform(xr)?, node.transform(yr)?);
            Some(ClickCoord {
                node: node.id.clone(),
                x_transform: xr.to_string(),
                y_transform: yr.to_string(),
                x: inverse(tx, a),
                y: inverse(ty, b),
            })
        })
        .collect()
}

/// History of ranges replaced by zoom actions.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ZoomStack {
    entries: Vec<Vec<RangeChange>>,
}

impl ZoomStack {
    pub fn push(&mut self, changes: Vec<RangeChange>) {
        if !changes.is_empty() {
            self.entries.push(changes);
        }
    }

    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    /// Writes restoring every touched range to its value before the first
    /// recorded zoom; empties the stack.
    pub fn reset(&mut self) -> Vec<(PropertyPath, serde_json::Value)> {
        let mut oldest: BTreeMap<String, (PropertyPath, Range)> = BTreeMap::new();
        for c in self.entries.drain(..).rev().flatten() {
            oldest.insert(c.path.to_string(), (c.path, c.old));
        }
        oldest
            .into_values()
            .map(|(p, r)| (p, json!({"lo": r.lo, "hi": r.hi})))
            .collect()
    }
}

/// Property writes applying `changes`.
pub fn range_writes(changes: &[RangeChange]) -> Vec<(PropertyPath, serde_json::Value)> {
    changes
        .iter()
        .map(|c| (c.path.clone(), json!({"lo": c.new.lo, "hi": c.new.hi})))
        .collect()
}
