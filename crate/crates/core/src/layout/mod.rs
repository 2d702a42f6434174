//! Device-space geometry: drawing boxes, axis strips, title bands and the
//! grid split of child plots.
//!
//! Geometry depends only on the scene and canvas size. Text is measured
//! with a fixed monospace table so results do not depend on the rasterizer.

use std::collections::HashMap;

use thiserror::Error;

use crate::axes::{generate_ticks, AxisError, Mapping, TickSet};
use crate::scene::{AxisDef, PlotNode, Scene, Side};

pub const MIN_CANVAS: u32 = 64;
pub const MIN_CONTENT: i32 = 16;
pub const MAJOR_TICK: f64 = 6.0;
pub const MINOR_TICK: f64 = 3.0;
pub const AXIS_PADDING: f64 = 4.0;
pub const TICK_LABEL_SIZE: f64 = 10.0;
pub const AXIS_LABEL_SIZE: f64 = 12.0;
pub const TITLE_SIZE: f64 = 14.0;
pub const TITLE_PADDING: f64 = 4.0;

/// Monospace text metrics as multiples of the font size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FontMetrics {
    pub advance: f64,
    pub height: f64,
}

impl FontMetrics {
    pub const DEFAULT: FontMetrics = FontMetrics {
        advance: 0.6,
        height: 1.2,
    };

    /// Width of `text`; `^` only marks a superscript and takes no room.
    pub fn text_width(&self, text: &str, size: f64) -> f64 {
        text.chars().filter(|c| *c != '^').count() as f64 * self.advance * size
    }

    pub fn line_height(&self, size: f64) -> f64 {
        self.height * size
    }
}

impl Default for FontMetrics {
    fn default() -> Self {
        FontMetrics::DEFAULT
    }
}

/// Integer pixel rectangle, end-exclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rect {
    pub x0: i32,
    pub y0: i32,
    pub x1: i32,
    pub y1: i32,
}

impl Rect {
    pub const fn new(x0: i32, y0: i32, x1: i32, y1: i32) -> Self {
        Rect { x0, y0, x1, y1 }
    }

    pub fn width(&self) -> i32 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> i32 {
        self.y1 - self.y0
    }

    pub fn is_empty(&self) -> bool {
        self.x1 <= self.x0 || self.y1 <= self.y0
    }

    pub fn contains_point(&self, x: f64, y: f64) -> bool {
        x >= self.x0 as f64 && x < self.x1 as f64 && y >= self.y0 as f64 && y < self.y1 as f64
    }

    pub fn contains_rect(&self, r: &Rect) -> bool {
        r.x0 >= self.x0 && r.y0 >= self.y0 && r.x1 <= self.x1 && r.y1 <= self.y1
    }

    pub fn intersect(&self, r: &Rect) -> Rect {
        Rect {
            x0: self.x0.max(r.x0),
            y0: self.y0.max(r.y0),
            x1: self.x1.min(r.x1),
            y1: self.y1.min(r.y1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LayoutError {
    #[error("canvas {width}x{height} is too small for node {node}")]
    CanvasTooSmall { node: String, width: i32, height: i32 },
    #[error("axis {node}.axes[{index}]: {source}")]
    Ticks {
        node: String,
        index: usize,
        source: AxisError,
    },
}

impl LayoutError {
    pub fn code(&self) -> &'static str {
        match self {
            LayoutError::CanvasTooSmall { .. } => "CANVAS_TOO_SMALL",
            LayoutError::Ticks { source, .. } => source.code(),
        }
    }
}

/// Placement of one axis: strip, spine and tick positions in device px.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisGeometry {
    pub index: usize,
    pub side: Side,
    pub visible: bool,
    pub strip: Rect,
    /// Spine position: a y coordinate for horizontal axes, else x.
    pub spine: f64,
    /// +1 when ticks extend away from the content rect, -1 toward it.
    pub tick_dir: f64,
    pub ticks: TickSet,
    pub major_px: Vec<f64>,
    pub minor_px: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeGeometry {
    pub id: String,
    pub depth: usize,
    pub cell: Rect,
    pub content: Rect,
    pub title_band: Option<Rect>,
    pub axes: Vec<AxisGeometry>,
}

impl NodeGeometry {
    /// Device x for normalized coordinate `t`.
    pub fn x_of(&self, t: f64) -> f64 {
        self.content.x0 as f64 + t * self.content.width() as f64
    }

    /// Device y for normalized coordinate `t` (t = 0 at the bottom).
    pub fn y_of(&self, t: f64) -> f64 {
        self.content.y1 as f64 - t * self.content.height() as f64
    }

    pub fn t_of_x(&self, x: f64) -> f64 {
        (x - self.content.x0 as f64) / self.content.width() as f64
    }

    pub fn t_of_y(&self, y: f64) -> f64 {
        (self.content.y1 as f64 - y) / self.content.height() as f64
    }
}

/// Geometry of every node, in pre-order.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryMap {
    pub width: u32,
    pub height: u32,
    pub nodes: Vec<NodeGeometry>,
    index: HashMap<String, usize>,
}

impl GeometryMap {
    pub fn node(&self, id: &str) -> Option<&NodeGeometry> {
        self.index.get(id).map(|&i| &self.nodes[i])
    }

    /// Deepest node whose content rect contains the point.
    pub fn hit(&self, x: f64, y: f64) -> Option<&NodeGeometry> {
        self.nodes
            .iter()
            .filter(|n| n.content.contains_point(x, y))
            .max_by_key(|n| n.depth)
    }
}

/// Thickness of the strip an axis needs outside the drawing box.
pub fn measure_axis(ticks: &TickSet, axis: &AxisDef, font: &FontMetrics) -> u32 {
    if !axis.visible {
        return 0;
    }
    let labels = ticks.major.iter().filter(|t| !t.label.is_empty());
    let label_extent = if axis.side.is_horizontal() {
        if labels.count() > 0 {
            font.line_height(TICK_LABEL_SIZE)
        } else {
            0.0
        }
    } else {
        labels
            .map(|t| font.text_width(&t.label, TICK_LABEL_SIZE))
            .fold(0.0, f64::max)
    };
    let axis_label_extent = if axis.axis_label.is_empty() {
        0.0
    } else {
        font.line_height(AXIS_LABEL_SIZE)
    };
    (MAJOR_TICK + label_extent + axis_label_extent + AXIS_PADDING).ceil() as u32
}

pub fn title_band_height(font: &FontMetrics) -> i32 {
    font.line_height(TITLE_SIZE).ceil() as i32 + TITLE_PADDING as i32
}

/// Lays out the scene on a `width` x `height` canvas.
pub fn layout(scene: &Scene, width: u32, height: u32) -> Result<GeometryMap, LayoutError> {
    let root = scene.root();
    if width < MIN_CANVAS || height < MIN_CANVAS {
        return Err(LayoutError::CanvasTooSmall {
            node: root.id.clone(),
            width: width as i32,
            height: height as i32,
        });
    }
    let mut nodes = Vec::new();
    let cell = Rect::new(0, 0, width as i32, height as i32);
    place(root, cell, 0, &FontMetrics::DEFAULT, &mut nodes)?;
    let index = nodes
        .iter()
        .enumerate()
        .map(|(i, n): (usize, &NodeGeometry)| (n.id.clone(), i))
        .collect();
    Ok(GeometryMap {
        width,
        height,
        nodes,
        index,
    })
}

fn place(
    node: &PlotNode,
    cell: Rect,
    depth: usize,
    font: &FontMetrics,
    out: &mut Vec<NodeGeometry>,
) -> Result<(), LayoutError> {
    let mut ticks = Vec::with_capacity(node.axes.len());
    for (i, a) in node.axes.iter().enumerate() {
        let tr = node
            .transform(&a.transform_ref)
            .expect("validated scene resolves axis transforms");
        let t = generate_ticks(tr, &a.tick_config).map_err(|source| LayoutError::Ticks {
            node: node.id.clone(),
            index: i,
            source,
        })?;
        ticks.push(t);
    }
    let thickness: Vec<i32> = node
        .axes
        .iter()
        .zip(&ticks)
        .map(|(a, t)| measure_axis(t, a, font) as i32)
        .collect();
    let title_h = if node.title.as_deref().is_some_and(|t| !t.is_empty()) {
        title_band_height(font)
    } else {
        0
    };
    let side_sum = |s: Side| -> i32 {
        node.axes
            .iter()
            .zip(&thickness)
            .filter(|(a, _)| a.side == s)
            .map(|(_, t)| *t)
            .sum()
    };
    let content = match &node.margins {
        Some(m) => Rect::new(
            cell.x0 + m.left.round() as i32,
            cell.y0 + m.top.round() as i32,
            cell.x1 - m.right.round() as i32,
            cell.y1 - m.bottom.round() as i32,
        ),
        None => Rect::new(
            cell.x0 + side_sum(Side::Left),
            cell.y0 + title_h + side_sum(Side::Top),
            cell.x1 - side_sum(Side::Right),
            cell.y1 - side_sum(Side::Bottom),
        ),
    };
    if content.width() < MIN_CONTENT || content.height() < MIN_CONTENT {
        return Err(LayoutError::CanvasTooSmall {
            node: node.id.clone(),
            width: content.width(),
            height: content.height(),
        });
    }
    let title_band = (title_h > 0).then(|| {
        let top = (content.y0 - side_sum(Side::Top) - title_h).max(cell.y0);
        Rect::new(content.x0, top, content.x1, top + title_h)
    });

    let mut geo = NodeGeometry {
        id: node.id.clone(),
        depth,
        cell,
        content,
        title_band,
        axes: Vec::with_capacity(node.axes.len()),
    };
    let mut offset: HashMap<Side, i32> = HashMap::new();
    for (i, (a, t)) in node.axes.iter().zip(ticks).enumerate() {
        let th = thickness[i];
        let off = offset.entry(a.side).or_insert(0);
        let stacked = *off > 0;
        let strip = match a.side {
            Side::Bottom => Rect::new(content.x0, content.y1 + *off, content.x1, content.y1 + *off + th),
            Side::Top => Rect::new(content.x0, content.y0 - *off - th, content.x1, content.y0 - *off),
            Side::Left => Rect::new(content.x0 - *off - th, content.y0, content.x0 - *off, content.y1),
            Side::Right => Rect::new(content.x1 + *off, content.y0, content.x1 + *off + th, content.y1),
        };
        let spine = match (a.side, stacked) {
            (Side::Bottom, false) => content.y1 as f64 - 0.5,
            (Side::Top, false) => content.y0 as f64 + 0.5,
            (Side::Left, false) => content.x0 as f64 + 0.5,
            (Side::Right, false) => content.x1 as f64 - 0.5,
            (Side::Bottom, true) => strip.y0 as f64 + 0.5,
            (Side::Top, true) => strip.y1 as f64 - 0.5,
            (Side::Left, true) => strip.x1 as f64 - 0.5,
            (Side::Right, true) => strip.x0 as f64 + 0.5,
        };
        *off += th;
        let tick_dir = if a.ticks_outward || stacked { 1.0 } else { -1.0 };
        let tr = node.transform(&a.transform_ref).expect("validated");
        let m = Mapping::new(tr);
        let to_px = |v: &f64| {
            let tt = m.forward_lossy(*v);
            if a.side.is_horizontal() {
                geo.x_of(tt)
            } else {
                geo.y_of(tt)
            }
        };
        let major_px = t.major.iter().map(|tk| to_px(&tk.value)).collect();
        let minor_px = t.minor.iter().map(to_px).collect();
        geo.axes.push(AxisGeometry {
            index: i,
            side: a.side,
            visible: a.visible,
            strip,
            spine,
            tick_dir,
            ticks: t,
            major_px,
            minor_px,
        });
    }
    out.push(geo);

    if node.children.is_empty() {
        return Ok(());
    }
    let rows = node.children.iter().map(|c| c.layout_hints.row).max().unwrap_or(0) as usize + 1;
    let cols = node.children.iter().map(|c| c.layout_hints.col).max().unwrap_or(0) as usize + 1;
    let mut col_w = vec![0.0f64; cols];
    let mut row_w = vec![0.0f64; rows];
    for c in &node.children {
        let h = &c.layout_hints;
        col_w[h.col as usize] = col_w[h.col as usize].max(h.weight);
        row_w[h.row as usize] = row_w[h.row as usize].max(h.weight);
    }
    let xs = split(content.x0, content.x1, &col_w);
    let ys = split(content.y0, content.y1, &row_w);
    for c in &node.children {
        let (r, k) = (c.layout_hints.row as usize, c.layout_hints.col as usize);
        let child_cell = Rect::new(xs[k], ys[r], xs[k + 1], ys[r + 1]);
        place(c, child_cell, depth + 1, font, out)?;
    }
    Ok(())
}

/// Cumulative rounded boundaries splitting `[a, b)` by weight; empty
/// tracks count with weight 1.
fn split(a: i32, b: i32, weights: &[f64]) -> Vec<i32> {
    let w: Vec<f64> = weights.iter().map(|&w| if w > 0.0 { w } else { 1.0 }).collect();
    let total: f64 = w.iter().sum();
    let len = (b - a) as f64;
    let mut acc = 0.0;
    let mut out = vec![a];
    for wi in &w {
        acc += wi;
        out.push(a + (len * acc / total).round() as i32);
    }
    *out.last_mut().expect("nonempty") = b;
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axes::{Tick, TickStep};
    use crate::scene::{AxisTransformDef, LayoutHints};

    fn empty_ticks(labels: &[&str]) -> TickSet {
        TickSet {
            major: labels
                .iter()
                .enumerate()
                .map(|(i, l)| Tick {
                    value: i as f64,
                    label: l.to_string(),
                })
                .collect(),
            minor: vec![],
            step: TickStep::Explicit,
        }
    }

    #[test]
    fn invisible_axis_measures_zero() {
        let mut a = AxisDef::new(Side::Bottom, "x");
        a.visible = false;
        assert_eq!(measure_axis(&empty_ticks(&["1"]), &a, &FontMetrics::DEFAULT), 0);
    }

    #[test]
    fn no_labels_measures_ten() {
        let a = AxisDef::new(Side::Left, "y");
        assert_eq!(measure_axis(&empty_ticks(&["", ""]), &a, &FontMetrics::DEFAULT), 10);
    }

    #[test]
    fn vertical_axis_grows_with_label_length() {
        let a = AxisDef::new(Side::Left, "y");
        let f = FontMetrics::DEFAULT;
        assert_eq!(measure_axis(&empty_ticks(&["12345"]), &a, &f), 40);
        let mut b = a.clone();
        b.axis_label = "flux".into();
        assert_eq!(measure_axis(&empty_ticks(&["12345"]), &b, &f), 55);
    }

    fn node_with_axes(id: &str, hidden: bool) -> PlotNode {
        let mut n = PlotNode::new(id);
        n.transforms.push(AxisTransformDef::linear("x", 0.0, 1.0));
        n.transforms.push(AxisTransformDef::linear("y", 0.0, 1.0));
        let mut a = AxisDef::new(Side::Bottom, "x");
        a.visible = !hidden;
        let mut b = AxisDef::new(Side::Left, "y");
        b.visible = !hidden;
        n.axes = vec![a, b];
        n
    }

    #[test]
    fn hidden_axes_fill_canvas() {
        let s = Scene::new(node_with_axes("r", true));
        let g = layout(&s, 400, 300).unwrap();
        assert_eq!(g.nodes[0].content, Rect::new(0, 0, 400, 300));
    }

    #[test]
    fn weighted_children() {
        let mut root = PlotNode::new("r");
        for (i, w) in [2.0, 1.0].iter().enumerate() {
            let mut c = node_with_axes(&format!("c{i}"), false);
            c.layout_hints = LayoutHints {
                row: 0,
                col: i as u32,
                weight: *w,
            };
            root.children.push(c);
        }
        let g = layout(&Scene::new(root), 600, 300).unwrap();
        let a = g.node("c0").unwrap().cell.width();
        let b = g.node("c1").unwrap().cell.width();
        assert_eq!((a, b), (400, 200));
        let ca = g.node("c0").unwrap().content;
        let cb = g.node("c1").unwrap().content;
        assert!(ca.x1 <= cb.x0);
        assert_eq!(g.hit(ca.x0 as f64 + 1.0, ca.y0 as f64 + 1.0).unwrap().id, "c0");
    }

    #[test]
    fn too_small() {
        let s = Scene::new(node_with_axes("r", false));
        assert_eq!(layout(&s, 40, 300).unwrap_err().code(), "CANVAS_TOO_SMALL");
        let mut n = node_with_axes("r", false);
        n.margins = Some(crate::scene::Margins {
            top: 0.0,
            right: 0.0,
            bottom: 0.0,
            left: 90.0,
        });
        assert_eq!(layout(&Scene::new(n), 100, 100).unwrap_err().code(), "CANVAS_TOO_SMALL");
    }

    #[test]
    fn ticks_point_inward() {
        let s = Scene::new(node_with_axes("r", false));
        let g = layout(&s, 400, 300).unwrap();
        assert!(g.nodes[0].axes.iter().all(|a| a.tick_dir < 0.0));
    }

    #[test]
    fn split_rounds_cumulatively() {
        assert_eq!(split(0, 10, &[1.0, 1.0, 1.0]), vec![0, 3, 7, 10]);
    }
}
