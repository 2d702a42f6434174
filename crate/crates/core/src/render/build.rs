//! Scene components to vector primitives.

use std::f64::consts::PI;
use std::sync::Arc;

use super::drawlist::{Align, ComponentDraw, Item};
use crate::axes::Mapping;
use crate::layout::{
    AxisGeometry, FontMetrics, NodeGeometry, AXIS_LABEL_SIZE, MAJOR_TICK, MINOR_TICK, TICK_LABEL_SIZE,
    TITLE_PADDING, TITLE_SIZE,
};
use crate::scene::{
    Anchor, Annotation, AxisDef, ChartType, Color, ColorRamp, ComponentId, Graph, GridGraph, Layer, LineKind,
    Norm, PlotNode, RgbGraph, Series, Side, Style, SymbolKind, XyErrorGraph,
};

pub const GRID_COLOR: Color = Color::rgb(220, 220, 220);
pub const AXIS_COLOR: Color = Color::BLACK;
pub const CIRCLE_SEGMENTS: usize = 16;

/// Components of one node in paint order: layers by z order, the
/// annotation group, axes, then the decoration.
pub fn node_draws(node: &PlotNode, geo: &NodeGeometry) -> Vec<ComponentDraw> {
    let mut out = Vec::new();
    for layer in node.layers_in_paint_order() {
        out.push(ComponentDraw {
            id: ComponentId::Layer {
                node: node.id.clone(),
                layer: layer.id.clone(),
            },
            items: layer_items(node, geo, layer),
        });
    }
    if !node.annotations.is_empty() {
        out.push(ComponentDraw {
            id: ComponentId::Annotations { node: node.id.clone() },
            items: annotation_items(node, geo),
        });
    }
    for (def, ag) in node.axes.iter().zip(&geo.axes) {
        out.push(ComponentDraw {
            id: ComponentId::Axis {
                node: node.id.clone(),
                index: ag.index,
            },
            items: axis_items(def, ag, geo),
        });
    }
    out.push(ComponentDraw {
        id: ComponentId::Decoration { node: node.id.clone() },
        items: decoration_items(node, geo),
    });
    out
}

struct Frame<'a> {
    geo: &'a NodeGeometry,
    x: Mapping,
    y: Mapping,
}

impl Frame<'_> {
    fn px(&self, x: f64) -> f64 {
        self.geo.x_of(self.x.forward_lossy(x))
    }

    fn py(&self, y: f64) -> f64 {
        self.geo.y_of(self.y.forward_lossy(y))
    }

    fn point(&self, x: f64, y: f64) -> (f64, f64) {
        (self.px(x), self.py(y))
    }
}

fn finite(p: (f64, f64)) -> bool {
    p.0.is_finite() && p.1.is_finite()
}

fn layer_items(node: &PlotNode, geo: &NodeGeometry, layer: &Layer) -> Vec<Item> {
    if !layer.visible {
        return Vec::new();
    }
    let (Some(tx), Some(ty)) = (node.transform(&layer.x_transform_ref), node.transform(&layer.y_transform_ref)) else {
        return Vec::new();
    };
    let f = Frame {
        geo,
        x: Mapping::new(tx),
        y: Mapping::new(ty),
    };
    let mut items = vec![Item::PushClip(geo.content)];
    for g in &layer.graphs {
        match g {
            Graph::Xy(g) => xy_items(&f, &g.x, &g.y, &g.style, &mut items),
            Graph::XyError(g) => {
                error_items(&f, g, &mut items);
                xy_items(&f, &g.x, &g.y, &g.style, &mut items);
            }
            Graph::Grid(g) => items.extend(grid_item(&f, g)),
            Graph::Rgb(g) => items.extend(rgb_item(&f, g)),
        }
    }
    items.push(Item::PopClip);
    items
}

fn line_item(points: Vec<(f64, f64)>, style: &Style, closed: bool) -> Option<Item> {
    let dash = match style.line {
        LineKind::None => return None,
        LineKind::Solid => None,
        LineKind::Dashed => Some(style.dash_pattern.clone()),
    };
    (points.len() >= 2).then(|| Item::Path {
        points,
        color: style.color,
        width: style.stroke_width,
        dash,
        closed,
    })
}

/// Maximal runs of consecutive drawable points.
fn runs(points: &[(f64, f64)]) -> Vec<Vec<(f64, f64)>> {
    points
        .split(|p| !finite(*p))
        .filter(|r| !r.is_empty())
        .map(|r| r.to_vec())
        .collect()
}

fn xy_items(f: &Frame, x: &Series, y: &Series, style: &Style, out: &mut Vec<Item>) {
    let pts: Vec<(f64, f64)> = x.iter().zip(y.iter()).map(|(&a, &b)| f.point(a, b)).collect();
    let lines = match style.chart_type {
        ChartType::Normal => runs(&pts),
        ChartType::Histogram => histogram_runs(&pts),
    };
    for r in lines {
        out.extend(line_item(r, style, false));
    }
    for &p in pts.iter().filter(|p| finite(**p)) {
        symbol_items(p, style, out);
    }
}

/// Step outline through samples with bin edges at midpoints between
/// neighboring x; the outer edges mirror the nearest interval.
fn histogram_runs(pts: &[(f64, f64)]) -> Vec<Vec<(f64, f64)>> {
    let xs: Vec<(f64, f64)> = pts.iter().copied().filter(|p| p.0.is_finite()).collect();
    if xs.len() < 2 {
        return Vec::new();
    }
    let n = xs.len();
    let mut edges = Vec::with_capacity(n + 1);
    edges.push(xs[0].0 - (xs[1].0 - xs[0].0) / 2.0);
    for w in xs.windows(2) {
        edges.push((w[0].0 + w[1].0) / 2.0);
    }
    edges.push(xs[n - 1].0 + (xs[n - 1].0 - xs[n - 2].0) / 2.0);
    let mut out = Vec::new();
    let mut cur: Vec<(f64, f64)> = Vec::new();
    for (i, p) in xs.iter().enumerate() {
        if !p.1.is_finite() {
            if cur.len() >= 2 {
                out.push(std::mem::take(&mut cur));
            }
            cur.clear();
            continue;
        }
        cur.push((edges[i], p.1));
        cur.push((edges[i + 1], p.1));
    }
    if cur.len() >= 2 {
        out.push(cur);
    }
    out
}

fn polygon(c: (f64, f64), r: f64, n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n as f64;
            (c.0 + r * a.cos(), c.1 - r * a.sin())
        })
        .collect()
}

fn symbol_items(p: (f64, f64), style: &Style, out: &mut Vec<Item>) {
    let r = style.symbol_size / 2.0;
    let stroke = |points: Vec<(f64, f64)>, closed: bool| Item::Path {
        points,
        color: style.color,
        width: style.stroke_width,
        dash: None,
        closed,
    };
    match style.symbol {
        SymbolKind::None => {}
        SymbolKind::Circle => out.push(stroke(polygon(p, r, CIRCLE_SEGMENTS), true)),
        SymbolKind::Square => out.push(stroke(
            vec![(p.0 - r, p.1 - r), (p.0 + r, p.1 - r), (p.0 + r, p.1 + r), (p.0 - r, p.1 + r)],
            true,
        )),
        SymbolKind::Triangle => out.push(stroke(vec![(p.0, p.1 - r), (p.0 + r, p.1 + r), (p.0 - r, p.1 + r)], true)),
        SymbolKind::Cross => {
            out.push(stroke(vec![(p.0 - r, p.1 - r), (p.0 + r, p.1 + r)], false));
            out.push(stroke(vec![(p.0 - r, p.1 + r), (p.0 + r, p.1 - r)], false));
        }
        SymbolKind::Dot => out.push(Item::FillPolygon {
            points: polygon(p, r, CIRCLE_SEGMENTS),
            color: style.color,
        }),
    }
}

fn error_items(f: &Frame, g: &XyErrorGraph, out: &mut Vec<Item>) {
    let cap = g.style.stroke_width;
    let seg = |a: (f64, f64), b: (f64, f64)| Item::Path {
        points: vec![a, b],
        color: g.style.color,
        width: g.style.stroke_width,
        dash: None,
        closed: false,
    };
    let at = |s: &Option<Series>, i: usize| s.as_ref().and_then(|s| s.get(i).copied()).filter(|v| v.is_finite());
    for i in 0..g.x.len().min(g.y.len()) {
        let (x, y) = (g.x[i], g.y[i]);
        let c = f.point(x, y);
        if !finite(c) {
            continue;
        }
        for (lo, hi, vertical) in [(&g.y_err_lo, &g.y_err_hi, true), (&g.x_err_lo, &g.x_err_hi, false)] {
            for (e, sign) in [(at(lo, i), -1.0), (at(hi, i), 1.0)] {
                let Some(e) = e else { continue };
                let end = if vertical {
                    (c.0, f.py(y + sign * e))
                } else {
                    (f.px(x + sign * e), c.1)
                };
                if !finite(end) {
                    continue;
                }
                out.push(seg(c, end));
                out.push(if vertical {
                    seg((end.0 - cap, end.1), (end.0 + cap, end.1))
                } else {
                    seg((end.0, end.1 - cap), (end.0, end.1 + cap))
                });
            }
        }
    }
}

/// Color of normalized intensity `t` in `[0, 1]`.
pub fn ramp_color(ramp: ColorRamp, t: f64) -> Color {
    let t = t.clamp(0.0, 1.0);
    let q = |v: f64| (v.clamp(0.0, 1.0) * 255.0).round() as u8;
    match ramp {
        ColorRamp::Gray => Color::rgb(q(t), q(t), q(t)),
        ColorRamp::Heat => Color::rgb(q(3.0 * t), q(3.0 * t - 1.0), q(3.0 * t - 2.0)),
    }
}

/// Device rectangle for an image extent plus flips that put image row 0 at
/// the top and column 0 at the left.
fn image_item(f: &Frame, xe: (f64, f64), ye: (f64, f64), w: usize, h: usize, cells: Vec<Color>) -> Option<Item> {
    let (ax, bx) = (f.px(xe.0), f.px(xe.1));
    let (ay, by) = (f.py(ye.0), f.py(ye.1));
    if ![ax, bx, ay, by].iter().all(|v| v.is_finite()) || w == 0 || h == 0 {
        return None;
    }
    let flip_x = bx < ax;
    // grid row 0 sits at the lower y extent, which is normally lower on screen
    let flip_y = ay > by;
    let mut pixels = Vec::with_capacity(w * h * 4);
    for r in 0..h {
        let gr = if flip_y { h - 1 - r } else { r };
        for c in 0..w {
            let gc = if flip_x { w - 1 - c } else { c };
            pixels.extend_from_slice(&cells[gr * w + gc].0);
        }
    }
    Some(Item::Image {
        x0: ax.min(bx),
        y0: ay.min(by),
        x1: ax.max(bx),
        y1: ay.max(by),
        width: w as u32,
        height: h as u32,
        pixels: Arc::from(pixels),
    })
}

const CLEAR: Color = Color([0, 0, 0, 0]);

fn grid_item(f: &Frame, g: &GridGraph) -> Option<Item> {
    let h = g.values.len();
    let w = g.values.first().map_or(0, |r| r.len());
    let (lo, hi) = match g.norm {
        Norm::Explicit(r) => (r.lo, r.hi),
        Norm::LinearMinmax => g
            .values
            .iter()
            .flat_map(|r| r.iter())
            .filter(|v| v.is_finite())
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v))),
    };
    let cells = g
        .values
        .iter()
        .flat_map(|r| (0..w).map(move |c| r.get(c).copied().unwrap_or(f64::NAN)))
        .map(|v| {
            if !v.is_finite() {
                CLEAR
            } else if hi > lo {
                ramp_color(g.ramp, (v - lo) / (hi - lo))
            } else {
                ramp_color(g.ramp, 0.0)
            }
        })
        .collect();
    image_item(f, (g.x_extent.lo, g.x_extent.hi), (g.y_extent.lo, g.y_extent.hi), w, h, cells)
}

fn rgb_item(f: &Frame, g: &RgbGraph) -> Option<Item> {
    let h = g.r.len();
    let w = g.r.first().map_or(0, |r| r.len());
    let q = |v: f64| (v.clamp(0.0, 1.0) * 255.0).round() as u8;
    let mut cells = Vec::with_capacity(w * h);
    for i in 0..h {
        for j in 0..w {
            let get = |p: &[Series]| p.get(i).and_then(|r| r.get(j).copied()).unwrap_or(f64::NAN);
            let (r, gg, b) = (get(&g.r), get(&g.g), get(&g.b));
            cells.push(if r.is_finite() && gg.is_finite() && b.is_finite() {
                Color::rgb(q(r), q(gg), q(b))
            } else {
                CLEAR
            });
        }
    }
    image_item(f, (g.x_extent.lo, g.x_extent.hi), (g.y_extent.lo, g.y_extent.hi), w, h, cells)
}

fn annotation_items(node: &PlotNode, geo: &NodeGeometry) -> Vec<Item> {
    let c = geo.content;
    let mut items = vec![Item::PushClip(c)];
    for a in &node.annotations {
        let (xr, yr) = node.annotation_pair(a);
        let mx = xr.and_then(|id| node.transform(id)).map(Mapping::new);
        let my = yr.and_then(|id| node.transform(id)).map(Mapping::new);
        let px = |v: f64| mx.map_or(f64::NAN, |m| geo.x_of(m.forward_lossy(v)));
        let py = |v: f64| my.map_or(f64::NAN, |m| geo.y_of(m.forward_lossy(v)));
        match a {
            Annotation::Text(t) => {
                let (x, y) = match t.anchor {
                    Anchor::Data { x, y } => (px(x), py(y)),
                    Anchor::Fraction { x, y } => (geo.x_of(x), geo.y_of(y)),
                };
                if x.is_finite() && y.is_finite() {
                    items.push(Item::Text {
                        x,
                        y,
                        text: t.text.clone(),
                        size: t.size,
                        color: t.color,
                        align: Align::Left,
                        vertical: false,
                    });
                }
            }
            Annotation::Hline(h) => {
                let y = py(h.y);
                if y.is_finite() {
                    items.extend(line_item(vec![(c.x0 as f64, y), (c.x1 as f64, y)], &h.style, false));
                }
            }
            Annotation::Vline(v) => {
                let x = px(v.x);
                if x.is_finite() {
                    items.extend(line_item(vec![(x, c.y0 as f64), (x, c.y1 as f64)], &v.style, false));
                }
            }
            Annotation::Rect(r) => {
                let (x0, x1, y0, y1) = (px(r.x0), px(r.x1), py(r.y0), py(r.y1));
                if ![x0, x1, y0, y1].iter().all(|v| v.is_finite()) {
                    continue;
                }
                items.push(Item::FillRect {
                    x0: x0.min(x1),
                    y0: y0.min(y1),
                    x1: x0.max(x1),
                    y1: y0.max(y1),
                    color: r.fill,
                });
                if let Some(s) = &r.outline {
                    items.extend(line_item(vec![(x0, y0), (x1, y0), (x1, y1), (x0, y1)], s, true));
                }
            }
        }
    }
    items.push(Item::PopClip);
    items
}

fn hairline(points: Vec<(f64, f64)>, color: Color) -> Item {
    Item::Path {
        points,
        color,
        width: 1.0,
        dash: None,
        closed: false,
    }
}

/// Snaps a coordinate to the nearest pixel center inside `[lo, hi)`.
fn snap(v: f64, lo: i32, hi: i32) -> f64 {
    (v.floor() + 0.5).clamp(lo as f64 + 0.5, hi as f64 - 0.5)
}

fn axis_items(def: &AxisDef, ag: &AxisGeometry, geo: &NodeGeometry) -> Vec<Item> {
    if !def.visible {
        return Vec::new();
    }
    let c = geo.content;
    let font = FontMetrics::DEFAULT;
    let horizontal = ag.side.is_horizontal();
    let (lo, hi) = if horizontal { (c.x0, c.x1) } else { (c.y0, c.y1) };
    // outward direction in device space along the spine normal
    let out_sign = match ag.side {
        Side::Bottom | Side::Right => 1.0,
        Side::Top | Side::Left => -1.0,
    };
    let seg = |along: f64, n0: f64, n1: f64| {
        if horizontal {
            vec![(along, n0), (along, n1)]
        } else {
            vec![(n0, along), (n1, along)]
        }
    };
    let mut items = Vec::new();
    if def.grid_lines {
        let (n0, n1) = if horizontal { (c.y0, c.y1) } else { (c.x0, c.x1) };
        for &p in ag.major_px.iter().filter(|p| p.is_finite()) {
            items.push(hairline(seg(snap(p, lo, hi), n0 as f64, n1 as f64), GRID_COLOR));
        }
    }
    let spine = if horizontal {
        vec![(lo as f64, ag.spine), (hi as f64, ag.spine)]
    } else {
        vec![(ag.spine, lo as f64), (ag.spine, hi as f64)]
    };
    items.push(hairline(spine, AXIS_COLOR));
    let edge = ag.spine + 0.5 * out_sign * -ag.tick_dir;
    for (px, len) in ag
        .major_px
        .iter()
        .map(|p| (*p, MAJOR_TICK))
        .chain(ag.minor_px.iter().map(|p| (*p, MINOR_TICK)))
    {
        if !px.is_finite() {
            continue;
        }
        let tip = edge + ag.tick_dir * out_sign * len;
        items.push(hairline(seg(snap(px, lo, hi), edge, tip), AXIS_COLOR));
    }

    let labels: Vec<(f64, &str)> = ag
        .major_px
        .iter()
        .zip(&ag.ticks.major)
        .filter(|(p, t)| p.is_finite() && !t.label.is_empty())
        .map(|(p, t)| (*p, t.label.as_str()))
        .collect();
    let s = ag.strip;
    let extent = if labels.is_empty() {
        0.0
    } else if horizontal {
        font.line_height(TICK_LABEL_SIZE)
    } else {
        labels
            .iter()
            .map(|(_, l)| font.text_width(l, TICK_LABEL_SIZE))
            .fold(0.0, f64::max)
    };
    for (p, label) in labels {
        let (x, y, align) = match ag.side {
            Side::Bottom => (p, s.y0 as f64 + MAJOR_TICK + TICK_LABEL_SIZE, Align::Center),
            Side::Top => (p, s.y1 as f64 - MAJOR_TICK - 0.2 * TICK_LABEL_SIZE, Align::Center),
            Side::Left => (s.x1 as f64 - MAJOR_TICK, p + 0.4 * TICK_LABEL_SIZE, Align::Right),
            Side::Right => (s.x0 as f64 + MAJOR_TICK, p + 0.4 * TICK_LABEL_SIZE, Align::Left),
        };
        items.push(Item::Text {
            x,
            y,
            text: label.to_string(),
            size: TICK_LABEL_SIZE,
            color: AXIS_COLOR,
            align,
            vertical: false,
        });
    }
    if !def.axis_label.is_empty() {
        let band = font.line_height(AXIS_LABEL_SIZE);
        let mid_x = (c.x0 + c.x1) as f64 / 2.0;
        let mid_y = (c.y0 + c.y1) as f64 / 2.0;
        let (x, y) = match ag.side {
            Side::Bottom => (mid_x, s.y0 as f64 + MAJOR_TICK + extent + AXIS_LABEL_SIZE),
            Side::Top => (mid_x, s.y1 as f64 - MAJOR_TICK - extent - band + AXIS_LABEL_SIZE),
            Side::Left => (s.x1 as f64 - MAJOR_TICK - extent - band + AXIS_LABEL_SIZE, mid_y),
            Side::Right => (s.x0 as f64 + MAJOR_TICK + extent + AXIS_LABEL_SIZE, mid_y),
        };
        items.push(Item::Text {
            x,
            y,
            text: def.axis_label.clone(),
            size: AXIS_LABEL_SIZE,
            color: AXIS_COLOR,
            align: Align::Center,
            vertical: !horizontal,
        });
    }
    items
}

fn decoration_items(node: &PlotNode, geo: &NodeGeometry) -> Vec<Item> {
    let mut items = Vec::new();
    if let (Some(title), Some(band)) = (node.title.as_deref(), geo.title_band) {
        items.push(Item::Text {
            x: (band.x0 + band.x1) as f64 / 2.0,
            y: band.y0 as f64 + TITLE_PADDING / 2.0 + TITLE_SIZE,
            text: title.to_string(),
            size: TITLE_SIZE,
            color: AXIS_COLOR,
            align: Align::Center,
            vertical: false,
        });
    }
    if node.axes.is_empty() && node.children.is_empty() {
        let c = geo.content;
        let (x0, y0, x1, y1) = (c.x0 as f64, c.y0 as f64, c.x1 as f64, c.y1 as f64);
        for pts in [
            vec![(x0, y0 + 0.5), (x1, y0 + 0.5)],
            vec![(x0, y1 - 0.5), (x1, y1 - 0.5)],
            vec![(x0 + 0.5, y0), (x0 + 0.5, y1)],
            vec![(x1 - 0.5, y0), (x1 - 0.5, y1)],
        ] {
            items.push(hairline(pts, AXIS_COLOR));
        }
    }
    items
}
