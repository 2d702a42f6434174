use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::layout::Rect;
use crate::scene::{Color, ComponentId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Align {
    Left,
    Center,
    Right,
}

impl Align {
    pub fn factor(self) -> f64 {
        match self {
            Align::Left => 0.0,
            Align::Center => 0.5,
            Align::Right => 1.0,
        }
    }
}

/// Vector primitive in device pixels (y down).
#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    /// Intersects the clip region with `rect` until the matching `PopClip`.
    PushClip(Rect),
    PopClip,
    /// Stroked polyline with butt caps. `dash` is an on/off length list.
    Path {
        points: Vec<(f64, f64)>,
        color: Color,
        width: f64,
        dash: Option<Vec<f64>>,
        closed: bool,
    },
    FillRect {
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
        color: Color,
    },
    FillPolygon {
        points: Vec<(f64, f64)>,
        color: Color,
    },
    /// `(x, y)` is the baseline point at the alignment position. Vertical
    /// text runs bottom to top. A `^` raises the remaining characters.
    Text {
        x: f64,
        y: f64,
        text: String,
        size: f64,
        color: Color,
        align: Align,
        vertical: bool,
    },
    /// RGBA8 image, row 0 at the top, sampled nearest-neighbor into the
    /// rectangle `[x0, x1) x [y0, y1)`.
    Image {
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
        width: u32,
        height: u32,
        pixels: Arc<[u8]>,
    },
}

fn hash_f(h: &mut impl Hasher, v: f64) {
    h.write_u64(v.to_bits());
}

fn hash_pts(h: &mut impl Hasher, pts: &[(f64, f64)]) {
    h.write_usize(pts.len());
    for &(x, y) in pts {
        hash_f(h, x);
        hash_f(h, y);
    }
}

impl Hash for Item {
    fn hash<H: Hasher>(&self, h: &mut H) {
        std::mem::discriminant(self).hash(h);
        match self {
            Item::PushClip(r) => r.hash(h),
            Item::PopClip => {}
            Item::Path {
                points,
                color,
                width,
                dash,
                closed,
            } => {
                hash_pts(h, points);
                color.0.hash(h);
                hash_f(h, *width);
                match dash {
                    Some(d) => {
                        h.write_usize(d.len() + 1);
                        d.iter().for_each(|v| hash_f(h, *v));
                    }
                    None => h.write_usize(0),
                }
                closed.hash(h);
            }
            Item::FillRect { x0, y0, x1, y1, color } => {
                [*x0, *y0, *x1, *y1].iter().for_each(|v| hash_f(h, *v));
                color.0.hash(h);
            }
            Item::FillPolygon { points, color } => {
                hash_pts(h, points);
                color.0.hash(h);
            }
            Item::Text {
                x,
                y,
                text,
                size,
                color,
                align,
                vertical,
            } => {
                hash_f(h, *x);
                hash_f(h, *y);
                text.hash(h);
                hash_f(h, *size);
                color.0.hash(h);
                align.hash(h);
                vertical.hash(h);
            }
            Item::Image {
                x0,
                y0,
                x1,
                y1,
                width,
                height,
                pixels,
            } => {
                [*x0, *y0, *x1, *y1].iter().for_each(|v| hash_f(h, *v));
                width.hash(h);
                height.hash(h);
                pixels.hash(h);
            }
        }
    }
}

/// Conservative device-space bounds `(x0, y0, x1, y1)` of what an item
/// can paint, or `None` for clip bookkeeping.
pub fn item_bounds(item: &Item) -> Option<(f64, f64, f64, f64)> {
    let pts_bounds = |pts: &[(f64, f64)], pad: f64| {
        let mut b = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in pts {
            b = (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y));
        }
        (b.0 - pad, b.1 - pad, b.2 + pad, b.3 + pad)
    };
    match item {
        Item::PushClip(_) | Item::PopClip => None,
        Item::Path { points, width, .. } => Some(pts_bounds(points, width / 2.0 + 1.0)),
        Item::FillPolygon { points, .. } => Some(pts_bounds(points, 1.0)),
        Item::FillRect { x0, y0, x1, y1, .. } | Item::Image { x0, y0, x1, y1, .. } => {
            Some((x0.min(*x1) - 1.0, y0.min(*y1) - 1.0, x0.max(*x1) + 1.0, y0.max(*y1) + 1.0))
        }
        Item::Text {
            x,
            y,
            text,
            size,
            vertical,
            ..
        } => {
            let n = text.chars().count() as f64;
            let len = n * (0.6 * size).round().max(1.0) + 2.0 * size;
            let h = (1.2 * size).round() + size + 2.0;
            Some(if *vertical {
                (x - h, y - len, x + h, y + len)
            } else {
                (x - len, y - h, x + len, y + h)
            })
        }
    }
}

/// Vector primitives of one component, in paint order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentDraw {
    pub id: ComponentId,
    pub items: Vec<Item>,
}

impl ComponentDraw {
    /// Stable hash of the component's primitives and canvas size.
    pub fn content_hash(&self, width: u32, height: u32) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        width.hash(&mut h);
        height.hash(&mut h);
        self.items.hash(&mut h);
        h.finish()
    }
}

/// A whole frame as vector primitives over an opaque background.
#[derive(Debug, Clone, PartialEq)]
pub struct DrawList {
    pub width: u32,
    pub height: u32,
    pub background: Color,
    pub components: Vec<ComponentDraw>,
}

impl DrawList {
    pub fn items(&self) -> impl Iterator<Item = &Item> {
        self.components.iter().flat_map(|c| c.items.iter())
    }

    pub fn component(&self, id: &ComponentId) -> Option<&ComponentDraw> {
        self.components.iter().find(|c| &c.id == id)
    }
}
