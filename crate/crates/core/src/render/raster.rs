use super::drawlist::Item;
use super::font;
use crate::layout::Rect;
use crate::scene::Color;

/// Final 8-bit RGBA image, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raster {
    pub width: u32,
    pub height: u32,
    pub pixels: Vec<u8>,
}

impl Raster {
    pub fn new(width: u32, height: u32, fill: Color) -> Self {
        let mut pixels = Vec::with_capacity(width as usize * height as usize * 4);
        for _ in 0..width as usize * height as usize {
            pixels.extend_from_slice(&fill.0);
        }
        Raster {
            width,
            height,
            pixels,
        }
    }

    pub fn pixel(&self, x: u32, y: u32) -> [u8; 4] {
        let i = (y as usize * self.width as usize + x as usize) * 4;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2], self.pixels[i + 3]]
    }

    /// Number of pixels that differ in any channel.
    pub fn diff_count(&self, other: &Raster) -> usize {
        assert_eq!((self.width, self.height), (other.width, other.height));
        self.pixels
            .chunks_exact(4)
            .zip(other.pixels.chunks_exact(4))
            .filter(|(a, b)| a != b)
            .count()
    }
}

/// Premultiplied floating-point pixels over a device rectangle.
///
/// Color channels are kept on the 0..=255 scale and alpha on 0..=1. Source
/// alpha is always a multiple of 1/4096, so compositing is exact for the
/// overlap depths that occur in practice and tiled composition reproduces
/// direct painting bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct Canvas {
    pub rect: Rect,
    data: Vec<[f64; 4]>,
}

/// Alpha of `color` at coverage `k / 16`.
pub fn source_alpha(color: Color, k: u32) -> f64 {
    let a = color.a() as u32;
    (k as f64 / 16.0) * ((a + (a >> 7)) as f64 / 256.0)
}

impl Canvas {
    pub fn transparent(rect: Rect) -> Self {
        let n = (rect.width().max(0) * rect.height().max(0)) as usize;
        Canvas {
            rect,
            data: vec![[0.0; 4]; n],
        }
    }

    pub fn opaque(rect: Rect, color: Color) -> Self {
        let n = (rect.width().max(0) * rect.height().max(0)) as usize;
        Canvas {
            rect,
            data: vec![[color.r() as f64, color.g() as f64, color.b() as f64, 1.0]; n],
        }
    }

    fn idx(&self, x: i32, y: i32) -> usize {
        ((y - self.rect.y0) * self.rect.width() + (x - self.rect.x0)) as usize
    }

    pub fn get(&self, x: i32, y: i32) -> [f64; 4] {
        self.data[self.idx(x, y)]
    }

    /// Source-over of `color` at coverage `k / 16` onto pixel `(x, y)`.
    pub fn blend(&mut self, x: i32, y: i32, color: Color, k: u32) {
        let a = source_alpha(color, k);
        if a == 0.0 {
            return;
        }
        let i = self.idx(x, y);
        let d = &mut self.data[i];
        let inv = 1.0 - a;
        d[0] = color.r() as f64 * a + d[0] * inv;
        d[1] = color.g() as f64 * a + d[1] * inv;
        d[2] = color.b() as f64 * a + d[2] * inv;
        d[3] = a + d[3] * inv;
    }

    /// Source-over of this canvas onto `dst` where they overlap.
    pub fn composite_onto(&self, dst: &mut Canvas) {
        let r = self.rect.intersect(&dst.rect);
        if r.is_empty() {
            return;
        }
        let w = r.width() as usize;
        for y in r.y0..r.y1 {
            let (si, di) = (self.idx(r.x0, y), dst.idx(r.x0, y));
            let src = &self.data[si..si + w];
            for (d, s) in dst.data[di..di + w].iter_mut().zip(src) {
                if s[3] == 0.0 {
                    continue;
                }
                let inv = 1.0 - s[3];
                for c in 0..4 {
                    d[c] = s[c] + d[c] * inv;
                }
            }
        }
    }

    /// Smallest rectangle holding every painted pixel.
    pub fn painted_bounds(&self) -> Option<Rect> {
        let mut b: Option<Rect> = None;
        for y in self.rect.y0..self.rect.y1 {
            for x in self.rect.x0..self.rect.x1 {
                if self.get(x, y)[3] != 0.0 {
                    let r = b.get_or_insert(Rect::new(x, y, x + 1, y + 1));
                    r.x0 = r.x0.min(x);
                    r.y0 = r.y0.min(y);
                    r.x1 = r.x1.max(x + 1);
                    r.y1 = r.y1.max(y + 1);
                }
            }
        }
        b
    }

    /// Copy restricted to `r` (which must lie inside this canvas).
    pub fn crop(&self, r: Rect) -> Canvas {
        let mut out = Canvas::transparent(r);
        let w = r.width().max(0) as usize;
        for y in r.y0..r.y1 {
            let (si, di) = (self.idx(r.x0, y), out.idx(r.x0, y));
            out.data[di..di + w].copy_from_slice(&self.data[si..si + w]);
        }
        out
    }

    /// Quantizes an opaque canvas anchored at the origin.
    pub fn to_raster(&self) -> Raster {
        let mut pixels = vec![0u8; self.data.len() * 4];
        for (out, p) in pixels.chunks_exact_mut(4).zip(&self.data) {
            let q = |v: f64| v.round().clamp(0.0, 255.0) as u8;
            out.copy_from_slice(&[q(p[0]), q(p[1]), q(p[2]), q(p[3] * 255.0)]);
        }
        Raster {
            width: self.rect.width() as u32,
            height: self.rect.height() as u32,
            pixels,
        }
    }
}

/// Rasterizes items onto a canvas, tracking the clip stack.
pub struct Painter<'a> {
    canvas: &'a mut Canvas,
    clips: Vec<Rect>,
}

impl<'a> Painter<'a> {
    pub fn new(canvas: &'a mut Canvas) -> Self {
        Painter {
            canvas,
            clips: Vec::new(),
        }
    }

    fn region(&self) -> Rect {
        let mut r = self.canvas.rect;
        for c in &self.clips {
            r = r.intersect(c);
        }
        r
    }

    pub fn draw_all<'i>(&mut self, items: impl IntoIterator<Item = &'i Item>) {
        for it in items {
            self.draw(it);
        }
    }

    pub fn draw(&mut self, item: &Item) {
        match item {
            Item::PushClip(r) => self.clips.push(*r),
            Item::PopClip => {
                self.clips.pop();
            }
            Item::Path {
                points,
                color,
                width,
                dash,
                closed,
            } => self.path(points, *color, *width, dash.as_deref(), *closed),
            Item::FillRect { x0, y0, x1, y1, color } => self.fill_rect(*x0, *y0, *x1, *y1, *color),
            Item::FillPolygon { points, color } => self.fill_polygon(points, *color),
            Item::Text {
                x,
                y,
                text,
                size,
                color,
                align,
                vertical,
            } => {
                let region = self.region();
                let canvas = &mut *self.canvas;
                font::text_pixels(*x, *y, text, *size, *align, *vertical, |px, py| {
                    if region.contains_point(px as f64, py as f64) {
                        canvas.blend(px, py, *color, 16);
                    }
                });
            }
            Item::Image {
                x0,
                y0,
                x1,
                y1,
                width,
                height,
                pixels,
            } => self.image(*x0, *y0, *x1, *y1, *width, *height, pixels),
        }
    }

    fn clamp_box(&self, x0: f64, y0: f64, x1: f64, y1: f64) -> Option<Rect> {
        let reg = self.region();
        let lim = |v: f64, lo: i32, hi: i32| v.max(lo as f64).min(hi as f64) as i32;
        let r = Rect::new(
            lim(x0.floor(), reg.x0, reg.x1),
            lim(y0.floor(), reg.y0, reg.y1),
            lim(x1.ceil(), reg.x0, reg.x1),
            lim(y1.ceil(), reg.y0, reg.y1),
        );
        (!r.is_empty()).then_some(r)
    }

    fn path(&mut self, points: &[(f64, f64)], color: Color, width: f64, dash: Option<&[f64]>, closed: bool) {
        let mut pts: Vec<(f64, f64)> = points.to_vec();
        if closed && pts.len() > 2 {
            pts.push(pts[0]);
        }
        if pts.len() < 2 || pts.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return;
        }
        let pieces = match dash {
            Some(d) if d.iter().sum::<f64>() > 0.0 => dash_pieces(&pts, d),
            _ => vec![pts],
        };
        let hw = width / 2.0;
        let pad = hw + 1.0;
        let (mut bx0, mut by0, mut bx1, mut by1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in pieces.iter().flatten() {
            bx0 = bx0.min(p.0);
            by0 = by0.min(p.1);
            bx1 = bx1.max(p.0);
            by1 = by1.max(p.1);
        }
        let Some(bb) = self.clamp_box(bx0 - pad, by0 - pad, bx1 + pad, by1 + pad) else {
            return;
        };
        let bw = bb.width() as usize;
        let mut cov = vec![0u8; bw * bb.height() as usize];
        let mut stamp = |x: i32, y: i32, c: f64| {
            let k = (c * 16.0).round() as u8;
            let i = (y - bb.y0) as usize * bw + (x - bb.x0) as usize;
            if k > cov[i] {
                cov[i] = k;
            }
        };
        for piece in &pieces {
            for seg in piece.windows(2) {
                let (a, b) = (seg[0], seg[1]);
                let (dx, dy) = (b.0 - a.0, b.1 - a.1);
                let len = (dx * dx + dy * dy).sqrt();
                if len == 0.0 {
                    continue;
                }
                let Some(r) = self
                    .clamp_box(a.0.min(b.0) - pad, a.1.min(b.1) - pad, a.0.max(b.0) + pad, a.1.max(b.1) + pad)
                else {
                    continue;
                };
                for y in r.y0..r.y1 {
                    for x in r.x0..r.x1 {
                        let (px, py) = (x as f64 + 0.5 - a.0, y as f64 + 0.5 - a.1);
                        let t = (px * dx + py * dy) / len;
                        if t < 0.0 || t > len {
                            continue;
                        }
                        let d = (px * dy - py * dx).abs() / len;
                        let c = (hw + 0.5 - d).clamp(0.0, 1.0);
                        if c > 0.0 {
                            stamp(x, y, c);
                        }
                    }
                }
            }
            if hw > 0.75 {
                let inner = if closed { &piece[..] } else { &piece[1..piece.len() - 1] };
                for &(vx, vy) in inner {
                    let Some(r) = self.clamp_box(vx - pad, vy - pad, vx + pad, vy + pad) else {
                        continue;
                    };
                    for y in r.y0..r.y1 {
                        for x in r.x0..r.x1 {
                            let d = ((x as f64 + 0.5 - vx).powi(2) + (y as f64 + 0.5 - vy).powi(2)).sqrt();
                            let c = (hw + 0.5 - d).clamp(0.0, 1.0);
                            if c > 0.0 {
                                stamp(x, y, c);
                            }
                        }
                    }
                }
            }
        }
        for y in bb.y0..bb.y1 {
            for x in bb.x0..bb.x1 {
                let k = cov[(y - bb.y0) as usize * bw + (x - bb.x0) as usize];
                if k > 0 {
                    self.canvas.blend(x, y, color, k as u32);
                }
            }
        }
    }

    fn fill_rect(&mut self, x0: f64, y0: f64, x1: f64, y1: f64, color: Color) {
        let (x0, x1) = (x0.min(x1), x0.max(x1));
        let (y0, y1) = (y0.min(y1), y0.max(y1));
        let Some(bb) = self.clamp_box(x0, y0, x1, y1) else {
            return;
        };
        let inside = |p: i32, lo: f64, hi: f64| -> u32 {
            (0..4)
                .filter(|i| {
                    let s = p as f64 + (*i as f64 + 0.5) / 4.0;
                    s >= lo && s < hi
                })
                .count() as u32
        };
        for y in bb.y0..bb.y1 {
            let ry = inside(y, y0, y1);
            if ry == 0 {
                continue;
            }
            for x in bb.x0..bb.x1 {
                let k = ry * inside(x, x0, x1);
                if k > 0 {
                    self.canvas.blend(x, y, color, k);
                }
            }
        }
    }

    fn fill_polygon(&mut self, points: &[(f64, f64)], color: Color) {
        if points.len() < 3 || points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return;
        }
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            x0 = x0.min(p.0);
            y0 = y0.min(p.1);
            x1 = x1.max(p.0);
            y1 = y1.max(p.1);
        }
        let Some(bb) = self.clamp_box(x0, y0, x1, y1) else {
            return;
        };
        for y in bb.y0..bb.y1 {
            for x in bb.x0..bb.x1 {
                let mut k = 0;
                for j in 0..4 {
                    for i in 0..4 {
                        let sx = x as f64 + (i as f64 + 0.5) / 4.0;
                        let sy = y as f64 + (j as f64 + 0.5) / 4.0;
                        if winding(points, sx, sy) != 0 {
                            k += 1;
                        }
                    }
                }
                if k > 0 {
                    self.canvas.blend(x, y, color, k);
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn image(&mut self, x0: f64, y0: f64, x1: f64, y1: f64, w: u32, h: u32, pixels: &[u8]) {
        if w == 0 || h == 0 || x1 <= x0 || y1 <= y0 {
            return;
        }
        let Some(bb) = self.clamp_box(x0, y0, x1, y1) else {
            return;
        };
        for y in bb.y0..bb.y1 {
            let cy = y as f64 + 0.5;
            if cy < y0 || cy >= y1 {
                continue;
            }
            let row = (((cy - y0) / (y1 - y0)) * h as f64).floor().min(h as f64 - 1.0) as usize;
            for x in bb.x0..bb.x1 {
                let cx = x as f64 + 0.5;
                if cx < x0 || cx >= x1 {
                    continue;
                }
                let col = (((cx - x0) / (x1 - x0)) * w as f64).floor().min(w as f64 - 1.0) as usize;
                let i = (row * w as usize + col) * 4;
                let c = Color([pixels[i], pixels[i + 1], pixels[i + 2], pixels[i + 3]]);
                if c.a() > 0 {
                    self.canvas.blend(x, y, c, 16);
                }
            }
        }
    }
}

/// Nonzero winding number of the closed polygon around `(x, y)`.
fn winding(pts: &[(f64, f64)], x: f64, y: f64) -> i32 {
    let mut w = 0;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        let cross = (b.0 - a.0) * (y - a.1) - (x - a.0) * (b.1 - a.1);
        if a.1 <= y {
            if b.1 > y && cross > 0.0 {
                w += 1;
            }
        } else if b.1 <= y && cross < 0.0 {
            w -= 1;
        }
    }
    w
}

/// Splits a polyline into its "on" pieces under a repeating dash pattern
/// that continues across vertices.
fn dash_pieces(pts: &[(f64, f64)], pattern: &[f64]) -> Vec<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let mut idx = 0;
    let mut left = pattern[0];
    let mut on = true;
    let mut cur: Vec<(f64, f64)> = vec![pts[0]];
    for seg in pts.windows(2) {
        let (a, b) = (seg[0], seg[1]);
        let len = ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt();
        let mut pos = 0.0;
        while len - pos > left {
            pos += left;
            let f = pos / len;
            let p = (a.0 + (b.0 - a.0) * f, a.1 + (b.1 - a.1) * f);
            if on {
                cur.push(p);
                out.push(std::mem::take(&mut cur));
            } else {
                cur = vec![p];
            }
            on = !on;
            idx = (idx + 1) % pattern.len();
            left = pattern[idx];
        }
        left -= len - pos;
        if on {
            cur.push(b);
        }
    }
    if on && cur.len() > 1 {
        out.push(cur);
    }
    out
}
