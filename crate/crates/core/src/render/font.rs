use super::drawlist::Align;
use super::font_data::{Face, CHARS, FACES};

/// Horizontal advance per character, as a multiple of the font size.
pub const ADVANCE: f64 = 0.6;
/// Superscript raise after `^`, as a multiple of the font size.
pub const SUPERSCRIPT_RAISE: f64 = 0.4;

fn face_for(size: f64) -> &'static Face {
    FACES
        .iter()
        .min_by(|a, b| {
            let da = (a.size as f64 - size).abs();
            let db = (b.size as f64 - size).abs();
            da.total_cmp(&db)
        })
        .expect("at least one face")
}

fn glyph_index(c: char) -> usize {
    CHARS
        .iter()
        .position(|&k| k == c)
        .or_else(|| CHARS.iter().position(|&k| k == '?'))
        .expect("'?' glyph present")
}

/// Characters drawn, with the superscript raise in force for each.
fn glyphs(text: &str) -> Vec<(char, bool)> {
    let mut raised = false;
    let mut out = Vec::new();
    for c in text.chars() {
        if c == '^' {
            raised = true;
        } else {
            out.push((c, raised));
        }
    }
    out
}

/// Calls `put(x, y)` for every inked device pixel of a text run.
///
/// Horizontal runs place each glyph cell with its top at
/// `baseline - size`; vertical runs are the same layout rotated a quarter
/// turn counter-clockwise about the anchor.
pub fn text_pixels(
    x: f64,
    y: f64,
    text: &str,
    size: f64,
    align: Align,
    vertical: bool,
    mut put: impl FnMut(i32, i32),
) {
    if !(size > 0.0) || !x.is_finite() || !y.is_finite() {
        return;
    }
    let face = face_for(size);
    let cw = (ADVANCE * size).round().max(1.0) as u32;
    let ch = (1.2 * size).round().max(1.0) as u32;
    let run = glyphs(text);
    let adv = ADVANCE * size;
    let start = -align.factor() * adv * run.len() as f64;
    for (i, (c, raised)) in run.into_iter().enumerate() {
        let g = glyph_index(c);
        let rows = &face.rows[g * face.height as usize..(g + 1) * face.height as usize];
        let u = start + i as f64 * adv;
        let v0 = -size - if raised { SUPERSCRIPT_RAISE * size } else { 0.0 };
        let (ox, oy) = if vertical {
            ((x + v0).round() as i32, (y - u).round() as i32)
        } else {
            ((x + u).round() as i32, (y + v0).round() as i32)
        };
        for gy in 0..ch {
            let bits = rows[(gy * face.height / ch) as usize];
            if bits == 0 {
                continue;
            }
            for gx in 0..cw {
                if bits >> (gx * face.width / cw) & 1 == 0 {
                    continue;
                }
                if vertical {
                    put(ox + gy as i32, oy - 1 - gx as i32);
                } else {
                    put(ox + gx as i32, oy + gy as i32);
                }
            }
        }
    }
}
