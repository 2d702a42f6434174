use std::fmt::Write as _;
use std::io::{self, Write};

use crate::render::{Align, DrawList, Item};
use crate::scene::Color;

pub const HEADER: &str = "%!PS-Adobe-3.0 EPSF-3.0";

/// Procedures the body relies on. `PT` draws a text run:
/// `(base) (superscript) x y size align angle PT`, where `align` is the
/// fraction of the run width placed left of `x`.
pub const PROLOG: &str = "\
/F /Helvetica findfont dup length dict begin
{1 index /FID ne {def} {pop pop} ifelse} forall
/Encoding ISOLatin1Encoding def currentdict end definefont pop
/PT { gsave
/an exch def /al exch def /sz exch def translate an rotate
/sp exch def /bs exch def
/F findfont sz scalefont setfont
bs stringwidth pop sp stringwidth pop add al mul neg 0 moveto
bs show 0 sz 0.4 mul rmoveto sp show
grestore } bind def
";

/// Compact decimal form with at most three fractional digits.
pub fn num(v: f64) -> String {
    let s = format!("{:.3}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".into()
    } else {
        s.to_string()
    }
}

/// Straight color flattened onto white, since PostScript has no alpha.
fn rgb(c: Color) -> String {
    let a = c.a() as f64 / 255.0;
    let ch = |v: u8| num((v as f64 * a + 255.0 * (1.0 - a)) / 255.0);
    format!("{} {} {} setrgbcolor", ch(c.r()), ch(c.g()), ch(c.b()))
}

/// PostScript string literal; non-ASCII symbols map to Latin-1 codes or
/// ASCII look-alikes.
pub fn ps_string(s: &str) -> String {
    let mut out = String::from("(");
    for c in s.chars() {
        match c {
            '(' | ')' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '°' => out.push_str("\\260"),
            '±' => out.push_str("\\261"),
            'µ' => out.push_str("\\265"),
            '′' => out.push('\''),
            '″' => out.push('"'),
            '−' => out.push('-'),
            ' '..='~' => out.push(c),
            _ => out.push('?'),
        }
    }
    out.push(')');
    out
}

/// Renders a draw list as an EPS document of `width` x `height` points.
pub fn eps_string(dl: &DrawList, width: u32, height: u32) -> String {
    let h = dl.height as f64;
    let y = |v: f64| num(h - v);
    let pt = |(px, py): (f64, f64)| format!("{} {}", num(px), y(py));
    let mut o = String::new();
    let _ = writeln!(o, "{HEADER}");
    let _ = writeln!(o, "%%BoundingBox: 0 0 {width} {height}");
    let _ = writeln!(o, "%%Creator: plotforge");
    let _ = writeln!(o, "%%LanguageLevel: 2");
    let _ = writeln!(o, "%%EndComments");
    let _ = writeln!(o, "%%BeginProlog");
    o.push_str(PROLOG);
    let _ = writeln!(o, "%%EndProlog");
    let _ = writeln!(o, "gsave");
    if width != dl.width || height != dl.height {
        let _ = writeln!(
            o,
            "{} {} scale",
            num(width as f64 / dl.width as f64),
            num(height as f64 / dl.height as f64)
        );
    }
    let _ = writeln!(o, "0 setlinecap 1 setlinejoin");
    let _ = writeln!(o, "{}", rgb(dl.background));
    let _ = writeln!(o, "0 0 {} {} rectfill", dl.width, dl.height);
    for item in dl.items() {
        match item {
            Item::PushClip(r) => {
                let _ = writeln!(o, "gsave {} {} {} {} rectclip", r.x0, h as i32 - r.y1, r.width(), r.height());
            }
            Item::PopClip => {
                let _ = writeln!(o, "grestore");
            }
            Item::Path {
                points,
                color,
                width,
                dash,
                closed,
            } => {
                if points.len() < 2 {
                    continue;
                }
                let dash = match dash {
                    Some(d) => d.iter().map(|v| num(*v)).collect::<Vec<_>>().join(" "),
                    None => String::new(),
                };
                let _ = writeln!(o, "{} {} setlinewidth [{}] 0 setdash", rgb(*color), num(*width), dash);
                let mut line = format!("newpath {} moveto", pt(points[0]));
                for p in &points[1..] {
                    let _ = write!(line, " {} lineto", pt(*p));
                }
                if *closed {
                    line.push_str(" closepath");
                }
                let _ = writeln!(o, "{line} stroke");
            }
            Item::FillRect { x0, y0, x1, y1, color } => {
                let _ = writeln!(
                    o,
                    "{} {} {} {} {} rectfill",
                    rgb(*color),
                    num(*x0),
                    y(*y1),
                    num(x1 - x0),
                    num(y1 - y0)
                );
            }
            Item::FillPolygon { points, color } => {
                if points.len() < 3 {
                    continue;
                }
                let mut line = format!("{} newpath {} moveto", rgb(*color), pt(points[0]));
                for p in &points[1..] {
                    let _ = write!(line, " {} lineto", pt(*p));
                }
                let _ = writeln!(o, "{line} closepath fill");
            }
            Item::Text {
                x,
                y: ty,
                text,
                size,
                color,
                align,
                vertical,
            } => {
                let (base, sup) = text.split_once('^').unwrap_or((text, ""));
                let al = match align {
                    Align::Left => "0",
                    Align::Center => "0.5",
                    Align::Right => "1",
                };
                let _ = writeln!(
                    o,
                    "{} {} {} {} {} {} {} {} PT",
                    rgb(*color),
                    ps_string(base),
                    ps_string(&sup.replace('^', "")),
                    num(*x),
                    y(*ty),
                    num(*size),
                    al,
                    if *vertical { 90 } else { 0 }
                );
            }
            Item::Image {
                x0,
                y0,
                x1,
                y1,
                width: w,
                height: ih,
                pixels,
            } => {
                let _ = writeln!(o, "gsave {} {} translate {} {} scale", num(*x0), y(*y1), num(x1 - x0), num(y1 - y0));
                let _ = writeln!(o, "/picstr {} string def", w * 3);
                let _ = writeln!(
                    o,
                    "{w} {ih} 8 [{w} 0 0 -{ih} 0 {ih}] {{currentfile picstr readhexstring pop}} false 3 colorimage"
                );
                let mut line = String::new();
                for px in pixels.chunks_exact(4) {
                    let c = Color([px[0], px[1], px[2], px[3]]);
                    let a = c.a() as u32;
                    for v in [c.r(), c.g(), c.b()] {
                        let flat = (v as u32 * a + 255 * (255 - a) + 127) / 255;
                        let _ = write!(line, "{flat:02x}");
                    }
                    if line.len() >= 72 {
                        let _ = writeln!(o, "{line}");
                        line.clear();
                    }
                }
                if !line.is_empty() {
                    let _ = writeln!(o, "{line}");
                }
                let _ = writeln!(o, "grestore");
            }
        }
    }
    let _ = writeln!(o, "grestore");
    let _ = writeln!(o, "showpage");
    let _ = writeln!(o, "%%EOF");
    o
}

pub fn export_eps(dl: &DrawList, width: u32, height: u32, dest: &mut impl Write) -> io::Result<()> {
    dest.write_all(eps_string(dl, width, height).as_bytes())?;
    dest.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::ComponentDraw;
    use crate::scene::ComponentId;

    fn one_line() -> DrawList {
        DrawList {
            width: 400,
            height: 300,
            background: Color::WHITE,
            components: vec![ComponentDraw {
                id: ComponentId::Decoration { node: "n".into() },
                items: vec![Item::Path {
                    points: vec![(0.0, 0.0), (400.0, 300.0)],
                    color: Color::BLACK,
                    width: 1.0,
                    dash: None,
                    closed: false,
                }],
            }],
        }
    }

    #[test]
    fn y_axis_flips() {
        let s = eps_string(&one_line(), 400, 300);
        assert!(s.contains("0 300 moveto 400 0 lineto"), "{s}");
        assert!(s.starts_with(HEADER));
        assert_eq!(s.matches("%%BoundingBox: 0 0 400 300").count(), 1);
        assert!(s.ends_with("%%EOF\n"));
    }

    #[test]
    fn numbers_are_compact() {
        assert_eq!(num(300.0), "300");
        assert_eq!(num(12.5), "12.5");
        assert_eq!(num(-0.0001), "0");
        assert_eq!(num(1.0 / 3.0), "0.333");
    }

    #[test]
    fn strings_escape() {
        assert_eq!(ps_string("a(b)\\"), "(a\\(b\\)\\\\)");
        assert_eq!(ps_string("+05°30′"), "(+05\\26030')");
    }
}
