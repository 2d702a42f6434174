#![allow(dead_code)]

use std::net::{SocketAddr, TcpStream};
use std::path::{Path, PathBuf};
use std::time::Duration;

use plotforge::layout::Rect;
use plotforge::render::{Align, Canvas, Item, Painter, Raster};
use plotforge::scene::Color;
use plotforge::Scene;
use plotforge_cli::protocol::decode_frame;
use plotforge_testkit::ps::{self, Op};
use serde_json::{json, Value};
use tungstenite::{Message, WebSocket};

pub const W: u32 = 480;
pub const H: u32 = 360;

pub fn corpus(kind: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(kind)
}

pub fn golden() -> Vec<(String, PathBuf, Scene)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus("golden"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let scene = plotforge::load_spec(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (p.file_stem().unwrap().to_string_lossy().into_owned(), p, scene)
        })
        .collect()
}

pub fn decode_png(bytes: &[u8]) -> Raster {
    let mut reader = png::Decoder::new(std::io::Cursor::new(bytes)).read_info().unwrap();
    let mut buf = vec![0; reader.output_buffer_size().unwrap()];
    let info = reader.next_frame(&mut buf).unwrap();
    assert_eq!(info.color_type, png::ColorType::Rgba);
    assert_eq!(info.bit_depth, png::BitDepth::Eight);
    buf.truncate(info.buffer_size());
    Raster {
        width: info.width,
        height: info.height,
        pixels: buf,
    }
}

fn color(rgb: [f64; 3]) -> Color {
    let c = |v: f64| (v * 255.0).round().clamp(0.0, 255.0) as u8;
    Color::rgb(c(rgb[0]), c(rgb[1]), c(rgb[2]))
}

fn latin1(bytes: &[u8]) -> String {
    bytes
        .iter()
        .map(|&b| match b {
            0o260 => '°',
            0o261 => '±',
            0o265 => 'µ',
            b => b as char,
        })
        .collect()
}

/// Draw items equivalent to an interpreted EPS page, in device pixels
/// (y down).
pub fn page_items(page: &ps::Page, height: u32) -> Vec<Item> {
    let h = height as f64;
    let flip = |pts: &[(f64, f64)]| pts.iter().map(|&(x, y)| (x, h - y)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for op in &page.ops {
        let clip = match op {
            Op::Stroke { clip, .. } | Op::Fill { clip, .. } | Op::Text { clip, .. } | Op::Image { clip, .. } => *clip,
        };
        if let Some([x0, y0, x1, y1]) = clip {
            let r = |v: f64| v.round() as i32;
            out.push(Item::PushClip(Rect::new(r(x0), r(h - y1), r(x1), r(h - y0))));
        }
        match op {
            Op::Stroke {
                subpaths,
                rgb,
                width,
                dash,
                ..
            } => {
                for (pts, closed) in subpaths {
                    out.push(Item::Path {
                        points: flip(pts),
                        color: color(*rgb),
                        width: *width,
                        dash: (!dash.is_empty()).then(|| dash.clone()),
                        closed: *closed,
                    });
                }
            }
            Op::Fill { subpaths, rgb, .. } => {
                for pts in subpaths {
                    let pts = flip(pts);
                    let xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
                    let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
                    let axis_aligned = pts.len() == 4
                        && (0..4).all(|i| {
                            let (a, b) = (pts[i], pts[(i + 1) % 4]);
                            a.0 == b.0 || a.1 == b.1
                        });
                    if axis_aligned {
                        let min = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
                        let max = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                        out.push(Item::FillRect {
                            x0: min(&xs),
                            y0: min(&ys),
                            x1: max(&xs),
                            y1: max(&ys),
                            color: color(*rgb),
                        });
                    } else {
                        out.push(Item::FillPolygon {
                            points: pts,
                            color: color(*rgb),
                        });
                    }
                }
            }
            Op::Text {
                base,
                sup,
                x,
                y,
                size,
                align,
                angle,
                rgb,
                ..
            } => {
                let mut text = latin1(base);
                if !sup.is_empty() {
                    text.push('^');
                    text.push_str(&latin1(sup));
                }
                let align = if *align == 0.0 {
                    Align::Left
                } else if *align == 1.0 {
                    Align::Right
                } else {
                    Align::Center
                };
                out.push(Item::Text {
                    x: *x,
                    y: h - y,
                    text,
                    size: *size,
                    color: color(*rgb),
                    align,
                    vertical: *angle == 90.0,
                });
            }
            Op::Image {
                x0,
                y0,
                x1,
                y1,
                cols,
                rows,
                rgb,
                ..
            } => {
                let pixels: Vec<u8> = rgb.chunks_exact(3).flat_map(|p| [p[0], p[1], p[2], 255]).collect();
                out.push(Item::Image {
                    x0: *x0,
                    y0: h - y1,
                    x1: *x1,
                    y1: h - y0,
                    width: *cols as u32,
                    height: *rows as u32,
                    pixels: pixels.into(),
                });
            }
        }
        if clip.is_some() {
            out.push(Item::PopClip);
        }
    }
    out
}

/// Rasterizes an EPS document through the subset interpreter.
pub fn eps_raster(doc: &str, width: u32, height: u32) -> Result<Raster, ps::PsError> {
    let page = ps::interpret(doc)?;
    let mut canvas = Canvas::opaque(Rect::new(0, 0, width as i32, height as i32), Color::WHITE);
    Painter::new(&mut canvas).draw_all(&page_items(&page, height));
    Ok(canvas.to_raster())
}

/// `a` composited onto white, as EPS shows it.
pub fn on_white(r: &Raster) -> Raster {
    let mut out = r.clone();
    for px in out.pixels.chunks_exact_mut(4) {
        let a = px[3] as u32;
        for c in &mut px[..3] {
            *c = ((*c as u32 * a + 255 * (255 - a) + 127) / 255) as u8;
        }
        px[3] = 255;
    }
    out
}

/// Pixels whose largest channel difference exceeds `tol`.
pub fn pixels_off(a: &Raster, b: &Raster, tol: u8) -> usize {
    assert_eq!((a.width, a.height), (b.width, b.height));
    a.pixels
        .chunks_exact(4)
        .zip(b.pixels.chunks_exact(4))
        .filter(|(p, q)| p.iter().zip(q.iter()).any(|(x, y)| x.abs_diff(*y) > tol))
        .count()
}

/// Minimal protocol client over a plain WebSocket.
pub struct Client {
    ws: WebSocket<TcpStream>,
    next_id: u64,
    /// Frames received so far, in arrival order.
    pub frames: Vec<(u64, Vec<u8>)>,
    /// Error messages not tied to a request.
    pub events: Vec<Value>,
}

impl Client {
    pub fn connect(addr: SocketAddr) -> Client {
        let stream = TcpStream::connect(addr).unwrap();
        stream.set_read_timeout(Some(Duration::from_secs(30))).unwrap();
        let (ws, _) = tungstenite::client(format!("ws://{addr}/"), stream).unwrap();
        Client {
            ws,
            next_id: 1,
            frames: Vec::new(),
            events: Vec::new(),
        }
    }

    pub fn send_raw(&mut self, text: &str) {
        self.ws.send(Message::text(text)).unwrap();
    }

    fn read_one(&mut self) -> Option<Value> {
        match self.ws.read().expect("server message") {
            Message::Text(t) => {
                let v: Value = serde_json::from_str(t.as_str()).unwrap();
                if v["id"].is_null() {
                    self.events.push(v);
                    None
                } else {
                    Some(v)
                }
            }
            Message::Binary(b) => {
                let (g, png) = decode_frame(&b).expect("frame header");
                self.frames.push((g, png.to_vec()));
                None
            }
            _ => None,
        }
    }

    /// Reads the next text message that has an id.
    pub fn reply(&mut self) -> Value {
        loop {
            if let Some(v) = self.read_one() {
                return v;
            }
        }
    }

    /// Sends `msg` with a fresh id and returns the reply carrying it.
    pub fn request(&mut self, mut msg: Value) -> Value {
        let id = self.next_id;
        self.next_id += 1;
        msg["id"] = json!(id);
        self.send_raw(&msg.to_string());
        let reply = self.reply();
        assert_eq!(reply["id"], json!(id), "reply out of order: {reply}");
        reply
    }

    /// Waits for the frame of `generation` and decodes it.
    pub fn frame(&mut self, generation: u64) -> Raster {
        loop {
            if let Some((_, png)) = self.frames.iter().find(|(g, _)| *g == generation) {
                return decode_png(png);
            }
            if let Some(&(g, _)) = self.frames.last() {
                assert!(g < generation, "frame {generation} skipped, got {g}");
            }
            self.read_one();
        }
    }

    pub fn generations(&self) -> Vec<u64> {
        self.frames.iter().map(|f| f.0).collect()
    }
}

/// A data-style change to the first visible layer found in pre-order.
pub fn layer_change(scene: &Scene) -> (plotforge::scene::PropertyPath, Value) {
    use plotforge::scene::{node_path, Graph};
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
