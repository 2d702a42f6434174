mod common;

use common::{golden, H, W};
use plotforge::export::{encode_png, eps_string};
use plotforge::render::{emit_drawlist, render_scene, Raster};
use plotforge_testkit::ps;

fn decode(bytes: &[u8]) -> (png::OutputInfo, Vec<u8>) {
    let mut reader = png::Decoder::new(std::io::Cursor::new(bytes)).read_info().unwrap();
    let mut buf = vec![0; reader.output_buffer_size().unwrap()];
    let info = reader.next_frame(&mut buf).unwrap();
    buf.truncate(info.buffer_size());
    (info, buf)
}

#[test]
fn png_decodes_to_the_same_pixels() {
    for (name, scene) in golden() {
        let (raster, _) = render_scene(&scene, W, H, None).unwrap();
        let bytes = encode_png(&raster);
        let (info, pixels) = decode(&bytes);
        assert_eq!((info.width, info.height), (W, H), "{name}");
        assert_eq!(info.color_type, png::ColorType::Rgba, "{name}");
        assert_eq!(info.bit_depth, png::BitDepth::Eight, "{name}");
        assert!(pixels == raster.pixels, "{name}: decoded pixels differ");
    }
}

#[test]
fn png_of_odd_sizes_round_trips() {
    for (w, h) in [(1, 1), (3, 7), (257, 2), (64, 65)] {
        let mut r = Raster::new(w, h, plotforge::scene::Color::rgba(10, 20, 30, 40));
        for (i, p) in r.pixels.iter_mut().enumerate() {
            *p = (i * 37 % 251) as u8;
        }
        let (_, pixels) = decode(&encode_png(&r));
        assert_eq!(pixels, r.pixels, "{w}x{h}");
    }
}

#[test]
fn outputs_are_deterministic() {
    for (name, scene) in golden() {
        let a = encode_png(&render_scene(&scene, W, H, None).unwrap().0);
        let b = encode_png(&render_scene(&scene, W, H, None).unwrap().0);
        assert!(a == b, "{name}: png bytes differ");
        let e1 = eps_string(&emit_drawlist(&scene, W, H).unwrap(), W, H);
        let e2 = eps_string(&emit_drawlist(&scene, W, H).unwrap(), W, H);
        assert!(e1 == e2, "{name}: eps bytes differ");
    }
}

#[test]
fn eps_passes_the_subset_validator() {
    for (name, scene) in golden() {
        let dl = emit_drawlist(&scene, W, H).unwrap();
        let doc = eps_string(&dl, W, H);
        let page = ps::interpret(&doc).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(page.bbox, [0, 0, W as i64, H as i64], "{name}");
        let texts = page.ops.iter().filter(|o| matches!(o, ps::Op::Text { .. })).count();
        let want = dl.items().filter(|i| matches!(i, plotforge::render::Item::Text { .. })).count();
        assert_eq!(texts, want, "{name}");
    }
}

#[test]
fn eps_rejects_tampering() {
    let (_, scene) = golden().remove(0);
    let doc = eps_string(&emit_drawlist(&scene, W, H).unwrap(), W, H);
    assert!(ps::validate(&doc).is_ok());
    let cases = [
        doc.replacen("%%BoundingBox: 0 0 480 360", "%%BoundingBox: 0 0 0 360", 1),
        doc.replacen("showpage\n", "", 1),
        doc.replacen("%%EOF\n", "", 1),
        doc.replacen("grestore\nshowpage", "showpage", 1),
        doc.replacen(" stroke\n", " stroke 1\n", 1),
        doc.replacen("setlinewidth", "setlinewidht", 1),
    ];
    for (i, bad) in cases.iter().enumerate() {
        assert!(ps::validate(bad).is_err(), "case {i} accepted");
    }
}
