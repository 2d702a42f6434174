mod common;

use common::{golden, layer_change, H, W};
use plotforge::render::{emit_drawlist, rasterize_drawlist, render_incremental, render_scene, render_tiles, TileCache};
use plotforge::scene::{apply_change, enumerate_paths, resolve, ComponentId, FieldKind, PropertyPath, Scene};
use serde_json::{json, Value};

fn affected(record: &plotforge::scene::ChangeRecord, scene: &Scene) -> Vec<ComponentId> {
    let dl = emit_drawlist(scene, W, H).unwrap();
    dl.components
        .iter()
        .filter(|c| record.invalidates(&c.id, scene))
        .map(|c| c.id.clone())
        .collect()
}

#[test]
fn layer_change_misses_exactly_the_affected_tiles() {
    for (name, scene) in golden() {
        let cache = TileCache::default();
        render_scene(&scene, W, H, Some(&cache)).unwrap();
        let (path, value) = layer_change(&scene);
        let (next, record) = apply_change(&scene, &path, value).unwrap();
        let (cached, stats) = render_scene(&next, W, H, Some(&cache)).unwrap();
        let (scratch, _) = render_scene(&next, W, H, None).unwrap();
        assert_eq!(cached, scratch, "{name}: cached render differs");
        let want = affected(&record, &next);
        assert_eq!(stats.missed, want, "{name}: {path}");
        assert_eq!(stats.misses, 1, "{name}: {path}");
    }
}

#[test]
fn tiled_render_equals_monolithic() {
    for (name, scene) in golden() {
        let (tiled, _) = render_scene(&scene, W, H, None).unwrap();
        let mono = rasterize_drawlist(&emit_drawlist(&scene, W, H).unwrap());
        assert_eq!(tiled.diff_count(&mono), 0, "{name}");
    }
}

/// A different value of the same kind, or `None` when there is no obvious
/// one.
fn perturb(path: &PropertyPath, v: &Value, kind: FieldKind) -> Option<Value> {
    let last = path.to_string();
    Some(match kind {
        FieldKind::Bool => json!(!v.as_bool()?),
        FieldKind::String if last.ends_with("color") || last.ends_with("fill") => json!("#10a040"),
        FieldKind::String if last.ends_with("title") || last.ends_with("axis_label") || last.ends_with(".text") => {
            json!(format!("{}x", v.as_str()?))
        }
        FieldKind::Number if last.ends_with("stroke_width") || last.ends_with("symbol_size") => {
            json!(v.as_f64()? + 1.0)
        }
        FieldKind::Number if last.ends_with(".x") || last.ends_with(".y") || last.ends_with("weight") => {
            json!(v.as_f64()? * 1.1 + 0.01)
        }
        _ => return None,
    })
}

/// Every simple property of every golden spec, changed one at a time:
/// reusing the tiles a change does not invalidate reproduces a scratch
/// render exactly.
#[test]
fn incremental_render_is_sound_for_every_simple_property() {
    let mut checked = 0;
    for (name, scene) in golden() {
        let (_, tiles) = render_tiles(&scene, W, H).unwrap();
        for path in enumerate_paths(&scene) {
            let h = resolve(&path, &scene).unwrap();
            let Some(v) = perturb(&path, &h.value, h.kind) else { continue };
            let Ok((next, record)) = apply_change(&scene, &path, v) else { continue };
            let Ok((inc, _, redrawn)) = render_incremental(&next, W, H, &tiles, &record) else { continue };
            let (scratch, _) = render_scene(&next, W, H, None).unwrap();
            assert_eq!(inc.diff_count(&scratch), 0, "{name}: {path}");
            assert_eq!(redrawn, affected(&record, &next), "{name}: {path}");
            checked += 1;
        }
    }
    assert!(checked > 200, "only {checked} changes exercised");
}
