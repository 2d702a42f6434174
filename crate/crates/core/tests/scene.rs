mod common;

use std::collections::BTreeSet;

use common::golden;
use plotforge::parse_spec;
use plotforge::scene::{
    apply_change, enumerate_paths, resolve, ComponentId, ErrorCode, PropertyPath, Scene, SceneSession,
};
use proptest::prelude::*;
use serde_json::{json, Value};

const MINIMAL: &str = r#"{"version":1,"plots":[{"id":"p",
  "transforms":[{"id":"x","kind":"linear","range":{"lo":0,"hi":1}},
                {"id":"y","kind":"linear","range":{"lo":0,"hi":1}}],
  "axes":[{"side":"bottom","transform_ref":"x"},{"side":"left","transform_ref":"y"}],
  "layers":[{"id":"l","x_transform_ref":"x","y_transform_ref":"y",
             "graphs":[{"kind":"xy","x":[0,1],"y":[0,1]}]},
            {"id":"m","x_transform_ref":"x","y_transform_ref":"y",
             "graphs":[{"kind":"xy","x":[0,1],"y":[1,0]}]}]}]}"#;

fn minimal() -> Scene {
    parse_spec(MINIMAL, None).unwrap()
}

fn path(s: &str) -> PropertyPath {
    PropertyPath::parse(s).unwrap()
}

fn first_code(text: &str) -> ErrorCode {
    parse_spec(text, None).unwrap_err().issues()[0].code
}

#[test]
fn minimal_spec_builds() {
    let s = minimal();
    assert_eq!(s.plots.len(), 1);
    assert_eq!(s.root().transforms.len(), 2);
    assert_eq!(s.root().layers.len(), 2);
    assert!(s.root().children.is_empty());
}

#[test]
fn build_errors() {
    assert_eq!(first_code(&MINIMAL.replacen("\"x_transform_ref\":\"x\"", "\"x_transform_ref\":\"tx9\"", 1)), ErrorCode::UnresolvedRef);
    let log = MINIMAL.replacen(r#""kind":"linear","range":{"lo":0,"hi":1}"#, r#""kind":"log","range":{"lo":-1,"hi":10}"#, 1);
    assert_eq!(first_code(&log), ErrorCode::LogNonpositive);
    assert_eq!(first_code(&MINIMAL.replacen("\"y\":[0,1]", "\"y\":[0,1,2]", 1)), ErrorCode::ArrayMismatch);
    assert_eq!(first_code(&MINIMAL.replacen(r#""lo":0,"hi":1"#, r#""lo":1,"hi":1"#, 1)), ErrorCode::InvalidRange);
}

#[test]
fn resolve_examples() {
    let s = minimal();
    assert_eq!(resolve(&path("plots[0].id"), &s).unwrap().value, json!("p"));
    assert_eq!(resolve(&path("plots[3].title"), &s).unwrap_err().code, ErrorCode::IndexOutOfRange);
    assert_eq!(resolve(&path("plots[0].nope"), &s).unwrap_err().code, ErrorCode::BadPath);
    let err = apply_change(&s, &path("plots[0].layers[0].graphs[0].style.stroke_width"), json!("thick")).unwrap_err();
    assert_eq!(err.code, ErrorCode::TypeMismatch);
    let err = apply_change(&s, &path("plots[0].layers[0].id"), json!("q")).unwrap_err();
    assert_eq!(err.code, ErrorCode::ReadOnly);
}

fn layer(id: &str) -> ComponentId {
    ComponentId::Layer {
        node: "p".into(),
        layer: id.into(),
    }
}

fn axis(i: usize) -> ComponentId {
    ComponentId::Axis { node: "p".into(), index: i }
}

#[test]
fn color_change_affects_that_layer_only() {
    let (_, rec) = apply_change(&minimal(), &path("plots[0].layers[1].graphs[0].style.color"), json!("#ff0000")).unwrap();
    assert_eq!(rec.components, BTreeSet::from([layer("m")]));
    assert!(rec.relayout.is_empty() && !rec.whole_tree);
}

#[test]
fn range_change_affects_every_reader() {
    let (_, rec) = apply_change(&minimal(), &path("plots[0].transforms[0].range"), json!({"lo": 0, "hi": 2})).unwrap();
    assert_eq!(rec.components, BTreeSet::from([layer("l"), layer("m"), axis(0)]));
}

#[test]
fn title_change_touches_decoration_only() {
    let s = minimal();
    let (titled, _) = apply_change(&s, &path("plots[0].title"), json!("A")).unwrap();
    let (next, rec) = apply_change(&titled, &path("plots[0].title"), json!("B")).unwrap();
    let deco = ComponentId::Decoration { node: "p".into() };
    assert_eq!(rec.components, BTreeSet::from([deco]));
    assert!(!rec.invalidates(&layer("l"), &next));
    assert!(!rec.invalidates(&axis(0), &next));
    // adding a title band moves the drawing box
    let (_, rec) = apply_change(&s, &path("plots[0].title"), json!("A")).unwrap();
    assert!(rec.invalidates(&layer("l"), &titled));
}

#[test]
fn batch_publishes_once() {
    let mut ses = SceneSession::new(minimal());
    ses.begin_batch();
    for i in 0..10 {
        let p = ses.apply(&path("plots[0].layers[0].graphs[0].style.color"), json!(format!("#0000{i:02x}"))).unwrap();
        assert!(p.is_none());
    }
    let p = ses.end_batch().unwrap().unwrap();
    assert_eq!(p.version, 1);
    assert_eq!(p.record.paths.len(), 10);

    let mut ses = SceneSession::new(minimal());
    ses.begin_batch();
    ses.begin_batch();
    ses.apply(&path("plots[0].title"), json!("t")).unwrap();
    assert!(ses.end_batch().unwrap().is_none());
    assert_eq!(ses.end_batch().unwrap().unwrap().version, 1);
    assert_eq!(ses.end_batch().unwrap_err().code, ErrorCode::EndWithoutBegin);
}

#[test]
fn every_enumerated_path_round_trips() {
    for (name, s) in golden() {
        let paths = enumerate_paths(&s);
        assert!(!paths.is_empty(), "{name}");
        for p in paths {
            let again = PropertyPath::parse(&p.to_string()).unwrap();
            assert_eq!(again, p, "{name}");
            let a = resolve(&p, &s).unwrap();
            let b = resolve(&again, &s).unwrap();
            assert_eq!(a.value, b.value, "{name}: {p}");
            assert_eq!(&a.value, p.lookup(&serde_json::to_value(&s).unwrap()).unwrap(), "{name}: {p}");
        }
    }
}

#[test]
fn canonical_json_is_key_ordered_and_stable() {
    for (name, s) in golden() {
        let c = s.canonical_json();
        let back: Scene = serde_json::from_str(&c).unwrap();
        assert_eq!(back.canonical_json(), c, "{name}");
    }
}

fn edit() -> impl Strategy<Value = (String, Value)> {
    prop_oneof![
        (0..2usize, 0u32..0xffffff).prop_map(|(l, c)| (
            format!("plots[0].layers[{l}].graphs[0].style.color"),
            json!(format!("#{c:06x}"))
        )),
        (0..2usize, prop::collection::vec(-5.0..5.0f64, 2)).prop_map(|(l, v)| (format!("plots[0].layers[{l}].graphs[0].y"), json!(v))),
        (0.5..4.0f64).prop_map(|w| ("plots[0].layers[0].graphs[0].style.stroke_width".to_string(), json!(w))),
        "[a-z]{0,6}".prop_map(|t| ("plots[0].title".to_string(), json!(t))),
        (0.1..5.0f64).prop_map(|hi| ("plots[0].transforms[1].range".to_string(), json!({"lo": 0.0, "hi": hi}))),
        (0..2usize).prop_map(|l| (format!("plots[0].layers[{l}].z_order"), json!(1 - l as i64))),
        // rejected: string into a number
        Just(("plots[0].layers[0].graphs[0].style.symbol_size".to_string(), json!("big"))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Earlier snapshots never change, whatever is applied after them.
    #[test]
    fn snapshots_are_immutable(edits in prop::collection::vec(edit(), 1..12)) {
        let mut ses = SceneSession::new(minimal());
        let mut seen: Vec<(plotforge::scene::Snapshot, String)> = vec![];
        for (p, v) in edits {
            let snap = ses.working().clone();
            seen.push((snap.clone(), snap.canonical_json()));
            let _ = ses.apply(&path(&p), v);
        }
        for (snap, json) in seen {
            prop_assert_eq!(snap.canonical_json(), json);
        }
    }

    /// A batch ends in the same scene as applying its writes one by one.
    #[test]
    fn batch_equals_unbatched(edits in prop::collection::vec(edit(), 1..12)) {
        let mut plain = SceneSession::new(minimal());
        let mut batched = SceneSession::new(minimal());
        batched.begin_batch();
        let mut published = 0;
        for (p, v) in edits {
            let a = plain.apply(&path(&p), v.clone());
            let b = batched.apply(&path(&p), v);
            prop_assert_eq!(a.is_ok(), b.is_ok());
            prop_assert!(b.map_or(true, |p| p.is_none()));
            if a.is_ok() {
                published += 1;
            }
        }
        let flushed = batched.end_batch().unwrap();
        prop_assert_eq!(flushed.is_some(), published > 0);
        prop_assert_eq!(plain.working().as_ref(), batched.working().as_ref());
        prop_assert_eq!(plain.version(), published);
        prop_assert_eq!(batched.version(), u64::from(published > 0));
    }

    /// The batch record covers every component an unbatched write touched.
    #[test]
    fn batch_record_is_the_union(edits in prop::collection::vec(edit(), 1..8)) {
        let mut plain = SceneSession::new(minimal());
        let mut batched = SceneSession::new(minimal());
        batched.begin_batch();
        let mut union = BTreeSet::new();
        for (p, v) in edits {
            if let Ok(Some(pb)) = plain.apply(&path(&p), v.clone()) {
                union.extend(pb.record.components);
            }
            let _ = batched.apply(&path(&p), v);
        }
        if let Some(pb) = batched.end_batch().unwrap() {
            prop_assert_eq!(pb.record.components, union);
        }
    }
}
