use std::sync::{Arc, Barrier};
use std::thread;

use plotforge::engine::{Command, Engine, EngineOptions, Frame, Presenter};
use plotforge::layout::layout;
use plotforge::render::{render_scene, Raster};
use plotforge::scene::{
    apply_change, AxisDef, AxisTransformDef, Graph, Layer, PlotNode, PropertyPath, Scene, Series, Side, XyGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const W: u32 = 200;
const H: u32 = 150;
const Y_PATH: &str = "plots[0].layers[0].graphs[0].y";

fn xy(x: Vec<f64>, y: Vec<f64>) -> Graph {
    Graph::Xy(XyGraph {
        x: Series::from(x),
        y: Series::from(y),
        style: Default::default(),
    })
}

fn scene() -> Scene {
    let mut n = PlotNode::new("p");
    n.transforms.push(AxisTransformDef::linear("x", 0.0, 10.0));
    n.transforms.push(AxisTransformDef::linear("y", 0.0, 10.0));
    n.axes.push(AxisDef::new(Side::Bottom, "x"));
    n.axes.push(AxisDef::new(Side::Left, "y"));
    let mut l = Layer::new("l", "x", "y");
    l.graphs.push(xy((0..8).map(f64::from).collect(), vec![5.0; 8]));
    n.layers.push(l);
    Scene::new(n)
}

/// Celsius on the bottom, Fahrenheit on top, one layer per x scale.
fn dual_scale() -> Scene {
    let mut n = PlotNode::new("t");
    n.transforms.push(AxisTransformDef::linear("c", -10.0, 40.0));
    n.transforms.push(AxisTransformDef::linear("f", 14.0, 104.0));
    n.transforms.push(AxisTransformDef::linear("y", 0.0, 1.0));
    n.axes.push(AxisDef::new(Side::Bottom, "c"));
    n.axes.push(AxisDef::new(Side::Top, "f"));
    n.axes.push(AxisDef::new(Side::Left, "y"));
    let mut a = Layer::new("celsius", "c", "y");
    a.graphs.push(xy(vec![-10.0, 40.0], vec![0.0, 1.0]));
    let mut b = Layer::new("fahrenheit", "f", "y");
    b.graphs.push(xy(vec![14.0, 104.0], vec![1.0, 0.0]));
    n.layers.extend([a, b]);
    Scene::new(n)
}

fn sync_render(s: &Scene) -> Raster {
    render_scene(s, W, H, None).unwrap().0
}

fn data_update(values: Vec<f64>) -> Command {
    Command::SetData {
        path: Y_PATH.into(),
        values,
    }
}

fn replay(start: &Scene, order: &[Command]) -> Scene {
    let mut s = start.clone();
    for c in order {
        let (path, value): (&str, Value) = match c {
            Command::SetData { path, values } => (path, json!(values)),
            Command::SetProperty { path, value } => (path, value.clone()),
            other => panic!("unexpected command in replay: {other:?}"),
        };
        s = apply_change(&s, &PropertyPath::parse(path).unwrap(), value).unwrap().0;
    }
    s
}

fn strictly_increasing(v: &[u64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

#[test]
fn batch_of_fifty_schedules_one_generation() {
    let e = Engine::start(scene(), W, H);
    e.quiesce().unwrap();
    let before = e.stats().scheduled;
    e.submit(Command::BeginBatch).unwrap();
    for i in 0..50 {
        let cmd = if i % 2 == 0 {
            data_update(vec![i as f64 / 10.0; 8])
        } else {
            Command::SetProperty {
                path: "plots[0].layers[0].graphs[0].style.stroke_width".into(),
                value: json!(1.0 + i as f64 / 50.0),
            }
        };
        e.submit(cmd).unwrap();
    }
    assert_eq!(e.stats().scheduled, before);
    e.submit(Command::EndBatch).unwrap();
    e.quiesce().unwrap();
    assert_eq!(e.stats().scheduled, before + 1);
    assert_eq!(e.displayed().unwrap().generation, before + 1);
}

#[test]
fn nested_batch_flushes_at_outer_end() {
    let e = Engine::start(scene(), W, H);
    e.submit(Command::BeginBatch).unwrap();
    e.submit(Command::BeginBatch).unwrap();
    e.submit(data_update(vec![1.0; 8])).unwrap();
    e.submit(Command::EndBatch).unwrap();
    assert_eq!(e.stats().scheduled, 1);
    e.submit(Command::EndBatch).unwrap();
    assert_eq!(e.stats().scheduled, 2);
}

/// Two submitters race; the final scene equals applying the dispatcher's
/// recorded order sequentially.
#[test]
fn concurrent_submitters_linearize() {
    for trial in 0..20u64 {
        let start = scene();
        let e = Engine::start(start.clone(), W, H);
        let gate = Arc::new(Barrier::new(2));
        let handles: Vec<_> = (0..2u64)
            .map(|who| {
                let e = e.clone();
                let gate = gate.clone();
                thread::spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(trial * 2 + who);
                    gate.wait();
                    for _ in 0..25 {
                        let cmd = if rng.gen_bool(0.7) {
                            data_update((0..8).map(|_| rng.gen_range(0.0..10.0)).collect())
                        } else {
                            Command::SetProperty {
                                path: "plots[0].layers[0].graphs[0].style.color".into(),
                                value: json!(format!("#{:06x}", rng.gen_range(0..0x1000000))),
                            }
                        };
                        e.submit(cmd).unwrap();
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        e.quiesce().unwrap();
        let order = e.applied_order();
        assert_eq!(order.len(), 50);
        assert_eq!(*e.snapshot().unwrap(), replay(&start, &order), "trial {trial}");
    }
}

#[test]
fn quiescence_shows_latest_generation() {
    let e = Engine::start(scene(), W, H);
    let gens: Vec<u64> = (0..30)
        .map(|i| {
            e.submit(data_update(vec![(i % 10) as f64; 8])).unwrap();
            e.stats().scheduled
        })
        .collect();
    e.quiesce().unwrap();
    let shown = e.displayed().unwrap();
    assert_eq!(shown.generation, *gens.last().unwrap());
    assert_eq!(shown.generation, e.stats().scheduled);
    let s = e.snapshot().unwrap();
    assert_eq!(*shown.raster, sync_render(&s));
    assert!(strictly_increasing(&e.presentation_history()));
}

#[test]
fn four_submitters_converge() {
    for trial in 0..10u64 {
        let e = Engine::start(scene(), W, H);
        let gate = Arc::new(Barrier::new(4));
        let handles: Vec<_> = (0..4u64)
            .map(|who| {
                let e = e.clone();
                let gate = gate.clone();
                thread::spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(1000 + trial * 4 + who);
                    gate.wait();
                    for _ in 0..25 {
                        e.submit(data_update((0..8).map(|_| rng.gen_range(0.0..10.0)).collect()))
                            .unwrap();
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        e.quiesce().unwrap();
        let s = e.snapshot().unwrap();
        let shown = e.displayed().unwrap();
        assert_eq!(shown.generation, 101);
        assert_eq!(*shown.raster, sync_render(&s), "trial {trial}");
        assert!(strictly_increasing(&e.presentation_history()));
    }
}

#[test]
fn every_generation_renders_without_skipping() {
    let opts = EngineOptions {
        skip_superseded: false,
        ..Default::default()
    };
    let e = Engine::with_options(scene(), W, H, opts);
    for i in 0..5 {
        e.submit(data_update(vec![i as f64; 8])).unwrap();
    }
    e.quiesce().unwrap();
    let st = e.stats();
    assert_eq!(st.superseded, 0);
    assert_eq!(st.presented + st.discarded, 6);
}

#[test]
fn presenter_drops_stale_completions() {
    let p = Presenter::new();
    let raster = Arc::new(Raster::new(1, 1, plotforge::scene::Color::WHITE));
    let f = |generation| Frame {
        generation,
        raster: raster.clone(),
    };
    assert!(p.present(f(3)));
    assert!(!p.present(f(2)));
    assert!(!p.present(f(3)));
    assert!(p.present(f(5)));
    assert!(!p.present(f(4)));
    assert_eq!(p.history(), vec![3, 5]);
    assert_eq!(p.discarded(), 3);
}

#[test]
fn dual_x_scale_click_gives_two_entries() {
    let s = dual_scale();
    let e = Engine::start(s.clone(), 400, 300);
    let geo = layout(&s, 400, 300).unwrap();
    let c = geo.node("t").unwrap().content;
    let (px, py) = (c.x0 as f64 + 0.25 * c.width() as f64, c.y0 as f64 + 0.5 * c.height() as f64);
    let coords = e.click(px, py).unwrap();
    assert_eq!(coords.len(), 2);
    assert_eq!((coords[0].x_transform.as_str(), coords[1].x_transform.as_str()), ("c", "f"));
    // a quarter of the way across both scales
    assert!((coords[0].x - 2.5).abs() < 1e-9, "{coords:?}");
    assert!((coords[1].x - 36.5).abs() < 1e-9, "{coords:?}");
    assert!((coords[0].x * 9.0 / 5.0 + 32.0 - coords[1].x).abs() < 1e-9);
    assert!((coords[0].y - 0.5).abs() < 1e-9);
    assert!(e.click(1.0, 1.0).unwrap().is_empty());
}

#[test]
fn resize_rerenders_at_new_size() {
    let e = Engine::start(scene(), W, H);
    e.submit(Command::Resize { width: 320, height: 240 }).unwrap();
    e.quiesce().unwrap();
    let f = e.displayed().unwrap();
    assert_eq!((f.raster.width, f.raster.height), (320, 240));
    let err = e.submit(Command::Resize { width: 10, height: 240 }).unwrap_err();
    assert_eq!(err.code, "CANVAS_TOO_SMALL");
}

#[test]
fn rejected_write_leaves_state_unchanged() {
    let e = Engine::start(scene(), W, H);
    e.quiesce().unwrap();
    let before = e.snapshot().unwrap();
    let err = e
        .set_property("plots[0].transforms[0].range", json!({"lo": 5, "hi": 1}))
        .unwrap_err();
    assert_eq!(err.code, "INVALID_RANGE");
    let err = e.set_property("plots[0].layers[0].graphs[0].style.stroke_width", json!("wide")).unwrap_err();
    assert_eq!(err.code, "TYPE_MISMATCH");
    assert_eq!(e.snapshot().unwrap(), before);
    assert_eq!(e.stats().scheduled, 1);
    assert!(e.applied_order().is_empty());
}
