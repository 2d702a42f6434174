use plotforge::engine::{range_writes, wheel_changes, zoom_rect_changes, DeviceRect, ZoomStack};
use plotforge::layout::layout;
use plotforge::scene::{
    apply_changes, AxisDef, AxisTransformDef, Graph, Layer, PlotNode, Range, Scene, Series, Side, TransformKind,
    XyGraph,
};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum Step {
    Rect { a: (f64, f64), b: (f64, f64) },
    Wheel { at: (f64, f64), notches: i32 },
}

fn kind() -> impl Strategy<Value = TransformKind> {
    prop_oneof![
        Just(TransformKind::Linear),
        Just(TransformKind::Log),
        Just(TransformKind::Date),
        Just(TransformKind::Sexagesimal),
    ]
}

fn range(kind: TransformKind, u: f64, w: f64) -> Range {
    match kind {
        TransformKind::Linear => Range::new(-1e3 + 2e3 * u, -1e3 + 2e3 * u + 10f64.powf(4.0 * w - 1.0)),
        TransformKind::Log => {
            let e = -5.0 + 10.0 * u;
            Range::new(10f64.powf(e), 10f64.powf(e + 0.5 + 6.0 * w))
        }
        TransformKind::Date => {
            let lo = 1.0e9 + 1.0e9 * u;
            Range::new(lo, lo + 86_400.0 * (1.0 + 3000.0 * w))
        }
        TransformKind::Sexagesimal => Range::new(-90.0 + 180.0 * u, -90.0 + 180.0 * u + 1.0 + 179.0 * w),
    }
}

fn scene(kx: TransformKind, ky: TransformKind, rx: Range, ry: Range, inv: (bool, bool)) -> Scene {
    let mut n = PlotNode::new("p");
    let mut x = AxisTransformDef::new("x", kx, rx.lo, rx.hi);
    x.inverted = inv.0;
    let mut y = AxisTransformDef::new("y", ky, ry.lo, ry.hi);
    y.inverted = inv.1;
    n.transforms = vec![x, y];
    n.axes = vec![AxisDef::new(Side::Bottom, "x"), AxisDef::new(Side::Left, "y")];
    let mut l = Layer::new("l", "x", "y");
    l.graphs.push(Graph::Xy(XyGraph {
        x: Series::from(vec![rx.lo, rx.hi]),
        y: Series::from(vec![ry.lo, ry.hi]),
        style: Default::default(),
    }));
    n.layers.push(l);
    Scene::new(n)
}

fn step() -> impl Strategy<Value = Step> {
    prop_oneof![
        3 => ((0.0..1.0f64, 0.0..1.0f64), (0.0..1.0f64, 0.0..1.0f64))
            .prop_map(|(a, b)| Step::Rect { a, b }),
        1 => ((0.0..1.0f64, 0.0..1.0f64), prop_oneof![-3..=-1i32, 1..=3i32])
            .prop_map(|(at, notches)| Step::Wheel { at, notches }),
    ]
}

fn ranges(s: &Scene) -> Vec<(u64, u64)> {
    s.root().transforms.iter().map(|t| (t.range.lo.to_bits(), t.range.hi.to_bits())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// Any sequence of rubber-band and wheel zooms followed by a reset puts
    /// every range back bit for bit.
    #[test]
    fn zoom_then_reset_is_identity(
        kx in kind(), ky in kind(), u in (0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64),
        inv in (any::<bool>(), any::<bool>()), steps in prop::collection::vec(step(), 1..6),
    ) {
        let start = scene(kx, ky, range(kx, u.0, u.1), range(ky, u.2, u.3), inv);
        let mut cur = start.clone();
        let mut stack = ZoomStack::default();
        for st in &steps {
            let Ok(geo) = layout(&cur, 400, 300) else { break };
            let c = geo.node("p").unwrap().content;
            let px = |f: f64, lo: i32, hi: i32| lo as f64 + 0.5 + f * (hi - lo - 1) as f64;
            let changes = match *st {
                Step::Rect { a, b } => {
                    // at least 12 px per side keeps the zoom well above the span guard
                    let side = |p: f64, q: f64, lo, hi| {
                        let s = px(p.min(q), lo, hi);
                        (s, px(p.max(q), lo, hi).max(s + 12.0))
                    };
                    let ((x0, x1), (y0, y1)) = (side(a.0, b.0, c.x0, c.x1), side(a.1, b.1, c.y0, c.y1));
                    zoom_rect_changes(&cur, &geo, DeviceRect { x0, y0, x1, y1 })
                }
                Step::Wheel { at, notches } => wheel_changes(&cur, &geo, px(at.0, c.x0, c.x1), px(at.1, c.y0, c.y1), notches),
            };
            let Ok(changes) = changes else { continue };
            let Ok((next, _)) = apply_changes(&cur, range_writes(&changes)) else { continue };
            cur = next;
            stack.push(changes);
        }
        if stack.depth() > 0 {
            cur = apply_changes(&cur, stack.reset()).unwrap().0;
        }
        prop_assert_eq!(ranges(&cur), ranges(&start));
        prop_assert_eq!(cur, start);
    }

    /// Wheel in then out at the same device anchor restores both ranges.
    #[test]
    fn wheel_round_trip_at_anchor(
        kx in kind(), ky in kind(), u in (0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64),
        inv in (any::<bool>(), any::<bool>()), at in (0.0..1.0f64, 0.0..1.0f64), n in 1..=3i32,
    ) {
        let start = scene(kx, ky, range(kx, u.0, u.1), range(ky, u.2, u.3), inv);
        let geo = layout(&start, 400, 300).unwrap();
        let c = geo.node("p").unwrap().content;
        // the anchor is fixed as a fraction of the drawing box, which may
        // move when tick labels change width
        let point = |c: plotforge::layout::Rect| (c.x0 as f64 + at.0 * c.width() as f64, c.y0 as f64 + at.1 * c.height() as f64);
        let (x, y) = point(c);
        let inward = wheel_changes(&start, &geo, x, y, n).unwrap();
        let zoomed = apply_changes(&start, range_writes(&inward)).unwrap().0;
        let Ok(geo2) = layout(&zoomed, 400, 300) else { return Ok(()) };
        let (x, y) = point(geo2.node("p").unwrap().content);
        let outward = wheel_changes(&zoomed, &geo2, x, y, -n).unwrap();
        let back = apply_changes(&zoomed, range_writes(&outward)).unwrap().0;
        for (t0, t1) in start.root().transforms.iter().zip(&back.root().transforms) {
            let rel = |a: f64, b: f64| if t0.kind == TransformKind::Log {
                (a / b - 1.0).abs()
            } else {
                (a - b).abs() / t0.range.lo.abs().max(t0.range.hi.abs())
            };
            prop_assert!(rel(t1.range.lo, t0.range.lo) <= 1e-9 && rel(t1.range.hi, t0.range.hi) <= 1e-9,
                "{:?} -> {:?}", t0.range, t1.range);
        }
    }
}
