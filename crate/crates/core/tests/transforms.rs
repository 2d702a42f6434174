use plotforge::axes::{forward, inverse, wheel_zoom, zoom_to_fraction, Mapping};
use plotforge::scene::{AxisTransformDef, Range, TransformKind};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = TransformKind> {
    prop_oneof![
        Just(TransformKind::Linear),
        Just(TransformKind::Log),
        Just(TransformKind::Date),
        Just(TransformKind::Sexagesimal),
    ]
}

/// A valid range for `kind`, spanning several orders of magnitude.
fn range_for(kind: TransformKind) -> BoxedStrategy<Range> {
    match kind {
        TransformKind::Log => (-30.0..30.0f64, 0.01..12.0f64)
            .prop_map(|(e, d)| Range::new(10f64.powf(e), 10f64.powf(e + d)))
            .boxed(),
        TransformKind::Date => (-2.0e9..4.0e9f64, 60.0..3.0e9f64)
            .prop_map(|(lo, w)| Range::new(lo, lo + w))
            .boxed(),
        TransformKind::Sexagesimal => (-360.0..360.0f64, 1e-4..720.0f64)
            .prop_map(|(lo, w)| Range::new(lo, lo + w))
            .boxed(),
        TransformKind::Linear => (-1e6..1e6f64, -6.0..6.0f64)
            .prop_map(|(lo, e)| Range::new(lo, lo + 10f64.powf(e) * (1.0 + lo.abs())))
            .boxed(),
    }
}

fn transform() -> impl Strategy<Value = AxisTransformDef> {
    (kind(), any::<bool>())
        .prop_flat_map(|(k, inv)| {
            range_for(k).prop_map(move |r| {
                let mut t = AxisTransformDef::new("t", k, r.lo, r.hi);
                t.inverted = inv;
                t
            })
        })
}

/// Tolerance scale for a round trip: relative to the value for log, to the
/// largest magnitude in play otherwise.
fn scale(tr: &AxisTransformDef, x: f64) -> f64 {
    if tr.kind == TransformKind::Log {
        x.abs()
    } else {
        x.abs().max(tr.range.lo.abs()).max(tr.range.hi.abs())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn forward_inverse_round_trip(tr in transform(), f in -0.5..1.5f64) {
        let x = Mapping::from_parts(tr.kind, tr.range, false).value_at(f);
        prop_assume!(x.is_finite() && (tr.kind != TransformKind::Log || x > 0.0));
        let t = forward(x, &tr).unwrap();
        let back = inverse(t, &tr);
        prop_assert!((back - x).abs() <= 1e-9 * scale(&tr, x), "{tr:?}: {x} -> {t} -> {back}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn inverted_mirrors(tr in transform(), t in 0.0..=1.0f64) {
        let mut flipped = tr.clone();
        flipped.inverted = !tr.inverted;
        let (a, b) = (inverse(t, &tr), inverse(1.0 - t, &flipped));
        prop_assert!((a - b).abs() <= 1e-12 * scale(&tr, a), "{a} vs {b}");
    }

    #[test]
    fn ends_are_exact(tr in transform()) {
        let (a, b) = if tr.inverted { (tr.range.hi, tr.range.lo) } else { (tr.range.lo, tr.range.hi) };
        prop_assert_eq!(inverse(0.0, &tr), a);
        prop_assert_eq!(inverse(1.0, &tr), b);
    }

    #[test]
    fn forward_is_monotone(tr in transform(), f in 0.0..1.0f64, d in 0.0..1.0f64) {
        let g = f + d * (1.0 - f);
        let m = Mapping::from_parts(tr.kind, tr.range, false);
        let (x, y) = (m.value_at(f), m.value_at(g));
        prop_assume!(x < y);
        let (tx, ty) = (forward(x, &tr).unwrap(), forward(y, &tr).unwrap());
        let ordered = if tr.inverted { tx >= ty } else { tx <= ty };
        prop_assert!(ordered, "{tx} {ty}");
    }

    #[test]
    fn wheel_in_then_out_restores(tr in transform(), anchor in 0.0..=1.0f64, n in 1..4i32) {
        let Ok(inner) = wheel_zoom(&tr, anchor, n) else { return Ok(()) };
        let zoomed = AxisTransformDef { range: inner, ..tr.clone() };
        let back = wheel_zoom(&zoomed, anchor, -n).unwrap();
        let s = if tr.kind == TransformKind::Log { 1.0 } else { tr.range.lo.abs().max(tr.range.hi.abs()) };
        let rel = |a: f64, b: f64| if tr.kind == TransformKind::Log { (a / b - 1.0).abs() } else { (a - b).abs() / s };
        prop_assert!(rel(back.lo, tr.range.lo) <= 1e-9 && rel(back.hi, tr.range.hi) <= 1e-9,
            "{:?} -> {:?} -> {:?}", tr.range, inner, back);
    }

    #[test]
    fn zoom_to_fraction_nests(tr in transform(), f0 in 0.0..0.5f64, f1 in 0.5..=1.0f64) {
        let Ok(r) = zoom_to_fraction(&tr, f0, f1) else { return Ok(()) };
        prop_assert!(r.is_valid());
        prop_assert!(r.lo >= tr.range.lo && r.hi <= tr.range.hi);
    }
}
