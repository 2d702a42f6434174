use super::transform::Mapping;
use super::AxisError;
use crate::scene::{AxisTransformDef, Range};

/// Per-notch wheel zoom factor.
pub const WHEEL_FACTOR: f64 = 1.25;

/// Smallest allowed span relative to the range magnitude.
pub const MIN_RELATIVE_SPAN: f64 = 1e-12;

fn guarded(r: Range) -> Result<Range, AxisError> {
    let mag = r.lo.abs().max(r.hi.abs());
    let span = r.hi - r.lo;
    if !r.is_valid() || span < MIN_RELATIVE_SPAN * mag {
        return Err(AxisError::SpanTooSmall { lo: r.lo, hi: r.hi });
    }
    Ok(r)
}

/// New range covering fractions `[f0, f1]` of the current un-inverted span.
pub fn zoom_to_fraction(tr: &AxisTransformDef, f0: f64, f1: f64) -> Result<Range, AxisError> {
    if !(0.0 <= f0 && f0 < f1 && f1 <= 1.0) {
        return Err(AxisError::InvalidFraction { f0, f1 });
    }
    let m = Mapping::new(tr);
    guarded(Range::new(m.value_at(f0), m.value_at(f1)))
}

/// Wheel zoom by `notches` (positive zooms in) keeping the un-inverted
/// fraction `anchor` fixed.
pub fn wheel_zoom(tr: &AxisTransformDef, anchor: f64, notches: i32) -> Result<Range, AxisError> {
    if !(0.0..=1.0).contains(&anchor) {
        return Err(AxisError::InvalidFraction { f0: anchor, f1: anchor });
    }
    if notches == 0 {
        return Ok(tr.range);
    }
    let scale = WHEEL_FACTOR.powi(notches);
    let f0 = anchor - anchor / scale;
    let f1 = anchor + (1.0 - anchor) / scale;
    let m = Mapping::new(tr);
    guarded(Range::new(m.value_at(f0), m.value_at(f1)))
}
