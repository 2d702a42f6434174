use super::AxisError;
use crate::scene::{AxisTransformDef, Range, TransformKind};

/// Precomputed data <-> normalized mapping for one transform.
///
/// `t = 0` is the `range.lo` end unless the transform is inverted. Values
/// outside the range map outside `[0, 1]`; clipping is the renderer's job.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mapping {
    log: bool,
    inverted: bool,
    range: Range,
    a: f64,
    b: f64,
}

impl Mapping {
    pub fn new(tr: &AxisTransformDef) -> Self {
        Self::from_parts(tr.kind, tr.range, tr.inverted)
    }

    pub fn from_parts(kind: TransformKind, range: Range, inverted: bool) -> Self {
        let log = kind == TransformKind::Log;
        let (a, b) = if log {
            (range.lo.log10(), range.hi.log10())
        } else {
            (range.lo, range.hi)
        };
        Mapping {
            log,
            inverted,
            range,
            a,
            b,
        }
    }

    pub fn range(&self) -> Range {
        self.range
    }

    pub fn is_log(&self) -> bool {
        self.log
    }

    /// Fraction of the un-inverted span at which `x` sits.
    pub fn fraction(&self, x: f64) -> Result<f64, AxisError> {
        if self.log {
            if !(x > 0.0) {
                return Err(AxisError::LogNonpositiveValue(x));
            }
            Ok((x.log10() - self.a) / (self.b - self.a))
        } else {
            Ok((x - self.a) / (self.b - self.a))
        }
    }

    /// Data value at un-inverted fraction `f`; the range ends are exact.
    pub fn value_at(&self, f: f64) -> f64 {
        if f == 0.0 {
            return self.range.lo;
        }
        if f == 1.0 {
            return self.range.hi;
        }
        let u = (1.0 - f) * self.a + f * self.b;
        if self.log {
            10f64.powf(u)
        } else {
            u
        }
    }

    pub fn forward(&self, x: f64) -> Result<f64, AxisError> {
        let f = self.fraction(x)?;
        Ok(if self.inverted { 1.0 - f } else { f })
    }

    pub fn inverse(&self, t: f64) -> f64 {
        self.value_at(if self.inverted { 1.0 - t } else { t })
    }

    /// Forward mapping that yields NaN where the log domain is violated.
    pub fn forward_lossy(&self, x: f64) -> f64 {
        self.forward(x).unwrap_or(f64::NAN)
    }
}

/// Maps a data value to normalized axis coordinates.
pub fn forward(x: f64, tr: &AxisTransformDef) -> Result<f64, AxisError> {
    Mapping::new(tr).forward(x)
}

/// Maps a normalized coordinate back to data units.
pub fn inverse(t: f64, tr: &AxisTransformDef) -> f64 {
    Mapping::new(tr).inverse(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(kind: TransformKind, lo: f64, hi: f64, inverted: bool) -> AxisTransformDef {
        let mut t = AxisTransformDef::new("t", kind, lo, hi);
        t.inverted = inverted;
        t
    }

    #[test]
    fn linear_midpoint() {
        assert_eq!(forward(50.0, &tr(TransformKind::Linear, 0.0, 100.0, false)).unwrap(), 0.5);
    }

    #[test]
    fn log_midpoint() {
        assert_eq!(forward(10.0, &tr(TransformKind::Log, 1.0, 100.0, false)).unwrap(), 0.5);
    }

    #[test]
    fn inverted_flips() {
        let t = tr(TransformKind::Linear, 0.0, 100.0, true);
        assert_eq!(forward(0.0, &t).unwrap(), 1.0);
        assert_eq!(forward(100.0, &t).unwrap(), 0.0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(0.25, &tr(TransformKind::Linear, 0.0, 100.0, false)), 25.0);
        let v = inverse(0.5, &tr(TransformKind::Log, 1.0, 10000.0, false));
        assert!((v - 100.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn log_rejects_nonpositive() {
        let t = tr(TransformKind::Log, 1.0, 10.0, false);
        assert_eq!(forward(0.0, &t), Err(AxisError::LogNonpositiveValue(0.0)));
        assert!(forward(-3.0, &t).is_err());
    }

    #[test]
    fn out_of_range_is_not_clipped() {
        let t = tr(TransformKind::Linear, 0.0, 10.0, false);
        assert_eq!(forward(20.0, &t).unwrap(), 2.0);
        assert_eq!(forward(-10.0, &t).unwrap(), -1.0);
    }

    #[test]
    fn endpoints_exact() {
        let t = tr(TransformKind::Log, 3.7, 912.25, false);
        assert_eq!(inverse(0.0, &t), 3.7);
        assert_eq!(inverse(1.0, &t), 912.25);
    }
}
