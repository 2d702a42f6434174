use super::format::{format_label, LabelContext};
use super::{Tick, TickSet, TickStep, Window};
use crate::scene::Range;

const MANTISSAS: [i64; 3] = [1, 2, 5];

/// A step of the form `mantissa * 10^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecimalStep {
    pub mantissa: i64,
    pub exponent: i32,
}

impl DecimalStep {
    pub fn value(&self) -> f64 {
        decimal(self.mantissa, self.exponent)
    }

    /// Value of the `i`-th multiple, correctly rounded from its decimal form.
    pub fn multiple(&self, i: i64) -> f64 {
        let v = decimal(i.saturating_mul(self.mantissa), self.exponent);
        if v == 0.0 {
            0.0
        } else {
            v
        }
    }

    pub fn default_minor_count(&self) -> u32 {
        match self.mantissa {
            2 => 3,
            _ => 4,
        }
    }
}

/// The double nearest to `m * 10^e`.
pub fn decimal(m: i64, e: i32) -> f64 {
    format!("{m}e{e}").parse().expect("decimal literal parses")
}

/// Index bounds `[a, b]` of the multiples of `step` inside `w`, or `None`
/// when there are none. Counts above `cap` are reported unadjusted.
pub(crate) fn multiple_bounds(w: Window, step: DecimalStep, cap: i64) -> Option<(i64, i64)> {
    let s = step.value();
    let mut a = (w.lo / s).ceil() as i64;
    let mut b = (w.hi / s).floor() as i64;
    if b.saturating_sub(a) <= cap {
        while step.multiple(a - 1) >= w.lo {
            a -= 1;
        }
        while step.multiple(a) < w.lo {
            a += 1;
        }
        while step.multiple(b + 1) <= w.hi {
            b += 1;
        }
        while step.multiple(b) > w.hi {
            b -= 1;
        }
    }
    (a <= b).then_some((a, b))
}

fn count(w: Window, step: DecimalStep, cap: i64) -> i64 {
    multiple_bounds(w, step, cap).map_or(0, |(a, b)| b - a + 1)
}

pub(crate) fn choose_step(range: Range, target: u32) -> DecimalStep {
    let w = Window::new(range);
    let target = target.max(1) as i64;
    let k0 = ((range.hi - range.lo) / target as f64).log10().floor() as i32;
    let cap = 100 * target + 10;
    let mut best: Option<(i64, DecimalStep)> = None;
    for k in k0 - 2..=k0 + 2 {
        for m in MANTISSAS {
            let step = DecimalStep { mantissa: m, exponent: k };
            let d = (count(w, step, cap) - target).abs();
            if best.map_or(true, |(bd, _)| d < bd) {
                best = Some((d, step));
            }
        }
    }
    best.expect("candidate ladder is nonempty").1
}

/// Ticks at multiples of a 1, 2 or 5 times a power of ten.
pub fn linear_ticks(range: Range, target_count: u32) -> TickSet {
    let step = choose_step(range, target_count);
    let w = Window::new(range);
    let ctx = LabelContext::linear(range, step);
    let major = multiple_bounds(w, step, i64::MAX)
        .map(|(a, b)| {
            (a..=b)
                .map(|i| {
                    let value = step.multiple(i);
                    let label = format_label(value, &ctx, None).unwrap_or_default();
                    Tick { value, label }
                })
                .collect()
        })
        .unwrap_or_default();
    TickSet {
        major,
        minor: minors(range, step, step.default_minor_count()),
        step: TickStep::Linear(step),
    }
}

/// `n` minors per major interval of `step`, excluding major positions.
pub(crate) fn minors(range: Range, step: DecimalStep, n: u32) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    let w = Window::new(range);
    let parts = n as i64 + 1;
    if (step.mantissa * 10) % parts == 0 {
        let fine = DecimalStep {
            mantissa: step.mantissa * 10 / parts,
            exponent: step.exponent - 1,
        };
        return multiple_bounds(w, fine, i64::MAX)
            .map(|(a, b)| {
                (a..=b)
                    .filter(|j| j.rem_euclid(parts) != 0)
                    .map(|j| fine.multiple(j))
                    .collect()
            })
            .unwrap_or_default();
    }
    let s = step.value();
    let a = (w.lo / s).floor() as i64;
    let b = (w.hi / s).ceil() as i64;
    let mut out = Vec::new();
    for i in a..b {
        for j in 1..parts {
            let v = (i as f64 + j as f64 / parts as f64) * s;
            if w.contains(v) {
                out.push(v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn majors(lo: f64, hi: f64, target: u32) -> Vec<f64> {
        linear_ticks(Range::new(lo, hi), target).major_values()
    }

    #[test]
    fn unit_range() {
        assert_eq!(majors(0.0, 10.0, 5), vec![0.0, 2.0, 4.0, 6.0, 8.0, 10.0]);
        assert_eq!(majors(-3.2, 7.7, 5), vec![-2.0, 0.0, 2.0, 4.0, 6.0]);
        assert_eq!(majors(0.0, 1.0, 5), vec![0.0, 0.2, 0.4, 0.6, 0.8, 1.0]);
    }

    #[test]
    fn decimal_values_are_exact_literals() {
        assert_eq!(majors(0.0, 1.0, 10)[3], 0.3);
        assert_eq!(decimal(7, -1), 0.7);
    }

    #[test]
    fn default_minors() {
        let t = linear_ticks(Range::new(0.0, 1.0), 5);
        assert_eq!(t.minor.len(), 15);
        assert!(t.minor.contains(&0.1) && !t.minor.contains(&0.2));
    }

    #[test]
    fn labels_use_step_precision() {
        let t = linear_ticks(Range::new(0.0, 1.0), 5);
        assert_eq!(t.labels(), vec!["0.0", "0.2", "0.4", "0.6", "0.8", "1.0"]);
    }

    #[test]
    fn odd_minor_count_falls_back_to_float_grid() {
        let v = minors(Range::new(0.0, 1.0), DecimalStep { mantissa: 1, exponent: 0 }, 2);
        assert_eq!(v.len(), 2);
        assert!((v[0] - 1.0 / 3.0).abs() < 1e-15);
    }
}
