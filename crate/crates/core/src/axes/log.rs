use super::format::{format_label, LabelContext};
use super::linear::{decimal, linear_ticks};
use super::{Tick, TickSet, TickStep};
use crate::scene::Range;

/// Containment with the `1e-9 * span` tolerance taken in log10 space,
/// where the raw-value tolerance could reach below zero.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogWindow {
    lo: f64,
    hi: f64,
}

impl LogWindow {
    pub fn new(range: Range) -> Self {
        let (a, b) = (range.lo.log10(), range.hi.log10());
        let eps = 1e-9 * (b - a);
        LogWindow { lo: a - eps, hi: b + eps }
    }

    pub fn contains_exponent(&self, e: f64) -> bool {
        e >= self.lo && e <= self.hi
    }

    pub fn contains(&self, v: f64) -> bool {
        v > 0.0 && self.contains_exponent(v.log10())
    }
}

/// Exponents `k` with `10^k` inside the range.
pub(crate) fn decades(range: Range) -> Vec<i32> {
    let w = LogWindow::new(range);
    let a = range.lo.log10().floor() as i32 - 1;
    let b = range.hi.log10().ceil() as i32 + 1;
    (a..=b).filter(|&k| w.contains_exponent(k as f64)).collect()
}

/// Decade ticks; ranges holding fewer than two powers of ten use linear
/// ticks on the raw values instead.
pub fn log_ticks(range: Range, target_count: u32) -> TickSet {
    let ks = decades(range);
    if ks.len() < 2 {
        return linear_ticks(range, target_count);
    }
    let limit = (1.5 * target_count as f64).floor() as usize;
    let every = (1..)
        .find(|&m: &i32| ks.iter().filter(|k| k.rem_euclid(m) == 0).count() <= limit.max(1))
        .expect("some decade stride fits");
    let ctx = LabelContext::LogDecade;
    let major: Vec<Tick> = ks
        .iter()
        .filter(|k| k.rem_euclid(every) == 0)
        .map(|&k| {
            let value = decimal(1, k);
            Tick {
                value,
                label: format_label(value, &ctx, None).unwrap_or_default(),
            }
        })
        .collect();
    let majors: Vec<f64> = major.iter().map(|t| t.value).collect();
    let mut minor: Vec<f64> = Vec::new();
    if range.hi.log10() - range.lo.log10() <= 3.0 {
        minor = decade_minors(range, 8, &majors);
    } else if every > 1 {
        minor = ks
            .iter()
            .filter(|k| k.rem_euclid(every) != 0)
            .map(|&k| decimal(1, k))
            .collect();
    }
    TickSet {
        major,
        minor,
        step: TickStep::LogDecades { every: every as u32 },
    }
}

/// `n` linearly spaced values inside every decade, plus any decade that is
/// not itself a major.
pub(crate) fn decade_minors(range: Range, n: u32, majors: &[f64]) -> Vec<f64> {
    let w = LogWindow::new(range);
    let parts = n as i64 + 1;
    let a = range.lo.log10().floor() as i32 - 1;
    let b = range.hi.log10().ceil() as i32;
    let mut out = Vec::new();
    for k in a..=b {
        let base = decimal(1, k);
        if w.contains_exponent(k as f64) && !majors.contains(&base) {
            out.push(base);
        }
        for j in 1..parts {
            let v = if (9 * j) % parts == 0 {
                decimal(1 + 9 * j / parts, k)
            } else {
                base * (1.0 + 9.0 * j as f64 / parts as f64)
            };
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

    #[test]
    fn three_decades() {
        let t = log_ticks(Range::new(1.0, 1000.0), 5);
        assert_eq!(t.major_values(), vec![1.0, 10.0, 100.0, 1000.0]);
        assert_eq!(t.labels(), vec!["1", "10", "100", "10^3"]);
    }

    #[test]
    fn minors_two_decades() {
        let t = log_ticks(Range::new(1.0, 100.0), 5);
        for v in [2.0, 3.0, 9.0, 20.0, 50.0, 90.0] {
            assert!(t.minor.contains(&v), "{v} missing");
        }
        assert_eq!(t.minor.len(), 16);
    }

    #[test]
    fn sub_decade_falls_back() {
        let t = log_ticks(Range::new(3.0, 8.0), 5);
        assert_eq!(t.major_values(), vec![3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        assert!(matches!(t.step, TickStep::Linear(_)));
    }

    #[test]
    fn wide_range_strides() {
        let t = log_ticks(Range::new(1e-20, 1e20), 4);
        assert!(t.major.len() <= 6);
        let TickStep::LogDecades { every } = t.step else { panic!() };
        assert!(every > 1);
        assert!(t.minor.is_empty() || t.minor.iter().all(|m| !t.major_values().contains(m)));
    }
}
