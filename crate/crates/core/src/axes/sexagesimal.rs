use super::format::{format_label, LabelContext};
use super::{Tick, TickSet, TickStep, Window};
use crate::scene::{Range, SexaMode};

/// Milliarcseconds per degree.
pub const MILLI_PER_DEGREE_DMS: i64 = 3_600_000;
/// Milliseconds of hour angle per degree (1 h = 15 deg).
pub const MILLI_PER_DEGREE_HMS: i64 = 240_000;

const SECOND: i64 = 1_000;
const MINUTE: i64 = 60 * SECOND;
const UNIT: i64 = 60 * MINUTE;

pub(crate) fn milli_per_degree(mode: SexaMode) -> i64 {
    match mode {
        SexaMode::Dms => MILLI_PER_DEGREE_DMS,
        SexaMode::Hms => MILLI_PER_DEGREE_HMS,
    }
}

/// Candidate steps in milli-units, ascending. The same ladder serves both
/// modes: the unit is one degree (DMS) or one hour (HMS).
pub fn sexa_ladder() -> Vec<i64> {
    let mut v: Vec<i64> = vec![10, 20, 50, 100, 200, 500];
    for base in [SECOND, MINUTE] {
        v.extend([1, 2, 5, 10, 15, 20, 30].iter().map(|m| m * base));
    }
    let mut p = UNIT;
    for _ in 0..9 {
        v.extend([p, 2 * p, 5 * p]);
        p *= 10;
    }
    v
}

/// Smallest component a step resolves: 10 ms, 100 ms, 1 s, 1 min or 1 unit.
pub(crate) fn resolution(step: i64) -> i64 {
    [UNIT, MINUTE, SECOND, 100]
        .into_iter()
        .find(|r| step % r == 0)
        .unwrap_or(10)
}

fn default_minor_count(step: i64) -> u32 {
    let mut q = step / resolution(step);
    match q {
        15 | 30 => 2,
        _ => {
            while q % 10 == 0 && q > 1 {
                q /= 10;
            }
            if q == 2 {
                3
            } else {
                4
            }
        }
    }
}

fn bounds(w: Window, factor: i64, step: i64, cap: i64) -> Option<(i64, i64)> {
    let val = |i: i64| (i as i128 * step as i128) as f64 / factor as f64;
    let s = step as f64 / factor as f64;
    let mut a = (w.lo / s).ceil() as i64;
    let mut b = (w.hi / s).floor() as i64;
    if b.saturating_sub(a) <= cap {
        while val(a - 1) >= w.lo {
            a -= 1;
        }
        while val(a) < w.lo {
            a += 1;
        }
        while val(b + 1) <= w.hi {
            b += 1;
        }
        while val(b) > w.hi {
            b -= 1;
        }
    }
    (a <= b).then_some((a, b))
}

/// Ticks at multiples of a sexagesimal step; the range is in degrees.
pub fn sexagesimal_ticks(range: Range, target_count: u32, mode: SexaMode) -> TickSet {
    let w = Window::new(range);
    let factor = milli_per_degree(mode);
    let target = target_count as i64;
    let cap = 100 * target + 10;
    let mut best: Option<(i64, i64)> = None;
    for step in sexa_ladder() {
        let count = bounds(w, factor, step, cap).map_or(0, |(a, b)| b - a + 1);
        let d = (count - target).abs();
        if best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, step));
        }
    }
    let step = best.expect("ladder is nonempty").1;
    let ctx = LabelContext::Sexagesimal {
        mode,
        resolution: resolution(step),
    };
    let major = bounds(w, factor, step, i64::MAX)
        .map(|(a, b)| {
            (a..=b)
                .map(|i| {
                    let value = (i as i128 * step as i128) as f64 / factor as f64;
                    let value = if value == 0.0 { 0.0 } else { value };
                    Tick {
                        value,
                        label: format_label(value, &ctx, None).unwrap_or_default(),
                    }
                })
                .collect()
        })
        .unwrap_or_default();
    TickSet {
        major,
        minor: minors(range, mode, step, default_minor_count(step)),
        step: TickStep::Sexagesimal { mode, milli: step },
    }
}

/// `n` minors per step interval, at exact milli-unit positions when the
/// step divides evenly.
pub(crate) fn minors(range: Range, mode: SexaMode, step: i64, n: u32) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    let w = Window::new(range);
    let factor = milli_per_degree(mode);
    let parts = n as i64 + 1;
    if step % parts == 0 {
        let fine = step / parts;
        return bounds(w, factor, fine, i64::MAX)
            .map(|(a, b)| {
                (a..=b)
                    .filter(|j| j.rem_euclid(parts) != 0)
                    .map(|j| (j as i128 * fine as i128) as f64 / factor as f64)
                    .collect()
            })
            .unwrap_or_default();
    }
    let s = step as f64 / factor as f64;
    let (a, b) = ((w.lo / s).floor() as i64, (w.hi / s).ceil() as i64);
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

    #[test]
    fn hms_half_hours() {
        let t = sexagesimal_ticks(Range::new(0.0, 30.0), 4, SexaMode::Hms);
        assert_eq!(t.major_values(), vec![0.0, 7.5, 15.0, 22.5, 30.0]);
        assert_eq!(t.labels(), vec!["00h00m", "00h30m", "01h00m", "01h30m", "02h00m"]);
    }

    #[test]
    fn dms_arcseconds() {
        let t = sexagesimal_ticks(Range::new(-0.01, 0.01), 4, SexaMode::Dms);
        assert_eq!(t.step, TickStep::Sexagesimal { mode: SexaMode::Dms, milli: 15_000 });
        assert_eq!(t.major[0].label, "-00°00′30″");
        assert_eq!(t.major[2].label, "+00°00′00″");
    }

    #[test]
    fn ladder_is_ascending() {
        let l = sexa_ladder();
        assert!(l.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn minor_counts() {
        assert_eq!(default_minor_count(15 * SECOND), 2);
        assert_eq!(default_minor_count(20 * MINUTE), 3);
        assert_eq!(default_minor_count(10 * UNIT), 4);
        assert_eq!(default_minor_count(50), 4);
        assert_eq!(default_minor_count(200), 3);
    }

    #[test]
    fn minors_skip_majors() {
        let t = sexagesimal_ticks(Range::new(0.0, 30.0), 4, SexaMode::Hms);
        assert!(t.minor.iter().all(|m| !t.major_values().contains(m)));
        assert_eq!(t.minor.len(), 8);
    }
}
