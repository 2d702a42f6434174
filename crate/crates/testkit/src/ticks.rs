//! Brute-force tick ladders.
//!
//! Each oracle walks its full candidate ladder in ascending step order,
//! counts the step multiples (or calendar boundaries) inside the window
//! `[lo - 1e-9 span, hi + 1e-9 span]`, and keeps the first candidate with
//! the smallest `|count - target|`.

use crate::civil::{civil_from_days, days_from_civil, weekday};

/// Counts above this are estimated rather than enumerated; such steps are
/// never competitive.
const ENUM_LIMIT: f64 = 20_000.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
}

impl Window {
    pub fn new(lo: f64, hi: f64) -> Self {
        let eps = 1e-9 * (hi - lo);
        Window { lo: lo - eps, hi: hi + eps }
    }

    pub fn holds(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

/// The double nearest to `n * 10^k`.
pub fn scaled(n: i128, k: i32) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if n.unsigned_abs() < 1 << 53 && (-22..=22).contains(&k) {
        let p: f64 = format!("1e{}", k.abs()).parse().unwrap();
        return if k >= 0 { n as f64 * p } else { n as f64 / p };
    }
    format!("{n}e{k}").parse().unwrap()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pick<S> {
    pub step: S,
    pub count: i64,
    pub majors: Vec<f64>,
}

fn best<S: Copy>(cands: impl IntoIterator<Item = (S, i64)>, target: i64) -> (S, i64) {
    let mut out: Option<(S, i64)> = None;
    for (s, c) in cands {
        if out.map_or(true, |(_, bc)| (c - target).abs() < (bc - target).abs()) {
            out = Some((s, c));
        }
    }
    out.expect("nonempty ladder")
}

/// Multiples `i * unit` (with `value(i)` their doubles) inside `w`.
fn multiples(w: Window, unit: f64, value: impl Fn(i128) -> f64) -> Result<Vec<f64>, i64> {
    let est = (w.hi - w.lo) / unit;
    if !(est <= ENUM_LIMIT) {
        return Err(est.min(1e15) as i64);
    }
    let a = (w.lo / unit).floor() as i128 - 2;
    let b = (w.hi / unit).ceil() as i128 + 2;
    Ok((a..=b).map(value).filter(|v| w.holds(*v)).collect())
}

fn count_of(r: &Result<Vec<f64>, i64>) -> i64 {
    match r {
        Ok(v) => v.len() as i64,
        Err(n) => *n,
    }
}

/// `(mantissa, exponent)` of the chosen step.
pub fn linear(lo: f64, hi: f64, target: u32) -> Pick<(i64, i32)> {
    let w = Window::new(lo, hi);
    let mut cands = Vec::new();
    for k in -60..=60 {
        for m in [1i64, 2, 5] {
            let unit = scaled(m as i128, k);
            let r = multiples(w, unit, |i| {
                let v = scaled(i * m as i128, k);
                if v == 0.0 {
                    0.0
                } else {
                    v
                }
            });
            cands.push(((m, k), count_of(&r)));
        }
    }
    let (step, count) = best(cands, target as i64);
    let unit = scaled(step.0 as i128, step.1);
    let majors = multiples(w, unit, |i| {
        let v = scaled(i * step.0 as i128, step.1);
        if v == 0.0 {
            0.0
        } else {
            v
        }
    })
    .expect("chosen step is enumerable");
    Pick { step, count, majors }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LogPick {
    Decades { every: i32, majors: Vec<f64> },
    Linear(Pick<(i64, i32)>),
}

impl LogPick {
    pub fn majors(&self) -> &[f64] {
        match self {
            LogPick::Decades { majors, .. } => majors,
            LogPick::Linear(p) => &p.majors,
        }
    }
}

/// Decades count as inside when their exponent lies in the window taken
/// over `[log10 lo, log10 hi]`.
pub fn log(lo: f64, hi: f64, target: u32) -> LogPick {
    let w = Window::new(lo.log10(), hi.log10());
    let ks: Vec<i32> = (-330..=310).filter(|&k| w.holds(k as f64)).collect();
    if ks.len() < 2 {
        return LogPick::Linear(linear(lo, hi, target));
    }
    let limit = ((1.5 * target as f64).floor() as usize).max(1);
    let mut every = 1;
    while ks.iter().filter(|k| k.rem_euclid(every) == 0).count() > limit {
        every += 1;
    }
    LogPick::Decades {
        every,
        majors: ks.iter().filter(|k| k.rem_euclid(every) == 0).map(|&k| scaled(1, k)).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CalStep {
    Seconds(i64),
    Week,
    Months(i64),
    Years(i64),
}

/// Calendar ladder: 1, 5, 15, 30 s; 1, 5, 15, 30 min; 1, 3, 6, 12 h;
/// 1 d; 7 d; 1, 3, 6 months; 1, 2, 5 x 10^k years.
pub fn calendar_ladder() -> Vec<CalStep> {
    let mut v: Vec<CalStep> = [1, 5, 15, 30, 60, 300, 900, 1800, 3600, 10800, 21600, 43200, 86400]
        .into_iter()
        .map(CalStep::Seconds)
        .collect();
    v.push(CalStep::Week);
    v.extend([1, 3, 6].map(CalStep::Months));
    let mut p = 1;
    for _ in 0..6 {
        v.extend([p, 2 * p, 5 * p].map(CalStep::Years));
        p *= 10;
    }
    v
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

fn month_of(t: i64) -> i64 {
    let (y, m, _) = civil_from_days(t.div_euclid(86_400));
    y * 12 + m as i64 - 1
}

fn month_start(q: i64) -> i64 {
    days_from_civil(q.div_euclid(12), q.rem_euclid(12) as u32 + 1, 1) * 86_400
}

/// Boundary instants (seconds) of `step` inside `w`, or an estimate of
/// their number when too many.
fn calendar_boundaries(step: CalStep, w: Window) -> Result<Vec<i64>, i64> {
    let lo = w.lo.ceil() as i64;
    let hi = w.hi.floor() as i64;
    if lo > hi {
        return Ok(Vec::new());
    }
    let span = (hi - lo) as f64;
    match step {
        CalStep::Seconds(n) => {
            if span / n as f64 > ENUM_LIMIT {
                return Err((span / n as f64) as i64);
            }
            Ok((ceil_div(lo, n)..=hi.div_euclid(n)).map(|i| i * n).collect())
        }
        CalStep::Week => {
            if span / 604_800.0 > ENUM_LIMIT {
                return Err((span / 604_800.0) as i64);
            }
            Ok((ceil_div(lo, 86_400)..=hi.div_euclid(86_400))
                .filter(|&z| weekday(z) == 1)
                .map(|z| z * 86_400)
                .collect())
        }
        CalStep::Months(n) => {
            if span / (2_629_746.0 * n as f64) > ENUM_LIMIT {
                return Err((span / (2_629_746.0 * n as f64)) as i64);
            }
            Ok((month_of(lo) - 1..=month_of(hi) + 1)
                .filter(|q| q.rem_euclid(n) == 0)
                .map(month_start)
                .filter(|&t| lo <= t && t <= hi)
                .collect())
        }
        CalStep::Years(n) => {
            if span / (31_556_952.0 * n as f64) > ENUM_LIMIT {
                return Err((span / (31_556_952.0 * n as f64)) as i64);
            }
            let (y0, y1) = (month_of(lo).div_euclid(12) - 1, month_of(hi).div_euclid(12) + 1);
            Ok((y0..=y1)
                .filter(|y| y.rem_euclid(n) == 0)
                .map(|y| month_start(y * 12))
                .filter(|&t| lo <= t && t <= hi)
                .collect())
        }
    }
}

/// Range in seconds since 1970-01-01T00:00Z.
pub fn date(lo: f64, hi: f64, target: u32) -> Pick<CalStep> {
    let w = Window::new(lo, hi);
    let cands = calendar_ladder().into_iter().map(|s| {
        let c = match calendar_boundaries(s, w) {
            Ok(v) => v.len() as i64,
            Err(n) => n,
        };
        (s, c)
    });
    let (step, count) = best(cands.collect::<Vec<_>>(), target as i64);
    let majors = calendar_boundaries(step, w)
        .expect("chosen step is enumerable")
        .into_iter()
        .map(|t| t as f64)
        .collect();
    Pick { step, count, majors }
}

/// Sexagesimal ladder in thousandths of an arcsecond (DMS) or of a second
/// of time (HMS): 10 to 500 thousandths; 1, 2, 5, 10, 15, 20, 30 seconds
/// and minutes; 1, 2, 5 x 10^k units.
pub fn sexagesimal_ladder() -> Vec<i64> {
    let mut v = vec![10, 20, 50, 100, 200, 500];
    for base in [1_000, 60_000] {
        v.extend([1, 2, 5, 10, 15, 20, 30].map(|m| m * base));
    }
    let mut p = 3_600_000;
    for _ in 0..9 {
        v.extend([p, 2 * p, 5 * p]);
        p *= 10;
    }
    v
}

/// Range in degrees. `hours` selects hour-angle units (1 h = 15 degrees).
pub fn sexagesimal(lo: f64, hi: f64, target: u32, hours: bool) -> Pick<i64> {
    let w = Window::new(lo, hi);
    let per_degree: i64 = if hours { 240_000 } else { 3_600_000 };
    let at = |step: i64| move |i: i128| (i * step as i128) as f64 / per_degree as f64;
    let cands: Vec<(i64, i64)> = sexagesimal_ladder()
        .into_iter()
        .map(|s| (s, count_of(&multiples(w, s as f64 / per_degree as f64, at(s)))))
        .collect();
    let (step, count) = best(cands, target as i64);
    let majors = multiples(w, step as f64 / per_degree as f64, at(step))
        .expect("chosen step is enumerable")
        .into_iter()
        .map(|v| if v == 0.0 { 0.0 } else { v })
        .collect();
    Pick { step, count, majors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        assert_eq!(linear(0.0, 10.0, 5).majors, vec![0.0, 2.0, 4.0, 6.0, 8.0, 10.0]);
        assert_eq!(linear(-3.2, 7.7, 5).majors, vec![-2.0, 0.0, 2.0, 4.0, 6.0]);
        assert_eq!(linear(0.0, 1.0, 5).majors, vec![0.0, 0.2, 0.4, 0.6, 0.8, 1.0]);
        assert_eq!(log(1.0, 1000.0, 5).majors(), &[1.0, 10.0, 100.0, 1000.0]);
        assert_eq!(log(3.0, 8.0, 5).majors(), &[3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        assert_eq!(
            sexagesimal(0.0, 30.0, 4, true).majors,
            vec![0.0, 7.5, 15.0, 22.5, 30.0]
        );
        let d = days_from_civil(2009, 5, 14) as f64 * 86_400.0;
        let p = date(d, d + 6.0 * 3600.0, 6);
        assert_eq!(p.step, CalStep::Seconds(3600));
        assert_eq!(p.majors.len(), 7);
    }

    #[test]
    fn ladders_ascend() {
        let s = sexagesimal_ladder();
        assert!(s.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(calendar_ladder().len(), 13 + 1 + 3 + 18);
    }
}
