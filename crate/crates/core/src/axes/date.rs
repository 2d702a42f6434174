use chrono::{DateTime, Datelike, NaiveDate, Utc};

use super::format::{format_label, DatePrefix, LabelContext};
use super::{Tick, TickSet, TickStep, Window};
use crate::scene::Range;

/// Largest supported magnitude of a date coordinate, in seconds from the
/// Unix epoch (about 190 000 years).
pub const DATE_LIMIT_SECONDS: f64 = 6.0e12;

const DAY: i64 = 86_400;
/// 1970-01-05, the first Monday after the epoch.
const WEEK_OFFSET: i64 = 4 * DAY;

/// A calendar step. Sub-day steps are counted in seconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DateStep {
    Seconds(i64),
    Days(i64),
    Months(i64),
    Years(i64),
}

use DateStep::*;

/// Candidate steps in ascending order of duration.
pub const DATE_LADDER: &[DateStep] = &[
    Seconds(1),
    Seconds(5),
    Seconds(15),
    Seconds(30),
    Seconds(60),
    Seconds(300),
    Seconds(900),
    Seconds(1800),
    Seconds(3600),
    Seconds(3 * 3600),
    Seconds(6 * 3600),
    Seconds(12 * 3600),
    Days(1),
    Days(7),
    Months(1),
    Months(3),
    Months(6),
    Years(1),
    Years(2),
    Years(5),
    Years(10),
    Years(20),
    Years(50),
    Years(100),
    Years(200),
    Years(500),
    Years(1_000),
    Years(2_000),
    Years(5_000),
    Years(10_000),
    Years(20_000),
    Years(50_000),
    Years(100_000),
    Years(200_000),
    Years(500_000),
];

impl DateStep {
    /// Finer step used for default minor ticks.
    pub fn default_minor(&self) -> Option<DateStep> {
        Some(match *self {
            Seconds(1) => return None,
            Seconds(5) => Seconds(1),
            Seconds(15) | Seconds(30) => Seconds(5),
            Seconds(60) => Seconds(15),
            Seconds(300) => Seconds(60),
            Seconds(900) | Seconds(1800) => Seconds(300),
            Seconds(3600) => Seconds(900),
            Seconds(10800) | Seconds(21600) => Seconds(3600),
            Seconds(43200) => Seconds(10800),
            Seconds(_) => return None,
            Days(1) => Seconds(21600),
            Days(_) => Days(1),
            Months(1) => Days(7),
            Months(_) => Months(1),
            Years(1) => Months(3),
            Years(2) => Months(6),
            Years(n) => {
                let mut lead = n;
                while lead % 10 == 0 {
                    lead /= 10;
                }
                Years(if lead == 2 { n / 4 } else { n / 5 })
            }
        })
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

fn utc(t: i64) -> DateTime<Utc> {
    DateTime::from_timestamp(t, 0).expect("timestamp within calendar span")
}

fn month_index(t: i64) -> i64 {
    let d = utc(t);
    d.year() as i64 * 12 + d.month0() as i64
}

fn month_start(index: i64) -> i64 {
    let y = index.div_euclid(12) as i32;
    let m = index.rem_euclid(12) as u32 + 1;
    NaiveDate::from_ymd_opt(y, m, 1)
        .expect("month within calendar span")
        .and_hms_opt(0, 0, 0)
        .expect("midnight exists")
        .and_utc()
        .timestamp()
}

/// Integer index range `[a, b]` of step boundaries inside the window; the
/// boundary for index `j` is [`boundary`]`(step, j)`.
fn index_bounds(step: DateStep, w: Window) -> Option<(i64, i64)> {
    let lo = w.lo.ceil() as i64;
    let hi = w.hi.floor() as i64;
    if lo > hi {
        return None;
    }
    let (a, b) = match step {
        Seconds(s) => (ceil_div(lo, s), floor_div(hi, s)),
        Days(n) => {
            let off = if n == 7 { WEEK_OFFSET } else { 0 };
            (ceil_div(lo - off, n * DAY), floor_div(hi - off, n * DAY))
        }
        Months(n) => {
            let mut first = month_index(lo);
            if month_start(first) < lo {
                first += 1;
            }
            (ceil_div(first, n), floor_div(month_index(hi), n))
        }
        Years(n) => {
            let mut first = utc(lo).year() as i64;
            if month_start(first * 12) < lo {
                first += 1;
            }
            (ceil_div(first, n), floor_div(utc(hi).year() as i64, n))
        }
    };
    (a <= b).then_some((a, b))
}

fn boundary(step: DateStep, j: i64) -> i64 {
    match step {
        Seconds(s) => j * s,
        Days(7) => WEEK_OFFSET + j * 7 * DAY,
        Days(n) => j * n * DAY,
        Months(n) => month_start(j * n),
        Years(n) => month_start(j * n * 12),
    }
}

fn boundaries(step: DateStep, w: Window) -> Vec<f64> {
    index_bounds(step, w)
        .map(|(a, b)| (a..=b).map(|j| boundary(step, j) as f64).collect())
        .unwrap_or_default()
}

/// Calendar-aligned ticks in UTC; the range is in seconds since the epoch.
pub fn date_ticks(range: Range, target_count: u32) -> TickSet {
    let w = Window::new(range);
    let target = target_count as i64;
    let mut best: Option<(i64, DateStep)> = None;
    for &step in DATE_LADDER {
        let count = index_bounds(step, w).map_or(0, |(a, b)| b - a + 1);
        let d = (count - target).abs();
        if best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, step));
        }
    }
    let step = best.expect("ladder is nonempty").1;
    let values = boundaries(step, w);
    let prefix = match (values.first(), values.last()) {
        (Some(&a), Some(&b)) if matches!(step, Seconds(_)) => {
            let (da, db) = (utc(a as i64), utc(b as i64));
            if da.year() != db.year() {
                DatePrefix::Full
            } else if da.date_naive() != db.date_naive() {
                DatePrefix::MonthDay
            } else {
                DatePrefix::None
            }
        }
        _ => DatePrefix::None,
    };
    let ctx = LabelContext::Date { step, prefix };
    let minor = match step.default_minor() {
        Some(ms) => boundaries(ms, w)
            .into_iter()
            .filter(|v| !values.contains(v))
            .collect(),
        None => Vec::new(),
    };
    TickSet {
        major: values
            .into_iter()
            .map(|value| Tick {
                value,
                label: format_label(value, &ctx, None).unwrap_or_default(),
            })
            .collect(),
        minor,
        step: TickStep::Date(step),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(y: i32, m: u32, d: u32, h: u32) -> f64 {
        NaiveDate::from_ymd_opt(y, m, d)
            .unwrap()
            .and_hms_opt(h, 0, 0)
            .unwrap()
            .and_utc()
            .timestamp() as f64
    }

    #[test]
    fn hourly_within_a_day() {
        let t = date_ticks(Range::new(ts(2009, 5, 14, 0), ts(2009, 5, 14, 6)), 6);
        assert_eq!(t.step, TickStep::Date(Seconds(3600)));
        assert_eq!(t.labels(), vec!["00:00", "01:00", "02:00", "03:00", "04:00", "05:00", "06:00"]);
    }

    #[test]
    fn yearly() {
        let t = date_ticks(Range::new(ts(2009, 1, 1, 0), ts(2012, 1, 1, 0)), 4);
        assert_eq!(t.labels(), vec!["2009", "2010", "2011", "2012"]);
    }

    #[test]
    fn single_step_span_has_two_boundaries() {
        let t = date_ticks(Range::new(0.0, 60.0), 2);
        assert_eq!(t.major_values(), vec![0.0, 60.0]);
    }

    #[test]
    fn weeks_start_monday() {
        let t = date_ticks(Range::new(ts(2021, 1, 1, 0), ts(2021, 2, 15, 0)), 7);
        assert_eq!(t.step, TickStep::Date(Days(7)));
        for v in t.major_values() {
            assert_eq!(utc(v as i64).weekday(), chrono::Weekday::Mon);
        }
    }

    #[test]
    fn multi_day_hours_get_prefix() {
        let t = date_ticks(Range::new(ts(2020, 3, 1, 0), ts(2020, 3, 2, 12)), 6);
        assert_eq!(t.major[0].label, "03-01 00:00");
    }

    #[test]
    fn pre_epoch_months() {
        let t = date_ticks(Range::new(ts(1969, 2, 10, 0), ts(1969, 8, 1, 0)), 6);
        assert_eq!(t.labels(), vec!["1969-03", "1969-04", "1969-05", "1969-06", "1969-07", "1969-08"]);
    }
}
