use chrono::format::{Item, StrftimeItems};
use chrono::{DateTime, Datelike, Timelike, Utc};

use super::date::DateStep;
use super::linear::{decimal, DecimalStep};
use super::sexagesimal::{milli_per_degree, resolution};
use super::{AxisError, TickSet, TickStep};
use crate::scene::{AxisTransformDef, Range, SexaMode, TransformKind};

const SECOND: i64 = 1_000;
const MINUTE: i64 = 60_000;
const UNIT: i64 = 3_600_000;

/// Date prefix added to sub-day labels when majors span several dates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatePrefix {
    None,
    MonthDay,
    Full,
}

/// What a label generator needs to know about the tick step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LabelContext {
    Linear { step: DecimalStep, magnitude: i32 },
    LogDecade,
    Date { step: DateStep, prefix: DatePrefix },
    /// `resolution` is the finest shown component in milli-units.
    Sexagesimal { mode: SexaMode, resolution: i64 },
}

/// Power-of-ten exponent of a nonzero finite value, exact.
fn exp10(v: f64) -> i32 {
    let s = format!("{:e}", v);
    s[s.find('e').expect("exponent present") + 1..].parse().expect("integer exponent")
}

fn utc(v: f64) -> DateTime<Utc> {
    let secs = v.floor();
    let nanos = ((v - secs) * 1e9).round().min(999_999_999.0) as u32;
    DateTime::from_timestamp(secs as i64, nanos).unwrap_or_default()
}

impl LabelContext {
    pub fn linear(range: Range, step: DecimalStep) -> Self {
        let m = range.lo.abs().max(range.hi.abs());
        LabelContext::Linear {
            step,
            magnitude: if m > 0.0 { exp10(m) } else { 0 },
        }
    }

    /// Context matching the step a tick set was generated with.
    pub fn for_set(tr: &AxisTransformDef, set: &TickSet) -> Self {
        match set.step {
            TickStep::Linear(s) => LabelContext::linear(tr.range, s),
            TickStep::LogDecades { .. } => LabelContext::LogDecade,
            TickStep::Date(step) => LabelContext::Date {
                step,
                prefix: date_prefix(step, &set.major_values()),
            },
            TickStep::Sexagesimal { mode, milli } => LabelContext::Sexagesimal {
                mode,
                resolution: resolution(milli),
            },
            TickStep::Explicit => LabelContext::for_explicit(tr, &set.major_values()),
        }
    }

    /// Context fine enough to tell arbitrary positions apart.
    pub fn for_explicit(tr: &AxisTransformDef, values: &[f64]) -> Self {
        match tr.kind {
            TransformKind::Linear | TransformKind::Log => {
                let gap = values
                    .windows(2)
                    .map(|w| w[1] - w[0])
                    .fold(f64::INFINITY, f64::min);
                let gap = if gap.is_finite() { gap } else { values.first().map_or(1.0, |v| v.abs()) };
                let mut exponent = if gap > 0.0 { exp10(gap) } else { 0 };
                while values.iter().any(|v| {
                    let r = v / decimal(1, exponent);
                    (r - r.round()).abs() > 1e-9 * r.abs().max(1.0)
                }) && exponent > -15
                {
                    exponent -= 1;
                }
                LabelContext::linear(tr.range, DecimalStep { mantissa: 1, exponent })
            }
            TransformKind::Date => {
                let aligned = |f: &dyn Fn(DateTime<Utc>) -> bool| {
                    values.iter().all(|v| v.fract() == 0.0 && f(utc(*v)))
                };
                let midnight = |d: DateTime<Utc>| d.num_seconds_from_midnight() == 0;
                let step = if aligned(&|d| midnight(d) && d.day() == 1 && d.month() == 1) {
                    DateStep::Years(1)
                } else if aligned(&|d| midnight(d) && d.day() == 1) {
                    DateStep::Months(1)
                } else if aligned(&midnight) {
                    DateStep::Days(1)
                } else if aligned(&|d| d.second() == 0) {
                    DateStep::Seconds(60)
                } else {
                    DateStep::Seconds(1)
                };
                LabelContext::Date {
                    step,
                    prefix: date_prefix(step, values),
                }
            }
            TransformKind::Sexagesimal => {
                let factor = milli_per_degree(tr.sexa_mode) as f64;
                let res = [UNIT, MINUTE, SECOND, 100, 10]
                    .into_iter()
                    .find(|&r| {
                        values.iter().all(|v| {
                            let q = v * factor / r as f64;
                            (q - q.round()).abs() < 1e-6
                        })
                    })
                    .unwrap_or(10);
                LabelContext::Sexagesimal {
                    mode: tr.sexa_mode,
                    resolution: res,
                }
            }
        }
    }
}

fn date_prefix(step: DateStep, values: &[f64]) -> DatePrefix {
    let (Some(&a), Some(&b)) = (values.first(), values.last()) else {
        return DatePrefix::None;
    };
    if !matches!(step, DateStep::Seconds(_)) {
        return DatePrefix::None;
    }
    let (da, db) = (utc(a), utc(b));
    if da.year() != db.year() {
        DatePrefix::Full
    } else if da.date_naive() != db.date_naive() {
        DatePrefix::MonthDay
    } else {
        DatePrefix::None
    }
}

/// A parsed label override.
#[derive(Debug, Clone, PartialEq)]
pub enum LabelPattern {
    /// printf-like: literal text around exactly one of `%d`, `%f`, `%e`
    /// with optional `.N` precision; `%%` is a literal percent sign.
    Printf {
        prefix: String,
        conv: char,
        precision: Option<usize>,
        suffix: String,
    },
    /// strftime-style pattern for date axes.
    Strftime(String),
}

fn bad(pattern: &str, reason: &str) -> AxisError {
    AxisError::BadPattern {
        pattern: pattern.to_string(),
        reason: reason.to_string(),
    }
}

/// Parses a label override for an axis kind.
pub fn check_pattern(kind: TransformKind, pattern: &str) -> Result<LabelPattern, AxisError> {
    if pattern.is_empty() {
        return Err(bad(pattern, "pattern is empty"));
    }
    if kind == TransformKind::Date {
        if StrftimeItems::new(pattern).any(|i| matches!(i, Item::Error)) {
            return Err(bad(pattern, "invalid date format specifier"));
        }
        return Ok(LabelPattern::Strftime(pattern.to_string()));
    }
    let mut prefix = String::new();
    let mut suffix = String::new();
    let mut conv: Option<(char, Option<usize>)> = None;
    let mut chars = pattern.chars().peekable();
    while let Some(c) = chars.next() {
        let out = if conv.is_some() { &mut suffix } else { &mut prefix };
        if c != '%' {
            out.push(c);
            continue;
        }
        if chars.peek() == Some(&'%') {
            chars.next();
            out.push('%');
            continue;
        }
        let mut precision = None;
        if chars.peek() == Some(&'.') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let p: usize = digits
                .parse()
                .map_err(|_| bad(pattern, "precision needs digits after '.'"))?;
            if p > 17 {
                return Err(bad(pattern, "precision above 17"));
            }
            precision = Some(p);
        }
        let c = chars
            .next()
            .ok_or_else(|| bad(pattern, "dangling '%'"))?;
        if !matches!(c, 'd' | 'f' | 'e') {
            return Err(bad(pattern, &format!("unsupported conversion '%{c}'")));
        }
        if c == 'd' && precision.is_some() {
            return Err(bad(pattern, "'%d' takes no precision"));
        }
        if conv.is_some() {
            return Err(bad(pattern, "more than one conversion"));
        }
        conv = Some((c, precision));
    }
    let (conv, precision) = conv.ok_or_else(|| bad(pattern, "no conversion"))?;
    Ok(LabelPattern::Printf {
        prefix,
        conv,
        precision,
        suffix,
    })
}

fn c_exp(v: f64, p: usize) -> String {
    let s = format!("{:.p$e}", v);
    let (mant, exp) = s.split_once('e').expect("exponent present");
    let e: i32 = exp.parse().expect("integer exponent");
    format!("{mant}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs())
}

impl LabelPattern {
    pub fn apply(&self, value: f64) -> String {
        match self {
            LabelPattern::Printf {
                prefix,
                conv,
                precision,
                suffix,
            } => {
                let v = if value == 0.0 { 0.0 } else { value };
                let body = match conv {
                    'd' => format!("{}", v.round() as i64),
                    'f' => format!("{:.*}", precision.unwrap_or(6), v),
                    _ => c_exp(v, precision.unwrap_or(6)),
                };
                format!("{prefix}{body}{suffix}")
            }
            LabelPattern::Strftime(p) => utc(value).format(p).to_string(),
        }
    }
}

/// Label text for `value`. An override pattern takes precedence over the
/// context's default format.
pub fn format_label(value: f64, ctx: &LabelContext, pattern: Option<&str>) -> Result<String, AxisError> {
    if let Some(p) = pattern {
        let kind = match ctx {
            LabelContext::Date { .. } => TransformKind::Date,
            _ => TransformKind::Linear,
        };
        return Ok(check_pattern(kind, p)?.apply(value));
    }
    let v = if value == 0.0 { 0.0 } else { value };
    Ok(match *ctx {
        LabelContext::Linear { step, magnitude } => linear_label(v, step, magnitude),
        LabelContext::LogDecade => log_label(v),
        LabelContext::Date { step, prefix } => date_label(v, step, prefix),
        LabelContext::Sexagesimal { mode, resolution } => sexa_label(v, mode, resolution),
    })
}

fn linear_label(v: f64, step: DecimalStep, magnitude: i32) -> String {
    if magnitude >= 6 || step.exponent < -5 {
        if v == 0.0 {
            return "0".into();
        }
        let p = (exp10(v) - step.exponent).max(0) as usize;
        return format!("{:.p$e}", v);
    }
    format!("{:.*}", (-step.exponent).max(0) as usize, v)
}

fn log_label(v: f64) -> String {
    if v > 0.0 {
        let k = exp10(v);
        if v == decimal(1, k) {
            return match k {
                -1 => "0.1".into(),
                0 => "1".into(),
                1 => "10".into(),
                2 => "100".into(),
                _ => format!("10^{k}"),
            };
        }
    }
    format!("{v}")
}

fn date_label(v: f64, step: DateStep, prefix: DatePrefix) -> String {
    let fmt = match step {
        DateStep::Seconds(s) => {
            let time = if s < 60 { "%H:%M:%S" } else { "%H:%M" };
            match prefix {
                DatePrefix::None => time.to_string(),
                DatePrefix::MonthDay => format!("%m-%d {time}"),
                DatePrefix::Full => format!("%Y-%m-%d {time}"),
            }
        }
        DateStep::Days(_) => "%Y-%m-%d".into(),
        DateStep::Months(_) => "%Y-%m".into(),
        DateStep::Years(_) => "%Y".into(),
    };
    utc(v).format(&fmt).to_string()
}

fn sexa_label(v: f64, mode: SexaMode, res: i64) -> String {
    let factor = milli_per_degree(mode) as f64;
    let total = (v * factor / res as f64).round() as i128 * res as i128;
    let neg = total < 0;
    let a = total.unsigned_abs();
    let (unit, minute, second) = (UNIT as u128, MINUTE as u128, SECOND as u128);
    let units = a / unit;
    let mins = (a % unit) / minute;
    let ms = a % minute;
    let secs = match res {
        100 => format!("{:02}.{}", ms / second, (ms % second) / 100),
        10 => format!("{:02}.{:02}", ms / second, (ms % second) / 10),
        _ => format!("{:02}", ms / second),
    };
    let res = res as u128;
    let mut out = String::new();
    match mode {
        SexaMode::Hms => {
            if neg {
                out.push('-');
            }
            out += &format!("{units:02}h");
            if res <= minute {
                out += &format!("{mins:02}m");
            }
            if res <= second {
                out += &format!("{secs}s");
            }
        }
        SexaMode::Dms => {
            out.push(if neg { '-' } else { '+' });
            out += &format!("{units:02}°");
            if res <= minute {
                out += &format!("{mins:02}′");
            }
            if res <= second {
                out += &format!("{secs}″");
            }
        }
    }
    out
}
