//! Axis transforms, zoom algebra and tick generation.
//!
//! All functions here are pure. Tick generators choose a step from a
//! fixed ladder per axis kind by minimizing `|count - target|`, breaking
//! ties toward the smaller step, and place majors at exact multiples of
//! that step.

mod date;
mod format;
mod linear;
mod log;
mod sexagesimal;
mod transform;
mod zoom;

use thiserror::Error;

use crate::scene::{AxisTransformDef, MajorTicks, Range, SexaMode, TickConfig, TransformKind};

pub use date::{date_ticks, DateStep, DATE_LADDER, DATE_LIMIT_SECONDS};
pub use format::{check_pattern, format_label, DatePrefix, LabelContext, LabelPattern};
pub use linear::{decimal, linear_ticks, DecimalStep};
pub use log::log_ticks;
pub use sexagesimal::{sexa_ladder, sexagesimal_ticks, MILLI_PER_DEGREE_DMS, MILLI_PER_DEGREE_HMS};
pub use transform::{forward, inverse, Mapping};
pub use zoom::{wheel_zoom, zoom_to_fraction, MIN_RELATIVE_SPAN, WHEEL_FACTOR};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AxisError {
    #[error("logarithmic transform cannot map nonpositive value {0}")]
    LogNonpositiveValue(f64),
    #[error("zoomed span [{lo}, {hi}] is below the minimum relative span")]
    SpanTooSmall { lo: f64, hi: f64 },
    #[error("fractions [{f0}, {f1}] must satisfy 0 <= f0 < f1 <= 1")]
    InvalidFraction { f0: f64, f1: f64 },
    #[error("bad label pattern {pattern:?}: {reason}")]
    BadPattern { pattern: String, reason: String },
}

impl AxisError {
    pub fn code(&self) -> &'static str {
        match self {
            AxisError::LogNonpositiveValue(_) => "LOG_NONPOSITIVE_VALUE",
            AxisError::SpanTooSmall { .. } => "SPAN_TOO_SMALL",
            AxisError::InvalidFraction { .. } => "INVALID_FRACTION",
            AxisError::BadPattern { .. } => "BAD_PATTERN",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tick {
    pub value: f64,
    pub label: String,
}

/// Step a tick set was generated with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TickStep {
    Linear(DecimalStep),
    /// Every `every`-th power of ten.
    LogDecades { every: u32 },
    Date(DateStep),
    /// Step in milli-seconds of time (HMS) or milli-arcseconds (DMS).
    Sexagesimal { mode: SexaMode, milli: i64 },
    Explicit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TickSet {
    pub major: Vec<Tick>,
    pub minor: Vec<f64>,
    pub step: TickStep,
}

impl TickSet {
    pub fn major_values(&self) -> Vec<f64> {
        self.major.iter().map(|t| t.value).collect()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.major.iter().map(|t| t.label.as_str()).collect()
    }
}

/// Inclusive containment with the shared `1e-9 * span` tolerance.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Window {
    pub lo: f64,
    pub hi: f64,
}

impl Window {
    pub fn new(r: Range) -> Self {
        let eps = 1e-9 * (r.hi - r.lo);
        Window {
            lo: r.lo - eps,
            hi: r.hi + eps,
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        v >= self.lo && v <= self.hi
    }
}

/// Ticks for an axis according to its transform and tick configuration.
pub fn generate_ticks(tr: &AxisTransformDef, cfg: &TickConfig) -> Result<TickSet, AxisError> {
    let mut set = match &cfg.major {
        MajorTicks::Count(c) => auto_ticks(tr, c.target_count),
        MajorTicks::Explicit(e) => explicit_ticks(tr, &e.explicit_positions, cfg.explicit_labels.as_deref()),
    };
    if let Some(n) = cfg.minor_count {
        set.minor = override_minors(tr, &set, n);
    }
    if let Some(p) = &cfg.label_format {
        if cfg.explicit_labels.is_none() {
            let ctx = LabelContext::for_set(tr, &set);
            for t in &mut set.major {
                t.label = format_label(t.value, &ctx, Some(p))?;
            }
        }
    }
    if !cfg.labels_visible {
        for t in &mut set.major {
            t.label.clear();
        }
    }
    Ok(set)
}

fn auto_ticks(tr: &AxisTransformDef, target: u32) -> TickSet {
    match tr.kind {
        TransformKind::Linear => linear_ticks(tr.range, target),
        TransformKind::Log => log_ticks(tr.range, target),
        TransformKind::Date => date_ticks(tr.range, target),
        TransformKind::Sexagesimal => sexagesimal_ticks(tr.range, target, tr.sexa_mode),
    }
}

fn explicit_ticks(tr: &AxisTransformDef, positions: &[f64], labels: Option<&[String]>) -> TickSet {
    let w = Window::new(tr.range);
    let kept: Vec<(usize, f64)> = positions
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, v)| w.contains(*v) && (tr.kind != TransformKind::Log || *v > 0.0))
        .collect();
    let mut set = TickSet {
        major: Vec::with_capacity(kept.len()),
        minor: Vec::new(),
        step: TickStep::Explicit,
    };
    let ctx = LabelContext::for_explicit(tr, &kept.iter().map(|(_, v)| *v).collect::<Vec<_>>());
    for (i, v) in kept {
        let label = match labels {
            Some(l) => l[i].clone(),
            None => format_label(v, &ctx, None).unwrap_or_default(),
        };
        set.major.push(Tick { value: v, label });
    }
    set
}

/// Evenly subdivides each major interval into `n + 1` parts (in the
/// transform's normalized space) and drops anything outside the range.
fn override_minors(tr: &AxisTransformDef, set: &TickSet, n: u32) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    match set.step {
        TickStep::Linear(step) => linear::minors(tr.range, step, n),
        TickStep::LogDecades { .. } => log::decade_minors(tr.range, n, &set.major_values()),
        TickStep::Sexagesimal { mode, milli } => sexagesimal::minors(tr.range, mode, milli, n),
        TickStep::Date(_) | TickStep::Explicit => {
            let m = Mapping::from_parts(tr.kind, tr.range, false);
            let w = Window::new(tr.range);
            let majors = set.major_values();
            let mut out = Vec::new();
            for pair in majors.windows(2) {
                let (Ok(a), Ok(b)) = (m.fraction(pair[0]), m.fraction(pair[1])) else {
                    continue;
                };
                for j in 1..=n {
                    let f = a + (b - a) * j as f64 / (n + 1) as f64;
                    let v = m.value_at(f);
                    if w.contains(v) {
                        out.push(v);
                    }
                }
            }
            out
        }
    }
}
