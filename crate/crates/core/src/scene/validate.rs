use std::collections::{HashMap, HashSet};

use super::error::{ErrorCode, SceneError};
use super::model::*;
use crate::axes::{check_pattern, DATE_LIMIT_SECONDS};

/// Puts a scene into canonical form: rectangle annotations get ordered
/// corners. Validation assumes this has run.
pub fn normalize(scene: &mut Scene) {
    fn go(node: &mut PlotNode) {
        for a in &mut node.annotations {
            if let Annotation::Rect(r) = a {
                if r.x0 > r.x1 {
                    std::mem::swap(&mut r.x0, &mut r.x1);
                }
                if r.y0 > r.y1 {
                    std::mem::swap(&mut r.y0, &mut r.y1);
                }
            }
        }
        for c in &mut node.children {
            go(c);
        }
    }
    for p in &mut scene.plots {
        go(p);
    }
}

/// Checks every scene invariant and returns all violations in tree order.
pub fn validate(scene: &Scene) -> Vec<SceneError> {
    let mut v = Validator::default();
    if scene.plots.len() != 1 {
        v.push(
            ErrorCode::Schema,
            "plots",
            format!("expected exactly one root plot, found {}", scene.plots.len()),
        );
    }
    for (i, p) in scene.plots.iter().enumerate() {
        v.node(p, &format!("plots[{i}]"));
    }
    v.errors
}

/// Returns the first violation, if any.
pub fn check(scene: &Scene) -> Result<(), SceneError> {
    match validate(scene).into_iter().next() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

#[derive(Default)]
struct Validator {
    errors: Vec<SceneError>,
    node_ids: HashSet<String>,
}

impl Validator {
    fn push(&mut self, code: ErrorCode, path: impl Into<String>, msg: impl Into<String>) {
        self.errors.push(SceneError::new(code, path, msg));
    }

    fn node(&mut self, node: &PlotNode, path: &str) {
        if node.id.is_empty() {
            self.push(ErrorCode::InvalidValue, format!("{path}.id"), "node id must not be empty");
        }
        if !self.node_ids.insert(node.id.clone()) {
            self.push(
                ErrorCode::DuplicateId,
                format!("{path}.id"),
                format!("node id {:?} is used more than once", node.id),
            );
        }

        let mut kinds: HashMap<&str, TransformKind> = HashMap::new();
        for (i, t) in node.transforms.iter().enumerate() {
            let tp = format!("{path}.transforms[{i}]");
            if kinds.insert(t.id.as_str(), t.kind).is_some() {
                self.push(
                    ErrorCode::DuplicateId,
                    format!("{tp}.id"),
                    format!("transform id {:?} is declared twice", t.id),
                );
            }
            self.transform(t, &tp);
        }

        let mut x_refs: HashSet<&str> = HashSet::new();
        let mut y_refs: HashSet<&str> = HashSet::new();

        for (i, a) in node.axes.iter().enumerate() {
            let ap = format!("{path}.axes[{i}]");
            match kinds.get(a.transform_ref.as_str()) {
                None => self.unresolved(&format!("{ap}.transform_ref"), &a.transform_ref),
                Some(kind) => {
                    if a.side.is_horizontal() {
                        x_refs.insert(&a.transform_ref);
                    } else {
                        y_refs.insert(&a.transform_ref);
                    }
                    self.ticks(&a.tick_config, *kind, &format!("{ap}.tick_config"));
                }
            }
        }

        let mut layer_ids = HashSet::new();
        for (i, l) in node.layers.iter().enumerate() {
            let lp = format!("{path}.layers[{i}]");
            if !layer_ids.insert(l.id.as_str()) {
                self.push(
                    ErrorCode::DuplicateId,
                    format!("{lp}.id"),
                    format!("layer id {:?} is declared twice", l.id),
                );
            }
            if !kinds.contains_key(l.x_transform_ref.as_str()) {
                self.unresolved(&format!("{lp}.x_transform_ref"), &l.x_transform_ref);
            } else {
                x_refs.insert(&l.x_transform_ref);
            }
            if !kinds.contains_key(l.y_transform_ref.as_str()) {
                self.unresolved(&format!("{lp}.y_transform_ref"), &l.y_transform_ref);
            } else {
                y_refs.insert(&l.y_transform_ref);
            }
            for (j, g) in l.graphs.iter().enumerate() {
                self.graph(g, &format!("{lp}.graphs[{j}]"));
            }
        }

        for (i, a) in node.annotations.iter().enumerate() {
            let ap = format!("{path}.annotations[{i}]");
            let (ux, uy) = a.uses_data_axes();
            let (rx, ry) = a.transform_refs();
            let (x, y) = node.annotation_pair(a);
            for (uses, explicit, resolved, field) in
                [(ux, rx, x, "x_transform_ref"), (uy, ry, y, "y_transform_ref")]
            {
                if let Some(r) = explicit {
                    if !kinds.contains_key(r) {
                        self.unresolved(&format!("{ap}.{field}"), r);
                        continue;
                    }
                }
                if uses && resolved.is_none() {
                    self.push(
                        ErrorCode::UnresolvedRef,
                        format!("{ap}.{field}"),
                        "annotation uses data coordinates but the plot has no transform to place it with",
                    );
                }
            }
            if let Some(r) = rx {
                if kinds.contains_key(r) {
                    x_refs.insert(r);
                }
            }
            if let Some(r) = ry {
                if kinds.contains_key(r) {
                    y_refs.insert(r);
                }
            }
            self.annotation(a, &ap);
        }

        let mut both: Vec<&&str> = x_refs.intersection(&y_refs).collect();
        both.sort();
        for id in both {
            let idx = node.transforms.iter().position(|t| t.id == **id).unwrap_or(0);
            self.push(
                ErrorCode::OrientationConflict,
                format!("{path}.transforms[{idx}]"),
                format!("transform {id:?} is used both horizontally and vertically"),
            );
        }

        let h = &node.layout_hints;
        if !(h.weight.is_finite() && h.weight > 0.0) {
            self.push(
                ErrorCode::InvalidValue,
                format!("{path}.layout_hints.weight"),
                format!("weight must be positive, got {}", h.weight),
            );
        }
        if let Some(m) = &node.margins {
            for (name, v) in [("top", m.top), ("right", m.right), ("bottom", m.bottom), ("left", m.left)] {
                if !(v.is_finite() && v >= 0.0) {
                    self.push(
                        ErrorCode::InvalidValue,
                        format!("{path}.margins.{name}"),
                        format!("margin must be a nonnegative number, got {v}"),
                    );
                }
            }
        }

        for (i, c) in node.children.iter().enumerate() {
            self.node(c, &format!("{path}.children[{i}]"));
        }
    }

    fn unresolved(&mut self, path: &str, id: &str) {
        self.push(
            ErrorCode::UnresolvedRef,
            path,
            format!("no transform {id:?} is declared on this plot"),
        );
    }

    fn range(&mut self, r: &Range, path: &str) -> bool {
        if !r.is_valid() {
            self.push(
                ErrorCode::InvalidRange,
                path,
                format!("range must be finite with lo < hi, got [{}, {}]", r.lo, r.hi),
            );
            return false;
        }
        true
    }

    fn transform(&mut self, t: &AxisTransformDef, path: &str) {
        let rp = format!("{path}.range");
        if !self.range(&t.range, &rp) {
            return;
        }
        match t.kind {
            TransformKind::Log if t.range.lo <= 0.0 => self.push(
                ErrorCode::LogNonpositive,
                rp,
                format!(
                    "logarithmic range must be positive, got [{}, {}]",
                    t.range.lo, t.range.hi
                ),
            ),
            TransformKind::Date
                if t.range.lo < -DATE_LIMIT_SECONDS || t.range.hi > DATE_LIMIT_SECONDS =>
            {
                self.push(
                    ErrorCode::InvalidRange,
                    rp,
                    "date range lies outside the supported calendar span",
                )
            }
            _ => {}
        }
    }

    fn ticks(&mut self, tc: &TickConfig, kind: TransformKind, path: &str) {
        match &tc.major {
            MajorTicks::Count(c) => {
                if c.target_count < 2 {
                    self.push(
                        ErrorCode::InvalidTicks,
                        format!("{path}.major.target_count"),
                        format!("target_count must be at least 2, got {}", c.target_count),
                    );
                }
                if tc.explicit_labels.is_some() {
                    self.push(
                        ErrorCode::InvalidTicks,
                        format!("{path}.explicit_labels"),
                        "explicit_labels require explicit_positions",
                    );
                }
            }
            MajorTicks::Explicit(e) => {
                let pos = &e.explicit_positions;
                if pos.iter().any(|v| !v.is_finite()) || pos.windows(2).any(|w| w[0] >= w[1]) {
                    self.push(
                        ErrorCode::InvalidTicks,
                        format!("{path}.major.explicit_positions"),
                        "explicit positions must be finite and strictly increasing",
                    );
                }
                if let Some(labels) = &tc.explicit_labels {
                    if labels.len() != pos.len() {
                        self.push(
                            ErrorCode::ArrayMismatch,
                            format!("{path}.explicit_labels"),
                            format!(
                                "{path}.explicit_labels has {} entries but {path}.major.explicit_positions has {}",
                                labels.len(),
                                pos.len()
                            ),
                        );
                    }
                }
            }
        }
        if let Some(p) = &tc.label_format {
            if let Err(e) = check_pattern(kind, p) {
                self.push(ErrorCode::BadPattern, format!("{path}.label_format"), e.to_string());
            }
        }
    }

    fn paired(&mut self, a: &Series, an: &str, b: &Series, bn: &str) {
        if a.len() != b.len() {
            self.push(
                ErrorCode::ArrayMismatch,
                bn,
                format!("{an} has {} samples but {bn} has {}", a.len(), b.len()),
            );
        }
    }

    fn errors_nonneg(&mut self, s: &Series, path: &str) {
        if s.iter().any(|v| *v < 0.0) {
            self.push(ErrorCode::InvalidValue, path, "error bars must be nonnegative");
        }
    }

    fn plane(&mut self, rows: &[Series], path: &str) -> Option<(usize, usize)> {
        let Some(first) = rows.first() else {
            self.push(ErrorCode::ArrayMismatch, path, "image data must have at least one row");
            return None;
        };
        if first.is_empty() {
            self.push(ErrorCode::ArrayMismatch, path, "image rows must not be empty");
            return None;
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != first.len() {
                self.push(
                    ErrorCode::ArrayMismatch,
                    format!("{path}[{i}]"),
                    format!(
                        "{path}[{i}] has {} columns but {path}[0] has {}",
                        r.len(),
                        first.len()
                    ),
                );
                return None;
            }
        }
        Some((rows.len(), first.len()))
    }

    fn graph(&mut self, g: &Graph, path: &str) {
        match g {
            Graph::Xy(g) => {
                self.paired(&g.x, &format!("{path}.x"), &g.y, &format!("{path}.y"));
                self.style(&g.style, &format!("{path}.style"));
            }
            Graph::XyError(g) => {
                let xp = format!("{path}.x");
                let yp = format!("{path}.y");
                self.paired(&g.x, &xp, &g.y, &yp);
                for (s, name) in [(&g.x_err_lo, "x_err_lo"), (&g.x_err_hi, "x_err_hi")] {
                    if let Some(s) = s {
                        let p = format!("{path}.{name}");
                        self.paired(&g.x, &xp, s, &p);
                        self.errors_nonneg(s, &p);
                    }
                }
                for (s, name) in [(&g.y_err_lo, "y_err_lo"), (&g.y_err_hi, "y_err_hi")] {
                    if let Some(s) = s {
                        let p = format!("{path}.{name}");
                        self.paired(&g.y, &yp, s, &p);
                        self.errors_nonneg(s, &p);
                    }
                }
                self.style(&g.style, &format!("{path}.style"));
            }
            Graph::Grid(g) => {
                self.plane(&g.values, &format!("{path}.values"));
                self.range(&g.x_extent, &format!("{path}.x_extent"));
                self.range(&g.y_extent, &format!("{path}.y_extent"));
                if let Norm::Explicit(r) = &g.norm {
                    self.range(r, &format!("{path}.norm.explicit"));
                }
            }
            Graph::Rgb(g) => {
                let r = self.plane(&g.r, &format!("{path}.r"));
                let gs = self.plane(&g.g, &format!("{path}.g"));
                let b = self.plane(&g.b, &format!("{path}.b"));
                if let (Some(r), Some(gs), Some(b)) = (r, gs, b) {
                    if r != gs || r != b {
                        self.push(
                            ErrorCode::ArrayMismatch,
                            format!("{path}.g"),
                            format!(
                                "{path}.r is {}x{}, {path}.g is {}x{}, {path}.b is {}x{}",
                                r.0, r.1, gs.0, gs.1, b.0, b.1
                            ),
                        );
                    }
                }
                for (plane, name) in [(&g.r, "r"), (&g.g, "g"), (&g.b, "b")] {
                    let bad = plane
                        .iter()
                        .flat_map(|row| row.iter())
                        .any(|v| !v.is_nan() && !(0.0..=1.0).contains(v));
                    if bad {
                        self.push(
                            ErrorCode::InvalidValue,
                            format!("{path}.{name}"),
                            "color planes must lie in [0, 1]",
                        );
                    }
                }
                self.range(&g.x_extent, &format!("{path}.x_extent"));
                self.range(&g.y_extent, &format!("{path}.y_extent"));
            }
        }
    }

    fn style(&mut self, s: &Style, path: &str) {
        if s.line == LineKind::None && s.symbol == SymbolKind::None {
            self.push(
                ErrorCode::InvalidStyle,
                format!("{path}.symbol"),
                "a style with line = none must draw a symbol",
            );
        }
        if !(s.stroke_width.is_finite() && s.stroke_width > 0.0) {
            self.push(
                ErrorCode::InvalidStyle,
                format!("{path}.stroke_width"),
                format!("stroke_width must be positive, got {}", s.stroke_width),
            );
        }
        if !(s.symbol_size.is_finite() && s.symbol_size > 0.0) {
            self.push(
                ErrorCode::InvalidStyle,
                format!("{path}.symbol_size"),
                format!("symbol_size must be positive, got {}", s.symbol_size),
            );
        }
        if s.dash_pattern.is_empty() || s.dash_pattern.iter().any(|d| !(d.is_finite() && *d > 0.0)) {
            self.push(
                ErrorCode::InvalidStyle,
                format!("{path}.dash_pattern"),
                "dash_pattern must be a nonempty list of positive lengths",
            );
        }
    }

    fn annotation(&mut self, a: &Annotation, path: &str) {
        let finite = |vals: &[f64]| vals.iter().all(|v| v.is_finite());
        match a {
            Annotation::Text(t) => {
                let (x, y) = match t.anchor {
                    Anchor::Data { x, y } | Anchor::Fraction { x, y } => (x, y),
                };
                if !finite(&[x, y]) {
                    self.push(ErrorCode::InvalidAnnotation, format!("{path}.anchor"), "anchor must be finite");
                }
                if !(t.size.is_finite() && t.size > 0.0) {
                    self.push(ErrorCode::InvalidAnnotation, format!("{path}.size"), "text size must be positive");
                }
            }
            Annotation::Hline(h) => {
                if !h.y.is_finite() {
                    self.push(ErrorCode::InvalidAnnotation, format!("{path}.y"), "line position must be finite");
                }
                self.style(&h.style, &format!("{path}.style"));
            }
            Annotation::Vline(v) => {
                if !v.x.is_finite() {
                    self.push(ErrorCode::InvalidAnnotation, format!("{path}.x"), "line position must be finite");
                }
                self.style(&v.style, &format!("{path}.style"));
            }
            Annotation::Rect(r) => {
                if !finite(&[r.x0, r.x1, r.y0, r.y1]) || r.x0 >= r.x1 || r.y0 >= r.y1 {
                    self.push(
                        ErrorCode::InvalidAnnotation,
                        path,
                        "rectangle needs finite corners with x0 < x1 and y0 < y1",
                    );
                }
                if let Some(o) = &r.outline {
                    self.style(o, &format!("{path}.outline"));
                }
            }
        }
    }
}
