use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A complete plot description. The tree always has exactly one root plot,
/// addressed as `plots[0]` by property paths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub plots: Vec<PlotNode>,
}

impl Scene {
    pub fn new(root: PlotNode) -> Self {
        Scene { plots: vec![root] }
    }

    pub fn root(&self) -> &PlotNode {
        &self.plots[0]
    }

    /// Deterministic, key-ordered JSON form used for snapshot comparison
    /// and golden files.
    pub fn canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("scene serializes");
        serde_json::to_string(&value).expect("value serializes")
    }

    /// Finds a node anywhere in the tree by id.
    pub fn node(&self, id: &str) -> Option<&PlotNode> {
        self.plots.iter().find_map(|p| p.find(id))
    }

    /// Visits every node in pre-order.
    pub fn walk<'a>(&'a self, mut f: impl FnMut(&'a PlotNode)) {
        fn go<'a>(n: &'a PlotNode, f: &mut impl FnMut(&'a PlotNode)) {
            f(n);
            for c in &n.children {
                go(c, f);
            }
        }
        for p in &self.plots {
            go(p, &mut f);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlotNode {
    pub id: String,
    #[serde(default)]
    pub title: Option<String>,
    #[serde(default)]
    pub transforms: Vec<AxisTransformDef>,
    #[serde(default)]
    pub axes: Vec<AxisDef>,
    #[serde(default)]
    pub layers: Vec<Layer>,
    #[serde(default)]
    pub annotations: Vec<Annotation>,
    #[serde(default)]
    pub children: Vec<PlotNode>,
    #[serde(default)]
    pub layout_hints: LayoutHints,
    #[serde(default)]
    pub margins: Option<Margins>,
}

impl PlotNode {
    pub fn new(id: impl Into<String>) -> Self {
        PlotNode {
            id: id.into(),
            title: None,
            transforms: Vec::new(),
            axes: Vec::new(),
            layers: Vec::new(),
            annotations: Vec::new(),
            children: Vec::new(),
            layout_hints: LayoutHints::default(),
            margins: None,
        }
    }

    pub fn transform(&self, id: &str) -> Option<&AxisTransformDef> {
        self.transforms.iter().find(|t| t.id == id)
    }

    pub fn layer(&self, id: &str) -> Option<&Layer> {
        self.layers.iter().find(|l| l.id == id)
    }

    pub fn find(&self, id: &str) -> Option<&PlotNode> {
        if self.id == id {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(id))
    }

    /// Layers in paint order: ascending z_order, ties by declaration order.
    pub fn layers_in_paint_order(&self) -> Vec<&Layer> {
        let mut v: Vec<(usize, &Layer)> = self.layers.iter().enumerate().collect();
        v.sort_by_key(|(i, l)| (l.z_order, *i));
        v.into_iter().map(|(_, l)| l).collect()
    }

    /// The (x, y) transform pair annotations use when they don't name one:
    /// the first layer's pair, else the first horizontal/vertical axes.
    pub fn default_transform_pair(&self) -> (Option<&str>, Option<&str>) {
        if let Some(l) = self.layers.first() {
            return (Some(&l.x_transform_ref), Some(&l.y_transform_ref));
        }
        let x = self
            .axes
            .iter()
            .find(|a| a.side.is_horizontal())
            .map(|a| a.transform_ref.as_str());
        let y = self
            .axes
            .iter()
            .find(|a| !a.side.is_horizontal())
            .map(|a| a.transform_ref.as_str());
        (x, y)
    }

    pub fn annotation_pair<'a>(&'a self, ann: &'a Annotation) -> (Option<&'a str>, Option<&'a str>) {
        let (dx, dy) = self.default_transform_pair();
        let (x, y) = ann.transform_refs();
        (x.or(dx), y.or(dy))
    }

    /// Distinct (x, y) transform pairs used by layers, in declaration order.
    pub fn layer_transform_pairs(&self) -> Vec<(&str, &str)> {
        let mut out: Vec<(&str, &str)> = Vec::new();
        for l in &self.layers {
            let p = (l.x_transform_ref.as_str(), l.y_transform_ref.as_str());
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

impl Range {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Range { lo, hi }
    }

    pub fn span(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_valid(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi
    }

    pub fn contains(&self, v: f64) -> bool {
        v >= self.lo && v <= self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    Linear,
    Log,
    Date,
    Sexagesimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SexaMode {
    Hms,
    #[default]
    Dms,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisTransformDef {
    pub id: String,
    pub kind: TransformKind,
    /// Data units: plain numbers, seconds since the Unix epoch for dates,
    /// decimal degrees for sexagesimal axes.
    pub range: Range,
    #[serde(default)]
    pub inverted: bool,
    #[serde(default)]
    pub sexa_mode: SexaMode,
}

impl AxisTransformDef {
    pub fn new(id: impl Into<String>, kind: TransformKind, lo: f64, hi: f64) -> Self {
        AxisTransformDef {
            id: id.into(),
            kind,
            range: Range::new(lo, hi),
            inverted: false,
            sexa_mode: SexaMode::default(),
        }
    }

    pub fn linear(id: impl Into<String>, lo: f64, hi: f64) -> Self {
        Self::new(id, TransformKind::Linear, lo, hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Bottom,
    Top,
    Left,
    Right,
}

impl Side {
    pub fn is_horizontal(self) -> bool {
        matches!(self, Side::Bottom | Side::Top)
    }
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisDef {
    pub side: Side,
    pub transform_ref: String,
    #[serde(default = "yes")]
    pub visible: bool,
    #[serde(default)]
    pub tick_config: TickConfig,
    #[serde(default)]
    pub axis_label: String,
    #[serde(default)]
    pub grid_lines: bool,
    #[serde(default)]
    pub ticks_outward: bool,
}

impl AxisDef {
    pub fn new(side: Side, transform_ref: impl Into<String>) -> Self {
        AxisDef {
            side,
            transform_ref: transform_ref.into(),
            visible: true,
            tick_config: TickConfig::default(),
            axis_label: String::new(),
            grid_lines: false,
            ticks_outward: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MajorTicks {
    Count(TargetCount),
    Explicit(ExplicitPositions),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetCount {
    pub target_count: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitPositions {
    pub explicit_positions: Vec<f64>,
}

impl Default for MajorTicks {
    fn default() -> Self {
        MajorTicks::Count(TargetCount { target_count: 5 })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TickConfig {
    #[serde(default)]
    pub major: MajorTicks,
    /// Minor ticks between consecutive majors; `None` picks per axis kind.
    #[serde(default)]
    pub minor_count: Option<u32>,
    #[serde(default)]
    pub label_format: Option<String>,
    #[serde(default = "yes")]
    pub labels_visible: bool,
    #[serde(default)]
    pub explicit_labels: Option<Vec<String>>,
}

impl Default for TickConfig {
    fn default() -> Self {
        TickConfig {
            major: MajorTicks::default(),
            minor_count: None,
            label_format: None,
            labels_visible: true,
            explicit_labels: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Layer {
    pub id: String,
    pub x_transform_ref: String,
    pub y_transform_ref: String,
    #[serde(default)]
    pub graphs: Vec<Graph>,
    #[serde(default = "yes")]
    pub visible: bool,
    #[serde(default)]
    pub z_order: i32,
}

impl Layer {
    pub fn new(id: impl Into<String>, x: impl Into<String>, y: impl Into<String>) -> Self {
        Layer {
            id: id.into(),
            x_transform_ref: x.into(),
            y_transform_ref: y.into(),
            graphs: Vec::new(),
            visible: true,
            z_order: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Graph {
    Xy(XyGraph),
    XyError(XyErrorGraph),
    Grid(GridGraph),
    Rgb(RgbGraph),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XyGraph {
    pub x: Series,
    pub y: Series,
    #[serde(default)]
    pub style: Style,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XyErrorGraph {
    pub x: Series,
    pub y: Series,
    #[serde(default)]
    pub x_err_lo: Option<Series>,
    #[serde(default)]
    pub x_err_hi: Option<Series>,
    #[serde(default)]
    pub y_err_lo: Option<Series>,
    #[serde(default)]
    pub y_err_hi: Option<Series>,
    #[serde(default)]
    pub style: Style,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridGraph {
    /// Row-major; row 0 sits at `y_extent.lo`.
    pub values: Vec<Series>,
    pub x_extent: Range,
    pub y_extent: Range,
    #[serde(default)]
    pub ramp: ColorRamp,
    #[serde(default)]
    pub norm: Norm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RgbGraph {
    pub r: Vec<Series>,
    pub g: Vec<Series>,
    pub b: Vec<Series>,
    pub x_extent: Range,
    pub y_extent: Range,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorRamp {
    #[default]
    Gray,
    Heat,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Norm {
    #[default]
    LinearMinmax,
    Explicit(Range),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChartType {
    #[default]
    Normal,
    Histogram,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineKind {
    #[default]
    Solid,
    Dashed,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolKind {
    #[default]
    None,
    Circle,
    Square,
    Cross,
    Triangle,
    Dot,
}

fn default_dash() -> Vec<f64> {
    vec![4.0, 4.0]
}

fn default_symbol_size() -> f64 {
    5.0
}

fn default_stroke() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Style {
    #[serde(default)]
    pub chart_type: ChartType,
    #[serde(default)]
    pub line: LineKind,
    #[serde(default = "default_dash")]
    pub dash_pattern: Vec<f64>,
    #[serde(default)]
    pub symbol: SymbolKind,
    #[serde(default = "default_symbol_size")]
    pub symbol_size: f64,
    #[serde(default)]
    pub color: Color,
    #[serde(default = "default_stroke")]
    pub stroke_width: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            chart_type: ChartType::Normal,
            line: LineKind::Solid,
            dash_pattern: default_dash(),
            symbol: SymbolKind::None,
            symbol_size: default_symbol_size(),
            color: Color::BLACK,
            stroke_width: default_stroke(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Annotation {
    Text(TextAnn),
    Hline(HLineAnn),
    Vline(VLineAnn),
    Rect(RectAnn),
}

impl Annotation {
    pub fn transform_refs(&self) -> (Option<&str>, Option<&str>) {
        let (x, y) = match self {
            Annotation::Text(a) => (&a.x_transform_ref, &a.y_transform_ref),
            Annotation::Hline(a) => (&a.x_transform_ref, &a.y_transform_ref),
            Annotation::Vline(a) => (&a.x_transform_ref, &a.y_transform_ref),
            Annotation::Rect(a) => (&a.x_transform_ref, &a.y_transform_ref),
        };
        (x.as_deref(), y.as_deref())
    }

    /// Whether the annotation reads data coordinates along x / y.
    pub fn uses_data_axes(&self) -> (bool, bool) {
        match self {
            Annotation::Text(t) => match t.anchor {
                Anchor::Data { .. } => (true, true),
                Anchor::Fraction { .. } => (false, false),
            },
            Annotation::Hline(_) => (false, true),
            Annotation::Vline(_) => (true, false),
            Annotation::Rect(_) => (true, true),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    Data { x: f64, y: f64 },
    /// Fractions of the drawing box, (0,0) bottom-left.
    Fraction { x: f64, y: f64 },
}

fn default_text_size() -> f64 {
    10.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TextAnn {
    pub anchor: Anchor,
    pub text: String,
    #[serde(default)]
    pub color: Color,
    #[serde(default = "default_text_size")]
    pub size: f64,
    #[serde(default)]
    pub x_transform_ref: Option<String>,
    #[serde(default)]
    pub y_transform_ref: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HLineAnn {
    pub y: f64,
    #[serde(default)]
    pub style: Style,
    #[serde(default)]
    pub x_transform_ref: Option<String>,
    #[serde(default)]
    pub y_transform_ref: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VLineAnn {
    pub x: f64,
    #[serde(default)]
    pub style: Style,
    #[serde(default)]
    pub x_transform_ref: Option<String>,
    #[serde(default)]
    pub y_transform_ref: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RectAnn {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    pub fill: Color,
    #[serde(default)]
    pub outline: Option<Style>,
    #[serde(default)]
    pub x_transform_ref: Option<String>,
    #[serde(default)]
    pub y_transform_ref: Option<String>,
}

fn default_weight() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutHints {
    #[serde(default)]
    pub row: u32,
    #[serde(default)]
    pub col: u32,
    #[serde(default = "default_weight")]
    pub weight: f64,
}

impl Default for LayoutHints {
    fn default() -> Self {
        LayoutHints {
            row: 0,
            col: 0,
            weight: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Margins {
    pub top: f64,
    pub right: f64,
    pub bottom: f64,
    pub left: f64,
}

/// Straight (non-premultiplied) RGBA, serialized as `#rrggbb` or `#rrggbbaa`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Color(pub [u8; 4]);

impl Color {
    pub const BLACK: Color = Color([0, 0, 0, 255]);
    pub const WHITE: Color = Color([255, 255, 255, 255]);

    pub const fn rgb(r: u8, g: u8, b: u8) -> Self {
        Color([r, g, b, 255])
    }

    pub const fn rgba(r: u8, g: u8, b: u8, a: u8) -> Self {
        Color([r, g, b, a])
    }

    pub fn r(self) -> u8 {
        self.0[0]
    }
    pub fn g(self) -> u8 {
        self.0[1]
    }
    pub fn b(self) -> u8 {
        self.0[2]
    }
    pub fn a(self) -> u8 {
        self.0[3]
    }

    pub fn to_hex(self) -> String {
        let [r, g, b, a] = self.0;
        if a == 255 {
            format!("#{r:02x}{g:02x}{b:02x}")
        } else {
            format!("#{r:02x}{g:02x}{b:02x}{a:02x}")
        }
    }

    pub fn parse_hex(s: &str) -> Option<Color> {
        let h = s.strip_prefix('#')?;
        if !h.is_ascii() || (h.len() != 6 && h.len() != 8) {
            return None;
        }
        let byte = |i: usize| u8::from_str_radix(&h[i..i + 2], 16).ok();
        let a = if h.len() == 8 { byte(6)? } else { 255 };
        Some(Color([byte(0)?, byte(2)?, byte(4)?, a]))
    }
}

impl Default for Color {
    fn default() -> Self {
        Color::BLACK
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Color({})", self.to_hex())
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Color::parse_hex(&s)
            .ok_or_else(|| de::Error::custom(format!("invalid color {s:?}, expected #rrggbb or #rrggbbaa")))
    }
}

/// An immutable numeric array. Missing samples are NaN and serialize as
/// `null`; equality is bitwise so NaN-bearing data compares equal to itself.
#[derive(Clone, Default)]
pub struct Series(Arc<[f64]>);

impl Series {
    pub fn new(values: impl Into<Arc<[f64]>>) -> Self {
        Series(values.into())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl Deref for Series {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for Series {
    fn from(v: Vec<f64>) -> Self {
        Series(v.into())
    }
}

impl From<&[f64]> for Series {
    fn from(v: &[f64]) -> Self {
        Series(v.into())
    }
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len()
            && self
                .0
                .iter()
                .zip(other.0.iter())
                .all(|(a, b)| a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan()))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0.iter() {
            if v.is_finite() {
                seq.serialize_element(v)?;
            } else {
                seq.serialize_element(&Option::<f64>::None)?;
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct SeriesVisitor;
        impl<'de> Visitor<'de> for SeriesVisitor {
            type Value = Series;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of numbers (null for missing samples)")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Series, A::Error> {
                let mut out = Vec::with_capacity(seq.size_hint().unwrap_or(0));
                while let Some(v) = seq.next_element::<Option<f64>>()? {
                    out.push(v.unwrap_or(f64::NAN));
                }
                Ok(Series::from(out))
            }
        }
        d.deserialize_seq(SeriesVisitor)
    }
}
