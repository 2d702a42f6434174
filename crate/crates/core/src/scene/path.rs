use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use super::error::{ErrorCode, SceneError};
use super::model::Scene;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    Field(String),
    Index(usize),
}

/// Dotted address of a scene field, e.g.
/// `plots[0].axes[1].tick_config.major.target_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PropertyPath {
    segments: Vec<Segment>,
}

impl PropertyPath {
    pub fn root() -> Self {
        PropertyPath::default()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn field(mut self, name: impl Into<String>) -> Self {
        self.segments.push(Segment::Field(name.into()));
        self
    }

    pub fn index(mut self, i: usize) -> Self {
        self.segments.push(Segment::Index(i));
        self
    }

    pub fn parse(s: &str) -> Result<Self, SceneError> {
        let bad = |why: &str| SceneError::new(ErrorCode::BadPath, s, format!("malformed path: {why}"));
        let mut segments = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut expect_field = true;
        while i < bytes.len() {
            match bytes[i] {
                b'[' => {
                    let end = s[i..].find(']').ok_or_else(|| bad("unclosed '['"))? + i;
                    let idx: usize = s[i + 1..end].parse().map_err(|_| bad("index is not a number"))?;
                    if segments.is_empty() {
                        return Err(bad("path must start with a field name"));
                    }
                    segments.push(Segment::Index(idx));
                    i = end + 1;
                    expect_field = false;
                }
                b'.' => {
                    if expect_field {
                        return Err(bad("empty field name"));
                    }
                    i += 1;
                    expect_field = true;
                }
                _ => {
                    if !expect_field {
                        return Err(bad("missing '.' between segments"));
                    }
                    let end = s[i..].find(['.', '[']).map(|p| p + i).unwrap_or(s.len());
                    let name = &s[i..end];
                    if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                        return Err(bad("field names are [A-Za-z0-9_]"));
                    }
                    segments.push(Segment::Field(name.to_string()));
                    i = end;
                    expect_field = false;
                }
            }
        }
        if segments.is_empty() || expect_field {
            return Err(bad("empty path or trailing '.'"));
        }
        Ok(PropertyPath { segments })
    }

    /// Walks the path through a JSON value.
    pub fn lookup<'v>(&self, root: &'v Value) -> Result<&'v Value, SceneError> {
        let mut cur = root;
        for (n, seg) in self.segments.iter().enumerate() {
            cur = step(cur, seg).map_err(|code| self.error_at(n, code))?;
        }
        Ok(cur)
    }

    pub fn lookup_mut<'v>(&self, root: &'v mut Value) -> Result<&'v mut Value, SceneError> {
        let mut cur = root;
        for (n, seg) in self.segments.iter().enumerate() {
            cur = step_mut(cur, seg).map_err(|code| self.error_at(n, code))?;
        }
        Ok(cur)
    }

    fn error_at(&self, n: usize, code: ErrorCode) -> SceneError {
        let prefix = PropertyPath {
            segments: self.segments[..=n].to_vec(),
        };
        let msg = match code {
            ErrorCode::IndexOutOfRange => format!("{prefix} is out of range"),
            _ => format!("{prefix} does not name a field"),
        };
        SceneError::new(code, self.to_string(), msg)
    }

    pub fn is_prefix_of(&self, other: &PropertyPath) -> bool {
        other.segments.starts_with(&self.segments)
    }
}

fn step<'v>(v: &'v Value, seg: &Segment) -> Result<&'v Value, ErrorCode> {
    match (v, seg) {
        (Value::Object(m), Segment::Field(f)) => m.get(f).ok_or(ErrorCode::BadPath),
        (Value::Array(a), Segment::Index(i)) => a.get(*i).ok_or(ErrorCode::IndexOutOfRange),
        _ => Err(ErrorCode::BadPath),
    }
}

fn step_mut<'v>(v: &'v mut Value, seg: &Segment) -> Result<&'v mut Value, ErrorCode> {
    match (v, seg) {
        (Value::Object(m), Segment::Field(f)) => m.get_mut(f).ok_or(ErrorCode::BadPath),
        (Value::Array(a), Segment::Index(i)) => a.get_mut(*i).ok_or(ErrorCode::IndexOutOfRange),
        _ => Err(ErrorCode::BadPath),
    }
}

impl fmt::Display for PropertyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segments.iter().enumerate() {
            match s {
                Segment::Field(name) if i == 0 => f.write_str(name)?,
                Segment::Field(name) => write!(f, ".{name}")?,
                Segment::Index(idx) => write!(f, "[{idx}]")?,
            }
        }
        Ok(())
    }
}

impl FromStr for PropertyPath {
    type Err = SceneError;
    fn from_str(s: &str) -> Result<Self, SceneError> {
        PropertyPath::parse(s)
    }
}

/// JSON shape of a field, used for write type checks and the property tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Null,
    Bool,
    Number,
    String,
    Array,
    Object,
}

impl FieldKind {
    pub fn of(v: &Value) -> Self {
        match v {
            Value::Null => FieldKind::Null,
            Value::Bool(_) => FieldKind::Bool,
            Value::Number(_) => FieldKind::Number,
            Value::String(_) => FieldKind::String,
            Value::Array(_) => FieldKind::Array,
            Value::Object(_) => FieldKind::Object,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Null => "null",
            FieldKind::Bool => "boolean",
            FieldKind::Number => "number",
            FieldKind::String => "string",
            FieldKind::Array => "array",
            FieldKind::Object => "object",
        }
    }
}

/// A resolved field: its path, JSON shape and current value.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldHandle {
    pub path: PropertyPath,
    pub kind: FieldKind,
    pub value: Value,
}

/// Resolves `path` against a scene.
pub fn resolve(path: &PropertyPath, scene: &Scene) -> Result<FieldHandle, SceneError> {
    let root = serde_json::to_value(scene).expect("scene serializes");
    let v = path.lookup(&root)?;
    Ok(FieldHandle {
        path: path.clone(),
        kind: FieldKind::of(v),
        value: v.clone(),
    })
}

/// Enumerates the path of every field reachable in `scene`, in document
/// order (objects in key order). Array elements of numeric data are
/// included, so this grows with data size.
pub fn enumerate_paths(scene: &Scene) -> Vec<PropertyPath> {
    fn go(v: &Value, at: &PropertyPath, out: &mut Vec<PropertyPath>) {
        match v {
            Value::Object(m) => {
                for (k, child) in m {
                    let p = at.clone().field(k.clone());
                    out.push(p.clone());
                    go(child, &p, out);
                }
            }
            Value::Array(a) => {
                for (i, child) in a.iter().enumerate() {
                    let p = at.clone().index(i);
                    out.push(p.clone());
                    go(child, &p, out);
                }
            }
            _ => {}
        }
    }
    let root = serde_json::to_value(scene).expect("scene serializes");
    let mut out = Vec::new();
    go(&root, &PropertyPath::root(), &mut out);
    out
}
