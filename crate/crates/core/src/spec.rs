//! Declarative spec documents: JSON text with optional CSV data references.
//!
//! A numeric array anywhere in the document may be replaced by
//! `{"csv": "file.csv", "column": "name"}`, resolved relative to the input
//! file. Omitting `column` reads the whole file as a matrix (one array per
//! data row), which suits image planes.

use std::fmt;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::scene::{self, ErrorCode, PlotNode, Scene, SceneError};

pub const SPEC_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    pub version: u32,
    pub plots: Vec<PlotNode>,
}

impl SpecDoc {
    pub fn from_scene(scene: &Scene) -> Self {
        SpecDoc {
            version: SPEC_VERSION,
            plots: scene.plots.clone(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}", Issues(.0))]
    Invalid(Vec<SceneError>),
}

struct Issues<'a>(&'a [SceneError]);

impl fmt::Display for Issues<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl SpecError {
    pub fn issues(&self) -> &[SceneError] {
        match self {
            SpecError::Invalid(v) => v,
            SpecError::Io { .. } => &[],
        }
    }

    fn one(code: ErrorCode, path: impl Into<String>, message: impl Into<String>) -> Self {
        SpecError::Invalid(vec![SceneError::new(code, path, message)])
    }
}

/// Reads and validates a spec file; CSV references resolve next to it.
pub fn load_spec(path: &Path) -> Result<Scene, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_spec(&text, path.parent())
}

/// Parses and validates spec text. Without `base_dir` CSV references are
/// rejected.
pub fn parse_spec(text: &str, base_dir: Option<&Path>) -> Result<Scene, SpecError> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| {
        SpecError::one(
            ErrorCode::Schema,
            "",
            format!("malformed JSON at line {} column {}: {e}", e.line(), e.column()),
        )
    })?;
    match value.get("version") {
        Some(Value::Number(n)) if n.as_u64() == Some(SPEC_VERSION as u64) => {}
        Some(v) => {
            return Err(SpecError::one(
                ErrorCode::Schema,
                "version",
                format!("unsupported version {v}, expected {SPEC_VERSION}"),
            ))
        }
        None => return Err(SpecError::one(ErrorCode::Schema, "version", "missing version field")),
    }
    resolve_csv(&mut value, String::new(), base_dir)?;
    let doc: SpecDoc = serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." { String::new() } else { path };
        SpecError::one(ErrorCode::Schema, path, e.inner().to_string())
    })?;
    let mut sc = Scene { plots: doc.plots };
    scene::normalize(&mut sc);
    let issues = scene::validate(&sc);
    if issues.is_empty() {
        Ok(sc)
    } else {
        Err(SpecError::Invalid(issues))
    }
}

/// Pretty-printed spec text for a scene, with inline data.
pub fn to_spec_string(scene: &Scene) -> String {
    let v = serde_json::to_value(SpecDoc::from_scene(scene)).expect("spec serializes");
    serde_json::to_string_pretty(&v).expect("value serializes")
}

fn child_path(parent: &str, key: &str) -> String {
    if parent.is_empty() {
        key.to_string()
    } else {
        format!("{parent}.{key}")
    }
}

fn resolve_csv(v: &mut Value, path: String, base: Option<&Path>) -> Result<(), SpecError> {
    match v {
        Value::Object(m) if m.contains_key("csv") => {
            *v = load_ref(m, &path, base)?;
        }
        Value::Object(m) => {
            for (k, child) in m.iter_mut() {
                resolve_csv(child, child_path(&path, k), base)?;
            }
        }
        Value::Array(a) => {
            for (i, child) in a.iter_mut().enumerate() {
                resolve_csv(child, format!("{path}[{i}]"), base)?;
            }
        }
        _ => {}
    }
    Ok(())
}

fn load_ref(m: &Map<String, Value>, path: &str, base: Option<&Path>) -> Result<Value, SpecError> {
    let bad = |msg: String| SpecError::one(ErrorCode::DataFile, path, msg);
    if m.keys().any(|k| k != "csv" && k != "column") {
        return Err(bad("data reference allows only \"csv\" and \"column\"".into()));
    }
    let Some(file) = m["csv"].as_str() else {
        return Err(bad("\"csv\" must be a file name".into()));
    };
    let column = match m.get("column") {
        None => None,
        Some(Value::String(c)) => Some(c.as_str()),
        Some(_) => return Err(bad("\"column\" must be a string".into())),
    };
    let Some(base) = base else {
        return Err(bad(format!("data file {file} cannot be resolved without a base directory")));
    };
    let full = base.join(file);
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(&full)
        .map_err(|e| bad(format!("cannot read data file {file}: {e}")))?;
    let headers = rdr
        .headers()
        .map_err(|e| bad(format!("cannot read data file {file}: {e}")))?
        .clone();
    let col_index = match column {
        Some(c) => Some(
            headers
                .iter()
                .position(|h| h == c)
                .ok_or_else(|| bad(format!("data file {file} has no column \"{c}\"")))?,
        ),
        None => None,
    };
    let mut column_values = Vec::new();
    let mut rows = Vec::new();
    for (r, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| bad(format!("data file {file}: {e}")))?;
        let cell = |i: usize| -> Result<Value, SpecError> {
            let s = rec.get(i).unwrap_or("");
            parse_cell(s)
                .ok_or_else(|| bad(format!("data file {file} row {} column {}: not a number: {s:?}", r + 2, i + 1)))
        };
        match col_index {
            Some(i) => column_values.push(cell(i)?),
            None => rows.push(Value::Array((0..rec.len()).map(cell).collect::<Result<_, _>>()?)),
        }
    }
    Ok(Value::Array(if col_index.is_some() { column_values } else { rows }))
}

fn parse_cell(s: &str) -> Option<Value> {
    if s.is_empty() || s.eq_ignore_ascii_case("nan") {
        return Some(Value::Null);
    }
    let v: f64 = s.parse().ok()?;
    Some(if v.is_finite() { serde_json::json!(v) } else { Value::Null })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{"version":1,"plots":[{"id":"root"}]}"#;

    #[test]
    fn minimal_parses() {
        let s = parse_spec(MINIMAL, None).unwrap();
        assert_eq!(s.root().id, "root");
    }

    #[test]
    fn wrong_version() {
        let e = parse_spec(r#"{"version":2,"plots":[]}"#, None).unwrap_err();
        assert_eq!(e.issues()[0].path, "version");
    }

    #[test]
    fn unknown_field_names_path() {
        let e = parse_spec(r#"{"version":1,"plots":[{"id":"r","colour":1}]}"#, None).unwrap_err();
        assert_eq!(e.issues()[0].code, ErrorCode::Schema);
        assert!(e.issues()[0].path.starts_with("plots[0]"), "{e}");
    }

    #[test]
    fn csv_columns_and_matrix() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("d.csv"), "t, y\n1, 2\n2, nan\n3, 4.5\n").unwrap();
        std::fs::write(dir.path().join("m.csv"), "a,b\n1,2\n3,4\n").unwrap();
        let text = r##"{"version":1,"plots":[{"id":"r",
          "transforms":[{"id":"x","kind":"linear","range":{"lo":0,"hi":4}},
                        {"id":"y","kind":"linear","range":{"lo":0,"hi":5}}],
          "layers":[{"id":"l","x_transform_ref":"x","y_transform_ref":"y","graphs":[
            {"kind":"xy","x":{"csv":"d.csv","column":"t"},"y":{"csv":"d.csv","column":"y"}},
            {"kind":"grid","values":{"csv":"m.csv"},"x_extent":{"lo":0,"hi":1},"y_extent":{"lo":0,"hi":1}}]}]}]}"##;
        let s = parse_spec(text, Some(dir.path())).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        let g = &v["plots"][0]["layers"][0]["graphs"];
        assert_eq!(g[0]["y"], serde_json::json!([2.0, null, 4.5]));
        assert_eq!(g[1]["values"], serde_json::json!([[1.0, 2.0], [3.0, 4.0]]));
    }

    #[test]
    fn missing_csv_names_file() {
        let dir = tempfile::tempdir().unwrap();
        let text = r#"{"version":1,"plots":[{"id":"r","layers":[{"id":"l","x_transform_ref":"x","y_transform_ref":"y","graphs":[{"kind":"xy","x":{"csv":"gone.csv","column":"t"},"y":[]}]}]}]}"#;
        let e = parse_spec(text, Some(dir.path())).unwrap_err();
        assert_eq!(e.issues()[0].code, ErrorCode::DataFile);
        assert!(e.to_string().contains("gone.csv"));
    }
}
