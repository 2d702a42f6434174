use serde_json::{json, Map, Value};

use super::model::Scene;
use super::path::{FieldKind, PropertyPath, Segment};

const INLINE_ARRAY_LIMIT: usize = 32;

/// Typed property tree of a scene for generic property editors.
///
/// Every entry carries `name`, `path` and `type`. Scalars carry `value`;
/// enumerations also carry `choices`; numeric arrays carry `len` and, when
/// short, `value`. Objects and other arrays carry `children`.
pub fn property_tree(scene: &Scene) -> Value {
    let root = serde_json::to_value(scene).expect("scene serializes");
    entry("plots", &PropertyPath::root().field("plots"), &root["plots"])
}

fn entry(name: &str, path: &PropertyPath, v: &Value) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(name));
    m.insert("path".into(), json!(path.to_string()));
    match v {
        Value::Object(o) => {
            m.insert("type".into(), json!("object"));
            let children: Vec<Value> = o
                .iter()
                .map(|(k, child)| entry(k, &path.clone().field(k.clone()), child))
                .collect();
            m.insert("children".into(), Value::Array(children));
        }
        Value::Array(a) if !a.is_empty() && a.iter().all(|x| x.is_number() || x.is_null()) => {
            m.insert("type".into(), json!("number[]"));
            m.insert("len".into(), json!(a.len()));
            if a.len() <= INLINE_ARRAY_LIMIT {
                m.insert("value".into(), v.clone());
            }
        }
        Value::Array(a) => {
            m.insert("type".into(), json!("array"));
            let children: Vec<Value> = a
                .iter()
                .enumerate()
                .map(|(i, child)| entry(&format!("[{i}]"), &path.clone().index(i), child))
                .collect();
            m.insert("children".into(), Value::Array(children));
        }
        _ => {
            let choices = enum_choices(path);
            let ty = if choices.is_some() {
                "enum"
            } else if is_read_only(path) {
                "readonly"
            } else {
                FieldKind::of(v).name()
            };
            m.insert("type".into(), json!(ty));
            m.insert("value".into(), v.clone());
            if let Some(c) = choices {
                m.insert("choices".into(), json!(c));
            }
        }
    }
    Value::Object(m)
}

fn last_two(path: &PropertyPath) -> (Option<&str>, Option<&str>) {
    let fields: Vec<&str> = path
        .segments()
        .iter()
        .filter_map(|s| match s {
            Segment::Field(f) => Some(f.as_str()),
            Segment::Index(_) => None,
        })
        .collect();
    let n = fields.len();
    (
        n.checked_sub(2).map(|i| fields[i]),
        fields.last().copied(),
    )
}

fn is_read_only(path: &PropertyPath) -> bool {
    match last_two(path) {
        (_, Some("id")) => true,
        (Some("graphs" | "annotations"), Some("kind")) => true,
        _ => false,
    }
}

fn enum_choices(path: &PropertyPath) -> Option<&'static [&'static str]> {
    match last_two(path) {
        (Some("transforms"), Some("kind")) => Some(&["linear", "log", "date", "sexagesimal"]),
        (_, Some("sexa_mode")) => Some(&["hms", "dms"]),
        (_, Some("side")) => Some(&["bottom", "top", "left", "right"]),
        (_, Some("chart_type")) => Some(&["normal", "histogram"]),
        (_, Some("line")) => Some(&["solid", "dashed", "none"]),
        (_, Some("symbol")) => Some(&["none", "circle", "square", "cross", "triangle", "dot"]),
        (_, Some("ramp")) => Some(&["gray", "heat"]),
        _ => None,
    }
}
