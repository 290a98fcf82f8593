use serde_json::{Map, Value};

/// Ordered key/value record rendered as `key: value` lines or one JSON object.
#[derive(Debug, Default)]
pub struct Record(Vec<(String, Value)>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn to_value(&self) -> Value {
        Value::Object(self.0.iter().cloned().collect::<Map<_, _>>())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Object => serde_json::to_string_pretty(&self.to_value()).expect("values serialize") + "\n",
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.0 {
                    render_text(&mut out, k, v, 0);
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(items.iter().map(|i| scalar(i).unwrap()).collect::<Vec<_>>().join(" "))
        }
        Value::Array(items) if items.iter().all(|i| i.as_array().is_some_and(|a| a.iter().all(|x| !x.is_object()))) => {
            Some(items.iter().map(|i| format!("[{}]", scalar(i).unwrap())).collect::<Vec<_>>().join(" "))
        }
        Value::Object(map) if map.values().all(|v| !v.is_object() && !v.is_array()) => Some(
            map.iter().map(|(k, v)| format!("{k}={}", scalar(v).unwrap())).collect::<Vec<_>>().join(" "),
        ),
        _ => None,
    }
}

fn render_text(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                render_text(out, k, v, depth + 1);
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                render_text(out, &format!("- {i}"), item, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Object,
}
