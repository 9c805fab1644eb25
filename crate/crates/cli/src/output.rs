use fano_lines::{Line3, Rational};
use fano_lines::Complex64;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "fano-lines/1";

pub fn float(x: f64) -> Value {
    Value::String(format!("{x:.14e}"))
}

pub fn rational(q: &Rational) -> Value {
    Value::String(if q.is_integer() { q.numer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) })
}

fn complex(z: &Complex64) -> String {
    format!("{:.14e}{:+.14e}i", z.re, z.im)
}

pub fn line(l: &Line3) -> Value {
    Value::Array(l.plucker().iter().map(|z| Value::String(complex(z))).collect())
}

pub fn lines(ls: &[Line3]) -> Value {
    Value::Array(ls.iter().map(line).collect())
}

/// Rebuilds every object with keys inserted in sorted order.
fn sorted(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sorted(v))).collect::<Map<_, _>>())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sorted).collect()),
        other => other,
    }
}

pub fn render_json(command: &str, mut body: Map<String, Value>) -> String {
    body.insert("schema".into(), SCHEMA.into());
    body.insert("command".into(), command.into());
    serde_json::to_string_pretty(&sorted(Value::Object(body))).expect("serializable")
}

/// `key  value` rows; nested values are flattened with dotted keys and
/// arrays longer than eight entries are summarized.
pub fn render_table(command: &str, body: &Map<String, Value>) -> String {
    let mut rows = vec![("command".to_string(), command.to_string())];
    flatten("", &sorted(Value::Object(body.clone())), &mut rows);
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        Value::Array(a) if a.len() > 8 => rows.push((prefix.to_string(), format!("[{} entries]", a.len()))),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            rows.push((prefix.to_string(), items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
