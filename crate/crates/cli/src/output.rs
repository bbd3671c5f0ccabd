use std::fmt::Display;

use riffle_algebra::matrix::Matrix;
use serde_json::{json, Map, Value};

/// Leading `meta` block shared by every JSON document.
pub fn meta(command: &str, params: Value) -> Map<String, Value> {
    let mut meta = Map::new();
    meta.insert("command".into(), command.into());
    meta.insert("params".into(), params);
    meta.insert("version".into(), env!("CARGO_PKG_VERSION").into());
    meta
}

pub fn document(meta: Map<String, Value>, payload: Vec<(&str, Value)>) -> Value {
    let mut doc = Map::new();
    doc.insert("meta".into(), Value::Object(meta));
    for (k, v) in payload {
        doc.insert(k.into(), v);
    }
    Value::Object(doc)
}

/// Row-major array of decimal / `p/q` strings.
pub fn matrix_json<T: Display + Clone>(m: &Matrix<T>) -> Value {
    Value::Array(m.to_rows().iter().map(|row| json!(row.iter().map(ToString::to_string).collect::<Vec<_>>())).collect())
}

pub fn strings<T: Display>(v: impl IntoIterator<Item = T>) -> Value {
    json!(v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

pub fn state_labels(n: usize, zero_based: bool) -> Vec<usize> {
    let offset = usize::from(!zero_based);
    (0..n).map(|i| i + offset).collect()
}

pub fn matrix_csv<T: Display + Clone>(m: &Matrix<T>, labels: Option<&[usize]>) -> String {
    let mut out = String::new();
    if let Some(labels) = labels {
        out.push_str("state");
        for l in labels {
            out.push_str(&format!(",{l}"));
        }
        out.push('\n');
    }
    for i in 0..m.rows() {
        let cells: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        if let Some(labels) = labels {
            out.push_str(&format!("{},", labels[i]));
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn print_json(doc: &Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("serializable"));
}
