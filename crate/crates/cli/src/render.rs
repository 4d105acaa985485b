use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};
use trig_enclose::arith::to_decimal;
use trig_enclose::Enclosure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn enclosure(e: &Enclosure) -> Value {
    let mut m = Map::new();
    m.insert("lo".into(), Value::String(to_decimal(e.lo())));
    m.insert("hi".into(), Value::String(to_decimal(e.hi())));
    Value::Object(m)
}

pub fn render(value: &Value, format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(value)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => csv(value),
        Format::Text => {
            let mut out = String::new();
            text(value, 0, &mut out);
            Ok(out)
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(_) => out.push((prefix.to_string(), v.to_string())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv(value: &Value) -> Result<String, String> {
    let rows: Vec<&Value> = match value {
        Value::Array(xs) => xs.iter().collect(),
        other => vec![other],
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Option<Vec<String>> = None;
    for row in rows {
        let mut cells = Vec::new();
        flatten("", row, &mut cells);
        let (keys, vals): (Vec<String>, Vec<String>) = cells.into_iter().unzip();
        if header.is_none() {
            w.write_record(&keys).map_err(|e| e.to_string())?;
            header = Some(keys);
        }
        w.write_record(&vals).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        text(x, indent + 1, out);
                    }
                    Value::Array(xs) if xs.iter().any(|e| e.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for e in xs {
                            let _ = writeln!(out, "{pad}  -");
                            text(e, indent + 2, out);
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(x));
                    }
                }
            }
        }
        Value::Array(xs) => {
            for (i, e) in xs.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                text(e, indent, out);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(xs) if xs.is_empty() => "[]".into(),
        Value::Array(xs) => xs.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}
