use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use quadit_core::data;

pub const ENVELOPE_VERSION: &str = concat!("quadit ", env!("CARGO_PKG_VERSION"));

/// Wrapper around every JSON result.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Envelope {
    pub version: String,
    /// `(file name, sha256 hex)` for each bundled data file.
    pub data_checksums: Vec<(String, String)>,
    pub result: Value,
}

impl Envelope {
    pub fn new(result: Value) -> Envelope {
        Envelope { version: ENVELOPE_VERSION.to_string(), data_checksums: data_checksums(), result }
    }
}

pub fn data_checksums() -> Vec<(String, String)> {
    data::files()
        .iter()
        .map(|(name, text)| {
            let digest = Sha256::digest(text.as_bytes());
            let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
            (name.to_string(), hex)
        })
        .collect()
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| x.is_string() || x.is_number()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(",")
        }
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        other => other.to_string(),
    }
}

/// Arrays of objects become a header plus one row each; objects become
/// `key<TAB>value` lines; anything else is a single cell.
pub fn to_tsv(v: &Value) -> String {
    let mut s = String::new();
    match v {
        Value::Array(rows) if rows.iter().all(Value::is_object) => {
            let keys: Vec<&String> = rows.first().and_then(Value::as_object).map(|o| o.keys().collect()).unwrap_or_default();
            s += &keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join("\t");
            s.push('\n');
            for row in rows {
                let cells: Vec<String> = keys.iter().map(|k| cell(&row[k.as_str()])).collect();
                s += &cells.join("\t");
                s.push('\n');
            }
        }
        Value::Object(map) => {
            for (k, x) in map {
                s += &format!("{k}\t{}\n", cell(x));
            }
        }
        other => {
            s += &cell(other);
            s.push('\n');
        }
    }
    s
}
