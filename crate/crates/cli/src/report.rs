use std::path::Path;

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};
use tightmorse::SimplicialComplex;

/// A JSON report with a fixed key order.
pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), command.into());
        fields.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        fields.insert("seed".into(), seed.into());
        Report { fields }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.into(), value.into());
        self
    }

    pub fn input(&mut self, path: &Path, bytes: &[u8]) -> &mut Self {
        let entry = serde_json::json!({ "path": path.display().to_string(), "sha256": sha256(bytes) });
        match self.fields.entry("inputs").or_insert_with(|| Value::Array(Vec::new())) {
            Value::Array(list) => list.push(entry),
            _ => unreachable!("inputs is always an array"),
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(&self.fields).expect("JSON values serialize"),
            Format::Text => self
                .fields
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Digest of the complex itself, independent of file layout.
pub fn complex_digest(c: &SimplicialComplex) -> String {
    sha256(c.canonical_string().as_bytes())
}
