use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::Path;

use gamma3::format::write_record;
use gamma3::Multigraph;
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Writes report lines as text or as JSON objects with the same content.
pub struct Reporter {
    json: bool,
    out: io::StdoutLock<'static>,
}

impl Reporter {
    pub fn new(json: bool) -> Self {
        Reporter {
            json,
            out: io::stdout().lock(),
        }
    }

    /// One report line. `fields` must be a JSON object; `kind` is added to it.
    pub fn line(&mut self, kind: &str, fields: Value, text: impl std::fmt::Display) -> io::Result<()> {
        if self.json {
            let mut obj = Map::new();
            obj.insert("kind".into(), kind.into());
            if let Value::Object(f) = fields {
                obj.extend(f);
            }
            writeln!(self.out, "{}", Value::Object(obj))
        } else {
            writeln!(self.out, "{text}")
        }
    }

    pub fn graph(&mut self, name: &str, g: &Multigraph) -> io::Result<()> {
        let edges: Vec<[usize; 3]> = g.edges().iter().map(|&(u, v, m)| [u, v, m as usize]).collect();
        let text = write_record(name, g);
        self.line(
            "graph",
            json!({ "name": name, "n": g.order(), "edges": edges }),
            text.trim_end(),
        )?;
        if !self.json {
            writeln!(self.out)?;
        }
        Ok(())
    }
}

/// What a run did, for reproducing it later.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub config: Value,
    /// SHA-256 of every input file.
    pub inputs: BTreeMap<String, String>,
    pub elapsed_ms: u128,
    pub exit_code: i32,
    pub summary: String,
}

pub fn file_hash(path: &Path) -> String {
    match std::fs::read(path) {
        Ok(bytes) => hex::encode(Sha256::digest(&bytes)),
        Err(_) => "unreadable".into(),
    }
}
