//! Plain-text multigraph records.
//!
//! ```text
//! # comment
//! graph W
//! n 8
//! e 0 1 1
//! e 1 2 1
//! ```
//!
//! A record ends at a blank line or end of input.

use std::fmt::Write as _;

use crate::error::{GraphError, Result};
use crate::multigraph::Multigraph;

/// A named multigraph as stored in a record file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub graph: Multigraph,
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

struct Partial {
    name: Option<String>,
    order: Option<usize>,
    edges: Vec<(usize, usize, u32, usize)>,
    start: usize,
}

impl Partial {
    fn finish(self) -> Result<Record> {
        let order = self
            .order
            .ok_or_else(|| parse_err(self.start, "record has no `n` line"))?;
        let mut g = Multigraph::new(order);
        for (u, v, m, line) in self.edges {
            if u == v {
                return Err(parse_err(line, format!("loop at vertex {u}")));
            }
            if m < 1 {
                return Err(parse_err(line, "multiplicity must be at least 1"));
            }
            g.add_edge(u, v, m)
                .map_err(|e| parse_err(line, e.to_string()))?;
        }
        Ok(Record {
            name: self.name.unwrap_or_default(),
            graph: g,
        })
    }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

/// Parses every record in `text`.
pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut cur: Option<Partial> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            if let Some(p) = cur.take() {
                out.push(p.finish()?);
            }
            continue;
        }
        let p = cur.get_or_insert_with(|| Partial {
            name: None,
            order: None,
            edges: Vec::new(),
            start: line,
        });
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("graph") => {
                if p.name.is_some() || p.order.is_some() || !p.edges.is_empty() {
                    return Err(parse_err(line, "`graph` line inside a record"));
                }
                p.name = Some(toks.collect::<Vec<_>>().join(" "));
                continue;
            }
            Some("n") => {
                if p.order.is_some() {
                    return Err(parse_err(line, "duplicate `n` line"));
                }
                p.order = Some(number(toks.next(), line, "order")?);
            }
            Some("e") => {
                let order = p
                    .order
                    .ok_or_else(|| parse_err(line, "`e` line before `n` line"))?;
                let u: usize = number(toks.next(), line, "vertex")?;
                let v: usize = number(toks.next(), line, "vertex")?;
                let m: u32 = number(toks.next(), line, "multiplicity")?;
                if u >= order || v >= order {
                    return Err(parse_err(
                        line,
                        format!("vertex out of range for order {order}"),
                    ));
                }
                p.edges.push((u, v, m, line));
            }
            Some(other) => {
                return Err(parse_err(line, format!("unknown directive `{other}`")));
            }
            None => unreachable!(),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    if let Some(p) = cur.take() {
        out.push(p.finish()?);
    }
    Ok(out)
}

/// Renders one record; the output parses back to an equal record.
pub fn write_record(name: &str, g: &Multigraph) -> String {
    let mut s = String::new();
    if !name.is_empty() {
        let _ = writeln!(s, "graph {name}");
    }
    let _ = writeln!(s, "n {}", g.order());
    for (u, v, m) in g.edges() {
        let _ = writeln!(s, "e {u} {v} {m}");
    }
    s
}

/// Renders several records separated by blank lines.
pub fn write_records<'a>(records: impl IntoIterator<Item = (&'a str, &'a Multigraph)>) -> String {
    records
        .into_iter()
        .map(|(name, g)| write_record(name, g))
        .collect::<Vec<_>>()
        .join("\n")
}
