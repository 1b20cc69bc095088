//! Hamiltonian paths, Hamilton-connectedness certificates and the trail
//! searches on preimages (DCT, IDT, spanning trails).

mod path;
mod trails;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{GraphError, Result};
use crate::multigraph::{Multigraph, Pair};

pub use path::hamiltonian_path;
pub use trails::{dct_exists, hamilton_connected_via_idt, idt_exists, strongly_spanning_trailable};

/// One hamiltonian `(a, b)`-path for every pair `a < b` of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCertificate {
    /// `hash_hex` of the graph's canonical form.
    pub hash: String,
    pub paths: BTreeMap<Pair, Vec<usize>>,
}

impl HamiltonCertificate {
    pub fn to_text(&self) -> String {
        let mut out = format!("cert {}\n", self.hash);
        for (&(a, b), p) in &self.paths {
            let _ = write!(out, "path {a} {b} :");
            for v in p {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Parses every certificate in `text`; blank lines and `#` comments are
/// skipped.
pub fn parse_certificates(text: &str) -> Result<Vec<HamiltonCertificate>> {
    let err = |line: usize, message: &str| GraphError::Parse {
        line,
        message: message.to_string(),
    };
    let num = |line: usize, t: &str| t.parse::<usize>().map_err(|_| err(line, &format!("bad number {t:?}")));
    let mut out: Vec<HamiltonCertificate> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.split('#').next().unwrap().trim();
        if l.is_empty() {
            continue;
        }
        let mut tok = l.split_whitespace();
        match tok.next() {
            Some("cert") => {
                let hash = tok.next().ok_or_else(|| err(line, "missing hash"))?;
                if tok.next().is_some() {
                    return Err(err(line, "trailing tokens after hash"));
                }
                out.push(HamiltonCertificate {
                    hash: hash.to_string(),
                    paths: BTreeMap::new(),
                });
            }
            Some("path") => {
                let cert = out.last_mut().ok_or_else(|| err(line, "path before any cert line"))?;
                let a = num(line, tok.next().ok_or_else(|| err(line, "missing endpoint"))?)?;
                let b = num(line, tok.next().ok_or_else(|| err(line, "missing endpoint"))?)?;
                if tok.next() != Some(":") {
                    return Err(err(line, "expected ':' after endpoints"));
                }
                let seq = tok.map(|t| num(line, t)).collect::<Result<Vec<usize>>>()?;
                if cert.paths.insert((a, b), seq).is_some() {
                    return Err(err(line, "duplicate pair"));
                }
            }
            Some(other) => return Err(err(line, &format!("unknown record {other:?}"))),
            None => unreachable!(),
        }
    }
    Ok(out)
}

/// Outcome of a Hamilton-connectedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonConnectivity {
    pub connected: bool,
    /// Present when `connected`.
    pub certificate: Option<HamiltonCertificate>,
    /// First pair `a < b` without a hamiltonian path, when not connected.
    pub witness: Option<Pair>,
}

/// Decides Hamilton-connectedness. Pairs are searched in parallel; the
/// witness is the lexicographically first pair without a path.
pub fn hamilton_connected(g: &Multigraph) -> Result<HamiltonConnectivity> {
    let n = g.order();
    if n < 3 {
        return Err(GraphError::Precondition(format!("Hamilton-connectedness needs 3 vertices, got {n}")));
    }
    let pairs: Vec<Pair> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let found = pairs
        .par_iter()
        .map(|&(a, b)| hamiltonian_path(g, a, b).map(|p| ((a, b), p)))
        .collect::<Result<Vec<_>>>()?;
    if let Some(&(pair, _)) = found.iter().find(|(_, p)| p.is_none()) {
        return Ok(HamiltonConnectivity {
            connected: false,
            certificate: None,
            witness: Some(pair),
        });
    }
    Ok(HamiltonConnectivity {
        connected: true,
        certificate: Some(HamiltonCertificate {
            hash: g.canonical_form().hash_hex(),
            paths: found.into_iter().map(|(k, p)| (k, p.expect("checked above"))).collect(),
        }),
        witness: None,
    })
}

/// The first problem found in `cert` as a certificate for `g`, if any.
/// Only adjacency lookups are used.
pub fn certificate_defect(g: &Multigraph, cert: &HamiltonCertificate) -> Option<String> {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            if !cert.paths.contains_key(&(a, b)) {
                return Some(format!("pair {a} {b} missing"));
            }
        }
    }
    for (&(a, b), p) in &cert.paths {
        if a >= b || b >= n {
            return Some(format!("pair {a} {b} is not a pair a < b < {n}"));
        }
        if p.len() != n {
            return Some(format!("path {a} {b} has {} vertices, expected {n}", p.len()));
        }
        if p[0] != a || p[n - 1] != b {
            return Some(format!("path {a} {b} has wrong endpoints"));
        }
        let mut seen = vec![false; n];
        for &v in p {
            if v >= n || seen[v] {
                return Some(format!("path {a} {b} repeats or leaves the graph at {v}"));
            }
            seen[v] = true;
        }
        if let Some(w) = p.windows(2).find(|w| !g.adjacent(w[0], w[1])) {
            return Some(format!("path {a} {b} uses non-edge {}-{}", w[0], w[1]));
        }
    }
    None
}

/// Replays `cert` against `g`. A certificate for another graph is an error;
/// a malformed or incomplete one gives `false`.
pub fn verify_certificate(g: &Multigraph, cert: &HamiltonCertificate) -> Result<bool> {
    let hash = g.canonical_form().hash_hex();
    if hash != cert.hash {
        return Err(GraphError::Precondition(format!(
            "certificate is for graph {}, not {hash}",
            cert.hash
        )));
    }
    Ok(certificate_defect(g, cert).is_none())
}
