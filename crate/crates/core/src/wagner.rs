//! Decorated Wagner graphs: every `N` built from `M ∈ {W, W1, W2}` and an
//! edge set `E`, and the ones that contain no `L^{-1}(Γ₃)` subgraph.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{GraphError, Result};
use crate::linegraph::gamma3_free;
use crate::multigraph::{pair, CanonicalForm, Multigraph, Pair};
use crate::patterns;

/// One choice of base and subdivided edges, with the resulting `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WagnerCase {
    pub base: String,
    pub subdivided: Vec<Pair>,
    /// Vertices that received a pendant edge.
    pub pendant_at: Vec<usize>,
    pub graph: Multigraph,
}

/// `N`: each edge of `e` subdivided once, then a pendant edge at every
/// vertex of `m` incident to neither an edge of `e` nor a multiedge.
pub fn build_n(m: &Multigraph, e: &[Pair]) -> Result<WagnerCase> {
    build(m, e, false)
}

fn build(m: &Multigraph, e: &[Pair], allow_multi: bool) -> Result<WagnerCase> {
    let n = m.order();
    let mut chosen: Vec<Pair> = Vec::with_capacity(e.len());
    for &(u, v) in e {
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
            }
        }
        match m.mult(u, v) {
            0 => return Err(GraphError::MissingEdge(u, v)),
            1 => {}
            _ if allow_multi => {}
            _ => {
                return Err(GraphError::Precondition(format!(
                    "edge {u}-{v} is a multiedge and cannot be subdivided"
                )))
            }
        }
        chosen.push(pair(u, v));
    }
    chosen.sort_unstable();
    chosen.dedup();
    let mut touched = vec![false; n];
    for &(u, v) in &chosen {
        touched[u] = true;
        touched[v] = true;
    }
    for (u, v, mu) in m.edges() {
        if mu > 1 {
            touched[u] = true;
            touched[v] = true;
        }
    }
    let pendant_at: Vec<usize> = (0..n).filter(|&x| !touched[x]).collect();
    let mut g = m.clone();
    for &(u, v) in &chosen {
        let x = g.add_vertex();
        g.remove_edge_copy(u, v)?;
        g.add_edge(u, x, 1)?;
        g.add_edge(x, v, 1)?;
    }
    for &x in &pendant_at {
        let leaf = g.add_vertex();
        g.add_edge(x, leaf, 1)?;
    }
    Ok(WagnerCase {
        base: String::new(),
        subdivided: chosen,
        pendant_at,
        graph: g,
    })
}

/// Survivors of the enumeration, up to isomorphism, with case counts.
#[derive(Debug, Clone)]
pub struct WagnerReport {
    pub survivors: Vec<WagnerCase>,
    /// Cases per base, in the order `W, W1, W2`.
    pub cases: Vec<(String, usize)>,
    pub processed: usize,
}

impl WagnerReport {
    pub fn expected_cases(&self) -> usize {
        self.cases.iter().map(|(_, c)| c).sum()
    }

    /// Whether the survivors are exactly `{W3}`.
    pub fn is_exactly_w3(&self) -> bool {
        self.processed == self.expected_cases()
            && self.survivors.len() == 1
            && self.survivors[0].graph.is_isomorphic(&patterns::wagner_3().graph)
    }
}

/// Runs every case over simple edge sets of `W`, `W1`, `W2`.
pub fn enumerate_decorations() -> WagnerReport {
    enumerate(false)
}

/// The same enumeration, also letting `E` subdivide one copy of a
/// multiedge.
pub fn enumerate_decorations_with_multiedges() -> WagnerReport {
    enumerate(true)
}

fn enumerate(allow_multi: bool) -> WagnerReport {
    let bases = [patterns::wagner(), patterns::wagner_1(), patterns::wagner_2()];
    let processed = AtomicUsize::new(0);
    let mut found: BTreeMap<CanonicalForm, WagnerCase> = BTreeMap::new();
    let mut cases = Vec::new();
    for base in &bases {
        let m = &base.graph;
        let pool: Vec<Pair> = m
            .edges()
            .into_iter()
            .filter(|&(_, _, mu)| allow_multi || mu == 1)
            .map(|(u, v, _)| (u, v))
            .collect();
        let total = 1usize << pool.len();
        cases.push((base.name.clone(), total));
        let hits: Vec<(CanonicalForm, WagnerCase)> = (0..total)
            .into_par_iter()
            .filter_map(|mask| {
                let e: Vec<Pair> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
                let mut case = build(m, &e, allow_multi).expect("edges drawn from the base");
                processed.fetch_add(1, Ordering::Relaxed);
                gamma3_free(&case.graph).then(|| {
                    case.base = base.name.clone();
                    (case.graph.canonical_form(), case)
                })
            })
            .collect();
        for (form, case) in hits {
            found.entry(form).or_insert(case);
        }
    }
    WagnerReport {
        survivors: found.into_values().collect(),
        cases,
        processed: processed.into_inner(),
    }
}
