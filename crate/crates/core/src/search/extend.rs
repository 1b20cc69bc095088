//! The extension families `A(M, U)` and `M(M, R)`.

use std::collections::BTreeSet;

use crate::conditions::gate_passes;
use crate::error::{GraphError, Result};
use crate::linegraph::gamma3_free;
use crate::multigraph::{CanonicalForm, Multigraph, Pair};

/// How a child differs from its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// A new vertex joined by simple edges to the listed vertices.
    Add(Vec<usize>),
    /// One more copy of an edge.
    Multiply(Pair),
}

impl std::fmt::Display for Step {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Step::Add(s) => {
                let s: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "add {{{}}}", s.join(","))
            }
            Step::Multiply((u, v)) => write!(f, "mul {u}-{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub graph: Multigraph,
    pub step: Step,
}

/// Extensions of one parent, deduplicated up to isomorphism.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtensionSet {
    pub members: Vec<Extension>,
}

impl ExtensionSet {
    fn dedup(items: impl IntoIterator<Item = Extension>) -> Self {
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let members = items
            .into_iter()
            .filter(|e| seen.insert(e.graph.canonical_form()))
            .collect();
        ExtensionSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn forms(&self) -> BTreeSet<CanonicalForm> {
        self.members.iter().map(|e| e.graph.canonical_form()).collect()
    }
}

/// `M` plus a vertex joined by simple edges to `attach`.
pub fn attach_vertex(m: &Multigraph, attach: &[usize]) -> Multigraph {
    let mut g = m.clone();
    let v = g.add_vertex();
    for &s in attach {
        g.set_raw(s, v, 1);
    }
    g
}

fn leaves_at(m: &Multigraph, s: usize) -> usize {
    m.neighbors(s).filter(|&x| m.degree(x) == 1).count()
}

/// Whether a new degree-1 vertex on `s` would have at most one twin.
fn twin_rule_ok(m: &Multigraph, attach: &[usize]) -> bool {
    attach.len() != 1 || leaves_at(m, attach[0]) <= 1
}

/// `A(M, U)` without any gate filtering: every admissible attachment set
/// meeting `U`. Exponential in `|V(M)|`; meant for small graphs.
pub fn extensions_add(m: &Multigraph, u: &[usize]) -> ExtensionSet {
    let n = m.order();
    assert!(n < 32, "unfiltered enumeration is limited to small graphs");
    let u: BTreeSet<usize> = u.iter().copied().collect();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !s.iter().any(|x| u.contains(x)) || !twin_rule_ok(m, &s) {
            continue;
        }
        out.push(Extension {
            graph: attach_vertex(m, &s),
            step: Step::Add(s),
        });
    }
    ExtensionSet::dedup(out)
}

/// `M(M, R)`: one child per edge of `R`, which must lie in `E_S(M)`.
pub fn extensions_multiply(m: &Multigraph, r: &[Pair]) -> Result<ExtensionSet> {
    let es: BTreeSet<Pair> = m.simple_nonpendant_edges().into_iter().collect();
    let mut out = Vec::new();
    for &(a, b) in r {
        let e = (a.min(b), a.max(b));
        if !es.contains(&e) {
            return Err(GraphError::Precondition(format!(
                "edge {}-{} is not a simple nonpendant edge",
                e.0, e.1
            )));
        }
        let mut g = m.clone();
        g.set_raw(e.0, e.1, 2);
        out.push(Extension {
            graph: g,
            step: Step::Multiply(e),
        });
    }
    Ok(ExtensionSet::dedup(out))
}

/// Whether joining a new vertex to all of `s` creates a diamond, given that
/// `M` has none: some edge inside `s` has a common neighbour, or some vertex
/// of `s` has two neighbours in `s`.
fn creates_diamond(m: &Multigraph, s: &[usize]) -> bool {
    for (i, &x) in s.iter().enumerate() {
        let inside = s.iter().filter(|&&y| m.adjacent(x, y)).count();
        if inside >= 2 {
            return true;
        }
        for &y in &s[i + 1..] {
            if m.adjacent(x, y) && m.neighbors(x).any(|z| z != y && m.adjacent(z, y)) {
                return true;
            }
        }
    }
    false
}

/// Every attachment set whose extension passes the gate, with that
/// extension (not deduplicated). `M` must pass the gate itself.
///
/// Creating a diamond or a Γ₃ preimage is inherited by supersets of the
/// attachment set, so those branches of the subset enumeration are cut.
pub fn gated_additions(m: &Multigraph) -> Vec<(Vec<usize>, Multigraph)> {
    let mut out = Vec::new();
    let mut s = Vec::new();
    grow(m, 0, &mut s, &mut out);
    out
}

fn grow(m: &Multigraph, start: usize, s: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Multigraph)>) {
    for x in start..m.order() {
        s.push(x);
        if !creates_diamond(m, s) {
            let g = attach_vertex(m, s);
            if gamma3_free(&g) {
                if twin_rule_ok(m, s) && gate_passes(&g) {
                    out.push((s.clone(), g));
                }
                grow(m, x + 1, s, out);
            }
        }
        s.pop();
    }
}

/// Multiplications of edges of `E_S(M)` that pass the gate.
pub fn gated_multiplications(m: &Multigraph) -> Vec<(Pair, Multigraph)> {
    m.simple_nonpendant_edges()
        .into_iter()
        .filter_map(|(a, b)| {
            let mut g = m.clone();
            g.set_raw(a, b, 2);
            gate_passes(&g).then_some(((a, b), g))
        })
        .collect()
}
