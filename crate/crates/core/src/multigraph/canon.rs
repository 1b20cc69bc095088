//! Canonical labeling by colour refinement and individualisation.
//!
//! Leaves of the search tree are compared by the upper triangle of the
//! relabelled multiplicity matrix; the smallest one is the certificate.
//! Automorphisms found along the way (equal leaves, twin transpositions)
//! prune sibling branches that would only reproduce known leaves.

use std::fmt;

use sha2::{Digest, Sha256};

use super::Multigraph;

/// Byte-comparable isomorphism invariant: equal forms iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: u32,
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Upper-triangle multiplicities in canonical vertex order, row-major.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Multigraph {
        let n = self.order();
        let mut g = Multigraph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if self.bytes[k] > 0 {
                    g.set_raw(u, v, self.bytes[k]);
                }
                k += 1;
            }
        }
        g
    }

    /// Lowercase hex SHA-256 over the order and the matrix bytes.
    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.order.to_le_bytes());
        h.update(&self.bytes);
        hex::encode(h.finalize())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:?})", self.to_graph())
    }
}

fn certificate(g: &Multigraph, pos: &[u32]) -> Vec<u8> {
    let n = g.order();
    let mut inv = vec![0usize; n];
    for (v, &p) in pos.iter().enumerate() {
        inv[p as usize] = v;
    }
    let mut bytes = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        let row = g.row(inv[i]);
        for &vj in &inv[i + 1..] {
            bytes.push(row[vj]);
        }
    }
    bytes
}

/// Refines `col` to the coarsest equitable colouring below it. Colours are
/// renumbered `0..cells` by sorted signature, which is isomorphism-invariant.
fn refine(g: &Multigraph, col: &mut [u32]) -> usize {
    let n = g.order();
    let mut cells = {
        let mut seen: Vec<u32> = col.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    let mut sig: Vec<(u32, Vec<(u32, u8)>, usize)> = Vec::with_capacity(n);
    loop {
        sig.clear();
        for v in 0..n {
            let mut nb: Vec<(u32, u8)> = g
                .row(v)
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(u, &m)| (col[u], m))
                .collect();
            nb.sort_unstable();
            sig.push((col[v], nb, v));
        }
        sig.sort_unstable();
        let mut c = 0u32;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                c += 1;
            }
            col[sig[i].2] = c;
        }
        let new_cells = if n == 0 { 0 } else { c as usize + 1 };
        if new_cells == cells {
            return cells;
        }
        cells = new_cells;
    }
}

struct Search<'a> {
    g: &'a Multigraph,
    best: Option<(Vec<u8>, Vec<u32>)>,
    first: Option<(Vec<u8>, Vec<u32>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, pos: Vec<u32>) {
        let cert = certificate(self.g, &pos);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == cert {
                let n = pos.len();
                let mut inv = vec![0usize; n];
                for (v, &p) in known.1.iter().enumerate() {
                    inv[p as usize] = v;
                }
                let gamma: Vec<usize> = (0..n).map(|v| inv[pos[v] as usize]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), pos.clone()));
        }
        match &self.best {
            Some((b, _)) if *b <= cert => {}
            _ => self.best = Some((cert, pos)),
        }
    }

    fn node(&mut self, col: Vec<u32>, cells: usize, prefix: &mut Vec<usize>) {
        let n = col.len();
        if cells == n {
            self.leaf(col);
            return;
        }
        let mut size = vec![0usize; cells];
        for &c in &col {
            size[c as usize] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).unwrap() as u32;
        let members: Vec<usize> = (0..n).filter(|&v| col[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&w| self.g.twins(v, w)) {
                continue;
            }
            if !tried.is_empty() && self.same_orbit(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child: Vec<u32> = col.iter().map(|&c| 2 * c + 1).collect();
            child[v] -= 1;
            let child_cells = refine(self.g, &mut child);
            prefix.push(v);
            self.node(child, child_cells, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` is in the orbit of some tried vertex under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let n = self.g.order();
        let mut seen = vec![false; n];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            if tried.contains(&x) {
                return true;
            }
            for a in &gens {
                let y = a[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// Canonical form plus a canonical labeling `pos` (vertex `v` goes to
/// position `pos[v]`).
pub fn canonical_labeling(g: &Multigraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let mut col: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let cells = refine(g, &mut col);
    let mut search = Search {
        g,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    search.node(col, cells, &mut Vec::new());
    let (bytes, pos) = search.best.unwrap_or_default();
    (
        CanonicalForm {
            order: n as u32,
            bytes,
        },
        pos.into_iter().map(|p| p as usize).collect(),
    )
}

impl Multigraph {
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_labeling(self).0
    }

    /// The graph relabelled into canonical vertex order.
    pub fn canonical_graph(&self) -> Multigraph {
        self.canonical_form().to_graph()
    }

    pub fn is_isomorphic(&self, other: &Multigraph) -> bool {
        if self.order() != other.order() || self.size() != other.size() {
            return false;
        }
        let mut a: Vec<(usize, usize)> = (0..self.order())
            .map(|v| (self.degree(v), self.neighbor_count(v)))
            .collect();
        let mut b: Vec<(usize, usize)> = (0..other.order())
            .map(|v| (other.degree(v), other.neighbor_count(v)))
            .collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b && self.canonical_form() == other.canonical_form()
    }
}
