//! Loop-free undirected multigraphs with edge multiplicities.
//!
//! Vertices are dense ids `0..order`. Removing a vertex compacts the ids of
//! the vertices above it, so every value stays byte-comparable after edits.

mod canon;
mod connectivity;

pub use canon::CanonicalForm;

use std::fmt;

use crate::error::{GraphError, Result};

/// An unordered vertex pair, always stored with `.0 < .1`.
pub type Pair = (usize, usize);

#[inline]
pub fn pair(u: usize, v: usize) -> Pair {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u8>,
}

/// Partition of the adjacent pairs of a multigraph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeClasses {
    /// Simple edges with an endpoint of degree 1.
    pub pendant: Vec<Pair>,
    /// Simple nonpendant edges.
    pub simple: Vec<Pair>,
    /// Pairs of multiplicity at least 2.
    pub multiple: Vec<Pair>,
}

impl Multigraph {
    /// The edgeless multigraph on `order` vertices.
    pub fn new(order: usize) -> Self {
        Multigraph {
            n: order,
            mult: vec![0; order * order],
        }
    }

    /// Builds a multigraph from `(u, v, multiplicity)` triples. Repeated pairs
    /// accumulate.
    pub fn build(order: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut g = Multigraph::new(order);
        for &(u, v, m) in edges {
            g.add_edge(u, v, m)?;
        }
        Ok(g)
    }

    /// Builds a simple graph from an edge list.
    pub fn from_simple_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `m` parallel copies of the edge `uv`.
    pub fn add_edge(&mut self, u: usize, v: usize, m: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if m == 0 {
            return Err(GraphError::ZeroMultiplicity(u, v));
        }
        let total = self.mult(u, v) as u32 + m;
        if total > u8::MAX as u32 {
            return Err(GraphError::MultiplicityOverflow(u, v));
        }
        self.set_raw(u, v, total as u8);
        Ok(())
    }

    /// Sets the multiplicity of `uv` (0 removes the pair).
    pub fn set_mult(&mut self, u: usize, v: usize, m: u8) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.set_raw(u, v, m);
        Ok(())
    }

    #[inline]
    pub(crate) fn set_raw(&mut self, u: usize, v: usize, m: u8) {
        self.mult[u * self.n + v] = m;
        self.mult[v * self.n + u] = m;
    }

    /// Removes one copy of `uv`.
    pub fn remove_edge_copy(&mut self, u: usize, v: usize) -> Result<()> {
        let m = self.mult(u, v);
        if m == 0 {
            return Err(GraphError::MissingEdge(u, v));
        }
        self.set_raw(u, v, m - 1);
        Ok(())
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        let n = self.n;
        let mut mult = vec![0u8; (n + 1) * (n + 1)];
        for u in 0..n {
            mult[u * (n + 1)..u * (n + 1) + n].copy_from_slice(&self.mult[u * n..u * n + n]);
        }
        self.mult = mult;
        self.n = n + 1;
        n
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&mut self, v: usize) -> Result<()> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        *self = self.induced(&keep);
        Ok(())
    }

    /// Induced sub-multigraph on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let k = vertices.len();
        let mut g = Multigraph::new(k);
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                let m = self.mult(a, b);
                if m > 0 {
                    g.set_raw(i, j, m);
                }
            }
        }
        g
    }

    /// The multigraph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let mut g = Multigraph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.mult(u, v);
                if m > 0 {
                    g.set_raw(perm[u], perm[v], m);
                }
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let off = self.n;
        let mut g = Multigraph::new(self.n + other.n);
        for (u, v, m) in self.edges() {
            g.set_raw(u, v, m);
        }
        for (u, v, m) in other.edges() {
            g.set_raw(u + off, v + off, m);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mult(&self, u: usize, v: usize) -> u8 {
        self.mult[u * self.n + v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.mult(u, v) > 0
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u8] {
        &self.mult[u * self.n..(u + 1) * self.n]
    }

    /// Degree counting multiplicities.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|&m| m as usize).sum()
    }

    /// Number of distinct neighbours, `|N(v)|`.
    pub fn neighbor_count(&self, v: usize) -> usize {
        self.row(v).iter().filter(|&&m| m > 0).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(u, _)| u)
    }

    /// Adjacent pairs `(u, v, mult)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.mult(u, v);
                if m > 0 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// Every edge copy as a pair; a pair of multiplicity `m` appears `m` times.
    pub fn edge_copies(&self) -> Vec<Pair> {
        let mut out = Vec::new();
        for (u, v, m) in self.edges() {
            for _ in 0..m {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of adjacent pairs.
    pub fn pair_count(&self) -> usize {
        self.edges().len()
    }

    /// Number of edges counting multiplicities.
    pub fn size(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum::<usize>() / 2
    }

    pub fn max_mult(&self) -> u8 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.max_mult() <= 1
    }

    /// The underlying simple graph.
    pub fn simple_underlying(&self) -> Multigraph {
        Multigraph {
            n: self.n,
            mult: self.mult.iter().map(|&m| m.min(1)).collect(),
        }
    }

    /// Splits the adjacent pairs into pendant, simple nonpendant and multiple.
    pub fn edge_classes(&self) -> EdgeClasses {
        let mut classes = EdgeClasses::default();
        for (u, v, m) in self.edges() {
            if m >= 2 {
                classes.multiple.push((u, v));
            } else if self.degree(u) == 1 || self.degree(v) == 1 {
                classes.pendant.push((u, v));
            } else {
                classes.simple.push((u, v));
            }
        }
        classes
    }

    /// `E_S`: simple nonpendant edges.
    pub fn simple_nonpendant_edges(&self) -> Vec<Pair> {
        self.edge_classes().simple
    }

    /// True iff `mu(x1, u) == mu(x2, u)` for every vertex `u`, including
    /// `x1` and `x2` themselves (so adjacent vertices are never twins).
    pub fn twins(&self, x1: usize, x2: usize) -> bool {
        x1 != x2 && self.row(x1) == self.row(x2)
    }

    /// Replaces the path `y1 x y2` through the degree-2 vertex `x` by an edge
    /// `y1 y2`; `x` is deleted and the ids above it shift down.
    pub fn suppress(&self, x: usize) -> Result<Multigraph> {
        self.check_vertex(x)?;
        if self.degree(x) != 2 {
            return Err(GraphError::Suppress {
                vertex: x,
                reason: format!("degree is {}", self.degree(x)),
            });
        }
        let nbrs: Vec<usize> = self.neighbors(x).collect();
        if nbrs.len() != 2 {
            return Err(GraphError::Suppress {
                vertex: x,
                reason: "both edge-ends go to one neighbour; a loop would result".into(),
            });
        }
        let mut g = self.clone();
        g.set_raw(x, nbrs[0], 0);
        g.set_raw(x, nbrs[1], 0);
        g.add_edge(nbrs[0], nbrs[1], 1)?;
        g.remove_vertex(x)?;
        Ok(g)
    }

    /// Subdivides one copy of `uv` with a new vertex (returned, always the
    /// last id).
    pub fn subdivide(&self, u: usize, v: usize) -> Result<(Multigraph, usize)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.mult(u, v) == 0 {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.remove_edge_copy(u, v)?;
        let x = g.add_vertex();
        g.add_edge(u, x, 1)?;
        g.add_edge(x, v, 1)?;
        Ok((g, x))
    }

    /// Core of a preimage: delete all pendant edges (and the leaves they
    /// hang on), then suppress every vertex that had degree 2 in `self`.
    pub fn core(&self) -> Result<Multigraph> {
        let mut g = self.clone();
        let mut removed = vec![false; self.n];
        for (u, v, m) in self.edges() {
            if m != 1 {
                continue;
            }
            let (du, dv) = (self.degree(u), self.degree(v));
            if du == 1 && dv == 1 {
                return Err(GraphError::Core(format!("isolated edge {u}-{v}")));
            }
            if du == 1 || dv == 1 {
                g.set_raw(u, v, 0);
                if du == 1 {
                    removed[u] = true;
                }
                if dv == 1 {
                    removed[v] = true;
                }
            }
        }
        let deg2: Vec<usize> = (0..self.n).filter(|&x| self.degree(x) == 2).collect();
        for (i, &x) in deg2.iter().enumerate() {
            for &y in &deg2[i + 1..] {
                if self.adjacent(x, y) {
                    return Err(GraphError::Core(format!(
                        "adjacent vertices {x} and {y} of degree 2"
                    )));
                }
            }
        }
        let mut dropped = removed.clone();
        for &x in &deg2 {
            let nbrs: Vec<usize> = g.neighbors(x).collect();
            if nbrs.len() != 2 {
                return Err(GraphError::Core(format!(
                    "degree-2 vertex {x} sits on a multiple edge"
                )));
            }
            g.set_raw(x, nbrs[0], 0);
            g.set_raw(x, nbrs[1], 0);
            g.add_edge(nbrs[0], nbrs[1], 1)?;
            dropped[x] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !dropped[v]).collect();
        let core = g.induced(&keep);
        if core.order() < 3 {
            return Err(GraphError::Core(format!(
                "residue has only {} vertices",
                core.order()
            )));
        }
        Ok(core)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}; ", self.n)?;
        let parts: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v, m)| {
                if m == 1 {
                    format!("{u}-{v}")
                } else {
                    format!("{u}-{v}x{m}")
                }
            })
            .collect();
        write!(f, "{})", parts.join(" "))
    }
}
