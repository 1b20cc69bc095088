//! Line graphs of multigraphs, recognition, preimages and Γ₃-freeness.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{GraphError, Result};
use crate::multigraph::Multigraph;
use crate::patterns::{self, for_each_embedding, Embedding, MatchMode, Pattern};

/// One copy of an edge of `H`; copies of a multiedge are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeCopy {
    pub u: usize,
    pub v: usize,
    pub copy: u8,
}

impl fmt::Display for EdgeCopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{})^{}", self.u, self.v, self.copy)
    }
}

/// `L(H)` together with the bijection between its vertices and the edge
/// copies of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphMap {
    pub graph: Multigraph,
    /// `edge_index[x]` is the edge copy of `H` represented by vertex `x`.
    pub edge_index: Vec<EdgeCopy>,
}

impl LineGraphMap {
    /// Vertex of `L(H)` for the given copy of `uv`.
    pub fn vertex_of(&self, u: usize, v: usize, copy: u8) -> Option<usize> {
        let (u, v) = (u.min(v), u.max(v));
        self.edge_index
            .iter()
            .position(|e| e.u == u && e.v == v && e.copy == copy)
    }
}

pub fn line_graph(h: &Multigraph) -> Result<LineGraphMap> {
    let mut edge_index = Vec::new();
    for (u, v, m) in h.edges() {
        for c in 1..=m {
            edge_index.push(EdgeCopy { u, v, copy: c });
        }
    }
    if edge_index.is_empty() {
        return Err(GraphError::Edgeless);
    }
    let k = edge_index.len();
    let mut g = Multigraph::new(k);
    for i in 0..k {
        let a = edge_index[i];
        for j in i + 1..k {
            let b = edge_index[j];
            if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
                g.set_raw(i, j, 1);
            }
        }
    }
    Ok(LineGraphMap {
        graph: g,
        edge_index,
    })
}

/// Whether the neighbourhood of `x` induces a clique.
pub fn is_simplicial(g: &Multigraph, x: usize) -> bool {
    let nb: Vec<usize> = g.neighbors(x).collect();
    nb.iter()
        .enumerate()
        .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.adjacent(a, b)))
}

pub fn simplicial_vertices(g: &Multigraph) -> Vec<usize> {
    (0..g.order()).filter(|&x| is_simplicial(g, x)).collect()
}

/// A named pattern found in a host, labels mapped to host vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub pattern: String,
    pub map: Vec<(String, usize)>,
}

impl PatternWitness {
    pub fn from_embedding(p: &Pattern, e: &Embedding) -> Self {
        PatternWitness {
            pattern: p.name.clone(),
            map: p.labels.iter().cloned().zip(e.map.iter().copied()).collect(),
        }
    }

    pub fn host_vertices(&self) -> Vec<usize> {
        self.map.iter().map(|(_, h)| *h).collect()
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pattern)?;
        for (l, h) in &self.map {
            write!(f, " {l}->{h}")?;
        }
        Ok(())
    }
}

/// `Ok(())` if no Bermond–Meyer graph is an induced subgraph of `g`,
/// otherwise the first one found.
pub fn is_line_graph_of_multigraph(g: &Multigraph) -> std::result::Result<(), PatternWitness> {
    let simple = g.simple_underlying();
    for p in patterns::bermond_meyer() {
        if let Some(e) = patterns::induced_subgraph_search(&simple, &p.graph) {
            return Err(PatternWitness::from_embedding(&p, &e));
        }
    }
    Ok(())
}

/// Clique labels for a line-graph representation: vertex `x` of `G`
/// becomes an edge between `labels[x].0` and `labels[x].1`.
struct Labeling<'a> {
    g: &'a Multigraph,
    order: Vec<usize>,
    simplicial: Vec<bool>,
    labels: Vec<(usize, usize)>,
    members: Vec<Vec<usize>>,
    closed: Vec<bool>,
}

impl Labeling<'_> {
    fn search(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let x = self.order[i];
        let placed: Vec<usize> = self.order[..i].to_vec();
        let mut cands: Vec<usize> = Vec::new();
        for &y in &placed {
            if self.g.adjacent(x, y) {
                for l in [self.labels[y].0, self.labels[y].1] {
                    if !self.closed[l]
                        && !cands.contains(&l)
                        && self.members[l].iter().all(|&m| self.g.adjacent(x, m))
                    {
                        cands.push(l);
                    }
                }
            }
        }
        cands.sort_unstable();
        let fresh = self.members.len();
        let mut options: Vec<(usize, usize)> = Vec::new();
        if self.simplicial[x] {
            for &a in cands.iter().chain(std::iter::once(&fresh)) {
                let b = if a == fresh { fresh + 1 } else { fresh };
                options.push((a, b));
            }
        } else {
            for (k, &a) in cands.iter().enumerate() {
                for &b in &cands[k + 1..] {
                    options.push((a, b));
                }
                options.push((a, fresh));
            }
            options.push((fresh, fresh + 1));
        }
        for (a, b) in options {
            let consistent = placed.iter().all(|&y| {
                let (p, q) = self.labels[y];
                let share = p == a || p == b || q == a || q == b;
                share == self.g.adjacent(x, y)
            });
            if !consistent {
                continue;
            }
            let added = [a, b].iter().filter(|&&l| l >= fresh).count();
            for _ in 0..added {
                self.members.push(Vec::new());
                self.closed.push(false);
            }
            self.members[a].push(x);
            self.members[b].push(x);
            let closing = self.simplicial[x];
            if closing {
                self.closed[b] = true;
            }
            self.labels[x] = (a, b);
            if self.search(i + 1) {
                return true;
            }
            if closing {
                self.closed[b] = false;
            }
            self.members[a].pop();
            self.members[b].pop();
            for _ in 0..added {
                self.members.pop();
                self.closed.pop();
            }
        }
        false
    }
}

/// The preimage `L^{-1}(G)`: the multigraph `H` with `L(H) = G` whose
/// pendant edges are exactly the simplicial vertices of `G`. Vertex `x` of
/// `G` corresponds to one copy of the edge `labels[x]` of `H`.
pub fn preimage_with_labels(g: &Multigraph) -> Result<(Multigraph, Vec<(usize, usize)>)> {
    if g.order() == 0 {
        return Err(GraphError::Precondition("empty graph has no preimage".into()));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if !g.is_simple() {
        return Err(GraphError::Precondition("line graphs are simple".into()));
    }
    let n = g.order();
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                order.push(y);
            }
        }
    }
    let mut lab = Labeling {
        g,
        order,
        simplicial: (0..n).map(|x| is_simplicial(g, x)).collect(),
        labels: vec![(0, 0); n],
        members: Vec::new(),
        closed: Vec::new(),
    };
    if !lab.search(0) {
        return Err(match is_line_graph_of_multigraph(g) {
            Err(w) => GraphError::NotLineGraph {
                pattern: w.pattern.clone(),
                witness: w.to_string(),
            },
            Ok(()) => GraphError::Precondition(
                "no clique labeling found although no forbidden subgraph was detected".into(),
            ),
        });
    }
    let mut h = Multigraph::new(lab.members.len());
    for &(a, b) in &lab.labels {
        h.add_edge(a, b, 1)?;
    }
    Ok((h, lab.labels))
}

pub fn preimage(g: &Multigraph) -> Result<Multigraph> {
    preimage_with_labels(g).map(|(h, _)| h)
}

/// Looks for a subgraph of `h` whose line graph is Γ₃ (one of `F1`, `F2`,
/// `F3`): a path `q1 ... q5` whose ends each have two further edge copies
/// to vertices off the path, the two ends reaching disjoint vertex sets.
pub fn gamma3_witness(h: &Multigraph) -> Option<PatternWitness> {
    let n = h.order();
    let mut path = Vec::with_capacity(5);
    let mut on = vec![false; n];
    for s in 0..n {
        if h.degree(s) < 3 {
            continue;
        }
        path.push(s);
        on[s] = true;
        if let Some(w) = gamma3_extend(h, &mut path, &mut on) {
            return Some(w);
        }
        on[s] = false;
        path.pop();
    }
    None
}

fn gamma3_extend(h: &Multigraph, path: &mut Vec<usize>, on: &mut [bool]) -> Option<PatternWitness> {
    if path.len() == 5 {
        return gamma3_ends(h, path, on);
    }
    let x = *path.last().unwrap();
    let nbrs: Vec<usize> = h.neighbors(x).collect();
    for y in nbrs {
        if on[y] || (path.len() == 4 && (h.degree(y) < 3 || y < path[0])) {
            continue;
        }
        path.push(y);
        on[y] = true;
        let r = gamma3_extend(h, path, on);
        on[y] = false;
        path.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Ways of hanging two edge copies on `x` using vertices off the path:
/// two distinct neighbours, or one neighbour over a multiple edge.
fn end_options(h: &Multigraph, x: usize, on: &[bool]) -> Vec<(usize, Option<usize>)> {
    let out: Vec<usize> = h.neighbors(x).filter(|&y| !on[y]).collect();
    let mut opts = Vec::new();
    for (i, &a) in out.iter().enumerate() {
        if h.mult(x, a) >= 2 {
            opts.push((a, None));
        }
        for &b in &out[i + 1..] {
            opts.push((a, Some(b)));
        }
    }
    opts
}

fn gamma3_ends(h: &Multigraph, path: &[usize], on: &[bool]) -> Option<PatternWitness> {
    let first = end_options(h, path[0], on);
    if first.is_empty() {
        return None;
    }
    let last = end_options(h, path[4], on);
    for &(a, b) in &first {
        for &(c, d) in &last {
            let left = [Some(a), b];
            if left.contains(&Some(c)) || (d.is_some() && left.contains(&d)) {
                continue;
            }
            let mut map: Vec<(String, usize)> = Vec::new();
            let name = match (b, d) {
                (Some(_), Some(_)) => "F1",
                (None, None) => "F3",
                _ => "F2",
            };
            // F2 carries its double edge at q1; orient the path to match.
            let (p, (a, b), (c, d)) = if name == "F2" && b.is_some() {
                let rev: Vec<usize> = path.iter().rev().copied().collect();
                (rev, (c, d), (a, b))
            } else {
                (path.to_vec(), (a, b), (c, d))
            };
            match b {
                Some(b) => {
                    map.push(("s1".into(), a));
                    map.push(("s2".into(), b));
                }
                None => map.push(("s12".into(), a)),
            }
            for (k, &q) in p.iter().enumerate() {
                map.push((format!("q{}", k + 1), q));
            }
            match d {
                Some(d) => {
                    map.push(("s3".into(), c));
                    map.push(("s4".into(), d));
                }
                None => map.push(("s34".into(), c)),
            }
            return Some(PatternWitness {
                pattern: name.into(),
                map,
            });
        }
    }
    None
}

pub fn gamma3_free(h: &Multigraph) -> bool {
    gamma3_witness(h).is_none()
}

/// Γ₃-freeness decided by the generic matcher on `F1`, `F2`, `F3`.
pub fn gamma3_free_by_matcher(h: &Multigraph) -> bool {
    [patterns::f1(), patterns::f2(), patterns::f3()]
        .iter()
        .all(|p| !for_each_embedding(h, &p.graph, MatchMode::Subgraph, |_| ControlFlow::Break(())))
}

/// Γ₃-freeness decided on the line graph by an induced Γ₃ search.
pub fn gamma3_free_by_line_graph(h: &Multigraph) -> bool {
    match line_graph(h) {
        Ok(l) => patterns::induced_subgraph_search(&l.graph, &patterns::gamma(3).graph).is_none(),
        Err(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::*;

    fn star(k: usize) -> Multigraph {
        let e: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
        Multigraph::from_simple_edges(k + 1, &e).unwrap()
    }

    #[test]
    fn small_line_graphs() {
        let l = line_graph(&star(3)).unwrap();
        assert!(l.graph.is_isomorphic(&k3().graph));
        assert!(line_graph(&f1().graph).unwrap().graph.is_isomorphic(&gamma(3).graph));
        assert!(line_graph(&f2().graph).unwrap().graph.is_isomorphic(&gamma(3).graph));
        assert!(line_graph(&f3().graph).unwrap().graph.is_isomorphic(&gamma(3).graph));
        let h2 = Multigraph::build(4, &[(0, 1, 2), (0, 2, 1), (1, 3, 1)]).unwrap();
        assert!(line_graph(&z(1).graph)
            .unwrap()
            .graph
            .is_isomorphic(&line_graph(&h2).unwrap().graph));
        assert_eq!(line_graph(&Multigraph::new(3)), Err(GraphError::Edgeless));
        let m = line_graph(&multitriangle().graph).unwrap();
        assert_eq!(m.vertex_of(2, 0, 2), Some(2));
    }

    #[test]
    fn simplicial() {
        let lw = line_graph(&wagner_plus().graph).unwrap();
        let s = simplicial_vertices(&lw.graph);
        assert_eq!(s.len(), 8);
        assert!(s.iter().all(|&x| lw.edge_index[x].v >= 8));
        assert_eq!(simplicial_vertices(&k3().graph), vec![0, 1, 2]);
        assert!(simplicial_vertices(&cycle(5).graph).is_empty());
    }

    #[test]
    fn preimages() {
        assert!(preimage(&gamma(3).graph).unwrap().is_isomorphic(&f1().graph));
        assert!(preimage(&k3().graph).unwrap().is_isomorphic(&star(3)));
        match preimage(&claw().graph) {
            Err(GraphError::NotLineGraph { pattern, .. }) => assert_eq!(pattern, "G1"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(preimage(&wheel(4).graph).unwrap().is_isomorphic(&diamond().graph));
    }

    #[test]
    fn recognition() {
        assert_eq!(is_line_graph_of_multigraph(&claw().graph).unwrap_err().pattern, "G1");
        assert!(is_line_graph_of_multigraph(&wheel(4).graph).is_ok());
        for p in bermond_meyer() {
            assert!(is_line_graph_of_multigraph(&p.graph).is_err(), "{}", p.name);
            assert!(preimage(&p.graph).is_err(), "{}", p.name);
        }
    }

    #[test]
    fn gamma3() {
        for p in [f1(), f2(), f3()] {
            let w = gamma3_witness(&p.graph).expect("pattern contains itself");
            assert_eq!(w.pattern, p.name);
        }
        assert!(gamma3_free(&cycle(10).graph));
        assert!(gamma3_free(&wagner().graph));
        assert!(!gamma3_free(&wagner_plus().graph));
        assert!(gamma3_free(&wagner_3().graph));
    }

    #[test]
    fn induced_search() {
        let lf2 = line_graph(&f2().graph).unwrap().graph;
        assert!(induced_subgraph_search(&lf2, &gamma(3).graph).is_some());
        let lw = line_graph(&wagner().graph).unwrap().graph;
        assert!(induced_subgraph_search(&lw, &claw().graph).is_none());
        let ld = line_graph(&diamond().graph).unwrap().graph;
        assert!(induced_subgraph_search(&ld, &wheel(4).graph).is_some());
    }
}
