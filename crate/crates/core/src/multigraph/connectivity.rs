//! Components, essential cuts, cycles and vertex connectivity.

use std::collections::VecDeque;

use super::{Multigraph, Pair};

/// An essential edge cut of size at most 2 together with the components it
/// leaves behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialCut {
    /// Edge copies removed; a double edge appears twice.
    pub edges: Vec<Pair>,
    /// Vertex sets of the components of `H - edges` that contain an edge.
    pub nontrivial: Vec<Vec<usize>>,
}

impl Multigraph {
    /// Connected components as sorted vertex lists, ordered by least vertex.
    /// Vertices with `removed[v]` set are skipped.
    pub fn components_where(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_where(&vec![false; self.order()])
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    fn has_edge_within(&self, comp: &[usize]) -> bool {
        comp.iter()
            .any(|&u| comp.iter().any(|&v| u < v && self.adjacent(u, v)))
    }

    /// Components of `H - v` that contain at least one edge.
    pub fn nontrivial_components_without(&self, v: usize) -> Vec<Vec<usize>> {
        let mut removed = vec![false; self.order()];
        removed[v] = true;
        self.components_where(&removed)
            .into_iter()
            .filter(|c| self.has_edge_within(c))
            .collect()
    }

    /// Vertices whose removal leaves at least two nontrivial components.
    pub fn essential_cutvertices(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.nontrivial_components_without(v).len() >= 2)
            .collect()
    }

    pub fn essential_2_connected(&self) -> bool {
        self.essential_cutvertices().is_empty()
    }

    /// Size of the smallest essential edge cut, capped at `cap`; `cap` is
    /// returned when no essential cut below it exists.
    pub fn essential_edge_connectivity_capped(&self, cap: usize) -> usize {
        let pairs: Vec<Pair> = self.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
        let mut best = cap;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let f = self.max_flow_sets(&[a, b], &[c, d], best);
                if f < best {
                    best = f;
                    if best == 0 {
                        return 0;
                    }
                }
            }
        }
        best
    }

    /// True iff every essential edge cut has at least `k` edge copies.
    pub fn essential_k_edge_connected(&self, k: usize) -> bool {
        self.essential_edge_connectivity_capped(k) >= k
    }

    /// Maximum flow with capacities `mult` from the source set to the sink
    /// set, stopping once `limit` is reached.
    fn max_flow_sets(&self, sources: &[usize], sinks: &[usize], limit: usize) -> usize {
        let n = self.order();
        let s = n;
        let t = n + 1;
        let w = n + 2;
        let mut cap = vec![0i32; w * w];
        for u in 0..n {
            for v in 0..n {
                cap[u * w + v] = self.mult(u, v) as i32;
            }
        }
        let big = i32::MAX / 4;
        for &x in sources {
            cap[s * w + x] = big;
        }
        for &y in sinks {
            cap[y * w + t] = big;
        }
        let mut flow = 0;
        let mut parent = vec![usize::MAX; w];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[s] = s;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                if x == t {
                    break;
                }
                for y in 0..w {
                    if parent[y] == usize::MAX && cap[x * w + y] > 0 {
                        parent[y] = x;
                        q.push_back(y);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            let mut y = t;
            while y != s {
                let x = parent[y];
                cap[x * w + y] -= 1;
                cap[y * w + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// Every essential cut with one or two edge copies and no pendant edge.
    pub fn small_essential_cuts(&self) -> Vec<EssentialCut> {
        let edges = self.edges();
        let mut candidates: Vec<Vec<Pair>> = Vec::new();
        for &(u, v, m) in &edges {
            if m == 1 {
                candidates.push(vec![(u, v)]);
            }
        }
        for (i, &(u, v, m)) in edges.iter().enumerate() {
            if m == 1 {
                for &(x, y, m2) in &edges[i + 1..] {
                    if m2 == 1 {
                        candidates.push(vec![(u, v), (x, y)]);
                    }
                }
            } else if m == 2 {
                candidates.push(vec![(u, v), (u, v)]);
            }
        }
        let mut out: Vec<EssentialCut> = Vec::new();
        for cut in candidates {
            if cut.iter().any(|&(u, v)| self.degree(u) == 1 || self.degree(v) == 1) {
                continue;
            }
            let mut g = self.clone();
            for &(u, v) in &cut {
                g.remove_edge_copy(u, v).expect("cut edge present");
            }
            let nontrivial: Vec<Vec<usize>> = g
                .components()
                .into_iter()
                .filter(|c| g.has_edge_within(c))
                .collect();
            if nontrivial.len() < 2 {
                continue;
            }
            out.push(EssentialCut {
                edges: cut,
                nontrivial,
            });
        }
        out
    }

    /// Whether a cycle through exactly `k` distinct vertices exists as a
    /// subgraph (chords allowed, multiplicities ignored).
    pub fn contains_cycle_subgraph(&self, k: usize) -> bool {
        let n = self.order();
        if k < 3 || k > n {
            return false;
        }
        let mut on_path = vec![false; n];
        for start in 0..n {
            on_path[start] = true;
            if self.cycle_dfs(start, start, 1, k, &mut on_path) {
                return true;
            }
            on_path[start] = false;
        }
        false
    }

    fn cycle_dfs(&self, start: usize, x: usize, len: usize, k: usize, on_path: &mut [bool]) -> bool {
        if len == k {
            return self.adjacent(x, start);
        }
        for y in self.neighbors(x) {
            if y > start && !on_path[y] {
                on_path[y] = true;
                if self.cycle_dfs(start, y, len + 1, k, on_path) {
                    return true;
                }
                on_path[y] = false;
            }
        }
        false
    }

    /// Whether the underlying simple graph is `k`-connected: more than `k`
    /// vertices and no separating set of fewer than `k` vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.order();
        if k == 0 {
            return true;
        }
        if n <= k {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        let mut removed = vec![false; n];
        for size in 1..k {
            if self.separates_some(size, 0, &mut removed) {
                return false;
            }
        }
        true
    }

    fn separates_some(&self, left: usize, from: usize, removed: &mut [bool]) -> bool {
        if left == 0 {
            return self.components_where(removed).len() >= 2;
        }
        for v in from..self.order() {
            removed[v] = true;
            let hit = self.separates_some(left - 1, v + 1, removed);
            removed[v] = false;
            if hit {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_simple_edges(n, e).unwrap()
    }

    fn wagner() -> Multigraph {
        let mut e: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        e.extend((0..4).map(|i| (i, i + 4)));
        g(8, &e)
    }

    #[test]
    fn essential_edge_connectivity_examples() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!p4.essential_k_edge_connected(3));
        assert!(p4.essential_k_edge_connected(1));
        assert!(wagner().essential_k_edge_connected(3));
        assert!(wagner().essential_k_edge_connected(4));
        assert!(!wagner().essential_k_edge_connected(5));
        let c9m = Multigraph::build(
            9,
            &(0..9)
                .map(|i| (i, (i + 1) % 9, if i % 3 == 0 { 2 } else { 1 }))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(!c9m.essential_k_edge_connected(3));
    }

    #[test]
    fn essential_cutvertex_examples() {
        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]);
        assert!(!bowtie.essential_2_connected());
        assert_eq!(bowtie.essential_cutvertices(), vec![0]);
        assert!(wagner().essential_2_connected());
        let star = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(star.essential_2_connected());
    }

    #[test]
    fn cycles() {
        assert!(wagner().contains_cycle_subgraph(8));
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!k4.contains_cycle_subgraph(7));
        assert!(k4.contains_cycle_subgraph(4));
        let c7 = g(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>());
        assert!(c7.contains_cycle_subgraph(7));
        assert!(!c7.contains_cycle_subgraph(6));
    }

    #[test]
    fn vertex_connectivity() {
        assert!(wagner().is_k_connected(3));
        assert!(!wagner().is_k_connected(4));
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(k4.is_k_connected(3));
        assert!(!k4.is_k_connected(4));
    }

    #[test]
    fn small_cuts_of_path() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let cuts = p4.small_essential_cuts();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].edges, vec![(1, 2)]);
        assert_eq!(cuts[0].nontrivial, vec![vec![0, 1], vec![2, 3]]);
        let p6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let cuts = p6.small_essential_cuts();
        assert!(cuts
            .iter()
            .any(|c| c.edges == vec![(1, 2), (3, 4)] && c.nontrivial.len() == 3));
    }
}
