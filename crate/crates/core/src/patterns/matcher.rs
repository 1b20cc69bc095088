//! Backtracking matcher for subgraph, flat-subgraph and induced embeddings.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::multigraph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchMode {
    /// `mu_P(uv) <= mu_H(f(u)f(v))` for every pattern pair.
    Subgraph,
    /// Subgraph, and every host edge between image vertices is represented
    /// with multiplicity 1 or its full host multiplicity.
    Flat,
    /// Adjacency preserved in both directions; multiplicities ignored.
    Induced,
}

/// An injective map from pattern vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub mode: MatchMode,
}

impl Embedding {
    /// Checks the mode's constraint directly.
    pub fn is_valid(&self, host: &Multigraph, pattern: &Multigraph) -> bool {
        let n = pattern.order();
        if self.map.len() != n || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        let distinct: HashSet<usize> = self.map.iter().copied().collect();
        if distinct.len() != n {
            return false;
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| pair_ok(self.mode, pattern.mult(u, v), host.mult(self.map[u], self.map[v])))
        })
    }
}

#[inline]
fn pair_ok(mode: MatchMode, mp: u8, mh: u8) -> bool {
    match mode {
        MatchMode::Subgraph => mp <= mh,
        MatchMode::Flat => mp <= mh && (mh == 0 || mp == 1 || mp == mh),
        MatchMode::Induced => (mp > 0) == (mh > 0),
    }
}

struct Plan {
    order: Vec<usize>,
    /// For position i: earlier positions whose pair with `order[i]` must be
    /// checked, with the pattern multiplicity.
    checks: Vec<Vec<(usize, u8)>>,
    /// For position i: an earlier position adjacent in the pattern, if any.
    anchor: Vec<Option<usize>>,
}

fn plan(pattern: &Multigraph, mode: MatchMode) -> Plan {
    let n = pattern.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| pattern.adjacent(u, v)).count();
                (linked, pattern.neighbor_count(v), pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut checks = Vec::with_capacity(n);
    let mut anchor = Vec::with_capacity(n);
    for i in 0..n {
        let p = order[i];
        let mut c = Vec::new();
        let mut a = None;
        for (j, &q) in order[..i].iter().enumerate() {
            let m = pattern.mult(p, q);
            if m > 0 && a.is_none() {
                a = Some(j);
            }
            if m > 0 || mode != MatchMode::Subgraph {
                c.push((j, m));
            }
        }
        checks.push(c);
        anchor.push(a);
    }
    Plan {
        order,
        checks,
        anchor,
    }
}

/// Calls `f` on every embedding (as a pattern-indexed map) until it breaks.
/// Returns true if `f` broke.
pub fn for_each_embedding<F>(host: &Multigraph, pattern: &Multigraph, mode: MatchMode, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = pattern.order();
    if n > host.order() {
        return false;
    }
    let plan = plan(pattern, mode);
    let pdeg: Vec<usize> = plan.order.iter().map(|&p| pattern.degree(p)).collect();
    let pnb: Vec<usize> = plan.order.iter().map(|&p| pattern.neighbor_count(p)).collect();
    let hdeg: Vec<usize> = (0..host.order()).map(|v| host.degree(v)).collect();
    let hnb: Vec<usize> = (0..host.order()).map(|v| host.neighbor_count(v)).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; host.order()];
    let mut map = vec![0usize; n];
    let mut ctx = Ctx {
        host,
        mode,
        plan: &plan,
        pdeg: &pdeg,
        pnb: &pnb,
        hdeg: &hdeg,
        hnb: &hnb,
    };
    ctx.extend(0, &mut image, &mut used, &mut |img: &[usize]| {
        for (i, &p) in plan.order.iter().enumerate() {
            map[p] = img[i];
        }
        f(&map)
    })
    .is_break()
}

struct Ctx<'a> {
    host: &'a Multigraph,
    mode: MatchMode,
    plan: &'a Plan,
    pdeg: &'a [usize],
    pnb: &'a [usize],
    hdeg: &'a [usize],
    hnb: &'a [usize],
}

impl Ctx<'_> {
    fn extend(
        &mut self,
        i: usize,
        image: &mut [usize],
        used: &mut [bool],
        emit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == image.len() {
            return emit(image);
        }
        let candidates: Vec<usize> = match self.plan.anchor[i] {
            Some(j) => self.host.neighbors(image[j]).collect(),
            None => (0..self.host.order()).collect(),
        };
        for h in candidates {
            if used[h] {
                continue;
            }
            if self.mode != MatchMode::Induced && self.hdeg[h] < self.pdeg[i] {
                continue;
            }
            if self.hnb[h] < self.pnb[i] {
                continue;
            }
            let ok = self.plan.checks[i]
                .iter()
                .all(|&(j, mp)| pair_ok(self.mode, mp, self.host.mult(h, image[j])));
            if !ok {
                continue;
            }
            image[i] = h;
            used[h] = true;
            let r = self.extend(i + 1, image, used, emit);
            used[h] = false;
            r?;
        }
        ControlFlow::Continue(())
    }
}

pub fn find_embedding(host: &Multigraph, pattern: &Multigraph, mode: MatchMode) -> Option<Embedding> {
    let mut found = None;
    for_each_embedding(host, pattern, mode, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found.map(|map| Embedding { map, mode })
}

pub fn induced_subgraph_search(host: &Multigraph, pattern: &Multigraph) -> Option<Embedding> {
    find_embedding(host, pattern, MatchMode::Induced)
}

/// All embeddings, one per distinct image (vertex set plus the host pairs
/// used with their pattern multiplicities), so pattern automorphisms do not
/// produce duplicates.
pub fn find_all(host: &Multigraph, pattern: &Multigraph, mode: MatchMode) -> Vec<Embedding> {
    let mut seen: HashSet<Vec<(usize, usize, u8)>> = HashSet::new();
    let mut out = Vec::new();
    let n = pattern.order();
    for_each_embedding(host, pattern, mode, |m| {
        let mut key: Vec<(usize, usize, u8)> = m.iter().map(|&h| (h, h, 0)).collect();
        for u in 0..n {
            for v in u + 1..n {
                let mp = pattern.mult(u, v);
                if mp > 0 {
                    let (a, b) = (m[u].min(m[v]), m[u].max(m[v]));
                    key.push((a, b, mp));
                }
            }
        }
        key.sort_unstable();
        if seen.insert(key) {
            out.push(Embedding {
                map: m.to_vec(),
                mode,
            });
        }
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn diamond_in_k4() {
        let k4 = patterns::k4().graph;
        let e = find_embedding(&k4, &patterns::diamond().graph, MatchMode::Subgraph).unwrap();
        assert!(e.is_valid(&k4, &patterns::diamond().graph));
        assert!(find_embedding(&k4, &patterns::diamond().graph, MatchMode::Induced).is_none());
        // 6 diamonds: one per missing edge
        assert_eq!(find_all(&k4, &patterns::diamond().graph, MatchMode::Subgraph).len(), 6);
    }

    #[test]
    fn c9m_flat() {
        let c9 = patterns::cycle(9).graph;
        let c9m = patterns::c9m().graph;
        assert!(find_embedding(&c9, &c9m, MatchMode::Flat).is_none());
        let e = find_embedding(&c9m, &c9m, MatchMode::Flat).unwrap();
        assert!(e.is_valid(&c9m, &c9m));
        assert!(find_embedding(&c9m, &c9, MatchMode::Flat).is_some());
    }

    #[test]
    fn flat_rejects_omitted_edges() {
        let k3 = patterns::k3().graph;
        let p3 = Multigraph::from_simple_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(find_embedding(&k3, &p3, MatchMode::Subgraph).is_some());
        assert!(find_embedding(&k3, &p3, MatchMode::Flat).is_none());
        let tri3 = Multigraph::build(3, &[(0, 1, 3), (1, 2, 1), (0, 2, 1)]).unwrap();
        let tri2 = Multigraph::build(3, &[(0, 1, 2), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(find_embedding(&tri3, &tri2, MatchMode::Subgraph).is_some());
        assert!(find_embedding(&tri3, &tri2, MatchMode::Flat).is_none());
    }
}
