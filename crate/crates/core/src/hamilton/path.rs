//! Hamiltonian `(a, b)`-paths by backtracking over `u128` vertex sets.

use crate::error::{GraphError, Result};
use crate::multigraph::Multigraph;

pub(crate) const MAX_ORDER: usize = 128;

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

fn members(mut s: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            v
        })
    })
}

struct Solver {
    adj: Vec<u128>,
    target: usize,
    path: Vec<usize>,
    disc: Vec<u8>,
    forced: Vec<u8>,
    nodes: u64,
    limit: u64,
}

/// Depth-first search over the open vertices computing low points. It
/// fails as soon as some vertex separates the open set in a way no
/// hamiltonian path from the root to the target allows.
struct Blocks<'a> {
    adj: &'a [u128],
    open: u128,
    target: usize,
    disc: &'a mut [u8],
    seen: u128,
    time: u8,
}

impl Blocks<'_> {
    /// Low point of `x` and whether its subtree holds the target, or `None`
    /// on failure.
    fn visit(&mut self, x: usize, root: bool) -> Option<(u8, bool)> {
        self.time += 1;
        self.disc[x] = self.time;
        let mut low = self.time;
        let mut has_target = x == self.target;
        let mut separated = 0;
        let mut children = 0;
        for y in members(self.adj[x] & self.open) {
            if self.seen & bit(y) == 0 {
                self.seen |= bit(y);
                children += 1;
                let (ly, ty) = self.visit(y, false)?;
                low = low.min(ly);
                has_target |= ty;
                if !root && ly >= self.disc[x] {
                    separated += 1;
                    if !ty || separated > 1 {
                        return None;
                    }
                }
            } else {
                low = low.min(self.disc[y]);
            }
        }
        if root && children > 1 {
            return None;
        }
        Some((low, has_target))
    }
}

impl Solver {
    /// Whether the unvisited set `rest` can still be covered by a path from
    /// the current end `v` to the target.
    fn feasible(&mut self, v: usize, rest: u128) -> bool {
        if rest == 0 {
            return v == self.target;
        }
        let open = rest | bit(v);
        for x in members(open) {
            self.forced[x] = 0;
        }
        for x in members(rest) {
            let nb = self.adj[x] & open;
            let avail = nb.count_ones();
            if x == self.target {
                if avail < 1 {
                    return false;
                }
                continue;
            }
            if avail < 2 {
                return false;
            }
            if avail == 2 {
                for w in members(nb) {
                    self.forced[w] += 1;
                    let cap = if w == v || w == self.target { 1 } else { 2 };
                    if self.forced[w] > cap {
                        return false;
                    }
                }
            }
        }
        let mut b = Blocks {
            adj: &self.adj,
            open,
            target: self.target,
            disc: &mut self.disc,
            seen: bit(v),
            time: 0,
        };
        b.visit(v, true).is_some() && b.seen == open
    }

    fn extend(&mut self, v: usize, rest: u128) -> Outcome {
        if rest == 0 {
            return if v == self.target { Outcome::Found } else { Outcome::Exhausted };
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Outcome::Stopped;
        }
        let open = rest | bit(v);
        let mut cand = self.adj[v] & rest;
        if rest != bit(self.target) {
            cand &= !bit(self.target);
        }
        // A neighbour of `v` whose only two usable neighbours include `v`
        // must come next.
        let forced: Vec<usize> = members(cand)
            .filter(|&x| (self.adj[x] & open).count_ones() == 2)
            .collect();
        let mut order: Vec<usize> = match forced.len() {
            0 => members(cand).collect(),
            1 => forced,
            _ => return Outcome::Exhausted,
        };
        order.sort_by_key(|&x| ((self.adj[x] & rest).count_ones(), x));
        for x in order {
            let next = rest & !bit(x);
            if !self.feasible(x, next) {
                continue;
            }
            self.path.push(x);
            match self.extend(x, next) {
                Outcome::Exhausted => {}
                done => return done,
            }
            self.path.pop();
        }
        Outcome::Exhausted
    }

    /// One bounded search from `from` to `self.target`.
    fn attempt(&mut self, from: usize, limit: u64) -> Outcome {
        let all = if self.adj.len() == MAX_ORDER { u128::MAX } else { bit(self.adj.len()) - 1 };
        let rest = all & !bit(from);
        self.path.clear();
        self.path.push(from);
        self.nodes = 0;
        self.limit = limit;
        if !self.feasible(from, rest) {
            return Outcome::Exhausted;
        }
        self.extend(from, rest)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Found,
    Exhausted,
    Stopped,
}

pub(crate) fn adjacency_sets(g: &Multigraph) -> Result<Vec<u128>> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).fold(0u128, |s, u| s | bit(u)))
        .collect())
}

/// A hamiltonian path from `a` to `b`, or `None` once the search space is
/// exhausted. Multiplicities are ignored.
pub fn hamiltonian_path(g: &Multigraph, a: usize, b: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    for v in [a, b] {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
    }
    if a == b {
        return Err(GraphError::Precondition("path endpoints must differ".into()));
    }
    let adj = adjacency_sets(g)?;
    let mut s = Solver {
        adj,
        target: b,
        path: Vec::with_capacity(n),
        disc: vec![0; n],
        forced: vec![0; n],
        nodes: 0,
        limit: 0,
    };
    // Both directions, alternately, under a node limit that doubles each
    // round; an exhausted search in either direction settles the pair.
    let mut limit = 1 << 10;
    loop {
        for (from, to) in [(a, b), (b, a)] {
            s.target = to;
            match s.attempt(from, limit) {
                Outcome::Found => {
                    let mut p = std::mem::take(&mut s.path);
                    if from == b {
                        p.reverse();
                    }
                    return Ok(Some(p));
                }
                Outcome::Exhausted => return Ok(None),
                Outcome::Stopped => {}
            }
        }
        limit = limit.saturating_mul(2);
    }
}
