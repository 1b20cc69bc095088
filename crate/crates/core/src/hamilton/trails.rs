//! Trail searches on a multigraph `H`, working on individual edge copies
//! (index `i` is the `i`-th entry of `H.edge_copies()`, which is also
//! vertex `i` of `L(H)`).

use std::collections::HashSet;

use crate::error::{GraphError, Result};
use crate::multigraph::{Multigraph, Pair};

const MAX_COPIES: usize = 64;

struct Copies {
    ends: Vec<Pair>,
    /// Edge copies at each vertex.
    at: Vec<Vec<usize>>,
}

impl Copies {
    fn of(h: &Multigraph) -> Result<Self> {
        let ends = h.edge_copies();
        if ends.len() > MAX_COPIES {
            return Err(GraphError::TooLarge(ends.len()));
        }
        let mut at = vec![Vec::new(); h.order()];
        for (i, &(u, v)) in ends.iter().enumerate() {
            at[u].push(i);
            at[v].push(i);
        }
        Ok(Copies { ends, at })
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Whether every edge copy has an endpoint in `set` (a vertex bitmask).
    fn dominated_by(&self, set: u128) -> bool {
        self.ends
            .iter()
            .all(|&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1)
    }

    /// Vertices incident with the copies in `used`.
    fn touched(&self, used: u64) -> u128 {
        let mut s = 0u128;
        let mut m = used;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = self.ends[e];
            s |= 1 << u | 1 << v;
        }
        s
    }
}

fn at_least_three(h: &Multigraph) -> Result<()> {
    if h.size() < 3 {
        return Err(GraphError::Precondition(format!(
            "trail criteria need at least 3 edges, got {}",
            h.size()
        )));
    }
    if h.order() > 128 {
        return Err(GraphError::TooLarge(h.order()));
    }
    Ok(())
}

/// Whether `H` has a closed trail dominating every edge. A single vertex
/// counts as a trivial closed trail.
pub fn dct_exists(h: &Multigraph) -> Result<bool> {
    at_least_three(h)?;
    let c = Copies::of(h)?;
    for s in 0..h.order() {
        if c.dominated_by(1 << s) {
            return Ok(true);
        }
        let mut failed = HashSet::new();
        if closed_from(&c, s, s, 0, &mut failed) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn closed_from(c: &Copies, s: usize, v: usize, used: u64, failed: &mut HashSet<(usize, u64)>) -> bool {
    if used != 0 && v == s && c.dominated_by(c.touched(used)) {
        return true;
    }
    if !failed.insert((v, used)) {
        return false;
    }
    for &e in &c.at[v] {
        if used >> e & 1 == 0 && closed_from(c, s, c.other(e, v), used | 1 << e, failed) {
            return true;
        }
    }
    false
}

/// Whether `H` has an `(e, f)`-trail whose interior vertices dominate every
/// edge. For `e == f` the trail is closed: it leaves along `e` and returns
/// to the same end, and all of its vertices count as interior.
pub fn idt_exists(h: &Multigraph, e: usize, f: usize) -> Result<bool> {
    at_least_three(h)?;
    let c = Copies::of(h)?;
    for x in [e, f] {
        if x >= c.ends.len() {
            return Err(GraphError::Precondition(format!(
                "edge copy {x} out of range for {} copies",
                c.ends.len()
            )));
        }
    }
    let (u, v) = c.ends[e];
    if e == f {
        let mut failed = HashSet::new();
        return Ok(closed_from(&c, u, v, 1 << e, &mut failed));
    }
    for (start, first) in [(u, v), (v, u)] {
        let mut s = IdtSearch {
            c: &c,
            start,
            last: f,
            failed: HashSet::new(),
        };
        if s.walk(first, 1 << e, false) {
            return Ok(true);
        }
    }
    Ok(false)
}

struct IdtSearch<'a> {
    c: &'a Copies,
    start: usize,
    last: usize,
    failed: HashSet<(usize, u64, bool)>,
}

impl IdtSearch<'_> {
    /// At `v` after the copies in `used`; `start_inside` records whether the
    /// starting vertex has been passed through since.
    fn walk(&mut self, v: usize, used: u64, start_inside: bool) -> bool {
        let mut interior = self.c.touched(used) | 1 << v;
        if !start_inside && v != self.start {
            interior &= !(1u128 << self.start);
        }
        let (a, b) = self.c.ends[self.last];
        if (a == v || b == v) && self.c.dominated_by(interior) {
            return true;
        }
        if !self.failed.insert((v, used, start_inside)) {
            return false;
        }
        let inside = start_inside || v == self.start;
        for &g in &self.c.at[v] {
            if g != self.last && used >> g & 1 == 0 && self.walk(self.c.other(g, v), used | 1 << g, inside) {
                return true;
            }
        }
        false
    }
}

/// Whether every pair of distinct edge copies has an IDT, which is
/// equivalent to `L(H)` being Hamilton-connected.
pub fn hamilton_connected_via_idt(h: &Multigraph) -> Result<bool> {
    at_least_three(h)?;
    let m = h.size();
    for e in 0..m {
        for f in e + 1..m {
            if !idt_exists(h, e, f)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `H(e1, e2)`: each chosen copy replaced by a path through a new vertex
/// (two new vertices on the same copy when `e1 == e2`). Returns the graph
/// and the two new vertices.
fn split(h: &Multigraph, ends: &[Pair], e1: usize, e2: usize) -> (Multigraph, usize, usize) {
    let mut g = h.clone();
    let (u1, v1) = ends[e1];
    g.remove_edge_copy(u1, v1).expect("copy present");
    let x = g.add_vertex();
    if e1 == e2 {
        let y = g.add_vertex();
        for (a, b) in [(u1, x), (x, y), (y, v1)] {
            g.add_edge(a, b, 1).expect("simple edge");
        }
        return (g, x, y);
    }
    let (u2, v2) = ends[e2];
    g.remove_edge_copy(u2, v2).expect("copy present");
    let y = g.add_vertex();
    for (a, b) in [(u1, x), (x, v1), (u2, y), (y, v2)] {
        g.add_edge(a, b, 1).expect("simple edge");
    }
    (g, x, y)
}

fn spanning_trail(g: &Multigraph, x: usize, y: usize) -> Result<bool> {
    let c = Copies::of(g)?;
    let all: u128 = if g.order() == 128 { u128::MAX } else { (1u128 << g.order()) - 1 };
    let mut failed = HashSet::new();
    Ok(spanning_from(&c, all, y, x, 0, &mut failed))
}

fn spanning_from(c: &Copies, all: u128, y: usize, v: usize, used: u64, failed: &mut HashSet<(usize, u64)>) -> bool {
    if v == y {
        return c.touched(used) == all;
    }
    if !failed.insert((v, used)) {
        return false;
    }
    for &e in &c.at[v] {
        if used >> e & 1 == 0 && spanning_from(c, all, y, c.other(e, v), used | 1 << e, failed) {
            return true;
        }
    }
    false
}

/// Whether `H(e1, e2)` has a spanning trail between its two new vertices
/// for every pair of edge copies `e1, e2`, equal ones included.
pub fn strongly_spanning_trailable(h: &Multigraph) -> Result<bool> {
    if h.size() < 2 || !h.is_connected() {
        return Err(GraphError::Precondition(
            "strong spanning trailability needs a connected multigraph with 2 edges".into(),
        ));
    }
    let ends = h.edge_copies();
    if ends.len() + 2 > MAX_COPIES {
        return Err(GraphError::TooLarge(ends.len()));
    }
    for e1 in 0..ends.len() {
        for e2 in e1..ends.len() {
            let (g, x, y) = split(h, &ends, e1, e2);
            if !spanning_trail(&g, x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn dct_examples() {
        assert!(dct_exists(&patterns::cycle(5).graph).unwrap());
        assert!(dct_exists(&patterns::claw().graph).unwrap());
        let p4 = Multigraph::from_simple_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!dct_exists(&p4).unwrap());
        assert!(dct_exists(&Multigraph::from_simple_edges(2, &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn idt_examples() {
        let claw = patterns::claw().graph;
        for e in 0..3 {
            for f in 0..3 {
                if e != f {
                    assert!(idt_exists(&claw, e, f).unwrap());
                }
            }
        }
        let c5 = patterns::cycle(5).graph;
        assert!(idt_exists(&c5, 0, 0).unwrap());
        assert!(idt_exists(&c5, 0, 9).is_err());
        assert!(hamilton_connected_via_idt(&patterns::wagner().graph).unwrap());
        assert!(!hamilton_connected_via_idt(&patterns::wagner_plus().graph).unwrap());
    }

    #[test]
    fn sst_examples() {
        assert!(strongly_spanning_trailable(&patterns::k4().graph).unwrap());
        let doubled = Multigraph::build(3, &[(0, 1, 2), (1, 2, 2), (0, 2, 2)]).unwrap();
        assert!(strongly_spanning_trailable(&doubled).unwrap());
        assert!(!strongly_spanning_trailable(&patterns::multitriangle().graph).unwrap());
        assert!(!strongly_spanning_trailable(&patterns::wagner().graph).unwrap());
    }
}
