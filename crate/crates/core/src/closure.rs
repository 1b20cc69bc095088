//! Local completion, eligible vertices, the closure of a claw-free graph,
//! local connectivity and feasibility.

use crate::error::{GraphError, Result};
use crate::hamilton::hamilton_connected;
use crate::linegraph::{is_simplicial, PatternWitness};
use crate::multigraph::Multigraph;
use crate::patterns::{self, induced_subgraph_search};

/// Vertices completed on the way from `G` to its closure, in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClosureTrace {
    pub steps: Vec<usize>,
}

fn check_vertex(g: &Multigraph, x: usize) -> Result<()> {
    if x >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    Ok(())
}

fn require_simple(g: &Multigraph) -> Result<()> {
    if !g.is_simple() {
        return Err(GraphError::Precondition("simple graph required".into()));
    }
    Ok(())
}

/// `G*_x`: every missing edge inside `N(x)` added.
pub fn local_completion(g: &Multigraph, x: usize) -> Result<Multigraph> {
    require_simple(g)?;
    check_vertex(g, x)?;
    let nb: Vec<usize> = g.neighbors(x).collect();
    let mut out = g.clone();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !out.adjacent(a, b) {
                out.add_edge(a, b, 1)?;
            }
        }
    }
    Ok(out)
}

/// An induced claw as `[centre, leaf, leaf, leaf]`.
pub fn find_claw(g: &Multigraph) -> Option<[usize; 4]> {
    for c in 0..g.order() {
        let nb: Vec<usize> = g.neighbors(c).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.adjacent(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.adjacent(a, d) && !g.adjacent(b, d) {
                        return Some([c, a, b, d]);
                    }
                }
            }
        }
    }
    None
}

fn require_claw_free(g: &Multigraph) -> Result<()> {
    match find_claw(g) {
        Some(w) => Err(GraphError::ClawFound(w)),
        None => Ok(()),
    }
}

fn eligible(g: &Multigraph, x: usize) -> bool {
    let nb: Vec<usize> = g.neighbors(x).collect();
    !nb.is_empty() && !is_simplicial(g, x) && g.induced(&nb).is_connected()
}

/// Vertices whose neighbourhood is connected and not complete.
pub fn eligible_vertices(g: &Multigraph) -> Result<Vec<usize>> {
    require_simple(g)?;
    require_claw_free(g)?;
    Ok((0..g.order()).filter(|&x| eligible(g, x)).collect())
}

/// `cl(G)`, completing the smallest eligible vertex at each step.
pub fn ryjacek_closure(g: &Multigraph) -> Result<(Multigraph, ClosureTrace)> {
    closure_by(g, |el| el[0])
}

/// `cl(G)` with `pick` choosing the next vertex among the currently
/// eligible ones (given in increasing order).
pub fn closure_by<F>(g: &Multigraph, mut pick: F) -> Result<(Multigraph, ClosureTrace)>
where
    F: FnMut(&[usize]) -> usize,
{
    let mut cur = g.clone();
    let mut trace = ClosureTrace::default();
    loop {
        let el = eligible_vertices(&cur)?;
        if el.is_empty() {
            return Ok((cur, trace));
        }
        let x = pick(&el);
        if !el.contains(&x) {
            return Err(GraphError::Precondition(format!("vertex {x} is not eligible")));
        }
        cur = local_completion(&cur, x)?;
        trace.steps.push(x);
    }
}

/// Whether `<N(x)>` is `k`-connected.
pub fn locally_k_connected(g: &Multigraph, x: usize, k: usize) -> bool {
    let nb: Vec<usize> = g.neighbors(x).collect();
    g.induced(&nb).simple_underlying().is_k_connected(k)
}

/// Whether `G*_x` is still not Hamilton-connected. `G` must be claw-free
/// and not Hamilton-connected, and `x` nonsimplicial.
pub fn is_feasible(g: &Multigraph, x: usize) -> Result<bool> {
    require_simple(g)?;
    check_vertex(g, x)?;
    require_claw_free(g)?;
    if is_simplicial(g, x) {
        return Err(GraphError::Precondition(format!("vertex {x} is simplicial")));
    }
    if hamilton_connected(g)?.connected {
        return Err(GraphError::Precondition(
            "feasibility is undefined in a Hamilton-connected graph".into(),
        ));
    }
    Ok(!hamilton_connected(&local_completion(g, x)?)?.connected)
}

/// All feasible vertices of a claw-free, non-Hamilton-connected graph.
pub fn feasible_vertices(g: &Multigraph) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for x in 0..g.order() {
        if !is_simplicial(g, x) && is_feasible(g, x)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// The first of `K_{1,3}, W5, W4, P6^2, P6^2+` induced in `g`, if any.
pub fn closure_obstruction(g: &Multigraph) -> Option<PatternWitness> {
    let simple = g.simple_underlying();
    [
        patterns::claw(),
        patterns::wheel(5),
        patterns::wheel(4),
        patterns::p6_squared(),
        patterns::p6_squared_plus(),
    ]
    .iter()
    .find_map(|p| induced_subgraph_search(&simple, &p.graph).map(|e| PatternWitness::from_embedding(p, &e)))
}
