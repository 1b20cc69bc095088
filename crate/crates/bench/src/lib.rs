//! Fixed inputs shared by the benchmarks.

use gamma3::linegraph::line_graph;
use gamma3::patterns;
use gamma3::Multigraph;

/// Named multigraphs of increasing size, used as preimages.
pub fn preimages() -> Vec<(String, Multigraph)> {
    [
        patterns::k4(),
        patterns::wagner(),
        patterns::wagner_3(),
        patterns::wagner_plus(),
        patterns::f1(),
    ]
    .into_iter()
    .map(|p| (p.name, p.graph))
    .collect()
}

/// Line graphs of [`preimages`].
pub fn line_graphs() -> Vec<(String, Multigraph)> {
    preimages()
        .into_iter()
        .map(|(name, h)| (format!("L({name})"), line_graph(&h).expect("nonempty").graph))
        .collect()
}

/// `g` with its vertices relabelled by a fixed rotation.
pub fn rotated(g: &Multigraph, by: usize) -> Multigraph {
    let n = g.order();
    let perm: Vec<usize> = (0..n).map(|i| (i + by) % n).collect();
    g.permuted(&perm)
}
