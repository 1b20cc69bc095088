#![allow(dead_code)]

use gamma3::Multigraph;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Simple graph on `n` vertices, each pair an edge with probability `p`.
pub fn random_simple(rng: &mut impl Rng, n: usize, p: f64) -> Multigraph {
    let mut g = Multigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v, 1).unwrap();
            }
        }
    }
    g
}

/// Connected simple graph: a random spanning tree plus extra edges.
pub fn random_connected_simple(rng: &mut impl Rng, n: usize, p: f64) -> Multigraph {
    let mut g = random_simple(rng, n, p);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let u = order[i];
        let v = order[rng.gen_range(0..i)];
        if !g.adjacent(u, v) {
            g.add_edge(u, v, 1).unwrap();
        }
    }
    g
}

/// Multigraph without isolated vertices, with exactly `copies` edge copies
/// on at most `max_n` vertices and multiplicities at most 3.
pub fn random_multigraph(rng: &mut impl Rng, max_n: usize, copies: usize) -> Multigraph {
    let least = (2..).find(|&n: &usize| 3 * n * (n - 1) / 2 >= copies).unwrap();
    let n = rng.gen_range(least.min(max_n)..=max_n);
    let mut g = Multigraph::new(n);
    let mut placed = 0;
    while placed < copies {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.mult(u, v) >= 3 {
            continue;
        }
        g.add_edge(u, v, 1).unwrap();
        placed += 1;
    }
    let keep: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    g.induced(&keep)
}

/// Connected multigraph with no isolated vertices.
pub fn random_connected_multigraph(rng: &mut impl Rng, max_n: usize, max_copies: usize) -> Multigraph {
    loop {
        let copies = rng.gen_range(1..=max_copies);
        let g = random_multigraph(rng, max_n, copies);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn is_ham_path(g: &Multigraph, p: &[usize], a: usize, b: usize) -> bool {
    let mut seen = vec![false; g.order()];
    p.len() == g.order()
        && p.first() == Some(&a)
        && p.last() == Some(&b)
        && p.iter().all(|&v| v < g.order() && !std::mem::replace(&mut seen[v], true))
        && p.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

/// Hamiltonian `(a, b)`-path existence by trying every vertex order.
pub fn brute_ham_path(g: &Multigraph, a: usize, b: usize) -> bool {
    let inner: Vec<usize> = (0..g.order()).filter(|&v| v != a && v != b).collect();
    let k = inner.len();
    inner.into_iter().permutations(k).any(|mid| {
        let mut p = vec![a];
        p.extend(mid);
        p.push(b);
        p.windows(2).all(|w| g.adjacent(w[0], w[1]))
    })
}

pub fn brute_hamilton_connected(g: &Multigraph) -> bool {
    (0..g.order()).tuple_combinations().all(|(a, b)| brute_ham_path(g, a, b))
}

/// Smallest essential edge cut by removing every subset of edge copies;
/// `None` when no edge set is essential.
pub fn brute_essential_edge_connectivity(h: &Multigraph) -> Option<usize> {
    let copies = h.edge_copies();
    let m = copies.len();
    (0..=m).find(|&size| {
        (0..m).combinations(size).any(|cut| {
            let mut g = h.clone();
            for i in cut {
                let (u, v) = copies[i];
                g.remove_edge_copy(u, v).unwrap();
            }
            g.components()
                .iter()
                .filter(|c| c.iter().tuple_combinations().any(|(&u, &v)| g.adjacent(u, v)))
                .count()
                >= 2
        })
    })
}

/// Every 3-edge-connected multigraph on 4..=`max_n` vertices, with
/// minimum degree 3 and multiplicities at most 2, built from random
/// samples; deduplicated by canonical form.
pub fn three_edge_connected_sample(rng: &mut impl Rng, max_n: usize, tries: usize) -> Vec<Multigraph> {
    let mut found = std::collections::BTreeMap::new();
    for _ in 0..tries {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.3..0.8);
        let mut g = random_connected_simple(rng, n, p);
        for (u, v, _) in g.edges() {
            if rng.gen_bool(0.15) {
                g.add_edge(u, v, 1).unwrap();
            }
        }
        if edge_connectivity_at_least(&g, 3) {
            found.entry(g.canonical_form()).or_insert(g);
        }
    }
    found.into_values().collect()
}

/// Ordinary edge connectivity by bipartitions.
pub fn edge_connectivity_at_least(g: &Multigraph, k: usize) -> bool {
    let n = g.order();
    if n < 2 {
        return false;
    }
    (1..1u32 << (n - 1)).all(|s| {
        let side = |v: usize| s >> v & 1 == 1;
        let cut: usize = g
            .edges()
            .iter()
            .filter(|&&(u, v, _)| side(u) != side(v))
            .map(|&(_, _, m)| m as usize)
            .sum();
        cut >= k
    })
}

/// Up to `copies` random edge copies on exactly `n` vertices, with
/// multiplicities at most `cap`.
pub fn random_multigraph_on(rng: &mut impl Rng, n: usize, copies: usize, cap: u8) -> Multigraph {
    let mut g = Multigraph::new(n);
    for _ in 0..copies {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && g.mult(u, v) < cap {
            g.add_edge(u, v, 1).unwrap();
        }
    }
    g
}

/// Pair constraint of an embedding mode, written out from the definitions.
pub fn brute_pair_ok(mode: gamma3::patterns::MatchMode, mp: u8, mh: u8) -> bool {
    use gamma3::patterns::MatchMode;
    match mode {
        MatchMode::Subgraph => mp <= mh,
        MatchMode::Flat => {
            if mh == 0 {
                mp == 0
            } else {
                mp == 1 || mp == mh
            }
        }
        MatchMode::Induced => (mp == 0) == (mh == 0),
    }
}

/// Whether some non-pendant edge of `h` has a simplicial line-graph vertex:
/// a copy of a pendant multiedge, or an edge `uv` whose ends have the same
/// single further neighbour.
pub fn simplicial_non_pendant(h: &Multigraph) -> bool {
    h.edges().iter().any(|&(u, v, m)| {
        let others = |x: usize, y: usize| h.neighbors(x).filter(|&z| z != y).collect::<Vec<_>>();
        let (xu, xv) = (others(u, v), others(v, u));
        (m >= 2 && (xu.is_empty() || xv.is_empty())) || (xu.len() == 1 && xu == xv)
    })
}
