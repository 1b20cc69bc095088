//! Starting graphs: a spanning cycle `C_k` plus chords, `7 <= k <= 10`,
//! with no cycle of length `7..k` as a subgraph.

use std::collections::BTreeMap;

use crate::multigraph::{CanonicalForm, Multigraph};

/// Seed counts for `k = 7, 8, 9, 10`, up to isomorphism.
pub const SEED_COUNTS: [usize; 4] = [383, 35, 5, 3];

/// Seeds on `k` vertices, canonically ordered.
pub fn seeds_of_order(k: usize) -> Vec<Multigraph> {
    assert!((7..=10).contains(&k), "seed order {k} outside 7..=10");
    let mut g = Multigraph::new(k);
    for i in 0..k {
        g.set_raw(i, (i + 1) % k, 1);
    }
    let chords: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 2..k).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u == 0 && v == k - 1))
        .collect();
    let mut found = BTreeMap::new();
    grow(&mut g, &chords, 0, k, &mut found);
    found.into_values().collect()
}

fn grow(
    g: &mut Multigraph,
    chords: &[(usize, usize)],
    start: usize,
    k: usize,
    found: &mut BTreeMap<CanonicalForm, Multigraph>,
) {
    let (form, canon) = {
        let c = g.canonical_graph();
        (c.canonical_form(), c)
    };
    found.entry(form).or_insert(canon);
    for i in start..chords.len() {
        let (u, v) = chords[i];
        g.set_raw(u, v, 1);
        if !(7..k).any(|l| g.contains_cycle_subgraph(l)) {
            grow(g, chords, i + 1, k, found);
        }
        g.set_raw(u, v, 0);
    }
}

/// All seeds, by increasing order.
pub fn seeds() -> Vec<Multigraph> {
    (7..=10).flat_map(seeds_of_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_contains_the_cycle() {
        let s = seeds_of_order(7);
        let c7 = crate::patterns::cycle(7).graph;
        assert!(s.iter().any(|g| g.is_isomorphic(&c7)));
        assert_eq!(s.len(), SEED_COUNTS[0]);
    }

    #[test]
    fn eight_has_no_seven_cycle() {
        for g in seeds_of_order(8) {
            assert!(!g.contains_cycle_subgraph(7));
            assert!(g.contains_cycle_subgraph(8));
        }
    }

    #[test]
    fn counts() {
        let got: Vec<usize> = (7..=10).map(|k| seeds_of_order(k).len()).collect();
        assert_eq!(got, SEED_COUNTS);
    }
}
