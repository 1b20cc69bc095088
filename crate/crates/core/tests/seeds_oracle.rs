use std::collections::BTreeSet;

use gamma3::search::{seeds_of_order, SEED_COUNTS};
use gamma3::Multigraph;

/// Whether the graph with adjacency bitmasks `adj` has a cycle through all
/// vertices of `set` (bitmask DP over paths from the lowest vertex).
fn spans_cycle(adj: &[u32], set: u32) -> bool {
    let start = set.trailing_zeros() as usize;
    let full = set;
    let n = adj.len();
    let mut reach = vec![0u32; 1 << n];
    reach[1 << start] = 1 << start;
    for mask in 0..1u32 << n {
        if mask & full != mask || mask & (1 << start) == 0 || reach[mask as usize] == 0 {
            continue;
        }
        for end in 0..n {
            if reach[mask as usize] >> end & 1 == 0 {
                continue;
            }
            let mut next = adj[end] & full & !mask;
            while next != 0 {
                let v = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << v) as usize] |= 1 << v;
            }
        }
    }
    let ends = reach[full as usize];
    (0..n).any(|v| ends >> v & 1 == 1 && adj[v] >> start & 1 == 1)
}

fn has_cycle_of_length(adj: &[u32], len: usize) -> bool {
    let n = adj.len();
    (0..1u32 << n).filter(|s| s.count_ones() as usize == len).any(|s| spans_cycle(adj, s))
}

#[test]
fn eight_vertex_seeds_match_chord_subset_enumeration() {
    let k = 8;
    let chords: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 2..k).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u == 0 && v == k - 1))
        .collect();
    assert_eq!(chords.len(), 20);
    let mut bad = vec![false; 1 << chords.len()];
    let mut forms = BTreeSet::new();
    for mask in 0..1usize << chords.len() {
        if (0..chords.len()).any(|i| mask >> i & 1 == 1 && bad[mask ^ 1 << i]) {
            bad[mask] = true;
            continue;
        }
        let mut adj = vec![0u32; k];
        let mut g = Multigraph::new(k);
        let edges = (0..k)
            .map(|i| (i, (i + 1) % k))
            .chain((0..chords.len()).filter(|i| mask >> i & 1 == 1).map(|i| chords[i]));
        for (u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            g.add_edge(u, v, 1).unwrap();
        }
        if has_cycle_of_length(&adj, 7) {
            bad[mask] = true;
        } else {
            forms.insert(g.canonical_form());
        }
    }
    let seeds: BTreeSet<_> = seeds_of_order(8).iter().map(|g| g.canonical_form()).collect();
    assert_eq!(forms.len(), SEED_COUNTS[1]);
    assert_eq!(forms, seeds);
}
