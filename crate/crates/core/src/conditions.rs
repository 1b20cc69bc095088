//! The search gate and the fourteen membership conditions.
//!
//! `|N(x)|` below is the number of distinct neighbours and `d(x)` the degree
//! counted with multiplicity.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use crate::linegraph::{gamma3_witness, PatternWitness};
use crate::multigraph::{Multigraph, Pair};
use crate::patterns::{self, for_each_embedding, MatchMode, Pattern};

/// Evidence that a condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Pattern(PatternWitness),
    Vertex(usize),
    Edge(Pair, u8),
    Count(usize),
    /// An essential cut (edge copies) and a nontrivial component it leaves.
    Cut(Vec<Pair>, Vec<usize>),
    /// An essential cutvertex and a nontrivial component of `H - u`.
    CutVertex(usize, Vec<usize>),
    NoCycle,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(v: &[usize]) -> String {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            Witness::Pattern(p) => write!(f, "{p}"),
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Edge((u, v), m) => write!(f, "edge {u}-{v} mult {m}"),
            Witness::Count(c) => write!(f, "count {c}"),
            Witness::Cut(cut, comp) => {
                let e: Vec<String> = cut.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "cut {} component {}", e.join(","), list(comp))
            }
            Witness::CutVertex(u, comp) => write!(f, "cutvertex {u} component {}", list(comp)),
            Witness::NoCycle => write!(f, "no cycle of length 7..10"),
        }
    }
}

/// Extensions that may repair a violation: add a vertex adjacent to some
/// vertex of `add_to`, or multiply an edge of `multiply`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attempt {
    pub add_to: Vec<usize>,
    pub multiply: Vec<Pair>,
}

/// A failed condition with its witness and the matching repair attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub witness: Witness,
    pub attempt: Attempt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from(w: Option<Witness>) -> Self {
        Verdict {
            pass: w.is_none(),
            witness: w,
        }
    }
}

/// Verdicts for the gate and for conditions (1)..(14).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub gate: Verdict,
    /// `conditions[k - 1]` is the verdict for condition `k`.
    pub conditions: Vec<Verdict>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.gate.pass && self.conditions.iter().all(|v| v.pass)
    }

    pub fn condition(&self, k: u8) -> &Verdict {
        &self.conditions[k as usize - 1]
    }

    /// `cond gate|<k> pass|fail [<witness>]` lines.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(15);
        let fmt_line = |name: String, v: &Verdict| match &v.witness {
            Some(w) => format!("cond {name} fail {w}"),
            None => format!("cond {name} pass"),
        };
        out.push(fmt_line("gate".into(), &self.gate));
        for (k, v) in self.conditions.iter().enumerate() {
            out.push(fmt_line((k + 1).to_string(), v));
        }
        out
    }
}

fn first_embedding(host: &Multigraph, p: &Pattern, mode: MatchMode) -> Option<PatternWitness> {
    patterns::find_embedding(host, &p.graph, mode).map(|e| PatternWitness::from_embedding(p, &e))
}

fn witness_of(p: &Pattern, map: &[usize]) -> PatternWitness {
    PatternWitness {
        pattern: p.name.clone(),
        map: p.labels.iter().cloned().zip(map.iter().copied()).collect(),
    }
}

/// The gate: no subgraph with line graph Γ₃, no diamond subgraph and no
/// flat `C9M`.
pub fn gate(m: &Multigraph) -> Verdict {
    Verdict::from(gate_witness(m))
}

fn gate_witness(m: &Multigraph) -> Option<Witness> {
    gamma3_witness(m)
        .or_else(|| first_embedding(m, &patterns::diamond(), MatchMode::Subgraph))
        .or_else(|| first_embedding(m, &patterns::c9m(), MatchMode::Flat))
        .map(Witness::Pattern)
}

pub fn gate_passes(m: &Multigraph) -> bool {
    gate_witness(m).is_none()
}

/// Violations of condition `k`; empty iff it holds. Conditions (1)..(5)
/// carry empty attempts.
pub fn violations_of(m: &Multigraph, k: u8) -> Vec<Violation> {
    let plain = |w: Witness| Violation {
        condition: k,
        witness: w,
        attempt: Attempt {
            add_to: Vec::new(),
            multiply: Vec::new(),
        },
    };
    let n = m.order();
    match k {
        1 => (0..n)
            .filter(|&v| m.neighbors(v).filter(|&u| m.degree(u) == 1).count() > 2)
            .map(|v| plain(Witness::Vertex(v)))
            .collect(),
        2 => m
            .edges()
            .into_iter()
            .filter(|&(_, _, mu)| mu > 2)
            .map(|(u, v, mu)| plain(Witness::Edge((u, v), mu)))
            .collect(),
        3 => {
            if (7..=10).any(|c| m.contains_cycle_subgraph(c)) {
                Vec::new()
            } else {
                vec![plain(Witness::NoCycle)]
            }
        }
        4 => first_embedding(m, &patterns::diamond(), MatchMode::Subgraph)
            .map(|w| plain(Witness::Pattern(w)))
            .into_iter()
            .collect(),
        5 => first_embedding(m, &patterns::c9m(), MatchMode::Flat)
            .map(|w| plain(Witness::Pattern(w)))
            .into_iter()
            .collect(),
        6 => condition6(m),
        7 => condition7(m),
        8 => condition8(m),
        9 => small_neighbourhood(m, &patterns::k3(), 9),
        10 => small_neighbourhood(m, &patterns::d1(), 10),
        11 => condition11(m),
        12 => condition12(m),
        13 => condition13(m),
        14 => condition14(m),
        _ => panic!("condition {k} out of range 1..=14"),
    }
}

fn condition6(m: &Multigraph) -> Vec<Violation> {
    let count = (0..m.order()).filter(|&v| m.degree(v) >= 3).count();
    if count >= 10 {
        return Vec::new();
    }
    let multiply: Vec<Pair> = m
        .simple_nonpendant_edges()
        .into_iter()
        .filter(|&(u, v)| m.degree(u) == 2 || m.degree(v) == 2)
        .collect();
    vec![Violation {
        condition: 6,
        witness: Witness::Count(count),
        attempt: Attempt {
            add_to: (0..m.order()).collect(),
            multiply,
        },
    }]
}

fn condition7(m: &Multigraph) -> Vec<Violation> {
    let es: BTreeSet<Pair> = m.simple_nonpendant_edges().into_iter().collect();
    let mut out = Vec::new();
    for cut in m.small_essential_cuts() {
        let mut multiply: Vec<Pair> = cut.edges.iter().copied().filter(|e| es.contains(e)).collect();
        multiply.dedup();
        for comp in &cut.nontrivial {
            out.push(Violation {
                condition: 7,
                witness: Witness::Cut(cut.edges.clone(), comp.clone()),
                attempt: Attempt {
                    add_to: comp.clone(),
                    multiply: multiply.clone(),
                },
            });
        }
    }
    out
}

fn condition8(m: &Multigraph) -> Vec<Violation> {
    let mut out = Vec::new();
    for u in 0..m.order() {
        let comps = m.nontrivial_components_without(u);
        if comps.len() < 2 {
            continue;
        }
        for c in comps {
            out.push(Violation {
                condition: 8,
                witness: Witness::CutVertex(u, c.clone()),
                attempt: Attempt {
                    add_to: c,
                    multiply: Vec::new(),
                },
            });
        }
    }
    out
}

fn dedup_by_attempt(mut v: Vec<Violation>) -> Vec<Violation> {
    let mut seen = BTreeSet::new();
    v.retain(|x| seen.insert(x.attempt.clone()));
    v
}

/// (9) and (10): every vertex of a `K3` (resp. `D1`) subgraph has at least
/// three neighbours.
fn small_neighbourhood(m: &Multigraph, p: &Pattern, k: u8) -> Vec<Violation> {
    let mut out = Vec::new();
    for_each_embedding(m, &p.graph, MatchMode::Subgraph, |map| {
        for &u in map {
            if m.neighbor_count(u) == 2 {
                out.push(Violation {
                    condition: k,
                    witness: Witness::Pattern(witness_of(p, map)),
                    attempt: Attempt {
                        add_to: vec![u],
                        multiply: Vec::new(),
                    },
                });
            }
        }
        ControlFlow::Continue(())
    });
    dedup_by_attempt(out)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn condition11(m: &Multigraph) -> Vec<Violation> {
    let p = patterns::k24();
    let mut out = Vec::new();
    for_each_embedding(m, &p.graph, MatchMode::Subgraph, |map| {
        let ws = &map[2..6];
        if ws.iter().map(|&w| m.neighbor_count(w)).sum::<usize>() <= 8 {
            out.push(Violation {
                condition: 11,
                witness: Witness::Pattern(witness_of(&p, map)),
                attempt: Attempt {
                    add_to: sorted(ws.to_vec()),
                    multiply: Vec::new(),
                },
            });
        }
        ControlFlow::Continue(())
    });
    dedup_by_attempt(out)
}

fn condition12(m: &Multigraph) -> Vec<Violation> {
    let p = patterns::d2();
    let (c1, c2, d1, d2) = (p.role("c1"), p.role("c2"), p.role("d1"), p.role("d2"));
    let mut out = Vec::new();
    for_each_embedding(m, &p.graph, MatchMode::Subgraph, |map| {
        for (x, y) in [(c1, c2), (d1, d2)] {
            if m.neighbor_count(map[x]) + m.neighbor_count(map[y]) <= 4 {
                out.push(Violation {
                    condition: 12,
                    witness: Witness::Pattern(witness_of(&p, map)),
                    attempt: Attempt {
                        add_to: sorted(vec![map[x], map[y]]),
                        multiply: Vec::new(),
                    },
                });
            }
        }
        ControlFlow::Continue(())
    });
    dedup_by_attempt(out)
}

/// Whether each of the given groups of pairs has a host edge of
/// multiplicity at least 2.
fn each_group_doubled(m: &Multigraph, groups: &[Vec<Pair>]) -> bool {
    groups
        .iter()
        .all(|g| g.iter().any(|&(a, b)| m.mult(a, b) >= 2))
}

fn condition13(m: &Multigraph) -> Vec<Violation> {
    let p = patterns::k4p4();
    let mut out = Vec::new();
    for_each_embedding(m, &p.graph, MatchMode::Subgraph, |map| {
        let (v1, v2) = (map[0], map[1]);
        let paths: Vec<Vec<Pair>> = (0..4)
            .map(|i| {
                let (w, z) = (map[2 + i], map[6 + i]);
                vec![(v1, w), (w, z), (z, v2)]
            })
            .collect();
        if !each_group_doubled(m, &paths) {
            return ControlFlow::Continue(());
        }
        let internal = &map[2..10];
        if internal.iter().map(|&u| m.neighbor_count(u)).sum::<usize>() <= 16 {
            out.push(Violation {
                condition: 13,
                witness: Witness::Pattern(PatternWitness {
                    pattern: "4P4M".into(),
                    map: p.labels.iter().cloned().zip(map.iter().copied()).collect(),
                }),
                attempt: Attempt {
                    add_to: sorted(internal.to_vec()),
                    multiply: Vec::new(),
                },
            });
        }
        ControlFlow::Continue(())
    });
    dedup_by_attempt(out)
}

fn condition14(m: &Multigraph) -> Vec<Violation> {
    let p = patterns::k24();
    let mut out = Vec::new();
    for_each_embedding(m, &p.graph, MatchMode::Subgraph, |map| {
        let (v1, v2) = (map[0], map[1]);
        let ws = &map[2..6];
        let spokes: Vec<Vec<Pair>> = ws.iter().map(|&w| vec![(w, v1), (w, v2)]).collect();
        if !each_group_doubled(m, &spokes) {
            return ControlFlow::Continue(());
        }
        let mut u: BTreeSet<usize> = BTreeSet::new();
        for &w in ws {
            u.extend(m.neighbors(w).filter(|&x| x != v1 && x != v2));
        }
        if u.iter().all(|&x| m.degree(x) < 2) {
            let mut add_to: Vec<usize> = u.into_iter().collect();
            add_to.extend_from_slice(ws);
            out.push(Violation {
                condition: 14,
                witness: Witness::Pattern(PatternWitness {
                    pattern: "K2,4M".into(),
                    map: p.labels.iter().cloned().zip(map.iter().copied()).collect(),
                }),
                attempt: Attempt {
                    add_to: sorted(add_to),
                    multiply: Vec::new(),
                },
            });
        }
        ControlFlow::Continue(())
    });
    dedup_by_attempt(out)
}

/// Verdict for condition `k` with its first witness.
pub fn condition(m: &Multigraph, k: u8) -> Verdict {
    Verdict::from(violations_of(m, k).into_iter().next().map(|v| v.witness))
}

pub fn check_all(m: &Multigraph) -> ConditionReport {
    ConditionReport {
        gate: gate(m),
        conditions: (1..=14).map(|k| condition(m, k)).collect(),
    }
}

/// Every violation of conditions (6)..(14), with its repair attempt.
pub fn violations(m: &Multigraph) -> Vec<Violation> {
    (6..=14).flat_map(|k| violations_of(m, k)).collect()
}

/// Membership test: gate and all fourteen conditions hold.
pub fn is_member(m: &Multigraph) -> bool {
    check_all(m).all_pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::*;

    #[test]
    fn gate_examples() {
        assert!(gate(&wagner().graph).pass);
        assert!(!gate(&k4().graph).pass);
        let v = gate(&c9m().graph);
        assert!(!v.pass);
        match v.witness {
            Some(Witness::Pattern(p)) => assert_eq!(p.pattern, "C9M"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn condition_examples() {
        let w = wagner().graph;
        assert_eq!(condition(&w, 6).witness, Some(Witness::Count(8)));
        let star = Multigraph::from_simple_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(condition(&star, 1).witness, Some(Witness::Vertex(0)));
        let k = k24().graph;
        assert!(!condition(&k, 11).pass);
        let v = violations_of(&k, 11);
        assert_eq!(v[0].attempt.add_to, vec![2, 3, 4, 5]);
        assert!(condition(&w, 7).pass && condition(&w, 8).pass);
        assert!(condition(&w, 3).pass);
        assert!(!condition(&k4().graph, 3).pass);
    }

    #[test]
    fn lexmin_violation_of_wagner_is_six() {
        let v = violations(&wagner().graph);
        assert_eq!(v[0].condition, 6);
        assert_eq!(v[0].witness, Witness::Count(8));
        assert!(v[0].attempt.multiply.is_empty());
    }

    #[test]
    fn multi_families() {
        let f = k24_multi([[true, false]; 4]).unwrap().graph;
        let v = violations_of(&f, 14);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].attempt.add_to, vec![2, 3, 4, 5]);
        let g = k4p4_multi([[false, true, false]; 4]).unwrap().graph;
        assert_eq!(violations_of(&g, 13).len(), 1);
        assert!(violations_of(&k4p4().graph, 13).is_empty());
    }

    #[test]
    fn report_lines() {
        let r = check_all(&wagner().graph);
        let lines = r.lines();
        assert_eq!(lines.len(), 15);
        assert_eq!(lines[0], "cond gate pass");
        assert_eq!(lines[6], "cond 6 fail count 8");
    }
}
