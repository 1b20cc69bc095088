//! Named graphs and multigraphs, with role labels on their vertices.

mod matcher;

pub use matcher::{
    find_all, find_embedding, for_each_embedding, induced_subgraph_search, Embedding, MatchMode,
};

use crate::error::{GraphError, Result};
use crate::multigraph::Multigraph;

/// A multigraph whose vertices carry role labels (`a`, `b`, `c1`, `w3`, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub name: String,
    pub graph: Multigraph,
    /// Label of every vertex, indexed by vertex id.
    pub labels: Vec<String>,
}

impl Pattern {
    fn labelled(name: &str, labels: &[&str], edges: &[(&str, &str, u32)]) -> Pattern {
        let id = |l: &str| {
            labels
                .iter()
                .position(|&x| x == l)
                .unwrap_or_else(|| panic!("unknown label {l} in {name}"))
        };
        let triples: Vec<(usize, usize, u32)> =
            edges.iter().map(|&(a, b, m)| (id(a), id(b), m)).collect();
        Pattern {
            name: name.to_string(),
            graph: Multigraph::build(labels.len(), &triples).expect("well-formed builder"),
            labels: labels.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn numbered(name: &str, graph: Multigraph) -> Pattern {
        Pattern {
            name: name.to_string(),
            labels: (0..graph.order()).map(|i| i.to_string()).collect(),
            graph,
        }
    }

    /// Vertex carrying `label`.
    pub fn role(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("pattern {} has no role {label}", self.name))
    }
}

fn simple(name: &str, labels: &[&str], edges: &[(&str, &str)]) -> Pattern {
    let e: Vec<(&str, &str, u32)> = edges.iter().map(|&(a, b)| (a, b, 1)).collect();
    Pattern::labelled(name, labels, &e)
}

pub fn claw() -> Pattern {
    simple("K1,3", &["c", "x", "y", "z"], &[("c", "x"), ("c", "y"), ("c", "z")])
}

pub fn k3() -> Pattern {
    simple("K3", &["x", "y", "z"], &[("x", "y"), ("y", "z"), ("x", "z")])
}

/// The cycle `x0 x1 ... x(k-1)`.
pub fn cycle(k: usize) -> Pattern {
    assert!(k >= 3, "cycles need at least 3 vertices");
    let e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut p = Pattern::numbered(&format!("C{k}"), Multigraph::from_simple_edges(k, &e).unwrap());
    p.labels = (0..k).map(|i| format!("x{i}")).collect();
    p
}

/// `C9` with the edges `x0x1`, `x3x4`, `x6x7` doubled.
pub fn c9m() -> Pattern {
    let mut p = cycle(9);
    p.name = "C9M".into();
    for i in [0, 3, 6] {
        p.graph.set_mult(i, i + 1, 2).unwrap();
    }
    p
}

/// `Γ_i`: two triangles `t1 t2 p1` and `p(i+1) t3 t4` joined by the path
/// `p1 ... p(i+1)` of length `i`.
pub fn gamma(i: usize) -> Pattern {
    let mut labels: Vec<String> = vec!["t1".into(), "t2".into()];
    labels.extend((1..=i + 1).map(|k| format!("p{k}")));
    labels.extend(["t3".into(), "t4".into()]);
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let last = format!("p{}", i + 1);
    let mut edges: Vec<(String, String)> = vec![
        ("t1".into(), "t2".into()),
        ("t1".into(), "p1".into()),
        ("t2".into(), "p1".into()),
        ("t3".into(), "t4".into()),
        (last.clone(), "t3".into()),
        (last, "t4".into()),
    ];
    edges.extend((1..=i).map(|k| (format!("p{k}"), format!("p{}", k + 1))));
    let e: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    simple(&format!("Gamma{i}"), &refs, &e)
}

/// `Z_i`: a triangle with a pendant path of `i` further vertices.
pub fn z(i: usize) -> Pattern {
    assert!(i >= 1);
    let mut e = vec![(0, 1), (1, 2), (0, 2), (2, 3)];
    e.extend((3..2 + i).map(|k| (k, k + 1)));
    Pattern::numbered(&format!("Z{i}"), Multigraph::from_simple_edges(3 + i, &e).unwrap())
}

/// The diamond `K4 - e` with the missing edge `c1c2`.
pub fn diamond() -> Pattern {
    simple(
        "D",
        &["a", "b", "c1", "c2"],
        &[("a", "b"), ("a", "c1"), ("a", "c2"), ("b", "c1"), ("b", "c2")],
    )
}

/// The diamond with `ac1` subdivided by `d1`.
pub fn d1() -> Pattern {
    simple(
        "D1",
        &["a", "b", "c1", "c2", "d1"],
        &[("a", "b"), ("a", "d1"), ("d1", "c1"), ("a", "c2"), ("b", "c1"), ("b", "c2")],
    )
}

/// The diamond with `ac1` and `ac2` subdivided by `d1` and `d2`.
pub fn d2() -> Pattern {
    simple(
        "D2",
        &["a", "b", "c1", "c2", "d1", "d2"],
        &[
            ("a", "b"),
            ("a", "d1"),
            ("d1", "c1"),
            ("a", "d2"),
            ("d2", "c2"),
            ("b", "c1"),
            ("b", "c2"),
        ],
    )
}

pub fn k24() -> Pattern {
    let labels = ["v1", "v2", "w1", "w2", "w3", "w4"];
    let mut e = Vec::new();
    for w in &labels[2..] {
        e.push(("v1", *w));
        e.push(("v2", *w));
    }
    simple("K2,4", &labels, &e)
}

/// Four internally disjoint paths `v1 wi zi v2`.
pub fn k4p4() -> Pattern {
    let labels = ["v1", "v2", "w1", "w2", "w3", "w4", "z1", "z2", "z3", "z4"];
    let mut e = Vec::new();
    for i in 0..4 {
        e.push(("v1", labels[2 + i]));
        e.push((labels[2 + i], labels[6 + i]));
        e.push((labels[6 + i], "v2"));
    }
    simple("4P4", &labels, &e)
}

/// A member of `K^M_{2,4}`; `doubled[i]` lists which of `wi v1`, `wi v2`
/// are double edges.
pub fn k24_multi(doubled: [[bool; 2]; 4]) -> Result<Pattern> {
    let mut p = k24();
    for (i, d) in doubled.iter().enumerate() {
        if !d[0] && !d[1] {
            return Err(GraphError::Precondition(format!(
                "spoke w{} has no double edge",
                i + 1
            )));
        }
        for (j, &dd) in d.iter().enumerate() {
            if dd {
                p.graph.set_mult(2 + i, j, 2)?;
            }
        }
    }
    p.name = "K2,4M".into();
    Ok(p)
}

/// A member of `K^M_{4P4}`; `doubled[i]` marks which of `v1wi`, `wizi`,
/// `ziv2` are double edges.
pub fn k4p4_multi(doubled: [[bool; 3]; 4]) -> Result<Pattern> {
    let mut p = k4p4();
    for (i, d) in doubled.iter().enumerate() {
        if !d.iter().any(|&x| x) {
            return Err(GraphError::Precondition(format!(
                "path {} has no double edge",
                i + 1
            )));
        }
        let (v1, w, zz, v2) = (0, 2 + i, 6 + i, 1);
        for (k, (a, b)) in [(v1, w), (w, zz), (zz, v2)].into_iter().enumerate() {
            if d[k] {
                p.graph.set_mult(a, b, 2)?;
            }
        }
    }
    p.name = "4P4M".into();
    Ok(p)
}

/// The Wagner graph: the cycle `0..7` plus the chords `(i, i+4)`.
pub fn wagner() -> Pattern {
    let mut e: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.extend((0..4).map(|i| (i, i + 4)));
    Pattern::numbered("W", Multigraph::from_simple_edges(8, &e).unwrap())
}

/// `W` with one pendant edge at every vertex; leaf `8 + i` hangs on `i`.
pub fn wagner_plus() -> Pattern {
    let mut g = wagner().graph;
    for i in 0..8 {
        let x = g.add_vertex();
        g.add_edge(i, x, 1).unwrap();
    }
    Pattern::numbered("W+", g)
}

/// `W` with the cycle edge `01` subdivided by `8` and `8-1` doubled.
pub fn wagner_1() -> Pattern {
    let (mut g, x) = wagner().graph.subdivide(0, 1).unwrap();
    g.add_edge(x, 1, 1).unwrap();
    Pattern::numbered("W1", g)
}

/// `W` with the chord `04` subdivided by `8` and `8-4` doubled.
pub fn wagner_2() -> Pattern {
    let (mut g, x) = wagner().graph.subdivide(0, 4).unwrap();
    g.add_edge(x, 4, 1).unwrap();
    Pattern::numbered("W2", g)
}

/// `W` with each chord `(i, i+4)` subdivided by `8 + i`.
pub fn wagner_3() -> Pattern {
    let mut g = wagner().graph;
    for i in 0..4 {
        g = g.subdivide(i, i + 4).unwrap().0;
    }
    Pattern::numbered("W3", g)
}

/// The wheel with hub `h` and a rim of `k` vertices.
pub fn wheel(k: usize) -> Pattern {
    let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    e.extend((0..k).map(|i| (i, k)));
    let mut p = Pattern::numbered(&format!("W{k}"), Multigraph::from_simple_edges(k + 1, &e).unwrap());
    p.labels[k] = "h".into();
    p
}

/// Square of the path `0 1 2 3 4 5`.
pub fn p6_squared() -> Pattern {
    let mut e = Vec::new();
    for i in 0..6 {
        for j in i + 1..(i + 3).min(6) {
            e.push((i, j));
        }
    }
    Pattern::numbered("P6^2", Multigraph::from_simple_edges(6, &e).unwrap())
}

/// `P6^2` plus the edge between the two ends of the path.
pub fn p6_squared_plus() -> Pattern {
    let mut p = p6_squared();
    p.graph.add_edge(0, 5, 1).unwrap();
    p.name = "P6^2+".into();
    p
}

/// The seven minimal forbidden induced subgraphs for line graphs of
/// multigraphs.
pub fn bermond_meyer() -> Vec<Pattern> {
    let mut g1 = claw();
    g1.name = "G1".into();
    let mut g2 = p6_squared();
    g2.name = "G2".into();
    let mut g3 = wheel(5);
    g3.name = "G3".into();
    let mut g4 = p6_squared_plus();
    g4.name = "G4".into();
    let g5 = simple(
        "G5",
        &["L", "l", "r", "R", "T", "B"],
        &[
            ("L", "l"),
            ("l", "r"),
            ("r", "R"),
            ("R", "T"),
            ("T", "L"),
            ("L", "B"),
            ("B", "l"),
            ("l", "T"),
            ("T", "r"),
            ("r", "B"),
            ("B", "R"),
        ],
    );
    let g6 = simple(
        "G6",
        &["A", "L", "R", "P", "Q", "X", "Y"],
        &[
            ("A", "L"),
            ("L", "R"),
            ("R", "A"),
            ("A", "P"),
            ("P", "L"),
            ("L", "Y"),
            ("Y", "R"),
            ("R", "Q"),
            ("Q", "A"),
            ("Y", "P"),
            ("P", "Q"),
            ("Q", "Y"),
            ("L", "X"),
            ("X", "P"),
            ("R", "X"),
            ("X", "Q"),
            ("A", "X"),
            ("X", "Y"),
        ],
    );
    let g7 = simple(
        "G7",
        &["T", "M", "L", "R", "l", "r", "B"],
        &[
            ("T", "L"),
            ("R", "T"),
            ("B", "L"),
            ("L", "M"),
            ("M", "R"),
            ("R", "B"),
            ("B", "l"),
            ("l", "M"),
            ("M", "r"),
            ("r", "B"),
            ("L", "R"),
            ("L", "l"),
            ("l", "r"),
            ("r", "R"),
            ("T", "M"),
            ("M", "B"),
        ],
    );
    vec![g1, g2, g3, g4, g5, g6, g7]
}

/// Path `q1 ... q5` with the leaves `s1, s2` on `q1` and `s3, s4` on `q5`.
pub fn f1() -> Pattern {
    simple(
        "F1",
        &["s1", "s2", "q1", "q2", "q3", "q4", "q5", "s3", "s4"],
        &[
            ("s1", "q1"),
            ("s2", "q1"),
            ("q1", "q2"),
            ("q2", "q3"),
            ("q3", "q4"),
            ("q4", "q5"),
            ("q5", "s3"),
            ("q5", "s4"),
        ],
    )
}

/// `F1` with the two leaves at `q1` merged into `s12` on a double edge.
pub fn f2() -> Pattern {
    Pattern::labelled(
        "F2",
        &["s12", "q1", "q2", "q3", "q4", "q5", "s3", "s4"],
        &[
            ("s12", "q1", 2),
            ("q1", "q2", 1),
            ("q2", "q3", 1),
            ("q3", "q4", 1),
            ("q4", "q5", 1),
            ("q5", "s3", 1),
            ("q5", "s4", 1),
        ],
    )
}

/// `F1` with both leaf pairs merged into double edges.
pub fn f3() -> Pattern {
    Pattern::labelled(
        "F3",
        &["s12", "q1", "q2", "q3", "q4", "q5", "s34"],
        &[
            ("s12", "q1", 2),
            ("q1", "q2", 1),
            ("q2", "q3", 1),
            ("q3", "q4", 1),
            ("q4", "q5", 1),
            ("q5", "s34", 2),
        ],
    )
}

/// The multitriangle: a triangle with one double edge.
pub fn multitriangle() -> Pattern {
    Pattern::labelled("K3M", &["x", "y", "z"], &[("x", "y", 1), ("y", "z", 1), ("x", "z", 2)])
}

pub fn k4() -> Pattern {
    let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    Pattern::numbered("K4", Multigraph::from_simple_edges(4, &e).unwrap())
}

/// Every fixed builder, for audit listings.
pub fn catalogue() -> Vec<Pattern> {
    let all_double = [[true, true]; 4];
    let all_double_paths = [[true, true, true]; 4];
    let mut out = vec![
        claw(),
        k3(),
        multitriangle(),
        k4(),
        gamma(0),
        gamma(1),
        gamma(2),
        gamma(3),
        gamma(4),
        gamma(5),
        z(1),
        z(2),
        diamond(),
        d1(),
        d2(),
        k24(),
        k4p4(),
        k24_multi(all_double).unwrap(),
        k4p4_multi(all_double_paths).unwrap(),
        c9m(),
        f1(),
        f2(),
        f3(),
        wagner(),
        wagner_plus(),
        wagner_1(),
        wagner_2(),
        wagner_3(),
        wheel(4),
        wheel(5),
        p6_squared(),
        p6_squared_plus(),
    ];
    out.extend((7..=10).map(cycle));
    out.extend(bermond_meyer());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let g = gamma(3).graph;
        assert_eq!((g.order(), g.size()), (8, 9));
        let f = f3().graph;
        assert_eq!(f.order(), 7);
        assert_eq!(f.edge_classes().multiple.len(), 2);
        assert_eq!(wagner_3().graph.order(), 12);
        assert_eq!(wagner_3().graph.size(), 16);
        let c = wagner_plus().graph.edge_classes();
        assert_eq!((c.pendant.len(), c.simple.len(), c.multiple.len()), (8, 12, 0));
        assert_eq!(wagner_1().graph.size(), 14);
        assert_eq!(wagner_2().graph.edge_classes().multiple, vec![(4, 8)]);
    }

    #[test]
    fn bermond_meyer_shapes() {
        let sizes: Vec<(usize, usize)> = bermond_meyer()
            .iter()
            .map(|p| (p.graph.order(), p.graph.size()))
            .collect();
        assert_eq!(sizes, vec![(4, 3), (6, 9), (6, 10), (6, 10), (6, 11), (7, 18), (7, 16)]);
    }

    #[test]
    fn families_need_a_double_edge_per_spoke() {
        assert!(k24_multi([[true, false], [false, true], [true, true], [false, false]]).is_err());
        assert!(k4p4_multi([[true, false, false]; 4]).is_ok());
        assert!(k4p4_multi([[false, false, false]; 4]).is_err());
    }

    #[test]
    fn f_patterns_are_distinct() {
        assert!(!f1().graph.is_isomorphic(&f2().graph));
        assert!(!f2().graph.is_isomorphic(&f3().graph));
    }

    #[test]
    fn roles() {
        let d = d2();
        assert!(d.graph.adjacent(d.role("d1"), d.role("c1")));
        assert!(!d.graph.adjacent(d.role("a"), d.role("c1")));
    }
}
