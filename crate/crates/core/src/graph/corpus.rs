//! Named graphs: the published cospectral pairs plus small reference families.
//!
//! The pairs are stored as literal edge lists; where a graph6 label was
//! published it is kept alongside and checked against the edge list.

use super::graph6::parse_graph6;
use super::Graph;

/// Published values attached to a corpus graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    /// Sorted descending.
    pub degree_multiset: Option<Vec<usize>>,
    /// `(k, [w^k] det(I - wT))`
    pub det_coefficient: Option<(usize, i64)>,
    /// Sixth correction coefficient as `(numerator, denominator)`.
    pub c6: Option<(i64, i64)>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub graph6_label: Option<&'static str>,
    pub expected: Expected,
}

const HOLY_G: [(usize, usize); 22] = [
    (0, 1), (0, 6), (0, 7), (0, 8), (0, 10), (1, 4), (1, 9), (1, 10), (2, 6), (3, 4),
    (3, 5), (3, 11), (4, 6), (4, 8), (5, 6), (5, 9), (5, 11), (6, 7), (6, 9), (7, 10),
    (8, 11), (9, 11),
];

const HOLY_H: [(usize, usize); 22] = [
    (0, 3), (0, 9), (0, 10), (1, 4), (1, 5), (1, 9), (1, 11), (2, 6), (3, 4), (3, 10),
    (4, 6), (4, 8), (5, 7), (5, 8), (5, 11), (6, 7), (6, 9), (6, 10), (6, 11), (7, 11),
    (8, 10), (9, 10),
];

const EX_A_G1: [(usize, usize); 12] = [
    (0, 5), (0, 7), (1, 6), (1, 7), (1, 8), (2, 6), (2, 8), (3, 6), (3, 8), (4, 7),
    (5, 8), (7, 8),
];

const EX_A_H1: [(usize, usize); 12] = [
    (0, 5), (0, 8), (1, 5), (1, 8), (2, 6), (2, 7), (2, 8), (3, 6), (3, 7), (4, 8),
    (5, 7), (7, 8),
];

const EX_B_G2: [(usize, usize); 18] = [
    (0, 3), (0, 4), (0, 6), (0, 7), (0, 8), (1, 4), (1, 5), (1, 6), (1, 8),
    (2, 5), (2, 6), (2, 7), (2, 8), (3, 6), (3, 7), (4, 7), (4, 8), (5, 8),
];

const EX_B_H2: [(usize, usize); 18] = [
    (0, 3), (0, 4), (0, 5), (0, 8), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
    (2, 6), (2, 7), (2, 8), (3, 5), (3, 7), (3, 8), (4, 6), (4, 8), (6, 7),
];

fn literal(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("corpus edge list is simple")
}

fn entry(name: &'static str, graph: Graph) -> CorpusEntry {
    CorpusEntry {
        name,
        graph,
        graph6_label: None,
        expected: Expected::default(),
    }
}

pub fn corpus() -> Vec<CorpusEntry> {
    let holy = vec![6, 5, 4, 4, 4, 4, 4, 3, 3, 3, 3, 1];
    let ex_a = vec![5, 4, 3, 3, 2, 2, 2, 2, 1];
    let ex_b = vec![5, 5, 4, 4, 4, 4, 4, 3, 3];
    let mut out = vec![
        CorpusEntry {
            name: "holyG",
            graph: literal(12, &HOLY_G),
            graph6_label: None,
            expected: Expected {
                degree_multiset: Some(holy.clone()),
                det_coefficient: Some((6, -28)),
                c6: Some((38663, 32)),
            },
        },
        CorpusEntry {
            name: "holyH",
            graph: literal(12, &HOLY_H),
            graph6_label: None,
            expected: Expected {
                degree_multiset: Some(holy),
                det_coefficient: Some((6, -30)),
                c6: Some((38599, 32)),
            },
        },
        CorpusEntry {
            name: "exA_G1",
            graph: literal(9, &EX_A_G1),
            graph6_label: Some("H?ABePt"),
            expected: Expected {
                degree_multiset: Some(ex_a.clone()),
                det_coefficient: Some((8, 16)),
                c6: None,
            },
        },
        CorpusEntry {
            name: "exA_H1",
            graph: literal(9, &EX_A_H1),
            graph6_label: Some("H?B@`jh"),
            expected: Expected {
                degree_multiset: Some(ex_a),
                det_coefficient: Some((8, 20)),
                c6: None,
            },
        },
        CorpusEntry {
            name: "exB_G2",
            graph: literal(9, &EX_B_G2),
            graph6_label: Some("HCpfdrk"),
            expected: Expected {
                degree_multiset: Some(ex_b.clone()),
                ..Expected::default()
            },
        },
        CorpusEntry {
            name: "exB_H2",
            graph: literal(9, &EX_B_H2),
            graph6_label: Some("HCrRRfw"),
            expected: Expected {
                degree_multiset: Some(ex_b),
                ..Expected::default()
            },
        },
        entry("K2", Graph::complete(2)),
        entry("P3", Graph::path(3)),
        entry("K3", Graph::complete(3)),
    ];
    const CYCLES: [&str; 5] = ["C4", "C5", "C6", "C7", "C8"];
    for (i, name) in CYCLES.into_iter().enumerate() {
        out.push(entry(name, Graph::cycle(i + 4)));
    }
    out.push(entry("K4", Graph::complete(4)));
    out.push(entry("Petersen", Graph::petersen()));
    const STARS: [&str; 4] = ["K1_3", "K1_4", "K1_5", "K1_6"];
    for (i, name) in STARS.into_iter().enumerate() {
        out.push(entry(name, Graph::star(i + 3)));
    }
    out
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// Corpus entries whose published graph6 label disagrees with the stored
/// edge list.
pub fn label_mismatches() -> Vec<&'static str> {
    corpus()
        .into_iter()
        .filter(|e| {
            e.graph6_label
                .is_some_and(|l| parse_graph6(l).map_or(true, |g| g != e.graph))
        })
        .map(|e| e.name)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_match_edge_lists() {
        assert!(label_mismatches().is_empty(), "{:?}", label_mismatches());
    }

    #[test]
    fn names_are_unique() {
        let c = corpus();
        let mut names: Vec<_> = c.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn published_shapes() {
        let g = lookup("holyG").unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (12, 22));
        assert_eq!(lookup("exB_H2").unwrap().graph.m(), 18);
        for e in corpus() {
            if let Some(d) = &e.expected.degree_multiset {
                assert_eq!(&e.graph.degree_data().multiset, d, "{}", e.name);
            }
        }
    }

    #[test]
    fn holy_pair_is_not_isomorphic() {
        let g = lookup("holyG").unwrap().graph;
        let h = lookup("holyH").unwrap().graph;
        let tg = g.vertex_triple_multiset();
        let th = h.vertex_triple_multiset();
        assert_ne!(tg, th);
        let witness = crate::graph::VertexTriple {
            degree: 3,
            neighbor_degrees: vec![3, 5, 6],
            triangles: 2,
        };
        assert!(tg.contains(&witness));
        assert!(!th.contains(&witness));
        assert!(g.is_connected() && g.is_regular().is_none());
    }
}
