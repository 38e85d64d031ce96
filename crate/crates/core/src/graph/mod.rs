//! Simple undirected graphs on vertices `0..n`.

pub mod canon;
pub mod corpus;
pub mod generate;
pub mod graph6;
pub mod random;

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Finite simple graph. The sorted edge list is the single source of truth.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from any edge order; pairs are normalised to `a < b`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {{{},{}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph { n, edges: es })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn degree_data(&self) -> DegreeData {
        let degrees = self.degrees();
        let mut multiset = degrees.clone();
        multiset.sort_unstable_by(|a, b| b.cmp(a));
        let max = multiset.first().copied().unwrap_or(0);
        DegreeData {
            degrees,
            multiset,
            max,
        }
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
            .expect("relabelling preserves simplicity")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.neighbors();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &u in &adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!cv);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == cv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    pub fn triangle_count(&self) -> usize {
        let adj = self.neighbors();
        self.edges
            .iter()
            .map(|&(a, b)| adj[a].iter().filter(|&&c| c > b && self.has_edge(b, c)).count())
            .sum()
    }

    /// Sorted multiset of `(degree, sorted neighbour degrees, triangles through v)`.
    pub fn vertex_triple_multiset(&self) -> Vec<VertexTriple> {
        let adj = self.neighbors();
        let deg = self.degrees();
        let mut out: Vec<VertexTriple> = (0..self.n)
            .map(|v| {
                let mut nd: Vec<usize> = adj[v].iter().map(|&u| deg[u]).collect();
                nd.sort_unstable();
                let mut tri = 0;
                for (i, &a) in adj[v].iter().enumerate() {
                    for &b in &adj[v][i + 1..] {
                        if self.has_edge(a, b) {
                            tri += 1;
                        }
                    }
                }
                VertexTriple {
                    degree: deg[v],
                    neighbor_degrees: nd,
                    triangles: tri,
                }
            })
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexTriple {
    pub degree: usize,
    pub neighbor_degrees: Vec<usize>,
    pub triangles: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    pub degrees: Vec<usize>,
    /// Sorted descending.
    pub multiset: Vec<usize>,
    pub max: usize,
}
