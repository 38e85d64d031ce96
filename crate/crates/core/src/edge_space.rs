//! Operators on the directed-edge space of a graph.
//!
//! Undirected edge `i` (in sorted edge order) carries a reference orientation
//! `tail -> head`. Directed edge `2i` is that reference direction and `2i + 1`
//! is its reverse. Every matrix here is built against one fixed
//! [`OrientedEdgeSpace`]; results from different gauges are never mixed.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{int, ExactMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedEdgeSpace {
    graph: Graph,
    orientation: Vec<(usize, usize)>,
}

/// One `+1`/`-1` sign per edge; `-1` reverses that edge's reference direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeSign(Vec<i8>);

impl GaugeSign {
    pub fn new(signs: Vec<i8>) -> Result<GaugeSign> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition("gauge signs must be +1 or -1".into()));
        }
        Ok(GaugeSign(signs))
    }

    pub fn identity(m: usize) -> GaugeSign {
        GaugeSign(vec![1; m])
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// The diagonal matrix `Sigma`.
    pub fn matrix(&self) -> ExactMatrix {
        let d: Vec<Rational> = self.0.iter().map(|&s| int(s as i64)).collect();
        ExactMatrix::diagonal(&d)
    }
}

/// The symmetric, antisymmetric and mixed edge-sector blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorBlocks {
    /// Line-graph adjacency `|D|^T |D| - 2I`.
    pub l: ExactMatrix,
    /// Signed line-graph adjacency `D^T D - 2I`.
    pub s: ExactMatrix,
    /// Mixed transport `|D|^T D` (gauge dependent).
    pub m: ExactMatrix,
}

impl SectorBlocks {
    /// `[[L, -M], [M^T, -S]]`
    pub fn block_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_blocks(&self.l, &-&self.m, &self.m.transpose(), &-&self.s)
            .expect("square blocks of equal size")
    }
}

/// First entry at which an asserted matrix identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub identity: &'static str,
    pub row: usize,
    pub col: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

pub(crate) fn expect_equal(identity: &'static str, lhs: &ExactMatrix, rhs: &ExactMatrix) -> std::result::Result<(), Mismatch> {
    match lhs.first_mismatch(rhs) {
        None => Ok(()),
        Some((row, col, l, r)) => Err(Mismatch {
            identity,
            row,
            col,
            lhs: l,
            rhs: r,
        }),
    }
}

impl OrientedEdgeSpace {
    /// Lexicographic gauge: every edge points from its smaller endpoint.
    pub fn new(graph: &Graph) -> OrientedEdgeSpace {
        OrientedEdgeSpace {
            orientation: graph.edges().to_vec(),
            graph: graph.clone(),
        }
    }

    pub fn with_orientation(graph: &Graph, orientation: Vec<(usize, usize)>) -> Result<OrientedEdgeSpace> {
        if orientation.len() != graph.m() {
            return Err(Error::Dimension("one orientation per edge required".into()));
        }
        for (&(t, h), &(a, b)) in orientation.iter().zip(graph.edges()) {
            if (t.min(h), t.max(h)) != (a, b) {
                return Err(Error::InvalidGraph(format!(
                    "orientation ({t},{h}) does not match edge {{{a},{b}}}"
                )));
            }
        }
        Ok(OrientedEdgeSpace {
            graph: graph.clone(),
            orientation,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn orientation(&self) -> &[(usize, usize)] {
        &self.orientation
    }

    pub fn edge_count(&self) -> usize {
        self.orientation.len()
    }

    pub fn directed_count(&self) -> usize {
        2 * self.orientation.len()
    }

    /// `(tail, head)` of directed edge `d`.
    pub fn directed(&self, d: usize) -> (usize, usize) {
        let (t, h) = self.orientation[d / 2];
        if d % 2 == 0 {
            (t, h)
        } else {
            (h, t)
        }
    }

    pub fn reverse(d: usize) -> usize {
        d ^ 1
    }

    /// Non-backtracking matrix: `T[e, f] = 1` iff `head(e) = tail(f)` and
    /// `f` is not the reverse of `e`.
    pub fn build_hashimoto(&self) -> ExactMatrix {
        let k = self.directed_count();
        let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); self.graph.n()];
        for d in 0..k {
            out_of[self.directed(d).0].push(d);
        }
        let mut t = ExactMatrix::zeros(k, k);
        for e in 0..k {
            let (_, head) = self.directed(e);
            for &f in &out_of[head] {
                if f != Self::reverse(e) {
                    t.set(e, f, Rational::one());
                }
            }
        }
        t
    }

    /// Edge-reversal involution `P`.
    pub fn build_reversal(&self) -> ExactMatrix {
        let k = self.directed_count();
        ExactMatrix::from_fn(k, k, |i, j| {
            if j == Self::reverse(i) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Shared-head-or-shared-tail adjacency on distinct directed edges.
    pub fn build_hl2(&self) -> ExactMatrix {
        let k = self.directed_count();
        ExactMatrix::from_fn(k, k, |i, j| {
            let (ti, hi) = self.directed(i);
            let (tj, hj) = self.directed(j);
            if i != j && (ti == tj || hi == hj) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Oriented incidence `D` (`+1` at the head, `-1` at the tail) and `|D|`.
    pub fn build_incidence(&self) -> (ExactMatrix, ExactMatrix) {
        let n = self.graph.n();
        let m = self.edge_count();
        let mut d = ExactMatrix::zeros(n, m);
        for (i, &(t, h)) in self.orientation.iter().enumerate() {
            d.set(h, i, int(1));
            d.set(t, i, int(-1));
        }
        let abs = d.abs();
        (d, abs)
    }

    pub fn sector_blocks(&self) -> SectorBlocks {
        let (d, abs) = self.build_incidence();
        let two = ExactMatrix::identity(self.edge_count()).scale(&int(2));
        let l = &(&abs.transpose() * &abs) - &two;
        let s = &(&d.transpose() * &d) - &two;
        let m = &abs.transpose() * &d;
        SectorBlocks { l, s, m }
    }

    /// Unnormalised `(+/-)` basis: column `i` is `e_(2i) + e_(2i+1)`, column
    /// `m + i` is `e_(2i) - e_(2i+1)`.
    pub fn sector_basis(&self) -> ExactMatrix {
        let m = self.edge_count();
        let mut u = ExactMatrix::zeros(2 * m, 2 * m);
        for i in 0..m {
            u.set(2 * i, i, int(1));
            u.set(2 * i + 1, i, int(1));
            u.set(2 * i, m + i, int(1));
            u.set(2 * i + 1, m + i, int(-1));
        }
        u
    }

    /// `U^T T U` in the unnormalised basis (twice the orthonormal block form).
    pub fn sector_form(&self) -> ExactMatrix {
        let u = self.sector_basis();
        &(&u.transpose() * &self.build_hashimoto()) * &u
    }

    /// `U^T T U = [[L, -M], [M^T, -S]]`, exactly.
    pub fn verify_sector_identity(&self) -> std::result::Result<(), Mismatch> {
        expect_equal(
            "U^T T U = [[L, -M], [M^T, -S]]",
            &self.sector_form(),
            &self.sector_blocks().block_matrix(),
        )
    }

    /// Off-diagonal blocks of `U^T T U` satisfy `T_{+-} = -(T_{-+})^T`.
    pub fn verify_cross_antisymmetry(&self) -> std::result::Result<(), Mismatch> {
        let m = self.edge_count();
        let f = self.sector_form();
        let pm = f.block(0, m, m, m);
        let mp = f.block(m, 0, m, m);
        expect_equal("T_{+-} = -(T_{-+})^T", &pm, &-&mp.transpose())
    }

    /// Flips every edge whose sign is `-1`.
    pub fn regauge(&self, sigma: &GaugeSign) -> Result<OrientedEdgeSpace> {
        if sigma.signs().len() != self.edge_count() {
            return Err(Error::Dimension(format!(
                "gauge has {} signs for {} edges",
                sigma.signs().len(),
                self.edge_count()
            )));
        }
        let orientation = self
            .orientation
            .iter()
            .zip(sigma.signs())
            .map(|(&(t, h), &s)| if s == 1 { (t, h) } else { (h, t) })
            .collect();
        Ok(OrientedEdgeSpace {
            graph: self.graph.clone(),
            orientation,
        })
    }
}

/// Vertex adjacency matrix `A_G`.
pub fn adjacency_matrix(g: &Graph) -> ExactMatrix {
    let mut a = ExactMatrix::zeros(g.n(), g.n());
    for &(x, y) in g.edges() {
        a.set(x, y, int(1));
        a.set(y, x, int(1));
    }
    a
}

/// Diagonal degree matrix `D_G`.
pub fn degree_matrix(g: &Graph) -> ExactMatrix {
    let d: Vec<Rational> = g.degrees().iter().map(|&k| int(k as i64)).collect();
    ExactMatrix::diagonal(&d)
}

/// Laplacian `D_G - A_G`.
pub fn laplacian(g: &Graph) -> ExactMatrix {
    &degree_matrix(g) - &adjacency_matrix(g)
}

/// Signless Laplacian `D_G + A_G`.
pub fn signless_laplacian(g: &Graph) -> ExactMatrix {
    &degree_matrix(g) + &adjacency_matrix(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(g: &Graph) -> OrientedEdgeSpace {
        OrientedEdgeSpace::new(g)
    }

    #[test]
    fn k2_has_no_moves() {
        let es = space(&Graph::complete(2));
        assert!(es.build_hashimoto().is_zero());
        let b = es.sector_blocks();
        for x in [&b.l, &b.s, &b.m] {
            assert_eq!(x, &ExactMatrix::zeros(1, 1));
        }
    }

    #[test]
    fn p3_has_two_moves_and_is_nilpotent() {
        let t = space(&Graph::path(3)).build_hashimoto();
        let ones = t.entries().iter().filter(|x| !x.is_zero()).count();
        assert_eq!(ones, 2);
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn row_sums_follow_head_degree() {
        let g = Graph::petersen();
        let es = space(&g);
        let t = es.build_hashimoto();
        let deg = g.degrees();
        for e in 0..es.directed_count() {
            let s: Rational = (0..es.directed_count()).map(|f| t.get(e, f).clone()).sum();
            assert_eq!(s, int(deg[es.directed(e).1] as i64 - 1));
        }
    }

    #[test]
    fn mixed_block_of_k3_in_lexicographic_gauge() {
        // edges (0,1), (0,2), (1,2); M[e,f] = D[w,f] at the shared vertex w
        let m = space(&Graph::complete(3)).sector_blocks().m;
        let expect = ExactMatrix::from_i64_rows(&[vec![0, -1, -1], vec![-1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(m, expect);
    }

    #[test]
    fn line_graph_of_k3_is_k3() {
        let b = space(&Graph::complete(3)).sector_blocks();
        assert_eq!(b.l, adjacency_matrix(&Graph::complete(3)));
    }

    #[test]
    fn single_flip_on_k3_multiplies_m_by_sigma() {
        let es = space(&Graph::complete(3));
        let sigma = GaugeSign::new(vec![1, -1, 1]).unwrap();
        let flipped = es.regauge(&sigma).unwrap();
        assert_eq!(flipped.orientation()[1], (2, 0));
        let m = es.sector_blocks().m;
        let m2 = flipped.sector_blocks().m;
        assert_eq!(m2, &m * &sigma.matrix());
        assert_eq!(flipped.sector_blocks().l, es.sector_blocks().l);
        assert_eq!(es.regauge(&GaugeSign::identity(3)).unwrap(), es);
    }

    #[test]
    fn incidence_gives_both_laplacians() {
        let g = Graph::petersen();
        let (d, abs) = space(&g).build_incidence();
        assert_eq!(&d * &d.transpose(), laplacian(&g));
        assert_eq!(&abs * &abs.transpose(), signless_laplacian(&g));
        for j in 0..g.m() {
            let s: Rational = (0..g.n()).map(|v| d.get(v, j).clone()).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn bad_orientation_is_rejected() {
        let g = Graph::complete(3);
        assert!(OrientedEdgeSpace::with_orientation(&g, vec![(0, 1), (0, 2)]).is_err());
        assert!(OrientedEdgeSpace::with_orientation(&g, vec![(0, 1), (0, 2), (0, 1)]).is_err());
        assert!(OrientedEdgeSpace::with_orientation(&g, vec![(1, 0), (2, 0), (2, 1)]).is_ok());
        assert!(GaugeSign::new(vec![1, 0]).is_err());
    }
}
