//! The Ihara determinant `det(I - wT)` and its edge-sector factorization
//! `det(I - wT) = det(I - (w/2) L) * C(w)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::edge_space::{adjacency_matrix, degree_matrix, OrientedEdgeSpace};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::series_matrix::{poly_det, SeriesMatrix};
use crate::linalg::{det_resolvent, int, rat, ExactMatrix, IntPoly, PowerSeries, RatFunc, RatPoly, Rational};

pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaFactorization {
    /// `det(I - wT)`
    pub hashimoto_det: IntPoly,
    /// `det(I - (w/2) L)`
    pub line_factor: RatPoly,
    /// Reduced `hashimoto_det / line_factor`.
    pub correction: RatFunc,
    /// Taylor coefficients `c_0..c_N` of the correction.
    pub correction_series: PowerSeries,
}

impl ZetaFactorization {
    pub fn order(&self) -> usize {
        self.correction_series.order()
    }

    /// `line_factor * correction == hashimoto_det` as rational functions.
    pub fn is_exact(&self) -> bool {
        let lhs = &self.line_factor * self.correction.numerator();
        let rhs = &RatPoly::from(&self.hashimoto_det) * self.correction.denominator();
        lhs == rhs
    }
}

/// `det(I - wT)` with integer coefficients and constant term 1.
pub fn hashimoto_det(g: &Graph) -> IntPoly {
    let t = OrientedEdgeSpace::new(g).build_hashimoto();
    det_resolvent(&t, &Rational::one())
        .expect("square")
        .to_int()
        .expect("integer matrix has an integer characteristic polynomial")
}

/// `det(I - (w/2) L)`.
pub fn line_factor(g: &Graph) -> RatPoly {
    let l = OrientedEdgeSpace::new(g).sector_blocks().l;
    det_resolvent(&l, &rat(1, 2)).expect("square")
}

/// Vertex-space form `(1 - w^2)^(m - n) det(I - wA + w^2 (D - I))`.
///
/// For `m < n` the prefactor is a division; the quotient must be exact.
pub fn bass_det(g: &Graph) -> Result<IntPoly> {
    let n = g.n();
    let a = adjacency_matrix(g);
    let d = degree_matrix(g);
    let rows: Vec<Vec<RatPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let id = if i == j { int(1) } else { int(0) };
                    let c1 = -a.get(i, j).clone();
                    let c2 = d.get(i, j) - &id;
                    RatPoly::new(vec![id, c1, c2])
                })
                .collect()
        })
        .collect();
    let vertex = poly_det(&rows)?;
    let one_minus_w2 = RatPoly::from_ints(&[1, 0, -1]);
    let m = g.m();
    let full = if m >= n {
        &vertex * &one_minus_w2.pow((m - n) as u32)
    } else {
        let f = RatFunc::reduce(&vertex, &one_minus_w2.pow((n - m) as u32))?;
        f.as_poly()
            .cloned()
            .ok_or_else(|| Error::Internal("Bass quotient is not a polynomial".into()))?
    };
    full.to_int()
        .ok_or_else(|| Error::Internal("Bass determinant has non-integer coefficients".into()))
}

pub fn factorize(g: &Graph, order: usize) -> ZetaFactorization {
    let hd = hashimoto_det(g);
    let lf = line_factor(g);
    let correction = RatFunc::reduce(&RatPoly::from(&hd), &lf).expect("line factor is nonzero");
    let correction_series = correction
        .series(order)
        .expect("line factor has constant term 1");
    ZetaFactorization {
        hashimoto_det: hd,
        line_factor: lf,
        correction,
        correction_series,
    }
}

/// Schur-complement form of the correction,
/// `det(I + (w/2) S + (w^2/4) M^T (I - (w/2) L)^(-1) M)`, expanded in the
/// truncated series ring with the resolvent as `sum_j (w/2)^j L^j`.
pub fn schur_series(g: &Graph, order: usize) -> Result<PowerSeries> {
    let es = OrientedEdgeSpace::new(g);
    let b = es.sector_blocks();
    let m = es.edge_count();
    let mut mat = SeriesMatrix::identity(m, order);
    if order >= 1 {
        let half = rat(1, 2);
        for i in 0..m {
            for j in 0..m {
                let s = b.s.get(i, j);
                if !s.is_zero() {
                    let mut c = mat.get(i, j).coeffs().to_vec();
                    c[1] += s * &half;
                    *mat.get_mut(i, j) = PowerSeries::new(order, c);
                }
            }
        }
    }
    // M^T L^j M contributes at order j + 2 with weight 2^-(j+2).
    let mt = b.m.transpose();
    let mut lj_m = b.m.clone();
    let mut weight = rat(1, 4);
    for j in 0..order.saturating_sub(1) {
        let term = &mt * &lj_m;
        for r in 0..m {
            for c in 0..m {
                let x = term.get(r, c);
                if !x.is_zero() {
                    let mut v = mat.get(r, c).coeffs().to_vec();
                    v[j + 2] += x * &weight;
                    *mat.get_mut(r, c) = PowerSeries::new(order, v);
                }
            }
        }
        lj_m = &b.l * &lj_m;
        weight /= int(2);
    }
    mat.det()
}

/// Schur-form series agrees with the reduced quotient through `order`.
pub fn schur_series_check(g: &Graph, order: usize) -> Result<bool> {
    if order == 0 {
        return Err(Error::Precondition("series order must be at least 1".into()));
    }
    let schur = schur_series(g, order)?;
    Ok(schur == factorize(g, order).correction_series)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialRootReport {
    pub n: usize,
    pub m: usize,
    pub m_minus_n: i64,
    pub bipartite: bool,
    /// Order of `w = -1` as a root of `det(I - (w/2) L)`.
    pub ord_line_at_minus1: usize,
    /// Order of `w = 1` as a root of `det(I - (w/2) L)`; equals the
    /// multiplicity of 2 in `Spec(L)`.
    pub ord_line_at_plus1: usize,
    /// Order of `w = 1` as a root of `det(I - wT)`.
    pub ord_det_at_plus1: usize,
    /// Zero order of the reduced correction at `w = 1` (negative for a pole).
    pub ord_correction_at_plus1: i64,
    pub ker_dim_d: usize,
    pub ker_dim_abs_d: usize,
}

impl TrivialRootReport {
    /// The bound `(1 - w)^(m-n+1) | C` read as a zero order: `m - n + 1` when
    /// `m >= n`, else 0.
    pub fn literal_correction_bound(&self) -> i64 {
        if self.m_minus_n >= 0 {
            self.m_minus_n + 1
        } else {
            0
        }
    }

    /// Whether the literal divisibility `(1 - w)^(m-n+1) | C` holds. It fails
    /// exactly when `det(I - (w/2) L)` vanishes at `w = 1` to a higher order
    /// than the surplus in `det(I - wT)`; the `ker D` eigenvector argument
    /// does not see the pole of `(I - (w/2) L)^(-1)` there.
    pub fn literal_divisibility_holds(&self) -> bool {
        self.ord_correction_at_plus1 >= self.literal_correction_bound()
    }

    /// Failures of the literal statements: kernel dimensions, the `w = -1`
    /// order of the line factor, and `(1 - w)^(m-n+1) | C`.
    pub fn literal_violations(&self) -> Vec<String> {
        let mut v = self.kernel_and_line_violations();
        if !self.literal_divisibility_holds() {
            v.push(format!(
                "ord_(+1) C = {} < {} (2 has multiplicity {} in Spec(L))",
                self.ord_correction_at_plus1,
                self.literal_correction_bound(),
                self.ord_line_at_plus1
            ));
        }
        v
    }

    fn kernel_and_line_violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        let mn = self.m_minus_n;
        let expect_abs = if self.bipartite { mn + 1 } else { mn };
        if self.ker_dim_abs_d as i64 != expect_abs {
            v.push(format!(
                "dim ker |D| = {} (expected {expect_abs}, bipartite = {})",
                self.ker_dim_abs_d, self.bipartite
            ));
        }
        if self.ker_dim_d as i64 != mn + 1 {
            v.push(format!("dim ker D = {} (expected {})", self.ker_dim_d, mn + 1));
        }
        if (self.ord_line_at_minus1 as i64) < mn.max(0) {
            v.push(format!(
                "ord_(-1) det(I - (w/2)L) = {} < {}",
                self.ord_line_at_minus1,
                mn.max(0)
            ));
        }
        v
    }

    /// Failures of the statements that hold unconditionally: the kernel and
    /// `w = -1` parts, `ord_(+1) det(I - wT) >= m - n + 1`, and
    /// `ord_(+1) C = ord_(+1) det(I - wT) - ord_(+1) det(I - (w/2) L)
    /// >= m - n + 1 - mult_2(L)`.
    pub fn violations(&self) -> Vec<String> {
        let mut v = self.kernel_and_line_violations();
        let need = self.literal_correction_bound();
        if (self.ord_det_at_plus1 as i64) < need {
            v.push(format!("ord_(+1) det(I - wT) = {} < {need}", self.ord_det_at_plus1));
        }
        let split = self.ord_det_at_plus1 as i64 - self.ord_line_at_plus1 as i64;
        if self.ord_correction_at_plus1 != split {
            v.push(format!(
                "ord_(+1) C = {} but the factorization gives {split}",
                self.ord_correction_at_plus1
            ));
        }
        if self.ord_correction_at_plus1 < need - self.ord_line_at_plus1 as i64 {
            v.push(format!(
                "ord_(+1) C = {} < {} - {}",
                self.ord_correction_at_plus1, need, self.ord_line_at_plus1
            ));
        }
        v
    }
}

pub fn trivial_roots(g: &Graph) -> Result<TrivialRootReport> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "trivial-root localization needs a connected graph".into(),
        ));
    }
    let es = OrientedEdgeSpace::new(g);
    let (d, abs) = es.build_incidence();
    let m = g.m();
    let f = factorize(g, 0);
    Ok(TrivialRootReport {
        n: g.n(),
        m,
        m_minus_n: m as i64 - g.n() as i64,
        bipartite: g.is_bipartite(),
        ord_line_at_minus1: f.line_factor.root_order(&int(-1))?,
        ord_line_at_plus1: f.line_factor.root_order(&int(1))?,
        ord_det_at_plus1: RatPoly::from(&f.hashimoto_det).root_order(&int(1))?,
        ord_correction_at_plus1: f.correction.zero_order(&int(1))?,
        ker_dim_d: m - d.rank(),
        ker_dim_abs_d: m - abs.rank(),
    })
}

/// `tr(X^k)` for `k = 1..=kmax`.
pub fn power_traces(x: &ExactMatrix, kmax: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(kmax);
    let mut p = x.clone();
    for k in 1..=kmax {
        out.push(p.trace());
        if k < kmax {
            p = &p * x;
        }
    }
    out
}

/// `log C(w) = -sum_k (w^k / k) (tr T^k - 2^-k tr L^k)` through `order`.
pub fn log_trace_check(g: &Graph, order: usize) -> Result<bool> {
    if order == 0 {
        return Err(Error::Precondition("series order must be at least 1".into()));
    }
    let es = OrientedEdgeSpace::new(g);
    let lhs = factorize(g, order).correction_series.log()?;
    let tt = power_traces(&es.build_hashimoto(), order);
    let tl = power_traces(&es.sector_blocks().l, order);
    let mut rhs = vec![Rational::zero()];
    let mut pow2 = Rational::one();
    for k in 1..=order {
        pow2 /= int(2);
        let c = &tt[k - 1] - &(&tl[k - 1] * &pow2);
        rhs.push(-c / int(k as i64));
    }
    Ok(lhs == PowerSeries::new(order, rhs))
}

/// Where two graphs' Ihara data first diverge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDivergence {
    pub line_cospectral: bool,
    pub det_first_diff_order: Option<usize>,
    pub correction_first_diff_order: Option<usize>,
    /// `[w^k] det_g - [w^k] det_h` at the determinant divergence order.
    #[serde(with = "crate::linalg::scalar::opt_fraction")]
    pub det_gap: Option<Rational>,
    /// `c_k(g) - c_k(h)` at the correction divergence order.
    #[serde(with = "crate::linalg::scalar::opt_fraction")]
    pub correction_gap: Option<Rational>,
    /// For line-cospectral pairs: both divergences sit at the same order
    /// with the same gap.
    pub consistent: bool,
}

pub fn resolution_compare(g: &Graph, h: &Graph, order: usize) -> PairDivergence {
    let dg = hashimoto_det(g);
    let dh = hashimoto_det(h);
    let line_cospectral = line_factor(g) == line_factor(h);
    let det_first = dg.first_difference(&dh);
    let det_gap = det_first.map(|k| Rational::from_integer(dg.coeff(k) - dh.coeff(k)));
    let series_order = order.max(det_first.unwrap_or(0));
    let cg = factorize(g, series_order).correction_series;
    let ch = factorize(h, series_order).correction_series;
    let corr_first = cg.first_difference(&ch);
    let correction_gap = corr_first.map(|k| cg.coeff(k) - ch.coeff(k));
    let consistent = !line_cospectral || (det_first == corr_first && det_gap == correction_gap);
    PairDivergence {
        line_cospectral,
        det_first_diff_order: det_first,
        correction_first_diff_order: corr_first,
        det_gap,
        correction_gap,
        consistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_have_trivial_determinant() {
        for g in [Graph::path(5), Graph::star(4), Graph::complete(2)] {
            assert_eq!(hashimoto_det(&g), IntPoly::one());
            assert_eq!(bass_det(&g).unwrap(), IntPoly::one());
        }
    }

    #[test]
    fn cycle_determinant() {
        // (1 - w^3)^2
        let expect = IntPoly::from_i64(&[1, 0, 0, -2, 0, 0, 1]);
        assert_eq!(hashimoto_det(&Graph::cycle(3)), expect);
        assert_eq!(bass_det(&Graph::complete(3)).unwrap(), expect);
    }

    #[test]
    fn p3_correction_is_a_pure_pole() {
        let f = factorize(&Graph::path(3), 4);
        let expect = RatFunc::reduce(&RatPoly::one(), &RatPoly::new(vec![int(1), int(0), rat(-1, 4)])).unwrap();
        assert_eq!(f.correction, expect);
        assert_eq!(
            f.correction_series.coeffs(),
            &[int(1), int(0), rat(1, 4), int(0), rat(1, 16)]
        );
        assert!(f.is_exact());
    }

    #[test]
    fn k2_correction_is_one() {
        let f = factorize(&Graph::complete(2), 6);
        assert_eq!(f.correction.as_poly(), Some(&RatPoly::one()));
        assert!(log_trace_check(&Graph::complete(2), 6).unwrap());
    }

    #[test]
    fn trivial_roots_require_connectivity() {
        assert!(trivial_roots(&Graph::empty(3)).is_err());
        let r = trivial_roots(&Graph::cycle(4)).unwrap();
        assert_eq!((r.ker_dim_abs_d, r.ker_dim_d), (1, 1));
        assert!(r.violations().is_empty(), "{:?}", r.violations());
        let p3 = trivial_roots(&Graph::path(3)).unwrap();
        assert_eq!(p3.ker_dim_d, 0);
        assert!(p3.violations().is_empty());
    }

    #[test]
    fn correction_bound_fails_when_two_is_a_line_eigenvalue() {
        // L(Petersen) has eigenvalue 2 five times, eating five of the six
        // trivial roots of det(I - wT) at w = 1.
        let r = trivial_roots(&Graph::petersen()).unwrap();
        assert_eq!((r.ord_det_at_plus1, r.ord_line_at_plus1), (6, 5));
        assert_eq!(r.ord_correction_at_plus1, 1);
        assert!(!r.literal_divisibility_holds());
        assert!(r.violations().is_empty());
        // K_{1,3}: L = A(K3) has eigenvalue 2, so C has a pole at w = 1.
        let r = trivial_roots(&Graph::star(3)).unwrap();
        assert_eq!(r.ord_correction_at_plus1, -1);
        assert!(!r.literal_violations().is_empty());
        // K4: no eigenvalue 2 in Spec(L), the literal bound holds.
        let r = trivial_roots(&Graph::complete(4)).unwrap();
        assert!(r.literal_violations().is_empty());
        assert!(r.ord_line_at_minus1 >= 2 && r.ord_correction_at_plus1 >= 3);
    }

    #[test]
    fn order_zero_checks_are_rejected() {
        assert!(schur_series_check(&Graph::complete(3), 0).is_err());
        assert!(log_trace_check(&Graph::complete(3), 0).is_err());
    }

    #[test]
    fn self_comparison_has_no_divergence() {
        let g = Graph::petersen();
        let d = resolution_compare(&g, &g, 8);
        assert!(d.line_cospectral && d.consistent);
        assert_eq!(d.det_first_diff_order, None);
        assert_eq!(d.correction_first_diff_order, None);
    }
}
