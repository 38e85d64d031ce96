//! Gauge-invariant shadows of the mixed block `M = |D|^T D`, graph
//! fingerprints and exact pairwise comparison.
//!
//! `M` itself changes to `M Sigma` under a change of reference orientation,
//! so only `M M^T`, `M^T M` and `M^T L^k M` (up to conjugation by `Sigma`)
//! carry graph information.

use serde::{Deserialize, Serialize};

use crate::edge_space::{adjacency_matrix, OrientedEdgeSpace};
use crate::error::{Error, Result};
use crate::graph::graph6::encode_graph6;
use crate::graph::Graph;
use crate::linalg::{charpoly, int, ExactMatrix, IntPoly, PowerSeries};
use crate::zeta::{factorize, hashimoto_det, resolution_compare, PairDivergence};

pub const DEFAULT_KMAX: usize = 2;
pub const SCHEMA_VERSION: u32 = 1;

/// Characteristic polynomial of an integer matrix.
pub fn int_charpoly(x: &ExactMatrix) -> IntPoly {
    charpoly(x)
        .expect("square matrix")
        .to_int()
        .expect("integer matrix")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowSet {
    pub mmt: IntPoly,
    pub mtm: IntPoly,
    /// `chi(M^T L^k M)` for `k = 1..=kmax`.
    pub mtlkm: Vec<IntPoly>,
}

impl ShadowSet {
    pub fn kmax(&self) -> usize {
        self.mtlkm.len()
    }
}

pub fn shadow_set(es: &OrientedEdgeSpace, kmax: usize) -> ShadowSet {
    let b = es.sector_blocks();
    let mt = b.m.transpose();
    let mut mtlkm = Vec::with_capacity(kmax);
    let mut lk_m = b.m.clone();
    for _ in 0..kmax {
        lk_m = &b.l * &lk_m;
        mtlkm.push(int_charpoly(&(&mt * &lk_m)));
    }
    ShadowSet {
        mmt: int_charpoly(&(&b.m * &mt)),
        mtm: int_charpoly(&(&mt * &b.m)),
        mtlkm,
    }
}

/// For a connected `k`-regular graph the nonzero spectrum of `M^T M` equals
/// that of `k^2 I - A^2`; compares both with all factors of `x` removed.
pub fn regular_collapse_check(g: &Graph) -> Result<bool> {
    let Some(k) = g.is_regular() else {
        return Err(Error::Precondition("regular collapse needs a regular graph".into()));
    };
    if !g.is_connected() {
        return Err(Error::Precondition("regular collapse needs a connected graph".into()));
    }
    let es = OrientedEdgeSpace::new(g);
    let m = es.sector_blocks().m;
    let lhs = int_charpoly(&(&m.transpose() * &m)).strip_x_power();
    let a = adjacency_matrix(g);
    let kk = ExactMatrix::identity(g.n()).scale(&int((k * k) as i64));
    let rhs = int_charpoly(&(&kk - &(&a * &a))).strip_x_power();
    Ok(lhs == rhs)
}

/// Complete exact invariant record of one graph (schema version 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub schema: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Sorted descending.
    pub degrees: Vec<usize>,
    pub charpoly_a: IntPoly,
    pub charpoly_l: IntPoly,
    pub charpoly_s: IntPoly,
    pub shadows: ShadowSet,
    pub hashimoto_det: IntPoly,
    pub correction_series: PowerSeries,
}

impl Fingerprint {
    pub fn order(&self) -> usize {
        self.correction_series.order()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("fingerprint serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Fingerprint> {
        let fp: Fingerprint =
            serde_json::from_str(line).map_err(|e| Error::Record(e.to_string()))?;
        if fp.schema != SCHEMA_VERSION {
            return Err(Error::Record(format!("unsupported schema version {}", fp.schema)));
        }
        Ok(fp)
    }

    /// Every field except the representation-dependent graph6 string.
    pub fn same_invariants(&self, other: &Fingerprint) -> bool {
        let mut a = self.clone();
        a.graph6.clear();
        let mut b = other.clone();
        b.graph6.clear();
        a == b
    }
}

/// Fingerprint in the lexicographic gauge.
pub fn fingerprint(g: &Graph, order: usize, kmax: usize) -> Fingerprint {
    let es = OrientedEdgeSpace::new(g);
    let b = es.sector_blocks();
    Fingerprint {
        schema: SCHEMA_VERSION,
        graph6: encode_graph6(g),
        n: g.n(),
        m: g.m(),
        degrees: g.degree_data().multiset,
        charpoly_a: int_charpoly(&adjacency_matrix(g)),
        charpoly_l: int_charpoly(&b.l),
        charpoly_s: int_charpoly(&b.s),
        shadows: shadow_set(&es, kmax),
        hashimoto_det: hashimoto_det(g),
        correction_series: factorize(g, order).correction_series,
    }
}

/// Per-invariant exact agreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub degrees: bool,
    pub a: bool,
    pub l: bool,
    pub s: bool,
    pub mmt: bool,
    pub mtm: bool,
    pub mtlkm: Vec<bool>,
    pub hashimoto_det: bool,
    pub correction_series: bool,
}

impl Agreement {
    pub fn all_shadows_agree(&self) -> bool {
        self.mmt && self.mtm && self.mtlkm.iter().all(|&x| x)
    }

    pub fn all_shadows_differ(&self) -> bool {
        !self.mmt && !self.mtm && self.mtlkm.iter().all(|&x| !x)
    }

    pub fn everything(&self) -> bool {
        self.degrees
            && self.a
            && self.l
            && self.s
            && self.all_shadows_agree()
            && self.hashimoto_det
            && self.correction_series
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub left: String,
    pub right: String,
    pub agree: Agreement,
    pub divergence: PairDivergence,
    /// `([w^k] det_left, [w^k] det_right)` at the first determinant divergence.
    pub det_witness: Option<(String, String)>,
    /// `(c_k(left), c_k(right))` at the first correction divergence.
    pub correction_witness: Option<(String, String)>,
}

/// Comparison from stored records. Correction divergence is only visible
/// through the series order both records carry.
pub fn compare_fingerprints(f: &Fingerprint, g: &Fingerprint) -> PairReport {
    use crate::linalg::FractionText;
    let mtlkm = (0..f.shadows.kmax().max(g.shadows.kmax()))
        .map(|k| f.shadows.mtlkm.get(k) == g.shadows.mtlkm.get(k))
        .collect();
    let agree = Agreement {
        degrees: f.degrees == g.degrees,
        a: f.charpoly_a == g.charpoly_a,
        l: f.charpoly_l == g.charpoly_l,
        s: f.charpoly_s == g.charpoly_s,
        mmt: f.shadows.mmt == g.shadows.mmt,
        mtm: f.shadows.mtm == g.shadows.mtm,
        mtlkm,
        hashimoto_det: f.hashimoto_det == g.hashimoto_det,
        correction_series: f.correction_series == g.correction_series,
    };
    let det_first = f.hashimoto_det.first_difference(&g.hashimoto_det);
    let corr_first = f.correction_series.first_difference(&g.correction_series);
    let det_gap = det_first.map(|k| {
        crate::linalg::Rational::from_integer(f.hashimoto_det.coeff(k) - g.hashimoto_det.coeff(k))
    });
    let correction_gap =
        corr_first.map(|k| f.correction_series.coeff(k) - g.correction_series.coeff(k));
    let horizon = f.order().min(g.order());
    let line_cospectral = agree.l;
    let consistent = !line_cospectral
        || match det_first {
            Some(k) if k <= horizon => corr_first == Some(k) && det_gap == correction_gap,
            _ => corr_first.is_none(),
        };
    PairReport {
        left: f.graph6.clone(),
        right: g.graph6.clone(),
        agree,
        divergence: PairDivergence {
            line_cospectral,
            det_first_diff_order: det_first,
            correction_first_diff_order: corr_first,
            det_gap,
            correction_gap,
            consistent,
        },
        det_witness: det_first.map(|k| {
            (
                f.hashimoto_det.coeff(k).to_fraction(),
                g.hashimoto_det.coeff(k).to_fraction(),
            )
        }),
        correction_witness: corr_first.map(|k| {
            (
                f.correction_series.coeff(k).to_fraction(),
                g.correction_series.coeff(k).to_fraction(),
            )
        }),
    }
}

/// Full comparison of two graphs, with the divergence analysis carried as
/// far as the determinant divergence requires.
pub fn compare(g: &Graph, h: &Graph, order: usize, kmax: usize) -> PairReport {
    use crate::linalg::FractionText;
    let mut report = compare_fingerprints(&fingerprint(g, order, kmax), &fingerprint(h, order, kmax));
    let div = resolution_compare(g, h, order);
    if let Some(k) = div.correction_first_diff_order {
        let depth = order.max(k);
        let cg = factorize(g, depth).correction_series;
        let ch = factorize(h, depth).correction_series;
        report.correction_witness = Some((cg.coeff(k).to_fraction(), ch.coeff(k).to_fraction()));
    }
    report.divergence = div;
    report
}
