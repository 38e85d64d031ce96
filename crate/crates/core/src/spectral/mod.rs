//! Floating-point spectral estimates for the edge-space operators and the
//! numerical-range bounds on the Hashimoto spectrum.
//!
//! Everything here is approximate; the exact side of the crate never depends
//! on it.

pub mod jacobi;
pub mod roots;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::edge_space::{laplacian, signless_laplacian, OrientedEdgeSpace};
use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::{ExactMatrix, RatPoly};
use crate::zeta::hashimoto_det;

pub use jacobi::{jacobi_eigenvalues, spectral_radius, sym_spectrum};
pub use roots::{aberth_roots, FloatPoly};

/// Backward-error ceiling for accepted roots.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-8;
/// Slack allowed when testing an inequality between two floating quantities.
pub const DEFAULT_SLACK: f64 = 1e-6;
const JACOBI_TOL: f64 = 1e-13;

/// One distinct eigenvalue with its exact algebraic multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralPoint {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    /// Relative backward error in its square-free factor.
    pub residual: f64,
}

impl SpectralPoint {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEstimate {
    pub points: Vec<SpectralPoint>,
    pub max_residual: f64,
    /// Residual ceiling the roots were accepted under.
    pub tol: f64,
}

impl SpectrumEstimate {
    /// Eigenvalues repeated by multiplicity.
    pub fn values(&self) -> Vec<Complex64> {
        self.points
            .iter()
            .flat_map(|p| std::iter::repeat(p.value()).take(p.multiplicity))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sum of the eigenvalues with multiplicity; `tr T = 0` makes this zero.
    pub fn sum(&self) -> Complex64 {
        self.points.iter().map(|p| p.value() * p.multiplicity as f64).sum()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.points.iter().fold(0.0, |r, p| r.max(p.value().norm()))
    }
}

/// Eigenvalues of `T` from its exact characteristic polynomial.
///
/// The polynomial is split into square-free parts exactly; each part is
/// solved in floating point and its roots inherit the exact multiplicity.
pub fn hashimoto_spectrum(g: &Graph, tol: f64) -> Result<SpectrumEstimate> {
    let dim = 2 * g.m();
    let chi = RatPoly::from(&hashimoto_det(g)).reflect(dim + 1);
    let mut points = Vec::new();
    let mut max_residual: f64 = 0.0;
    for (factor, mult) in chi.squarefree_decomposition() {
        let zeros = factor.x_power().unwrap_or(0);
        if zeros > 0 {
            // square-free, so at most one factor of x
            points.push(SpectralPoint { re: 0.0, im: 0.0, multiplicity: mult, residual: 0.0 });
        }
        let rest = FloatPoly::from_rat(&factor.strip_x_power());
        for z in aberth_roots(&rest, tol)? {
            let residual = rest.backward_error(z);
            max_residual = max_residual.max(residual);
            points.push(SpectralPoint { re: z.re, im: z.im, multiplicity: mult, residual });
        }
    }
    points.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(SpectrumEstimate { points, max_residual, tol })
}

fn radius(m: &ExactMatrix) -> Result<f64> {
    Ok(spectral_radius(&sym_spectrum(m, JACOBI_TOL)?))
}

/// Largest singular value, from the top eigenvalue of `X^T X`.
fn sigma_max(x: &ExactMatrix) -> Result<f64> {
    let g = &x.transpose() * x;
    Ok(sym_spectrum(&g, JACOBI_TOL)?.last().copied().unwrap_or(0.0).max(0.0).sqrt())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub d_max: usize,
    pub rho_l: f64,
    pub rho_s: f64,
    pub sigma_max_m: f64,
    /// `||(T - T^T)/2||`, an independent route to `sigma_max(M) / 2`.
    pub norm_antisymmetric: f64,
    pub rho_laplacian: f64,
    pub rho_signless: f64,
    pub re_min: f64,
    pub re_max: f64,
    pub im_max: f64,
    pub rho_t: f64,
    /// `rho(L)/2 - max Re`.
    pub re_upper_margin: f64,
    /// `min Re + rho(S)/2`.
    pub re_lower_margin: f64,
    /// `sigma_max(M)/2 - max |Im|`.
    pub im_margin: f64,
    /// `sqrt(rho(Laplacian) rho(signless)) - sigma_max(M)`.
    pub sigma_margin: f64,
    /// `(d_max - 1) - rho(T)`.
    pub perron_margin: f64,
    /// Largest gap between `spec((T + T^T)/2)` and `spec(L)/2 u -spec(S)/2`.
    pub h_spectrum_deviation: f64,
    /// `|sum of Spec(T)|`, zero since `tr T = 0`.
    pub eigenvalue_sum: f64,
    pub max_root_residual: f64,
    pub slack: f64,
    pub violations: Vec<String>,
}

impl BoundReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every numerical-range bound with the given slack.
pub fn check_bounds(g: &Graph, slack: f64) -> Result<BoundReport> {
    let es = OrientedEdgeSpace::new(g);
    let b = es.sector_blocks();
    let t = es.build_hashimoto();
    let tt = t.transpose();

    let ev_l = sym_spectrum(&b.l, JACOBI_TOL)?;
    let ev_s = sym_spectrum(&b.s, JACOBI_TOL)?;
    let rho_l = spectral_radius(&ev_l);
    let rho_s = spectral_radius(&ev_s);
    let sigma_max_m = sigma_max(&b.m)?;
    // T - T^T is twice the antisymmetric part K; ||K|| = sigma_max(M)/2.
    let norm_antisymmetric = sigma_max(&(&t - &tt))? / 2.0;
    let rho_laplacian = radius(&laplacian(g))?;
    let rho_signless = radius(&signless_laplacian(g))?;

    let spec = hashimoto_spectrum(g, DEFAULT_RESIDUAL_TOL)?;
    let vals = spec.values();
    let re_min = vals.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
    let re_max = vals.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let im_max = vals.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    let (re_min, re_max) = if vals.is_empty() { (0.0, 0.0) } else { (re_min, re_max) };
    let rho_t = spec.spectral_radius();
    let eigenvalue_sum = spec.sum().norm();
    let d_max = g.degree_data().max;

    let h = (&t + &tt).scale(&crate::linalg::rat(1, 2));
    let ev_h = sym_spectrum(&h, JACOBI_TOL)?;
    let mut union: Vec<f64> = ev_l.iter().map(|x| x / 2.0).chain(ev_s.iter().map(|x| -x / 2.0)).collect();
    union.sort_by(f64::total_cmp);
    let h_spectrum_deviation = ev_h.iter().zip(&union).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);

    let re_upper_margin = rho_l / 2.0 - re_max;
    let re_lower_margin = re_min + rho_s / 2.0;
    let im_margin = sigma_max_m / 2.0 - im_max;
    let sigma_margin = (rho_laplacian * rho_signless).sqrt() - sigma_max_m;
    let perron_margin = d_max as f64 - 1.0 - rho_t;

    let mut violations = Vec::new();
    let mut require = |name: &str, margin: f64| {
        if margin < -slack {
            violations.push(format!("{name}: margin {margin:e}"));
        }
    };
    require("Re(lambda) <= rho(L)/2", re_upper_margin);
    require("Re(lambda) >= -rho(S)/2", re_lower_margin);
    require("|Im(lambda)| <= sigma_max(M)/2", im_margin);
    require("sigma_max(M) <= sqrt(rho(Laplacian) rho(signless))", sigma_margin);
    if d_max >= 1 {
        require("rho(T) <= d_max - 1", perron_margin);
    }
    require("spec(H) = spec(L)/2 u -spec(S)/2", -h_spectrum_deviation);
    require("||K|| = sigma_max(M)/2", -(norm_antisymmetric - sigma_max_m / 2.0).abs());
    require("sum Spec(T) = tr T = 0", -eigenvalue_sum);

    Ok(BoundReport {
        n: g.n(),
        m: g.m(),
        d_max,
        rho_l,
        rho_s,
        sigma_max_m,
        norm_antisymmetric,
        rho_laplacian,
        rho_signless,
        re_min,
        re_max,
        im_max,
        rho_t,
        re_upper_margin,
        re_lower_margin,
        im_margin,
        sigma_margin,
        perron_margin,
        h_spectrum_deviation,
        eigenvalue_sum,
        max_root_residual: spec.max_residual,
        slack,
        violations,
    })
}
