//! Aberth–Ehrlich simultaneous root iteration.
//!
//! Multiple roots wreck the convergence and the attainable accuracy of any
//! floating-point polynomial solver, so callers hand in square-free factors
//! from the exact decomposition and carry multiplicities separately.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{scalar::to_f64, RatPoly};

const MAX_ITERATIONS: usize = 1000;

/// A polynomial with `f64` coefficients, ascending.
#[derive(Clone, Debug)]
pub struct FloatPoly(pub Vec<f64>);

impl FloatPoly {
    pub fn from_rat(p: &RatPoly) -> FloatPoly {
        FloatPoly(p.coeffs().iter().map(to_f64).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `(p(z), p'(z))` by Horner.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in self.0.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `|p(z)| / sum |c_i| |z|^i`: residual relative to Horner's rounding scale.
    pub fn backward_error(&self, z: Complex64) -> f64 {
        let (p, _) = self.eval_with_derivative(z);
        let r = z.norm();
        let mut scale = 0.0;
        for &c in self.0.iter().rev() {
            scale = scale * r + c.abs();
        }
        if scale == 0.0 {
            0.0
        } else {
            p.norm() / scale
        }
    }
}

/// All roots of a polynomial with nonzero constant and leading terms.
pub fn aberth_roots(p: &FloatPoly, tol: f64) -> Result<Vec<Complex64>> {
    let d = p.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead = p.0[d];
    if d == 1 {
        return Ok(vec![Complex64::new(-p.0[0] / lead, 0.0)]);
    }
    // Initial guesses on a circle of radius given by the Fujiwara-style bound,
    // rotated off the real axis so conjugate pairs separate.
    let radius = (0..d)
        .map(|i| (p.0[i] / lead).abs().powf(1.0 / (d - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; d];
    for _ in 0..MAX_ITERATIONS {
        let mut moved = false;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (f, df) = p.eval_with_derivative(z[i]);
            if f.norm() == 0.0 {
                done[i] = true;
                continue;
            }
            let ratio = f / df;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(1.0) {
                done[i] = true;
            } else {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let worst = z.iter().map(|&r| p.backward_error(r)).fold(0.0, f64::max);
    if worst > tol || z.iter().any(|r| !r.is_finite()) {
        return Err(Error::NoConvergence {
            iterations: MAX_ITERATIONS,
            residual: worst,
        });
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn integer_roots() {
        // (x-1)(x-2)(x-3)
        let p = FloatPoly(vec![-6.0, 11.0, -6.0, 1.0]);
        let r = sorted(aberth_roots(&p, 1e-12).unwrap());
        for (a, b) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).norm() < 1e-10, "{r:?}");
        }
    }

    #[test]
    fn complex_pair() {
        // x^2 + 1
        let p = FloatPoly(vec![1.0, 0.0, 1.0]);
        let r = sorted(aberth_roots(&p, 1e-12).unwrap());
        assert!((r[0].im.abs() - 1.0).abs() < 1e-12 && r[0].re.abs() < 1e-12);
        assert!((r[0].im + r[1].im).abs() < 1e-12);
    }

    #[test]
    fn roots_of_unity() {
        let mut c = vec![0.0; 13];
        c[0] = -1.0;
        c[12] = 1.0;
        let r = aberth_roots(&FloatPoly(c), 1e-12).unwrap();
        assert_eq!(r.len(), 12);
        assert!(r.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
    }
}
