//! Cyclic Jacobi sweeps for dense symmetric matrices.

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

const MAX_SWEEPS: usize = 100;

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues (ascending) of a symmetric `f64` matrix. Sweeps stop once the
/// off-diagonal Frobenius norm drops below `tol * max(1, ||A||_F)`.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("Jacobi needs a square matrix".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if (a[i][j] - a[j][i]).abs() > 0.0 {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let target = tol * frob.max(1.0);
    let mut sweeps = 0;
    while off_norm(&a) >= target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                iterations: sweeps,
                residual: off_norm(&a),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
        sweeps += 1;
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Sorted real spectrum of a symmetric exact matrix.
pub fn sym_spectrum(m: &ExactMatrix, tol: f64) -> Result<Vec<f64>> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    jacobi_eigenvalues(m.to_f64(), tol)
}

pub fn spectral_radius(ev: &[f64]) -> f64 {
    ev.iter().fold(0.0, |r, x| r.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge_space::laplacian;
    use crate::graph::Graph;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn k3_line_graph() {
        let l = ExactMatrix::from_i64_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let ev = sym_spectrum(&l, 1e-14).unwrap();
        assert!(close(&ev, &[-1.0, -1.0, 2.0], 1e-10), "{ev:?}");
    }

    #[test]
    fn identity_and_cycle_laplacian() {
        let ev = sym_spectrum(&ExactMatrix::identity(4), 1e-14).unwrap();
        assert!(close(&ev, &[1.0; 4], 1e-12));
        let ev = sym_spectrum(&laplacian(&Graph::cycle(4)), 1e-14).unwrap();
        assert!(close(&ev, &[0.0, 2.0, 2.0, 4.0], 1e-10), "{ev:?}");
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(sym_spectrum(&m, 1e-12), Err(Error::NotSymmetric));
    }

    #[test]
    fn trace_is_preserved() {
        let g = Graph::petersen();
        let lap = laplacian(&g);
        let ev = sym_spectrum(&lap, 1e-14).unwrap();
        let tr: f64 = ev.iter().sum();
        assert!((tr - 30.0).abs() < 1e-9);
    }
}
