//! Characteristic polynomials by exact Hessenberg reduction.

use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::poly::RatPoly;
use super::scalar::Rational;
use crate::error::{Error, Result};

/// `det(x I - m)`, monic in `x`.
pub fn charpoly(m: &ExactMatrix) -> Result<RatPoly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let h = hessenberg(m);
    Ok(hessenberg_charpoly(&h))
}

/// `det(I - w * scale * m)` as a polynomial in `w`. Constant term is 1.
pub fn det_resolvent(m: &ExactMatrix, scale: &Rational) -> Result<RatPoly> {
    let p = charpoly(m)?;
    let n = m.rows();
    // det(I - t m) = t^n chi(1/t); then substitute t = scale * w.
    Ok(p.reflect(n + 1).scale_var(scale))
}

fn height(x: &Rational) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Upper Hessenberg form similar to `m`.
pub(crate) fn hessenberg(m: &ExactMatrix) -> ExactMatrix {
    let n = m.rows();
    let mut h = m.clone();
    if n < 3 {
        return h;
    }
    for j in 0..n - 2 {
        // Smallest nonzero entry below the subdiagonal keeps growth down.
        let pivot = (j + 1..n)
            .filter(|&i| !h.get(i, j).is_zero())
            .min_by_key(|&i| height(h.get(i, j)));
        let Some(p) = pivot else { continue };
        h.swap_rows(p, j + 1);
        h.swap_cols(p, j + 1);
        let piv = h.get(j + 1, j).clone();
        let inv = piv.recip();
        for r in j + 2..n {
            let x = h.get(r, j).clone();
            if x.is_zero() {
                continue;
            }
            let f = &x * &inv;
            // row_r -= f * row_{j+1}
            for c in j..n {
                let v = h.get(j + 1, c);
                if !v.is_zero() {
                    let nv = h.get(r, c) - &f * v;
                    h.set(r, c, nv);
                }
            }
            // col_{j+1} += f * col_r
            for rr in 0..n {
                let v = h.get(rr, r);
                if !v.is_zero() {
                    let nv = h.get(rr, j + 1) + &f * v;
                    h.set(rr, j + 1, nv);
                }
            }
        }
    }
    h
}

/// Three-term style recurrence on leading principal minors of `xI - H`.
fn hessenberg_charpoly(h: &ExactMatrix) -> RatPoly {
    let n = h.rows();
    let mut polys: Vec<RatPoly> = Vec::with_capacity(n + 1);
    polys.push(RatPoly::one());
    let x = RatPoly::linear(Rational::zero(), Rational::one());
    for k in 0..n {
        let diag = RatPoly::constant(h.get(k, k).clone());
        let mut next = &(&x - &diag) * &polys[k];
        let mut prod = Rational::one();
        for i in 1..=k {
            prod *= h.get(k - i + 1, k - i);
            if prod.is_zero() {
                break;
            }
            let coef = h.get(k - i, k) * &prod;
            if !coef.is_zero() {
                next = &next - &polys[k - i].scale(&coef);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Evaluates `p(m)` for a square matrix (Horner).
pub fn eval_matrix_poly(p: &RatPoly, m: &ExactMatrix) -> Result<ExactMatrix> {
    if !m.is_square() {
        return Err(Error::Dimension("matrix polynomial of non-square matrix".into()));
    }
    let n = m.rows();
    let mut acc = ExactMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.checked_mul(m)?;
        acc = acc.checked_add(&ExactMatrix::identity(n).scale(c))?;
    }
    Ok(acc)
}

/// Largest absolute entry bit length, for diagnostics.
pub fn max_entry_bits(m: &ExactMatrix) -> u64 {
    m.entries()
        .iter()
        .map(|x| x.numer().abs().bits().max(x.denom().bits()))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{int, rat};
    use super::*;

    #[test]
    fn zero_matrix() {
        let p = charpoly(&ExactMatrix::zeros(3, 3)).unwrap();
        assert_eq!(p, RatPoly::from_ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn k3_and_k2_adjacency() {
        let k3 = ExactMatrix::from_i64_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        // x^3 - 3x - 2
        assert_eq!(charpoly(&k3).unwrap(), RatPoly::from_ints(&[-2, -3, 0, 1]));
        let k2 = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(charpoly(&k2).unwrap(), RatPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(matches!(
            charpoly(&ExactMatrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn resolvent_of_half_line_graph_of_k3() {
        let k3 = ExactMatrix::from_i64_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let got = det_resolvent(&k3, &rat(1, 2)).unwrap();
        // (1 - w)(1 + w/2)^2
        let expect = &RatPoly::from_ints(&[1, -1])
            * &RatPoly::new(vec![int(1), rat(1, 2)]).pow(2);
        assert_eq!(got, expect);
        assert_eq!(det_resolvent(&ExactMatrix::zeros(4, 4), &int(1)).unwrap(), RatPoly::one());
    }

    #[test]
    fn cayley_hamilton_small() {
        let m = ExactMatrix::from_fn(5, 5, |i, j| rat((i * 3 + j * 7) as i64 % 5 - 2, 1 + (i + j) as i64 % 3));
        let p = charpoly(&m).unwrap();
        assert!(eval_matrix_poly(&p, &m).unwrap().is_zero());
    }
}
