//! Determinants over `Q[[w]]/(w^(N+1))` and over `Q[w]`.

use super::poly::RatPoly;
use super::series::PowerSeries;
use crate::error::{Error, Result};

/// Square matrix whose entries are truncated series of a common order.
#[derive(Clone, Debug)]
pub struct SeriesMatrix {
    n: usize,
    order: usize,
    data: Vec<PowerSeries>,
}

impl SeriesMatrix {
    pub fn identity(n: usize, order: usize) -> Self {
        let data = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    PowerSeries::one(order)
                } else {
                    PowerSeries::zero(order)
                }
            })
            .collect();
        SeriesMatrix { n, order, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &PowerSeries {
        &self.data[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut PowerSeries {
        &mut self.data[i * self.n + j]
    }

    /// Determinant by elimination without pivoting; every pivot must be a
    /// unit (nonzero constant term), which holds for `I + O(w)`.
    pub fn det(&self) -> Result<PowerSeries> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = PowerSeries::one(self.order);
        for k in 0..n {
            let piv = a[k * n + k].clone();
            let inv = piv.inverse().map_err(|_| {
                Error::Internal(format!("series pivot {k} has zero constant term"))
            })?;
            det = &det * &piv;
            for r in k + 1..n {
                if a[r * n + k].is_zero() {
                    continue;
                }
                let f = &a[r * n + k] * &inv;
                for c in k + 1..n {
                    if a[k * n + c].is_zero() {
                        continue;
                    }
                    let prod = &f * &a[k * n + c];
                    a[r * n + c] = &a[r * n + c] - &prod;
                }
            }
        }
        Ok(det)
    }
}

/// Fraction-free (Bareiss) determinant of a polynomial matrix.
pub fn poly_det(rows: &[Vec<RatPoly>]) -> Result<RatPoly> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("polynomial determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(RatPoly::one());
    }
    let mut a: Vec<Vec<RatPoly>> = rows.to_vec();
    let mut sign_flip = false;
    let mut prev = RatPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(RatPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -&d } else { d })
}

#[cfg(test)]
mod tests {
    use super::super::scalar::int;
    use super::*;

    #[test]
    fn bareiss_on_polynomials() {
        // [[1+w, w], [w, 1]] -> 1 + w - w^2
        let p = |v: &[i64]| RatPoly::from_ints(v);
        let m = vec![vec![p(&[1, 1]), p(&[0, 1])], vec![p(&[0, 1]), p(&[1])]];
        assert_eq!(poly_det(&m).unwrap(), p(&[1, 1, -1]));
        // needs a row swap
        let m = vec![vec![p(&[]), p(&[1])], vec![p(&[1]), p(&[0, 1])]];
        assert_eq!(poly_det(&m).unwrap(), p(&[-1]));
    }

    #[test]
    fn series_det_of_diagonal() {
        let mut m = SeriesMatrix::identity(2, 3);
        *m.get_mut(0, 0) = PowerSeries::new(3, vec![int(1), int(1)]);
        *m.get_mut(1, 1) = PowerSeries::new(3, vec![int(1), int(-1)]);
        let d = m.det().unwrap();
        assert_eq!(d.coeffs(), &[int(1), int(0), int(-1), int(0)]);
    }
}
