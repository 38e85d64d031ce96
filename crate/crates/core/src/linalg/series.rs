//! Truncated power series `c_0 + c_1 w + ... + c_N w^N + O(w^(N+1))`.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::RatPoly;
use super::scalar::{FractionText, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series with coefficients `c_0..c_N`; missing entries are zero.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        Self::new(order, vec![c])
    }

    pub fn from_poly(p: &RatPoly, order: usize) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-truncates to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut s = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -s * &inv0;
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut v: Vec<Rational> = (1..=n)
            .map(|k| &self.coeffs[k] * Rational::from_integer(k.into()))
            .collect();
        v.push(Rational::zero());
        // one order of accuracy is lost
        PowerSeries::new(n.saturating_sub(1), v)
    }

    /// Formal antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut v = vec![Rational::zero()];
        for k in 0..=n {
            v.push(&self.coeffs[k] / Rational::from_integer((k + 1).into()));
        }
        PowerSeries::new(n + 1, v)
    }

    /// `log s` for a series with constant term 1, as the integral of `s'/s`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotUnitSeries);
        }
        let n = self.order();
        if n == 0 {
            return Ok(PowerSeries::zero(0));
        }
        let d = self.derivative();
        let q = d.div(&self.truncate(n - 1))?;
        Ok(q.integrate())
    }

    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..=self.common_order(other)).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common_order(rhs);
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common_order(rhs);
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common_order(rhs);
        let mut out = vec![Rational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !rhs.coeffs[j].is_zero() {
                    out[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_fraction()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v: Vec<String> = Vec::deserialize(d)?;
        if v.is_empty() {
            return Err(D::Error::custom("empty series"));
        }
        let coeffs = v
            .iter()
            .map(|s| Rational::parse_fraction(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(PowerSeries { coeffs })
    }
}
