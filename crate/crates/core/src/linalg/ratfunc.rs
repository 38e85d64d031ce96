use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::RatPoly;
use super::scalar::Rational;
use super::series::PowerSeries;
use crate::error::{Error, Result};

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    pub fn reduce(num: &RatPoly, den: &RatPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = num.gcd(den);
        let (mut n, mut d) = if g.is_zero() {
            (num.clone(), den.clone())
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        if n.is_zero() {
            d = RatPoly::one();
        }
        let lc = d.leading().expect("nonzero denominator").clone();
        let inv = lc.recip();
        n = n.scale(&inv);
        d = d.scale(&inv);
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: &RatPoly) -> RatFunc {
        RatFunc {
            num: p.clone(),
            den: RatPoly::one(),
        }
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    /// Polynomial image when the denominator is constant.
    pub fn as_poly(&self) -> Option<&RatPoly> {
        (self.den == RatPoly::one()).then_some(&self.num)
    }

    /// Taylor coefficients at 0 through `order`.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        if self.den.coeff(0).is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        PowerSeries::from_poly(&self.num, order).div(&PowerSeries::from_poly(&self.den, order))
    }

    /// Vanishing order at `a`: order of the numerator root minus that of the
    /// denominator (negative for a pole).
    pub fn zero_order(&self, a: &Rational) -> Result<i64> {
        if self.num.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.num.root_order(a)? as i64 - self.den.root_order(a)? as i64)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{}", p.display_in("w")),
            None => write!(f, "({}) / ({})", self.num.display_in("w"), self.den.display_in("w")),
        }
    }
}
