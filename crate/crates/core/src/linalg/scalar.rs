//! Exact scalars and their canonical text form.
//!
//! Every coefficient that leaves the library is written as `"num/den"` with a
//! positive denominator, including integers (`"7/1"`), so serialized records
//! compare byte-for-byte.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `"num/den"` text.
pub trait FractionText: Sized {
    fn to_fraction(&self) -> String;
    fn parse_fraction(s: &str) -> Result<Self>;
}

impl FractionText for Rational {
    fn to_fraction(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_fraction(s: &str) -> Result<Self> {
        let bad = || Error::Record(format!("not a fraction: {s:?}"));
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if !d.is_positive() {
            return Err(bad());
        }
        let r = Rational::new(n, d);
        // Reject non-canonical text so that parse/print is a bijection.
        if r.to_fraction() != s {
            return Err(Error::Record(format!("non-canonical fraction {s:?}")));
        }
        Ok(r)
    }
}

impl FractionText for BigInt {
    fn to_fraction(&self) -> String {
        format!("{self}/1")
    }

    fn parse_fraction(s: &str) -> Result<Self> {
        let r = Rational::parse_fraction(s)?;
        if !r.denom().is_one() {
            return Err(Error::Record(format!("expected an integer, got {s:?}")));
        }
        Ok(r.numer().clone())
    }
}

pub fn is_dyadic(r: &Rational) -> bool {
    let d = r.denom();
    if d.is_zero() {
        return false;
    }
    let tz = d.trailing_zeros().unwrap_or(0);
    (d >> tz as usize).is_one()
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}


/// Serde adapter for `Option<Rational>` as an optional `"num/den"` string.
pub mod opt_fraction {
    use super::{FractionText, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.serialize_some(&r.to_fraction()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| Rational::parse_fraction(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
