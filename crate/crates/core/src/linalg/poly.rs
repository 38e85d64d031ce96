//! Dense univariate polynomials with exact coefficients.
//!
//! Coefficients are stored in ascending degree and the vector never ends in a
//! zero, so structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{FractionText, Rational};
use crate::error::{Error, Result};

/// Coefficient ring for [`Poly`].
pub trait Coeff: Clone + Num + Neg<Output = Self> + fmt::Display + fmt::Debug {}
impl<T: Clone + Num + Neg<Output = T> + fmt::Display + fmt::Debug> Coeff for T {}

/// Degree of a polynomial; the zero polynomial has degree minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type RatPoly = Poly<Rational>;
pub type IntPoly = Poly<BigInt>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * var^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// The polynomial `a + b*var`.
    pub fn linear(a: T, b: T) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients reflected inside a window of `len` slots:
    /// `var^(len-1) * p(1/var)`. Requires `len > deg p`.
    pub fn reflect(&self, len: usize) -> Self {
        assert!(
            self.coeffs.len() <= len,
            "reflect window shorter than polynomial"
        );
        let mut v = vec![T::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[len - 1 - i] = c.clone();
        }
        Poly::new(v)
    }

    /// `p(s * var)`
    pub fn scale_var(&self, s: &T) -> Self {
        let mut pw = T::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(c.clone() * pw.clone());
            pw = pw * s.clone();
        }
        Poly::new(v)
    }

    pub fn derivative(&self) -> Self {
        let mut v = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::one();
        for c in self.coeffs.iter().skip(1) {
            v.push(c.clone() * k.clone());
            k = k + T::one();
        }
        Poly::new(v)
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Poly::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// Lowest index at which the two coefficient vectors differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&k| self.coeff(k) != other.coeff(k))
    }

    /// Multiplicity of `var^k` dividing `p`; zero polynomial yields `None`.
    pub fn x_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Strips the maximal power of the variable.
    pub fn strip_x_power(&self) -> Self {
        match self.x_power() {
            None => Poly::zero(),
            Some(k) => Poly::new(self.coeffs[k..].to_vec()),
        }
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let needs_paren = mag.contains('/') && k > 0;
            let mag = if needs_paren { format!("({mag})") } else { mag };
            match k {
                0 => out.push_str(&mag),
                _ => {
                    if mag != "1" {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("x"))
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        Poly::new(
            p.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl IntPoly {
    pub fn from_i64(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        Poly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without division.
    pub fn pseudo_remainder(&self, b: &IntPoly) -> IntPoly {
        let db = b.coeffs.len() - 1;
        let lb = b.leading().expect("pseudo-remainder by zero").clone();
        let mut r = self.coeffs.clone();
        let mut steps = (r.len() as isize) - (db as isize) + 1;
        while r.len() > db && !r.is_empty() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[shift + i] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            steps -= 1;
        }
        while steps > 0 {
            for c in r.iter_mut() {
                *c *= &lb;
            }
            steps -= 1;
        }
        Poly::new(r)
    }

    /// Primitive gcd over the integers (primitive remainder sequence).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }
}

impl RatPoly {
    pub fn from_ints(v: &[i64]) -> Self {
        RatPoly::from(&IntPoly::from_i64(v))
    }

    /// Integer image when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(Poly::new(
                self.coeffs.iter().map(|c| c.numer().clone()).collect(),
            ))
        } else {
            None
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Primitive integer polynomial carrying the same roots.
    pub fn integer_primitive(&self) -> IntPoly {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        Poly::new(ints).primitive_part()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let ld = d.leading().ok_or(Error::ZeroPolynomial)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        while r.len() > dd {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - dd;
            if !lr.is_zero() {
                let f = &lr / &ld;
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[shift + i] -= &f * dc;
                }
                q[shift] = f;
            }
            r.pop();
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Exact quotient; fails when the division leaves a remainder.
    pub fn exact_div(&self, d: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "division not exact: remainder {}",
                r.display_in("w")
            )));
        }
        Ok(q)
    }

    /// Monic gcd over the rationals.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let g = self.integer_primitive().gcd(&other.integer_primitive());
        RatPoly::from(&g).monic()
    }

    /// Largest k with `(var - a)^k` dividing `p`.
    pub fn root_order(&self, a: &Rational) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut p = self.coeffs.clone();
        let mut k = 0;
        loop {
            // synthetic division by (var - a)
            let n = p.len();
            if n <= 1 {
                return Ok(k);
            }
            let mut q = vec![Rational::zero(); n - 1];
            let mut carry = Rational::zero();
            for i in (1..n).rev() {
                carry = &carry * a + &p[i];
                q[i - 1] = carry.clone();
            }
            let rem = &carry * a + &p[0];
            if !rem.is_zero() {
                return Ok(k);
            }
            p = q;
            k += 1;
        }
    }

    /// Square-free decomposition (Yun): returns `(factor, multiplicity)` with
    /// pairwise coprime, square-free, monic factors of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(RatPoly, usize)> {
        let mut out = Vec::new();
        if self.degree() <= Degree::Finite(0) {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = fp.exact_div(&a).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            a = b.gcd(&d);
            if a.degree() > Degree::Finite(0) {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            if b.degree() <= Degree::Finite(0) {
                break;
            }
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl<T: Coeff + FractionText> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_fraction()).collect();
        v.serialize(s)
    }
}

impl<'de, T: Coeff + FractionText> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| T::parse_fraction(s))
            .collect::<Result<Vec<T>>>()
            .map_err(D::Error::custom)?;
        if coeffs.last().is_some_and(|c| c.is_zero()) {
            return Err(D::Error::custom("trailing zero coefficient"));
        }
        Ok(Poly { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{int, rat};
    use super::*;

    fn rp(v: &[i64]) -> RatPoly {
        RatPoly::from_ints(v)
    }

    #[test]
    fn zero_has_sentinel_degree() {
        assert_eq!(RatPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(rp(&[1, 2, 0, 0]).degree(), Degree::Finite(1));
    }

    #[test]
    fn root_order_examples() {
        // (1-w)^2 (1+w) = 1 - w - w^2 + w^3
        let p = rp(&[1, -1, -1, 1]);
        assert_eq!(p.root_order(&int(1)).unwrap(), 2);
        assert_eq!(p.root_order(&int(-1)).unwrap(), 1);
        assert_eq!(RatPoly::one().root_order(&rat(3, 7)).unwrap(), 0);
        assert_eq!(RatPoly::zero().root_order(&int(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_and_division() {
        let a = &rp(&[1, -1]) * &rp(&[2, 0, 1]);
        let b = &rp(&[1, -1]) * &rp(&[3, 1]);
        assert_eq!(a.gcd(&b), rp(&[-1, 1]));
        let (q, r) = a.div_rem(&rp(&[1, -1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, rp(&[2, 0, 1]));
        assert!(a.exact_div(&rp(&[5, 1])).is_err());
    }

    #[test]
    fn integer_gcd_handles_content() {
        let a = IntPoly::from_i64(&[6, 6]);
        let b = IntPoly::from_i64(&[-4, 0, 4]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn squarefree_of_repeated_roots() {
        // x^3 (x-1)^2 (x+2)
        let p = &(&rp(&[0, 0, 0, 1]) * &rp(&[1, -2, 1])) * &rp(&[2, 1]);
        let sf = p.squarefree_decomposition();
        let mut rebuilt = RatPoly::one();
        for (f, k) in &sf {
            rebuilt = &rebuilt * &f.pow(*k as u32);
        }
        assert_eq!(rebuilt, p.monic());
        let mults: Vec<usize> = sf.iter().map(|(_, k)| *k).collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn display_forms() {
        let p = RatPoly::new(vec![int(1), rat(-1, 2), int(0), int(3)]);
        assert_eq!(p.display_in("w"), "1 - (1/2)*w + 3*w^3");
    }

    #[test]
    fn json_round_trip() {
        let p = RatPoly::new(vec![int(1), rat(-1, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/1","-1/2"]"#);
        let q: RatPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<RatPoly>(r#"["1/1","0/1"]"#).is_err());
    }
}
