//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! There is a single formal grading variable. It plays the role of both `t`
//! (ascent statistics) and `q` (cell dimensions, field size); only the printed
//! name differs, see [`Poly::display_with`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// `coeffs[k]` is the coefficient of `t^k`. No trailing zeros; zero is `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// `c * t^k`.
    pub fn monomial<T: Into<BigInt>>(c: T, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_u64(&self, x: u64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Coefficients read the same forwards and backwards.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

/// `[k]_t = 1 + t + ... + t^(k-1)`; `[0]_t = 0`.
pub fn t_integer(k: usize) -> Poly {
    Poly::from_coeffs(vec![BigInt::one(); k])
}

/// `[n]_t! = [1]_t [2]_t ... [n]_t`.
pub fn t_factorial(n: usize) -> Poly {
    (1..=n).map(t_integer).fold(Poly::one(), |acc, p| &acc * &p)
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Poly::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> Sum<&'a Poly> for Poly {
    fn sum<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "{}", self.var)?,
                1 => write!(f, "{abs}{}", self.var)?,
                _ if unit => write!(f, "{}^{k}", self.var)?,
                _ => write!(f, "{abs}{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("t").fmt(f)
    }
}

// JSON form: ascending coefficient array of integers. Values beyond i128 fall
// back to decimal strings, which the deserializer also accepts.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => match c.to_i128() {
                    Some(v) => seq.serialize_element(&v)?,
                    None => seq.serialize_element(&c.to_string())?,
                },
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;
        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = Poly;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of integer coefficients")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Poly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    coeffs.push(c.0);
                }
                Ok(Poly::from_coeffs(coeffs))
            }
        }
        deserializer.deserialize_seq(CoeffVisitor)
    }
}

struct Coeff(BigInt);

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coeff;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coeff, E> {
                Ok(Coeff(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coeff, E> {
                Ok(Coeff(v.into()))
            }
            fn visit_i128<E: de::Error>(self, v: i128) -> Result<Coeff, E> {
                Ok(Coeff(v.into()))
            }
            fn visit_u128<E: de::Error>(self, v: u128) -> Result<Coeff, E> {
                Ok(Coeff(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coeff, E> {
                v.parse().map(Coeff).map_err(E::custom)
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_integers() {
        assert_eq!(t_integer(0), Poly::zero());
        assert_eq!(t_integer(1), Poly::one());
        assert_eq!(t_integer(3), Poly::from_i64s(&[1, 1, 1]));
    }

    #[test]
    fn factorial_three() {
        assert_eq!(t_factorial(3), Poly::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(t_factorial(3).eval_u64(2), BigInt::from(21));
    }

    #[test]
    fn canonical_form_trims() {
        let p = Poly::from_i64s(&[1, 0, 0]);
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(&Poly::from_i64s(&[1, 2]) - &Poly::from_i64s(&[1, 2]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn display() {
        let p = Poly::from_i64s(&[1, 2, 0, -1]);
        assert_eq!(p.to_string(), "1 + 2t - t^3");
        assert_eq!(p.display_with("q").to_string(), "1 + 2q - q^3");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn json_roundtrip_with_huge_coefficient() {
        let big: BigInt = "123456789012345678901234567890123456789012".parse().unwrap();
        let p = Poly::from_coeffs(vec![BigInt::from(3), big]);
        let s = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&Poly::from_i64s(&[0, 1])).unwrap(), "[0,1]");
    }
}
