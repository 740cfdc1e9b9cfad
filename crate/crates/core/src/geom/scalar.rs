use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational.
pub type Q = BigRational;

/// Coordinate field: exact rationals or tolerance-compared floats.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Sign in `{-1, 0, 1}`; floats within `eps` of zero count as zero.
    fn sign(&self, eps: f64) -> i8;
    /// Lossless text form: `num/den` for rationals, shortest round-trip decimal for floats.
    fn to_repr(&self) -> String;
    fn parse_repr(s: &str) -> Option<Self>;

    fn abs(&self) -> Self {
        if self.sign(0.0) < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for Q {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Q::from_integer(BigInt::from(v))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Q::new(BigInt::from(n), BigInt::from(d))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Huge numerators overflow the direct conversion; go through a scaled ratio.
            let n = self.numer().to_f64().unwrap_or(f64::INFINITY);
            let d = self.denom().to_f64().unwrap_or(f64::INFINITY);
            n / d
        })
    }
    fn sign(&self, _eps: f64) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
    fn to_repr(&self) -> String {
        q_to_string(self)
    }
    fn parse_repr(s: &str) -> Option<Self> {
        q_from_str(s)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sign(&self, eps: f64) -> i8 {
        if f64::abs(*self) <= eps {
            0
        } else if *self > 0.0 {
            1
        } else {
            -1
        }
    }
    fn to_repr(&self) -> String {
        format!("{self:?}")
    }
    fn parse_repr(s: &str) -> Option<Self> {
        s.trim().parse::<f64>().ok().filter(|v| v.is_finite())
    }
}

pub fn q(n: i64, d: i64) -> Q {
    Q::from_ratio(n, d)
}

pub fn qi(n: i64) -> Q {
    Q::from_i64(n)
}

/// Tolerance-aware comparison `a ? b` returning the sign of `a - b`.
pub fn cmp<S: Scalar>(a: &S, b: &S, eps: f64) -> i8 {
    (a.clone() - b.clone()).sign(eps)
}

/// Formats a rational as `num/den`, or `num` when integral.
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `num/den` or an integer.
pub fn q_from_str(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for (n, d) in [(1, 2), (-7, 3), (10, 5), (0, 9)] {
            let x = q(n, d);
            assert_eq!(q_from_str(&q_to_string(&x)), Some(x));
        }
        assert_eq!(q_from_str("3/0"), None);
        assert_eq!(q_from_str("x"), None);
    }

    #[test]
    fn float_sign_respects_eps() {
        assert_eq!(1e-12f64.sign(1e-9), 0);
        assert_eq!((-1e-3f64).sign(1e-9), -1);
        assert_eq!(q(1, 1_000_000_000).sign(1.0), 1);
    }

    #[test]
    fn huge_rational_to_float() {
        let big = Q::new(BigInt::from(10).pow(400) + 1, BigInt::from(10).pow(399));
        assert!((Scalar::to_f64(&big) - 10.0).abs() < 1e-9);
    }
}
