//! Exact rationals in lowest terms.
//!
//! A thin newtype over [`BigRational`] that fixes the textual form used
//! throughout the crate: always `p/q`, including integers (`0/1`, `3/1`).

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numer/denom`, normalised to lowest terms with a positive
    /// denominator. Panics on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    /// `2^-exp`.
    pub fn dyadic_unit(exp: u64) -> Self {
        let denom = BigInt::one() << exp;
        ExactRational(BigRational::new_raw(BigInt::one(), denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True when the denominator is a power of two.
    pub fn is_dyadic(&self) -> bool {
        let d = self.0.denom();
        d.is_positive() && (d & (d - BigInt::one())).is_zero()
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Self) -> Self {
        (self + other) / &ExactRational::from_integer(2)
    }

    /// Binary expansion `0.b1b2…bk` of a dyadic rational in `[0, 1)`.
    /// Returns `None` for anything else.
    pub fn binary_expansion(&self) -> Option<String> {
        if !self.is_dyadic() || self.0.is_negative() || self.0 >= BigRational::one() {
            return None;
        }
        if self.is_zero() {
            return Some("0".to_string());
        }
        let bits = self.denom().bits() - 1;
        let numer = self.numer().to_biguint()?;
        let digits = numer.to_str_radix(2);
        let width = bits as usize;
        Some(format!("0.{digits:0>width$}"))
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactRational {
    type Err = ParseError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| ParseError::new(s, reason);
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(p.trim()).map_err(|_| bad("malformed numerator"))?;
        let denom = BigInt::from_str(q.trim()).map_err(|_| bad("malformed denominator"))?;
        if denom.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(ExactRational::new(numer, denom))
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }

        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);
