//! Unreduced fractions over arbitrary-precision integers.
//!
//! A [`FormalFraction`] never cancels common factors: `a/b + c/d` is always
//! `(ad + bc)/(bd)`. This is what keeps the numerator of a continued fraction
//! equal to the convergent recurrence value `p_n` (and therefore to the
//! Hosoya index of the matching graph) rather than to its reduced form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A numerator/denominator pair with `den > 0`, never reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalFraction {
    num: BigInt,
    den: BigInt,
}

impl FormalFraction {
    /// Builds `num/den`, moving the sign into the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: BigInt, den: BigInt) -> Self {
        if den.is_negative() {
            FormalFraction { num: -num, den: -den }
        } else {
            FormalFraction { num, den }
        }
    }

    pub fn from_int(k: impl Into<BigInt>) -> Self {
        FormalFraction { num: k.into(), den: BigInt::one() }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.num, self.den)
    }

    /// `(x.num·y.den + x.den·y.num) / (x.den·y.den)`.
    pub fn add(&self, other: &FormalFraction) -> FormalFraction {
        FormalFraction { num: &self.num * &other.den + &self.den * &other.num, den: &self.den * &other.den }
    }

    /// `(x.num·y.den − x.den·y.num) / (x.den·y.den)`.
    pub fn sub(&self, other: &FormalFraction) -> FormalFraction {
        FormalFraction { num: &self.num * &other.den - &self.den * &other.num, den: &self.den * &other.den }
    }

    /// `b` over this fraction: `(b·den)/num`, sign normalized into the numerator.
    pub fn int_over(&self, b: impl Into<BigInt>) -> Result<FormalFraction> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(b.into() * &self.den, self.num.clone()))
    }

    /// A new, gcd-reduced copy. The receiver is left untouched.
    pub fn reduce(&self) -> FormalFraction {
        let g = self.num.gcd(&self.den);
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        FormalFraction { num: &self.num / &g, den: &self.den / &g }
    }

    /// True when both fractions denote the same rational number.
    pub fn same_value(&self, other: &FormalFraction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

pub fn ff_from_int(k: impl Into<BigInt>) -> FormalFraction {
    FormalFraction::from_int(k)
}

pub fn ff_add(x: &FormalFraction, y: &FormalFraction) -> FormalFraction {
    x.add(y)
}

pub fn ff_sub(x: &FormalFraction, y: &FormalFraction) -> FormalFraction {
    x.sub(y)
}

pub fn ff_div_int(b: impl Into<BigInt>, x: &FormalFraction) -> Result<FormalFraction> {
    x.int_over(b)
}

impl fmt::Display for FormalFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for FormalFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected NUM/DEN, got {s:?}"));
        let (n, d) = s.trim().split_once('/').ok_or_else(bad)?;
        let num: BigInt = n.trim().parse().map_err(|_| bad())?;
        let den: BigInt = d.trim().parse().map_err(|_| bad())?;
        if !den.is_positive() {
            return Err(Error::Parse(format!("denominator must be positive in {s:?}")));
        }
        Ok(FormalFraction { num, den })
    }
}
