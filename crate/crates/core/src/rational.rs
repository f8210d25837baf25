//! Exact rational arithmetic helpers.
//!
//! Every mass and curvature value in this crate is a [`Rational`]
//! (arbitrary-precision, always reduced, positive denominator). The
//! textual form is `p/q`, or just `p` when the denominator is one.

use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p/q` or `p`. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    Rational::from_str(text.trim())
        .map_err(|_| Error::InvalidInput(format!("not a rational (expected p/q): {text:?}")))
}
