//! Exact rational arithmetic. Worths, payoffs, and coefficients are all
//! [`Rat`] values, so every equality check in the crate is decidable with
//! zero tolerance.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, kept in canonical reduced form
/// (positive denominator, gcd(|numerator|, denominator) = 1).
pub type Rat = num_rational::BigRational;

/// Shorthand for `numer/denom`. Panics on a zero denominator; intended for
/// literals in code and tests, not for parsing input.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer rational.
pub fn rint(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Parses a rational literal: either an integer string (`"-3"`) or a
/// fraction `"p/q"` with a positive denominator (`"5/3"`).
pub fn parse_rat(input: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(input.to_string());
    let mut parts = input.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(denom_str) => {
            let denom: BigInt = denom_str.parse().map_err(|_| bad())?;
            if denom.is_zero() || denom.is_negative() {
                return Err(bad());
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Canonical text form: `"p"` when the denominator is 1, otherwise `"p/q"`.
pub fn format_rat(value: &Rat) -> String {
    value.to_string()
}
