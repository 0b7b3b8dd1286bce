//! Exact rational scalars.
//!
//! Every matrix entry in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (positive denominator, gcd-reduced) by
//! construction. All arithmetic is exact; there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`. Panics if `d == 0`; intended for
/// demos and tests where the literal is known to be valid.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational literal: optional minus, digits, optionally followed by
/// `/` and digits. The denominator must be nonzero.
///
/// This is the scalar syntax of the JSON system files, so it is strict: no
/// whitespace, no leading `+`, no sign after the slash.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational literal {text:?}"));
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };

    let digits = numer_text.strip_prefix('-').unwrap_or(numer_text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = numer_text.parse().map_err(|_| bad())?;

    let denom = match denom_text {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let denom: BigInt = d.parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(Error::Parse(format!(
                    "zero denominator in rational literal {text:?}"
                )));
            }
            denom
        }
    };

    Ok(Rational::new(numer, denom))
}

/// Canonical string form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}
