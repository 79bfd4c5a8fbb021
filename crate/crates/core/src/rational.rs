//! Exact rational scalars.
//!
//! All non-integer quantities in this crate (theta-form parameters, periodic
//! remainders, quadratic threshold coefficients) are `Rational`: a ratio of
//! arbitrary-precision integers kept in lowest terms with a positive
//! denominator. No floating point is used anywhere.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;

use crate::error::{Error, Result};

pub type Rational = Ratio<BigInt>;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational, reduced to lowest terms.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Render as `"p"` when the value is an integer, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p/q"`, a plain integer, or a decimal whose fractional part is a
/// half (`"1.5"`, `"0.5"`, `"2.0"`). Anything else is rejected: general
/// decimals have no exact meaning here.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("cannot parse rational from {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(Error::InvalidArgument(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let (sign, whole) = match whole.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, whole),
        };
        let whole: BigInt = if whole.is_empty() {
            BigInt::from(0)
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let half = match frac {
            "0" => 0,
            "5" => 1,
            _ => return Err(Error::InvalidArgument(format!(
                "only halves are exact: cannot parse {s:?}"
            ))),
        };
        let twice = whole * 2 + half;
        return Ok(Rational::new(BigInt::from(sign) * twice, BigInt::from(2)));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}
