//! Exact rational scalars.
//!
//! Every coefficient in this crate is a reduced fraction of
//! arbitrary-precision integers; no floating point appears anywhere, since
//! minimum-period detection is an exact-equality question. Rationals render
//! as `a/b` (or `a` when the denominator is 1), which is also the form used
//! by all JSON interfaces.

use num::bigint::BigInt;
use num::ToPrimitive;

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The unsigned integer `n` as a rational.
pub fn rat_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `a/b` or `a` with arbitrary-precision parts.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::InvalidArgument(format!("bad rational `{s}`: {e}")))
}

/// The (positive) denominator as `u64`; errors if it does not fit.
pub fn denominator_u64(r: &Rational) -> Result<u64> {
    r.denom()
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("denominator of {r} out of range")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3/2", "-1/2", "4", "0", "-7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        // non-canonical inputs normalize
        assert_eq!(parse_rational("2/4").unwrap().to_string(), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn denominator_extraction() {
        assert_eq!(denominator_u64(&rat(2, 3)).unwrap(), 3);
        assert_eq!(denominator_u64(&rat_int(5)).unwrap(), 1);
    }
}
