//! Power-series coefficients of rational functions.

use num::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// First `count` Taylor coefficients of `num/den` at the origin, computed by
/// the linear recurrence the denominator induces:
/// `den_0 a_k = num_k - sum_{i>=1} den_i a_{k-i}`.
pub fn series_coefficients(
    num: &Polynomial,
    den: &Polynomial,
    count: usize,
) -> Result<Vec<Rational>> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::DenominatorVanishesAtOrigin);
    }
    let m = den.degree().unwrap_or(0);
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = num.coeff(k);
        for i in 1..=m.min(k) {
            acc -= den.coeff(i) * &out[k - i];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}
