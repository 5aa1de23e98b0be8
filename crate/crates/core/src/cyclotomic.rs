//! Cyclotomic polynomials and cyclotomic divisibility.
//!
//! Pole analysis in this crate never evaluates anything at a complex point:
//! "the gf has a pole at a primitive n-th root of unity of order e" is read
//! off as "Phi_n divides the denominator with multiplicity e".

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::arith::{divisors, euler_phi};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

static CACHE: OnceLock<Mutex<HashMap<u64, Polynomial>>> = OnceLock::new();

/// The n-th cyclotomic polynomial Phi_n: monic, integer coefficients,
/// degree phi(n). Computed as (x^n - 1) / prod_{d|n, d<n} Phi_d and memoized.
pub fn cyclotomic(n: u64) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic index must be positive".into(),
        ));
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    if let Some(p) = map.get(&n) {
        return Ok(p.clone());
    }
    // Fill all divisors of n in increasing order; every Phi_e needed for
    // Phi_d with e | d, e < d is then already present.
    for d in divisors(n) {
        if map.contains_key(&d) {
            continue;
        }
        let mut q = Polynomial::x_pow_minus_one(d);
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = map.get(&e).expect("divisors visited in increasing order");
            q = q
                .try_exact_div(phi_e)
                .expect("product of lower cyclotomics divides x^d - 1");
        }
        debug_assert_eq!(q.degree(), Some(euler_phi(d) as usize));
        map.insert(d, q);
    }
    Ok(map.get(&n).unwrap().clone())
}

/// Largest e such that Phi_n^e divides `p` exactly.
pub fn cyclotomic_multiplicity(p: &Polynomial, n: u64) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "cyclotomic multiplicity of the zero polynomial".into(),
        ));
    }
    let phi = cyclotomic(n)?;
    let mut count = 0u32;
    let mut cur = p.clone();
    while let Some(q) = cur.try_exact_div(&phi) {
        count += 1;
        cur = q;
    }
    Ok(count)
}
