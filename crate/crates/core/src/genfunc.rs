//! Rational generating functions with cyclotomic denominators.
//!
//! A value represents `unit * numerator / prod_n Phi_n^e`. The denominator is
//! kept as a factored multiset so pole orders at roots of unity can be read
//! off directly; it is only expanded for series extraction. Reduction is lazy
//! and cached on first use.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::arith::{divisors, euler_phi, lcm_all};
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quasipoly::{PeriodicFunction, QuasiPolynomial};
use crate::rational::Rational;
use crate::series::series_coefficients;

pub struct RationalGF {
    unit: Rational,
    numerator: Polynomial,
    den_factors: BTreeMap<u64, u32>,
    reduced: OnceLock<ReducedParts>,
}

/// Fully cancelled form with the unit folded into the numerator; the
/// denominator is the monic product of the remaining cyclotomic factors, so
/// this shape is canonical and supports equality tests.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ReducedParts {
    numerator: Polynomial,
    den_factors: BTreeMap<u64, u32>,
}

fn expand_factors(factors: &BTreeMap<u64, u32>) -> Polynomial {
    let mut acc = Polynomial::one();
    for (&n, &e) in factors {
        let phi = cyclotomic(n).expect("factor keys are positive");
        for _ in 0..e {
            acc = &acc * &phi;
        }
    }
    acc
}

impl RationalGF {
    fn normalized(unit: Rational, numerator: Polynomial, den_factors: BTreeMap<u64, u32>) -> Self {
        if numerator.is_zero() {
            return RationalGF::zero();
        }
        debug_assert!(!unit.is_zero(), "unit of a nonzero gf must be nonzero");
        let den_factors = den_factors.into_iter().filter(|&(_, e)| e > 0).collect();
        RationalGF {
            unit,
            numerator,
            den_factors,
            reduced: OnceLock::new(),
        }
    }

    pub fn zero() -> Self {
        RationalGF {
            unit: Rational::one(),
            numerator: Polynomial::zero(),
            den_factors: BTreeMap::new(),
            reduced: OnceLock::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `num / prod_i (1 - x^{a_i})`. Each factor `1 - x^a` is `-prod_{d|a}
    /// Phi_d`, so the signs collect into the unit.
    pub fn from_denominator_exponents(num: Polynomial, exponents: &[u64]) -> Result<Self> {
        if exponents.contains(&0) {
            return Err(Error::InvalidArgument(
                "denominator exponents must be positive".into(),
            ));
        }
        let mut den = BTreeMap::new();
        for &a in exponents {
            for d in divisors(a) {
                *den.entry(d).or_insert(0) += 1;
            }
        }
        let unit = if exponents.len() % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        Ok(RationalGF::normalized(unit, num, den))
    }

    /// `num / prod Phi_n^e` for explicit cyclotomic factors.
    pub fn from_cyclotomic_factors(num: Polynomial, factors: &[(u64, u32)]) -> Result<Self> {
        let mut den = BTreeMap::new();
        for &(n, e) in factors {
            if n == 0 {
                return Err(Error::InvalidArgument(
                    "cyclotomic index must be positive".into(),
                ));
            }
            *den.entry(n).or_insert(0) += e;
        }
        Ok(RationalGF::normalized(Rational::one(), num, den))
    }

    /// `num / den` for an arbitrary polynomial denominator. The denominator
    /// must factor completely into cyclotomics; candidates are all `n` with
    /// `phi(n) <= deg`, which is covered by searching `n <= 2 deg^2` since
    /// `phi(n) >= sqrt(n/2)`. Anything left unfactored is a pole off the
    /// roots of unity and is refused.
    pub fn from_num_den(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("denominator is zero".into()));
        }
        let d0 = den.degree().unwrap() as u64;
        let mut rem = den;
        let mut factors: BTreeMap<u64, u32> = BTreeMap::new();
        for n in 1..=2 * d0 * d0 {
            let deg_rem = rem.degree().unwrap() as u64;
            if deg_rem == 0 {
                break;
            }
            if euler_phi(n) > deg_rem {
                continue;
            }
            let phi = cyclotomic(n)?;
            while let Some(q) = rem.try_exact_div(&phi) {
                *factors.entry(n).or_insert(0) += 1;
                rem = q;
            }
        }
        if rem.degree() != Some(0) {
            return Err(Error::PolesNotRootsOfUnity);
        }
        let unit = rem.coeff(0).recip();
        Ok(RationalGF::normalized(unit, num, factors))
    }

    /// Exact generating function `sum_{k >= 0} q(k) x^k`, built with
    /// denominator `(1 - x^P)^{d+1}`. Always proper.
    pub fn from_quasipolynomial(q: &QuasiPolynomial) -> Self {
        if q.is_zero() {
            return RationalGF::zero();
        }
        let p = q.period() as usize;
        let rows = (q.degree() + 1) as usize;
        let terms = p * rows;
        let values = q.values_prefix(terms);
        // binomial row for (1 - x^P)^rows
        let mut binom: Vec<BigInt> = vec![BigInt::one()];
        for i in 0..rows {
            let next = &binom[i] * BigInt::from(rows - i) / BigInt::from(i + 1);
            binom.push(next);
        }
        let mut num = vec![Rational::zero(); terms];
        for (m, slot) in num.iter_mut().enumerate() {
            let mut acc = Rational::zero();
            for (i, b) in binom.iter().enumerate() {
                let offset = i * p;
                if offset > m {
                    break;
                }
                let signed = if i % 2 == 0 { b.clone() } else { -b.clone() };
                acc += &values[m - offset] * Rational::from_integer(signed);
            }
            *slot = acc;
        }
        let mut den = BTreeMap::new();
        for d in divisors(q.period()) {
            den.insert(d, rows as u32);
        }
        let unit = if rows % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        let gf = RationalGF::normalized(unit, Polynomial::new(num), den);
        debug_assert!(gf.is_proper(), "quasi-polynomial gf must be proper");
        gf
    }

    /// Generating function of `k -> c(k) k^m`, built from the base case
    /// `(c(0) + c(1) x + ... + c(n-1) x^{n-1}) / (1 - x^n)` by m-fold
    /// application of `x d/dx`.
    pub fn monomial_gf(c: &PeriodicFunction, m: u32) -> Self {
        let base = Polynomial::new(c.values().to_vec());
        let mut gf = RationalGF::from_denominator_exponents(base, &[c.period()])
            .expect("period is positive");
        for _ in 0..m {
            gf = gf.x_d_dx();
        }
        gf.reduce_now()
    }

    /// `x * d/dx` of this gf: each pole order goes up by exactly one.
    fn x_d_dx(&self) -> RationalGF {
        if self.is_zero() {
            return RationalGF::zero();
        }
        let den = expand_factors(&self.den_factors);
        let raw =
            &(&self.numerator.derivative() * &den) - &(&self.numerator * &den.derivative());
        let num = &Polynomial::x() * &raw;
        let doubled = self
            .den_factors
            .iter()
            .map(|(&n, &e)| (n, 2 * e))
            .collect();
        RationalGF::normalized(self.unit.clone(), num, doubled).reduce_now()
    }

    fn reduced_parts(&self) -> &ReducedParts {
        self.reduced.get_or_init(|| {
            if self.numerator.is_zero() {
                return ReducedParts {
                    numerator: Polynomial::zero(),
                    den_factors: BTreeMap::new(),
                };
            }
            let mut num = self.numerator.scale(&self.unit);
            let mut factors = BTreeMap::new();
            for (&n, &e) in &self.den_factors {
                let phi = cyclotomic(n).expect("factor keys are positive");
                let mut left = e;
                while left > 0 {
                    match num.try_exact_div(&phi) {
                        Some(q) => {
                            num = q;
                            left -= 1;
                        }
                        None => break,
                    }
                }
                if left > 0 {
                    factors.insert(n, left);
                }
            }
            ReducedParts {
                numerator: num,
                den_factors: factors,
            }
        })
    }

    /// Rebuild as an eagerly reduced value (unit folded into the numerator).
    pub fn reduce_now(&self) -> RationalGF {
        let parts = self.reduced_parts().clone();
        if parts.numerator.is_zero() {
            return RationalGF::zero();
        }
        let gf = RationalGF {
            unit: Rational::one(),
            numerator: parts.numerator.clone(),
            den_factors: parts.den_factors.clone(),
            reduced: OnceLock::new(),
        };
        let _ = gf.reduced.set(parts);
        gf
    }

    /// Numerator of the reduced form (unit included).
    pub fn reduced_numerator(&self) -> &Polynomial {
        &self.reduced_parts().numerator
    }

    /// Multiplicity of Phi_n in the reduced denominator, for every `n` that
    /// occurs; this is the common order of all primitive n-th root poles.
    pub fn pole_orders(&self) -> BTreeMap<u64, u32> {
        self.reduced_parts().den_factors.clone()
    }

    fn is_proper(&self) -> bool {
        let parts = self.reduced_parts();
        match parts.numerator.degree() {
            None => true,
            Some(nd) => {
                let dd: u64 = parts
                    .den_factors
                    .iter()
                    .map(|(&n, &e)| euler_phi(n) * e as u64)
                    .sum();
                (nd as u64) < dd
            }
        }
    }

    /// Expand a proper, fully cyclotomic gf back into a quasi-polynomial with
    /// period `lcm{n : Phi_n occurs}` and degree `max multiplicity - 1`.
    pub fn to_quasipolynomial(&self) -> Result<QuasiPolynomial> {
        if self.is_zero() {
            return Ok(QuasiPolynomial::zero());
        }
        if !self.is_proper() {
            return Err(Error::PolynomialPartPresent);
        }
        let parts = self.reduced_parts();
        let period = lcm_all(parts.den_factors.keys().copied());
        let degree = *parts.den_factors.values().max().expect("proper, so nonempty") - 1;
        let count = period as usize * (degree as usize + 2);
        let den = expand_factors(&parts.den_factors);
        let series = series_coefficients(&parts.numerator, &den, count)?;
        QuasiPolynomial::interpolate(&series, period, degree as i64).map_err(|e| {
            Error::Internal(format!(
                "cyclotomic expansion failed to interpolate as a quasi-polynomial: {e}"
            ))
        })
    }

    /// Exact product; reduction stays lazy.
    pub fn multiply(&self, other: &RationalGF) -> RationalGF {
        if self.is_zero() || other.is_zero() {
            return RationalGF::zero();
        }
        let mut den = self.den_factors.clone();
        for (&n, &e) in &other.den_factors {
            *den.entry(n).or_insert(0) += e;
        }
        RationalGF::normalized(
            &self.unit * &other.unit,
            &self.numerator * &other.numerator,
            den,
        )
    }

    /// Exact sum over the factored common denominator.
    pub fn add(&self, other: &RationalGF) -> RationalGF {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den: BTreeMap<u64, u32> = self.den_factors.clone();
        for (&n, &e) in &other.den_factors {
            let slot = den.entry(n).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |gf: &RationalGF| -> Polynomial {
            let mut p = gf.numerator.scale(&gf.unit);
            for (&n, &target) in &den {
                let have = gf.den_factors.get(&n).copied().unwrap_or(0);
                if have < target {
                    let phi = cyclotomic(n).expect("factor keys are positive");
                    for _ in have..target {
                        p = &p * &phi;
                    }
                }
            }
            p
        };
        RationalGF::normalized(Rational::one(), &lift(self) + &lift(other), den)
    }
}

/// The summands `r_j(x) = sum_k c_j(k) k^j x^k`, one per coefficient function
/// of `q`; their sum is the generating function of `q` (asserted). The zero
/// quasi-polynomial yields an empty list, and identically zero coefficient
/// rows yield the zero gf.
pub fn coefficientwise_split(q: &QuasiPolynomial) -> Vec<RationalGF> {
    let mut parts = Vec::new();
    let mut sum = RationalGF::zero();
    for j in 0..q.coefficient_rows().len() {
        let c = q.coefficient_function(j).expect("row index in range");
        let gf = RationalGF::monomial_gf(&c, j as u32);
        sum = sum.add(&gf);
        parts.push(gf);
    }
    assert!(
        sum == RationalGF::from_quasipolynomial(q),
        "coefficientwise split must sum to the full generating function"
    );
    parts
}

impl Clone for RationalGF {
    fn clone(&self) -> Self {
        let reduced = OnceLock::new();
        if let Some(parts) = self.reduced.get() {
            let _ = reduced.set(parts.clone());
        }
        RationalGF {
            unit: self.unit.clone(),
            numerator: self.numerator.clone(),
            den_factors: self.den_factors.clone(),
            reduced,
        }
    }
}

/// Equality of reduced forms: a proper fraction with a monic factored
/// denominator and no common factor is unique.
impl PartialEq for RationalGF {
    fn eq(&self, other: &Self) -> bool {
        self.reduced_parts() == other.reduced_parts()
    }
}

impl Eq for RationalGF {}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        self.multiply(rhs)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.reduced_parts();
        if parts.numerator.is_zero() {
            return write!(f, "0");
        }
        write!(f, "({})", parts.numerator)?;
        if !parts.den_factors.is_empty() {
            write!(f, " / (")?;
            for (i, (n, e)) in parts.den_factors.iter().enumerate() {
                if i > 0 {
                    write!(f, " * ")?;
                }
                if *e == 1 {
                    write!(f, "Phi_{n}")?;
                } else {
                    write!(f, "Phi_{n}^{e}")?;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn orders(pairs: &[(u64, u32)]) -> BTreeMap<u64, u32> {
        pairs.iter().copied().collect()
    }

    fn half_step() -> QuasiPolynomial {
        QuasiPolynomial::new(
            2,
            vec![vec![rat_int(1), rat(1, 2)], vec![rat(1, 2), rat(1, 2)]],
        )
        .unwrap()
    }

    #[test]
    fn constant_one_gf() {
        let gf = RationalGF::from_quasipolynomial(&QuasiPolynomial::constant(rat_int(1)));
        assert_eq!(gf.pole_orders(), orders(&[(1, 1)]));
        assert_eq!(
            gf,
            RationalGF::from_denominator_exponents(Polynomial::one(), &[1]).unwrap()
        );
    }

    #[test]
    fn degree_zero_gf_matches_direct_formula() {
        // q with values (1, 0) repeating: gf is 1 / (1 - x^2)
        let q = QuasiPolynomial::new(2, vec![vec![rat_int(1), rat_int(0)]]).unwrap();
        let gf = RationalGF::from_quasipolynomial(&q);
        assert_eq!(
            gf,
            RationalGF::from_denominator_exponents(Polynomial::one(), &[2]).unwrap()
        );
        assert_eq!(gf.pole_orders(), orders(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn half_step_gf_reduces() {
        let gf = RationalGF::from_quasipolynomial(&half_step());
        assert_eq!(
            gf,
            RationalGF::from_denominator_exponents(Polynomial::one(), &[1, 2]).unwrap()
        );
        assert_eq!(gf.pole_orders(), orders(&[(1, 2), (2, 1)]));
    }

    #[test]
    fn expansion_round_trips() {
        let gf = RationalGF::from_denominator_exponents(Polynomial::one(), &[1, 2]).unwrap();
        let q = gf.to_quasipolynomial().unwrap();
        assert_eq!(q, half_step());

        let square =
            RationalGF::from_num_den(Polynomial::one(), Polynomial::one_minus_x_pow(1).pow(2))
                .unwrap();
        assert_eq!(
            square.to_quasipolynomial().unwrap(),
            QuasiPolynomial::from_polynomial(&[rat_int(1), rat_int(1)])
        );
    }

    #[test]
    fn expansion_without_pole_at_one() {
        // (x + 2) / Phi_3: purely periodic with values (2, -1, -1)
        let gf = RationalGF::from_num_den(
            Polynomial::from_int_coeffs(&[2, 1]),
            Polynomial::from_int_coeffs(&[1, 1, 1]),
        )
        .unwrap();
        assert_eq!(gf.pole_orders(), orders(&[(3, 1)]));
        let q = gf.to_quasipolynomial().unwrap();
        assert_eq!(q.period(), 3);
        assert_eq!(q.degree(), 0);
        assert_eq!(
            q.coefficient_rows()[0],
            vec![rat_int(2), rat_int(-1), rat_int(-1)]
        );
    }

    #[test]
    fn improper_input_rejected() {
        let gf = RationalGF::from_denominator_exponents(
            Polynomial::from_int_coeffs(&[1, 0, 7]),
            &[2],
        )
        .unwrap();
        assert_eq!(gf.to_quasipolynomial(), Err(Error::PolynomialPartPresent));
    }

    #[test]
    fn non_cyclotomic_pole_rejected() {
        let err = RationalGF::from_num_den(
            Polynomial::one(),
            Polynomial::from_int_coeffs(&[1, -2]), // root 1/2
        );
        assert_eq!(err.unwrap_err(), Error::PolesNotRootsOfUnity);
    }

    #[test]
    fn simplex_style_pole_orders() {
        let gf = RationalGF::from_denominator_exponents(Polynomial::one(), &[1, 2, 4]).unwrap();
        assert_eq!(gf.pole_orders(), orders(&[(1, 3), (2, 2), (4, 1)]));
    }

    #[test]
    fn monomial_gf_examples() {
        // sum k x^k = x / (1 - x)^2
        let ones = PeriodicFunction::from_ints(&[1]);
        let gf = RationalGF::monomial_gf(&ones, 1);
        assert_eq!(gf.pole_orders(), orders(&[(1, 2)]));
        assert_eq!(
            gf,
            RationalGF::from_num_den(Polynomial::x(), Polynomial::one_minus_x_pow(1).pow(2))
                .unwrap()
        );

        let blink = PeriodicFunction::from_ints(&[1, 0]);
        let gf = RationalGF::monomial_gf(&blink, 0);
        assert_eq!(gf.pole_orders(), orders(&[(1, 1), (2, 1)]));

        // derivative kills the pole at 1 for a mean-zero coefficient
        let balanced = PeriodicFunction::from_ints(&[2, -1, -1]);
        let gf = RationalGF::monomial_gf(&balanced, 1);
        assert_eq!(gf.pole_orders(), orders(&[(3, 2)]));
    }

    #[test]
    fn multiply_examples() {
        let geo = RationalGF::from_denominator_exponents(Polynomial::one(), &[1]).unwrap();
        let prod = geo.multiply(&geo);
        assert_eq!(prod.pole_orders(), orders(&[(1, 2)]));

        // cancellation: (1 - x) * 1/(1-x)^2 = 1/(1-x)
        let left = RationalGF::from_num_den(Polynomial::one_minus_x_pow(1), Polynomial::one())
            .unwrap();
        let right = RationalGF::from_denominator_exponents(Polynomial::one(), &[1, 1]).unwrap();
        assert_eq!(left.multiply(&right), geo);
    }

    #[test]
    fn split_examples() {
        // k + 1 splits into 1/(1-x) and x/(1-x)^2
        let line = QuasiPolynomial::from_polynomial(&[rat_int(1), rat_int(1)]);
        let parts = coefficientwise_split(&line);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].pole_orders(), orders(&[(1, 1)]));
        assert_eq!(parts[1].pole_orders(), orders(&[(1, 2)]));

        let parts = coefficientwise_split(&half_step());
        assert_eq!(parts[0].pole_orders(), orders(&[(1, 1), (2, 1)]));
        assert_eq!(parts[1].pole_orders(), orders(&[(1, 2)]));

        assert!(coefficientwise_split(&QuasiPolynomial::zero()).is_empty());
    }
}
