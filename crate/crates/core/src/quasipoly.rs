//! Quasi-polynomials: polynomials in `k` whose coefficients are periodic
//! functions of `k`, defined on all of `Z`.

use num::bigint::BigInt;
use num::integer::lcm;
use num::{Integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{parse_rational, rat_int, Rational};

/// `q(k) = c_d(k) k^d + ... + c_0(k)` with every `c_j` periodic.
///
/// `coeffs[j][r]` is the value of `c_j` on the residue class `r` of the
/// stored period. The zero quasi-polynomial is period 1 with an empty table
/// (degree -1). Values keep the period they were constructed with; minimum
/// periods are computed on demand, never by destructive renormalization.
/// Evaluation at negative `k` uses the nonnegative residue of `k`, so the
/// function is total on `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    coeffs: Vec<Vec<Rational>>,
}

/// A single periodic coefficient function, stored as one full period of
/// values. The minimum period always divides the stored period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicFunction {
    values: Vec<Rational>,
}

/// Per-coefficient minimum periods together with their lcm, which is the
/// minimum period of the quasi-polynomial itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodProfile {
    pub coefficient_periods: Vec<u64>,
    pub minimum_period: u64,
}

impl PeriodicFunction {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "periodic function needs at least one value".into(),
            ));
        }
        Ok(PeriodicFunction { values })
    }

    pub fn from_ints(values: &[i64]) -> Self {
        PeriodicFunction {
            values: values.iter().map(|&v| rat_int(v)).collect(),
        }
    }

    pub fn period(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value_at(&self, k: i64) -> Rational {
        let r = k.rem_euclid(self.values.len() as i64) as usize;
        self.values[r].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Smallest positive period. Since the set of periods of a function with
    /// period P is closed under gcd, it suffices to scan the divisors of P
    /// in increasing order.
    pub fn minimum_period(&self) -> u64 {
        let p = self.values.len();
        for d in divisors(p as u64) {
            let q = d as usize;
            if (0..p).all(|r| self.values[r] == self.values[(r + q) % p]) {
                return d;
            }
        }
        unreachable!("the stored period is always a period")
    }
}

impl QuasiPolynomial {
    /// Build from a coefficient table; rows are `c_0, c_1, ...`, each of
    /// length `period`. Trailing identically-zero rows are trimmed so the
    /// leading coefficient is nonzero, and a fully zero table canonicalizes
    /// to the zero quasi-polynomial.
    pub fn new(period: u64, mut coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidArgument("period must be positive".into()));
        }
        for row in &coeffs {
            if row.len() != period as usize {
                return Err(Error::InvalidArgument(format!(
                    "coefficient row of length {} does not match period {period}",
                    row.len()
                )));
            }
        }
        while coeffs.last().is_some_and(|row| row.iter().all(Zero::is_zero)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Ok(QuasiPolynomial::zero());
        }
        Ok(QuasiPolynomial { period, coeffs })
    }

    pub fn zero() -> Self {
        QuasiPolynomial {
            period: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        QuasiPolynomial::new(1, vec![vec![c]]).expect("valid table")
    }

    /// An honest polynomial: period 1, coefficients lowest degree first.
    pub fn from_polynomial(coeffs: &[Rational]) -> Self {
        QuasiPolynomial::new(1, coeffs.iter().map(|c| vec![c.clone()]).collect())
            .expect("valid table")
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Degree, with -1 encoding the zero quasi-polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient_rows(&self) -> &[Vec<Rational>] {
        &self.coeffs
    }

    pub fn coefficient_function(&self, j: usize) -> Option<PeriodicFunction> {
        self.coeffs.get(j).map(|row| PeriodicFunction {
            values: row.clone(),
        })
    }

    /// `sum_j c_j(k) k^j` with the nonnegative-residue convention for the
    /// coefficient lookup, valid for every integer `k`.
    pub fn evaluate(&self, k: i64) -> Rational {
        if self.coeffs.is_empty() {
            return Rational::zero();
        }
        let r = k.rem_euclid(self.period as i64) as usize;
        let kq = Rational::from_integer(BigInt::from(k));
        let mut acc = Rational::zero();
        for row in self.coeffs.iter().rev() {
            acc = acc * &kq + &row[r];
        }
        acc
    }

    fn coeff_at(&self, j: usize, k: u64) -> Rational {
        match self.coeffs.get(j) {
            Some(row) => row[(k % self.period) as usize].clone(),
            None => Rational::zero(),
        }
    }

    /// The values `q(0), ..., q(count - 1)`, computed with integer Horner
    /// over per-residue cleared coefficient columns.
    pub fn values_prefix(&self, count: usize) -> Vec<Rational> {
        if self.coeffs.is_empty() {
            return vec![Rational::zero(); count];
        }
        let p = self.period as usize;
        let cleared: Vec<(Vec<BigInt>, BigInt)> = (0..p)
            .map(|r| {
                let column: Vec<Rational> =
                    self.coeffs.iter().map(|row| row[r].clone()).collect();
                over_common_denominator(&column)
            })
            .collect();
        (0..count)
            .map(|k| {
                let (column, den) = &cleared[k % p];
                let kb = BigInt::from(k as i64);
                let mut acc = BigInt::from(0);
                for c in column.iter().rev() {
                    acc = acc * &kb + c;
                }
                Rational::new(acc, den.clone())
            })
            .collect()
    }

    /// Pointwise sum, stored at the lcm of the two periods.
    pub fn add(&self, other: &QuasiPolynomial) -> QuasiPolynomial {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let period = lcm(self.period, other.period);
        let rows = self.coeffs.len().max(other.coeffs.len());
        let table = (0..rows)
            .map(|j| {
                (0..period)
                    .map(|r| self.coeff_at(j, r) + other.coeff_at(j, r))
                    .collect()
            })
            .collect();
        QuasiPolynomial::new(period, table).expect("valid table")
    }

    pub fn scale(&self, c: &Rational) -> QuasiPolynomial {
        let table = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|v| v * c).collect())
            .collect();
        QuasiPolynomial::new(self.period, table).expect("valid table")
    }

    /// Minimum period of every coefficient function plus their lcm.
    pub fn minimum_period_profile(&self) -> PeriodProfile {
        let coefficient_periods: Vec<u64> = self
            .coeffs
            .iter()
            .map(|row| {
                PeriodicFunction {
                    values: row.clone(),
                }
                .minimum_period()
            })
            .collect();
        let minimum_period = crate::arith::lcm_all(coefficient_periods.iter().copied());
        PeriodProfile {
            coefficient_periods,
            minimum_period,
        }
    }

    /// Recover a quasi-polynomial from consecutive values `q(0), q(1), ...`
    /// given a period `P` it is claimed to have and a degree bound `D`.
    ///
    /// Needs at least `P * (D + 1)` samples; every supplied sample beyond the
    /// interpolation window is verified against the interpolant, and the
    /// degree is trimmed afterwards.
    pub fn interpolate(values: &[Rational], period: u64, degree_bound: i64) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidArgument("period must be positive".into()));
        }
        if degree_bound < -1 {
            return Err(Error::InvalidArgument(
                "degree bound must be at least -1".into(),
            ));
        }
        if degree_bound == -1 {
            return if values.iter().all(Zero::is_zero) {
                Ok(QuasiPolynomial::zero())
            } else {
                Err(Error::NotQuasiPolynomial(
                    "nonzero sample for degree bound -1".into(),
                ))
            };
        }
        let p = period as usize;
        let d = degree_bound as usize;
        let need = p * (d + 1);
        if values.len() < need {
            return Err(Error::InvalidArgument(format!(
                "need at least {need} samples for period {period} and degree {d}, got {}",
                values.len()
            )));
        }
        // Newton divided differences per residue class
        let mut rows = vec![vec![Rational::zero(); p]; d + 1];
        for r in 0..p {
            let xs: Vec<i64> = (0..=d).map(|t| (r + t * p) as i64).collect();
            let mut dd: Vec<Rational> = (0..=d).map(|t| values[r + t * p].clone()).collect();
            for level in 1..=d {
                for j in (level..=d).rev() {
                    dd[j] = (&dd[j] - &dd[j - 1]) / rat_int(xs[j] - xs[j - level]);
                }
            }
            let mut poly = Polynomial::constant(dd[d].clone());
            for j in (0..d).rev() {
                let linear = Polynomial::new(vec![rat_int(-xs[j]), Rational::one()]);
                poly = &(&poly * &linear) + &Polynomial::constant(dd[j].clone());
            }
            for (j, row) in rows.iter_mut().enumerate() {
                row[r] = poly.coeff(j);
            }
        }
        // verify every supplied value against the interpolant; integer Horner
        // per residue keeps this pass linear in cheap BigInt operations
        let cleared: Vec<(Vec<BigInt>, BigInt)> = (0..p)
            .map(|r| {
                let column: Vec<Rational> = rows.iter().map(|row| row[r].clone()).collect();
                over_common_denominator(&column)
            })
            .collect();
        for (k, v) in values.iter().enumerate() {
            let (column, den) = &cleared[k % p];
            let kb = BigInt::from(k as i64);
            let mut acc = BigInt::from(0);
            for c in column.iter().rev() {
                acc = acc * &kb + c;
            }
            if v.numer() * den != acc * v.denom() {
                return Err(Error::NotQuasiPolynomial(format!(
                    "sample at k={k} deviates from the degree-{d} interpolant of period {period}"
                )));
            }
        }
        QuasiPolynomial::new(period, rows)
    }

    /// Convolution `C(k) = sum_{m=0}^{k} A(k-m) B(m)`.
    ///
    /// Computed by direct summation over one full verification window and
    /// interpolation with degree bound `deg A + deg B + 1` (then trimmed, so
    /// leading-coefficient cancellation is handled, not assumed). Agreement
    /// on `P * (D + 2)` consecutive values pins a period-`P`, degree-`D`
    /// quasi-polynomial uniquely, so the verification pass inside
    /// `interpolate` also certifies that the generating function of the
    /// result is the product of the factors' generating functions.
    pub fn convolve(&self, other: &QuasiPolynomial) -> Result<QuasiPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(QuasiPolynomial::zero());
        }
        let bound = (self.degree() + other.degree() + 1) as usize;
        let period = lcm(self.period, other.period);
        let count = period as usize * (bound + 2);
        let a = self.values_prefix(count);
        let b = other.values_prefix(count);
        // clear denominators so the quadratic summation runs on integers
        let (ai, da) = over_common_denominator(&a);
        let (bi, db) = over_common_denominator(&b);
        let den = da * db;
        let mut c = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = BigInt::from(0);
            for (m, bv) in bi.iter().enumerate().take(k + 1) {
                if !bv.is_zero() {
                    acc += &ai[k - m] * bv;
                }
            }
            c.push(Rational::new(acc, den.clone()));
        }
        QuasiPolynomial::interpolate(&c, period, bound as i64).map_err(|err| match err {
            Error::NotQuasiPolynomial(detail) => Error::Internal(format!(
                "convolution failed its interpolation cross-check: {detail}"
            )),
            other => other,
        })
    }
}

/// Scale a value list to integers over the lcm of its denominators.
fn over_common_denominator(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = values
        .iter()
        .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
    let scaled = values
        .iter()
        .map(|v| v.numer() * (&den / v.denom()))
        .collect();
    (scaled, den)
}

/// JSON shape of a quasi-polynomial: rationals as strings, rows ordered
/// `j = 0..=degree`, row entries ordered `r = 0..period-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPolynomialJson {
    pub period: u64,
    pub degree: i64,
    pub coeffs: Vec<Vec<String>>,
}

impl From<&QuasiPolynomial> for QuasiPolynomialJson {
    fn from(q: &QuasiPolynomial) -> Self {
        QuasiPolynomialJson {
            period: q.period,
            degree: q.degree(),
            coeffs: q
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<&QuasiPolynomialJson> for QuasiPolynomial {
    type Error = Error;

    fn try_from(json: &QuasiPolynomialJson) -> Result<Self> {
        let mut rows = Vec::with_capacity(json.coeffs.len());
        for row in &json.coeffs {
            rows.push(row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?);
        }
        let q = QuasiPolynomial::new(json.period, rows)?;
        if q.degree() != json.degree {
            return Err(Error::InvalidArgument(format!(
                "declared degree {} does not match coefficient table of degree {}",
                json.degree,
                q.degree()
            )));
        }
        Ok(q)
    }
}
