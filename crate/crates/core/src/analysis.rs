//! Convolution period bounds, the sharpness construction, and the
//! conjecture-scanning harness.
//!
//! The convolution bound is a theorem and is asserted; the scan over general
//! exponent tuples only reports, because the prediction it compares against
//! is an open conjecture and a mismatch would be a finding, not a failure.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd_all, lcm_all};
use crate::error::{Error, Result};
use crate::ehrhart::SimplexSpec;
use crate::quasipoly::QuasiPolynomial;

/// Default cap on interpolation samples for a single conjecture check.
pub const DEFAULT_CHECK_BUDGET: u64 = 1_000_000;

/// `g_j = lcm{gcd(alpha_i, beta_{j-i}) : 0 <= i <= d, 0 <= j-i <= e}`, with
/// `g_{-1} = 1`.
pub fn g_sequence(alphas: &[u64], betas: &[u64], j: i64) -> Result<u64> {
    if alphas.is_empty() || betas.is_empty() {
        return Err(Error::InvalidArgument("empty period list".into()));
    }
    let d = alphas.len() as i64 - 1;
    let e = betas.len() as i64 - 1;
    if j == -1 {
        return Ok(1);
    }
    if j < -1 || j > d + e {
        return Err(Error::InvalidArgument(format!(
            "j = {j} out of range -1..={}",
            d + e
        )));
    }
    let lo = (j - e).max(0);
    let hi = j.min(d);
    Ok(lcm_all(
        (lo..=hi).map(|i| gcd_all([alphas[i as usize], betas[(j - i) as usize]])),
    ))
}

/// The divisibility bounds for the convolution coefficients: entry `t` bounds
/// the minimum period of `c_t` and equals
/// `lcm{alpha_t, ..., alpha_d, beta_t, ..., beta_e, g_{t-1}}`,
/// where empty ranges contribute 1. The result has length `d + e + 2`.
pub fn zaslavsky_bound(alphas: &[u64], betas: &[u64]) -> Vec<u64> {
    if alphas.is_empty() || betas.is_empty() {
        return Vec::new();
    }
    let d = alphas.len() - 1;
    let e = betas.len() - 1;
    (0..=d + e + 1)
        .map(|t| {
            let mut parts: Vec<u64> = Vec::new();
            if t <= d {
                parts.extend_from_slice(&alphas[t..]);
            }
            if t <= e {
                parts.extend_from_slice(&betas[t..]);
            }
            parts.push(g_sequence(alphas, betas, t as i64 - 1).expect("t - 1 in range"));
            lcm_all(parts)
        })
        .collect()
}

/// Outcome of checking the convolution bound on two concrete
/// quasi-polynomials. `gamma[t]` is the actual minimum period of `c_t` of the
/// convolution (padded with 1 for coefficients above the actual degree), and
/// `bound[t]` is the divisibility bound computed from the factors' minimum
/// period profiles.
#[derive(Clone, Debug)]
pub struct ZaslavskyReport {
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
    pub gamma: Vec<u64>,
    pub bound: Vec<u64>,
    pub holds: bool,
    pub convolution: QuasiPolynomial,
}

/// Convolve and compare the actual per-coefficient minimum periods against
/// the bound. The bound is evaluated on computed minimum-period profiles,
/// not on declared storage periods.
pub fn check_zaslavsky(a: &QuasiPolynomial, b: &QuasiPolynomial) -> Result<ZaslavskyReport> {
    let convolution = a.convolve(b)?;
    let alpha = a.minimum_period_profile().coefficient_periods;
    let beta = b.minimum_period_profile().coefficient_periods;
    let bound = zaslavsky_bound(&alpha, &beta);
    let mut gamma = convolution.minimum_period_profile().coefficient_periods;
    gamma.resize(bound.len(), 1);
    let holds = gamma.iter().zip(&bound).all(|(g, bd)| bd % g == 0);
    Ok(ZaslavskyReport {
        alpha,
        beta,
        gamma,
        bound,
        holds,
        convolution,
    })
}

/// Interleaved period chain `(alpha_0..alpha_d, beta_0..beta_e)` with
/// `d >= e`, hypothesis of the sharpness construction:
/// `alpha_d | ... | alpha_{e+1} | alpha_e | beta_e | alpha_{e-1} | beta_{e-1}
/// | ... | alpha_0 | beta_0`, all distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodChain {
    alphas: Vec<u64>,
    betas: Vec<u64>,
}

impl PeriodChain {
    pub fn new(alphas: Vec<u64>, betas: Vec<u64>) -> Self {
        PeriodChain { alphas, betas }
    }

    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[u64] {
        &self.betas
    }

    /// The interleaved sequence from smallest to largest.
    fn interleaved(&self) -> Vec<u64> {
        let e = self.betas.len() - 1;
        let mut seq: Vec<u64> = self.alphas[e + 1..].iter().rev().copied().collect();
        for i in (0..=e).rev() {
            seq.push(self.alphas[i]);
            seq.push(self.betas[i]);
        }
        seq
    }

    pub fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() || self.betas.is_empty() {
            return Err(Error::InvalidChain("empty period list".into()));
        }
        if self.alphas.iter().chain(&self.betas).any(|&v| v == 0) {
            return Err(Error::InvalidChain("periods must be positive".into()));
        }
        if self.alphas.len() < self.betas.len() {
            return Err(Error::InvalidChain(format!(
                "need d >= e, got d = {}, e = {}",
                self.alphas.len() - 1,
                self.betas.len() - 1
            )));
        }
        let seq = self.interleaved();
        for w in seq.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidChain(format!(
                    "interleaved chain entries must be distinct: {} repeats",
                    w[0]
                )));
            }
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidChain(format!(
                    "interleaved chain requires {} | {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    /// The minimum periods the construction is guaranteed to produce:
    /// `gamma_{2j} = beta_j` and `gamma_{2j+1} = alpha_j` for `j <= e`, and
    /// `gamma_{e+j+1} = alpha_j` for `j > e`.
    pub fn expected_gamma(&self) -> Vec<u64> {
        let d = self.alphas.len() - 1;
        let e = self.betas.len() - 1;
        let mut gamma = vec![1u64; d + e + 2];
        for j in 0..=e {
            gamma[2 * j] = self.betas[j];
            gamma[2 * j + 1] = self.alphas[j];
        }
        for j in e + 1..=d {
            gamma[e + j + 1] = self.alphas[j];
        }
        gamma
    }
}

/// The two Ehrhart quasi-polynomials of the construction plus the resulting
/// convolution report. Returned only when the bound is met with equality and
/// the interleaving pattern holds; both are guaranteed, so a violation is an
/// internal error.
#[derive(Clone, Debug)]
pub struct SharpnessReport {
    pub a: QuasiPolynomial,
    pub b: QuasiPolynomial,
    pub report: ZaslavskyReport,
}

pub fn sharpness_construction(chain: &PeriodChain) -> Result<SharpnessReport> {
    chain.validate()?;
    let a = SimplexSpec::new(chain.alphas().to_vec())?.ehrhart_qp()?;
    let b = SimplexSpec::new(chain.betas().to_vec())?.ehrhart_qp()?;
    let report = check_zaslavsky(&a, &b)?;
    if !report.holds {
        return Err(Error::Internal(format!(
            "convolution bound violated for chain {chain:?}"
        )));
    }
    if report.gamma != report.bound {
        return Err(Error::Internal(format!(
            "sharpness construction missed equality: gamma = {:?}, bound = {:?}",
            report.gamma, report.bound
        )));
    }
    let expected = chain.expected_gamma();
    if report.gamma != expected {
        return Err(Error::Internal(format!(
            "interleaving pattern violated: gamma = {:?}, expected = {:?}",
            report.gamma, expected
        )));
    }
    Ok(SharpnessReport { a, b, report })
}

/// Report-only probe of the weaker hypothesis where the alpha and beta lists
/// are divisibility chains separately but need not interleave. Nothing is
/// asserted beyond the divisibility theorem; whether equality holds here is
/// open, so the caller reads it off the report.
pub fn sharpness_experimental(alphas: &[u64], betas: &[u64]) -> Result<ZaslavskyReport> {
    for (name, list) in [("alpha", alphas), ("beta", betas)] {
        if list.is_empty() {
            return Err(Error::InvalidChain(format!("empty {name} list")));
        }
        for w in list.windows(2) {
            if w[0] == w[1] || w[0] % w[1] != 0 {
                return Err(Error::InvalidChain(format!(
                    "{name} list must be a distinct divisibility chain: {} after {}",
                    w[1], w[0]
                )));
            }
        }
    }
    if alphas.len() < betas.len() {
        return Err(Error::InvalidChain("need d >= e".into()));
    }
    let a = SimplexSpec::new(alphas.to_vec())?.ehrhart_qp()?;
    let b = SimplexSpec::new(betas.to_vec())?.ehrhart_qp()?;
    check_zaslavsky(&a, &b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

/// One tested exponent tuple: the predicted minimum-period profile of the
/// quasi-polynomial with generating function `1/prod(1 - x^{a_i})`, the
/// profile actually computed, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureInstance {
    pub a: Vec<u64>,
    pub predicted: Vec<u64>,
    pub actual: Vec<u64>,
    pub verdict: Verdict,
}

/// Predicted profile: with `b_m = #{i : m | a_i}`, coefficient `j` gets
/// `p_j = lcm{m : b_m > j}` (empty sets contribute 1; `m` only needs to range
/// up to `max(a_i)` since `b_m = 0` beyond).
pub fn conjecture_predict(a: &[u64]) -> Result<Vec<u64>> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty exponent tuple".into()));
    }
    if a.contains(&0) {
        return Err(Error::InvalidArgument("exponents must be positive".into()));
    }
    let max = *a.iter().max().unwrap();
    Ok((0..a.len())
        .map(|j| {
            lcm_all((1..=max).filter(|&m| a.iter().filter(|&&x| x % m == 0).count() > j))
        })
        .collect())
}

pub fn conjecture_check(a: &[u64]) -> Result<ConjectureInstance> {
    conjecture_check_with_budget(a, DEFAULT_CHECK_BUDGET)
}

pub fn conjecture_check_with_budget(a: &[u64], budget: u64) -> Result<ConjectureInstance> {
    let predicted = conjecture_predict(a)?;
    let spec = SimplexSpec::new(a.to_vec())?;
    let required = spec.lcm() * (a.len() as u64 + 1);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let qp = spec.ehrhart_qp()?;
    let actual = qp.minimum_period_profile().coefficient_periods;
    let verdict = if actual == predicted {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    Ok(ConjectureInstance {
        a: a.to_vec(),
        predicted,
        actual,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanFilter {
    All,
    /// Only tuples that sort into a distinct divisibility chain, where the
    /// prediction is a theorem rather than a conjecture.
    ChainsOnly,
}

/// Seeded random subsample of the enumeration, for long scans.
#[derive(Clone, Copy, Debug)]
pub struct ScanSample {
    pub seed: u64,
    pub limit: usize,
}

fn multisets(size: usize, max_entry: u64) -> Vec<Vec<u64>> {
    fn rec(size: usize, min: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if size == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in min..=max {
            prefix.push(v);
            rec(size - 1, v, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, 1, max_entry, &mut Vec::new(), &mut out);
    out
}

fn is_distinct_chain_multiset(sorted_ascending: &[u64]) -> bool {
    sorted_ascending
        .windows(2)
        .all(|w| w[0] != w[1] && w[1] % w[0] == 0)
}

/// Run `conjecture_check` over every multiset of exactly `size` entries drawn
/// from `1..=max_entry` (optionally filtered to distinct chains, optionally a
/// seeded subsample), sorted by tuple.
pub fn conjecture_scan(
    size: usize,
    max_entry: u64,
    filter: ScanFilter,
    sample: Option<ScanSample>,
) -> Result<Vec<ConjectureInstance>> {
    if size == 0 || max_entry == 0 {
        return Err(Error::InvalidArgument(
            "scan size and entry bound must be positive".into(),
        ));
    }
    let mut tuples: Vec<Vec<u64>> = multisets(size, max_entry)
        .into_iter()
        .filter(|t| match filter {
            ScanFilter::All => true,
            ScanFilter::ChainsOnly => is_distinct_chain_multiset(t),
        })
        .collect();
    if let Some(ScanSample { seed, limit }) = sample {
        if limit < tuples.len() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let picked = rand::seq::index::sample(&mut rng, tuples.len(), limit);
            let mut subset: Vec<Vec<u64>> =
                picked.into_iter().map(|i| tuples[i].clone()).collect();
            subset.sort();
            tuples = subset;
        }
    }
    tuples.iter().map(|t| conjecture_check(t)).collect()
}
