//! Error type shared by every module of the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial gcd requested for two zero polynomials.
    GcdUndefined,
    /// An argument violated a documented precondition (bad index, empty
    /// list, malformed input data, unparsable rational, ...).
    InvalidArgument(String),
    /// Power-series expansion of `num/den` where `den(0) = 0`.
    DenominatorVanishesAtOrigin,
    /// Samples are inconsistent with the claimed period and degree bound.
    NotQuasiPolynomial(String),
    /// Lattice-point counts disagree with the declared period; the polytope
    /// data (A, b, vertices) is not self-consistent.
    CountsNotQuasiPolynomial,
    /// Improper rational function: the numerator degree is not smaller than
    /// the denominator degree.
    PolynomialPartPresent,
    /// The denominator has an irreducible factor that is not cyclotomic.
    PolesNotRootsOfUnity,
    /// The work estimate exceeds the configured budget.
    BudgetExceeded { required: u64, budget: u64 },
    /// A facet normal whose integer entries share a common factor.
    NonPrimitiveRow { row: usize },
    /// The interleaved divisibility-chain hypothesis is violated.
    InvalidChain(String),
    /// An internal cross-check that must hold by construction failed;
    /// this always indicates a bug, never bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GcdUndefined => write!(f, "gcd undefined"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::DenominatorVanishesAtOrigin => {
                write!(f, "denominator vanishes at origin")
            }
            Error::NotQuasiPolynomial(detail) => {
                write!(f, "not a quasi-polynomial of claimed period/degree: {detail}")
            }
            Error::CountsNotQuasiPolynomial => {
                write!(f, "counts not quasi-polynomial with declared period")
            }
            Error::PolynomialPartPresent => write!(f, "polynomial part present"),
            Error::PolesNotRootsOfUnity => {
                write!(f, "poles are not roots of unity — not a quasi-polynomial")
            }
            Error::BudgetExceeded { required, budget } => {
                write!(f, "budget exceeded: required {required}, budget {budget}")
            }
            Error::NonPrimitiveRow { row } => {
                write!(f, "facet normal in row {row} is not primitive")
            }
            Error::InvalidChain(msg) => write!(f, "invalid chain: {msg}"),
            Error::Internal(msg) => write!(f, "internal cross-check failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
