//! Exact arithmetic for quasi-polynomials and their minimum periods.
//!
//! The crate computes quasi-polynomials, the minimum period of each
//! coefficient function, and rational generating functions whose denominators
//! are kept as factored cyclotomic multisets so pole orders at roots of unity
//! can be read off directly. On top of that sit lattice-point counting for
//! the axis simplex family and small H-polytopes (with independent
//! brute-force oracles), convolution period bounds with a sharpness
//! construction, and a scanning harness for the minimum-period prediction on
//! general denominator exponent tuples.
//!
//! Everything is exact: the only scalar is an arbitrary-precision rational,
//! and no floating point appears anywhere.

pub mod analysis;
pub mod arith;
pub mod cyclotomic;
pub mod ehrhart;
pub mod error;
pub mod genfunc;
pub mod poly;
pub mod quasipoly;
pub mod rational;
pub mod series;

pub use analysis::{
    check_zaslavsky, conjecture_check, conjecture_predict, conjecture_scan, g_sequence,
    sharpness_construction, sharpness_experimental, zaslavsky_bound, ConjectureInstance,
    PeriodChain, ScanFilter, ScanSample, SharpnessReport, Verdict, ZaslavskyReport,
};
pub use cyclotomic::{cyclotomic, cyclotomic_multiplicity};
pub use ehrhart::{HPolytope, HPolytopeJson, SimplexSpec};
pub use error::{Error, Result};
pub use genfunc::{coefficientwise_split, RationalGF};
pub use poly::{poly_gcd, Polynomial};
pub use quasipoly::{PeriodProfile, PeriodicFunction, QuasiPolynomial, QuasiPolynomialJson};
pub use rational::Rational;
pub use series::series_coefficients;
