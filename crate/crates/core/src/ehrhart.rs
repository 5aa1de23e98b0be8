//! Lattice-point counting: the axis simplex family with its closed-form
//! Ehrhart series, brute-force counting oracles, and face-index computations.

use num::bigint::BigInt;
use num::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd_all, lcm_all};
use crate::error::{Error, Result};
use crate::genfunc::RationalGF;
use crate::poly::Polynomial;
use crate::quasipoly::QuasiPolynomial;
use crate::rational::{denominator_u64, parse_rational, Rational};

/// Default cap on brute-force candidate points per count.
pub const DEFAULT_POINT_BUDGET: u64 = 10_000_000;

/// The simplex `{x >= 0 : p_0 x_0 + ... + p_d x_d = 1}` given by its
/// positive-integer tuple `(p_0, ..., p_d)`; its k-th dilate contains exactly
/// the nonnegative integer solutions of `sum p_i y_i = k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSimplexSpec")]
pub struct SimplexSpec {
    p: Vec<u64>,
}

#[derive(Deserialize)]
struct RawSimplexSpec {
    p: Vec<u64>,
}

impl TryFrom<RawSimplexSpec> for SimplexSpec {
    type Error = Error;
    fn try_from(raw: RawSimplexSpec) -> Result<Self> {
        SimplexSpec::new(raw.p)
    }
}

impl SimplexSpec {
    pub fn new(p: Vec<u64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidArgument("simplex tuple is empty".into()));
        }
        if p.contains(&0) {
            return Err(Error::InvalidArgument(
                "simplex tuple entries must be positive".into(),
            ));
        }
        Ok(SimplexSpec { p })
    }

    pub fn parts(&self) -> &[u64] {
        &self.p
    }

    /// Dimension of the simplex (one less than the tuple length).
    pub fn dim(&self) -> usize {
        self.p.len() - 1
    }

    pub fn lcm(&self) -> u64 {
        lcm_all(self.p.iter().copied())
    }

    pub fn sum(&self) -> u64 {
        self.p.iter().sum()
    }

    /// True when `p_d | p_{d-1} | ... | p_0` in the stored order.
    pub fn is_chain(&self) -> bool {
        self.p.windows(2).all(|w| w[0] % w[1] == 0)
    }

    /// A chain with pairwise distinct entries.
    pub fn is_distinct_chain(&self) -> bool {
        self.is_chain() && self.p.windows(2).all(|w| w[0] != w[1])
    }

    /// Number of nonnegative integer solutions of `sum p_i y_i = k` for every
    /// `k <= kmax`, by dynamic programming over tuple prefixes. This is the
    /// module's ground-truth oracle.
    pub fn denumerant_upto(&self, kmax: u64) -> Vec<u64> {
        let kmax = kmax as usize;
        let mut ways = vec![0u64; kmax + 1];
        ways[0] = 1;
        for &part in &self.p {
            let part = part as usize;
            if part <= kmax {
                for k in part..=kmax {
                    ways[k] += ways[k - part];
                }
            }
        }
        ways
    }

    pub fn denumerant(&self, k: u64) -> u64 {
        self.denumerant_upto(k)[k as usize]
    }

    /// Solutions with every `y_i >= 1`; substituting `y_i - 1` shows this is
    /// the plain denumerant at `k - sum p_i` (and 0 below that).
    pub fn interior_denumerant(&self, k: u64) -> u64 {
        let total = self.sum();
        if k < total {
            0
        } else {
            self.denumerant(k - total)
        }
    }

    /// The Ehrhart series `1 / prod_i (1 - x^{p_i})` in factored form.
    pub fn ehrhart_series(&self) -> RationalGF {
        RationalGF::from_denominator_exponents(Polynomial::one(), &self.p)
            .expect("entries are positive")
    }

    /// The Ehrhart quasi-polynomial, obtained by expanding the series and
    /// cross-checked against the denumerant oracle on every sampled value.
    pub fn ehrhart_qp(&self) -> Result<QuasiPolynomial> {
        let qp = self.ehrhart_series().to_quasipolynomial()?;
        let kmax = qp.period() * (qp.degree() as u64 + 2);
        let counts = self.denumerant_upto(kmax - 1);
        for (k, &c) in counts.iter().enumerate() {
            if qp.evaluate(k as i64) != Rational::from_integer(BigInt::from(c)) {
                return Err(Error::Internal(format!(
                    "series expansion disagrees with the denumerant oracle at k={k} for p={:?}",
                    self.p
                )));
            }
        }
        Ok(qp)
    }

    /// Smallest dilation factor making the affine spans of all j-faces meet
    /// the lattice. The face spanned by the vertices indexed by `S` meets the
    /// lattice in the k-th dilate iff `gcd{p_i : i in S}` divides `k`, so the
    /// j-index is the lcm of those gcds over all (j+1)-subsets.
    pub fn j_index(&self, j: usize) -> Result<u64> {
        let n = self.p.len();
        if j >= n {
            return Err(Error::InvalidArgument(format!(
                "j = {j} out of range for a {}-dimensional simplex",
                n - 1
            )));
        }
        if n > 24 {
            return Err(Error::InvalidArgument(
                "simplex tuple too long for subset enumeration".into(),
            ));
        }
        let want = (j + 1) as u32;
        let mut result = 1u64;
        for mask in 1u32..(1 << n) {
            if mask.count_ones() != want {
                continue;
            }
            let g = gcd_all(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.p[i]),
            );
            result = num::integer::lcm(result, g);
        }
        Ok(result)
    }
}

/// A rational polytope `{x : A x <= b}` with redundant dual data supplied by
/// the caller: the facet description, the vertex list, and an integer box
/// that bounds the k=1 polytope. Only cheap consistency checks run here;
/// vertex enumeration and convex hulls are out of scope, so the facets being
/// facet-defining and the vertex list being complete is a documented trust
/// boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    normals: Vec<Vec<i64>>,
    offsets: Vec<Rational>,
    vertices: Vec<Vec<Rational>>,
    box_lo: Vec<i64>,
    box_hi: Vec<i64>,
}

impl HPolytope {
    pub fn new(
        normals: Vec<Vec<i64>>,
        offsets: Vec<Rational>,
        vertices: Vec<Vec<Rational>>,
        box_lo: Vec<i64>,
        box_hi: Vec<i64>,
    ) -> Result<Self> {
        if normals.is_empty() {
            return Err(Error::InvalidArgument("no facet rows".into()));
        }
        let dim = normals[0].len();
        if dim == 0 || dim > 3 {
            return Err(Error::InvalidArgument(format!(
                "dimension {dim} outside the supported range 1..=3"
            )));
        }
        if normals.iter().any(|row| row.len() != dim) {
            return Err(Error::InvalidArgument("ragged facet matrix".into()));
        }
        if offsets.len() != normals.len() {
            return Err(Error::InvalidArgument(
                "facet offsets do not match facet rows".into(),
            ));
        }
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("no vertices supplied".into()));
        }
        if vertices.iter().any(|v| v.len() != dim)
            || box_lo.len() != dim
            || box_hi.len() != dim
        {
            return Err(Error::InvalidArgument("dimension mismatch".into()));
        }
        if box_lo.iter().zip(&box_hi).any(|(lo, hi)| lo > hi) {
            return Err(Error::InvalidArgument("empty bounding box".into()));
        }
        let poly = HPolytope {
            normals,
            offsets,
            vertices,
            box_lo,
            box_hi,
        };
        for (vi, v) in poly.vertices.iter().enumerate() {
            for (ri, (row, b)) in poly.normals.iter().zip(&poly.offsets).enumerate() {
                if &poly.dot(row, v) > b {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {vi} violates facet inequality {ri}"
                    )));
                }
            }
            for (i, coord) in v.iter().enumerate() {
                let lo = Rational::from_integer(BigInt::from(poly.box_lo[i]));
                let hi = Rational::from_integer(BigInt::from(poly.box_hi[i]));
                if coord < &lo || coord > &hi {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {vi} outside the bounding box"
                    )));
                }
            }
        }
        Ok(poly)
    }

    pub fn dim(&self) -> usize {
        self.normals[0].len()
    }

    fn dot(&self, row: &[i64], point: &[Rational]) -> Rational {
        row.iter()
            .zip(point)
            .map(|(&a, x)| x * Rational::from_integer(BigInt::from(a)))
            .sum()
    }

    fn candidate_points(&self, k: u64) -> u128 {
        self.box_lo
            .iter()
            .zip(&self.box_hi)
            .map(|(&lo, &hi)| (hi - lo) as u128 * k as u128 + 1)
            .product()
    }

    /// `#(kP intersect Z^n)` by enumerating the integer points of the scaled
    /// box and testing `A x <= k b`. Counts with the default budget.
    pub fn count_lattice_points(&self, k: u64) -> Result<u64> {
        self.count_lattice_points_with_budget(k, DEFAULT_POINT_BUDGET)
    }

    pub fn count_lattice_points_with_budget(&self, k: u64, budget: u64) -> Result<u64> {
        let required = self.candidate_points(k);
        if required > budget as u128 {
            return Err(Error::BudgetExceeded {
                required: required.min(u64::MAX as u128) as u64,
                budget,
            });
        }
        let dim = self.dim();
        let lo: Vec<i64> = self.box_lo.iter().map(|&v| v * k as i64).collect();
        let hi: Vec<i64> = self.box_hi.iter().map(|&v| v * k as i64).collect();
        let scaled_offsets: Vec<Rational> = self
            .offsets
            .iter()
            .map(|b| b * Rational::from_integer(BigInt::from(k)))
            .collect();
        let mut count = 0u64;
        let mut point = lo.clone();
        'outer: loop {
            let inside = self
                .normals
                .iter()
                .zip(&scaled_offsets)
                .all(|(row, kb)| {
                    let lhs: i64 = row.iter().zip(&point).map(|(a, x)| a * x).sum();
                    Rational::from_integer(BigInt::from(lhs)) <= *kb
                });
            if inside {
                count += 1;
            }
            for i in 0..dim {
                if point[i] < hi[i] {
                    point[i] += 1;
                    continue 'outer;
                }
                point[i] = lo[i];
            }
            break;
        }
        Ok(count)
    }

    /// lcm of the denominators of all vertex coordinates: the smallest `k`
    /// with `kP` integral.
    pub fn vertex_denominator(&self) -> Result<u64> {
        let mut result = 1u64;
        for v in &self.vertices {
            for coord in v {
                result = num::integer::lcm(result, denominator_u64(coord)?);
            }
        }
        Ok(result)
    }

    /// lcm over facets of the denominator of `b_i`. With a primitive integer
    /// normal `a_i`, the hyperplane `a_i . x = k b_i` meets the lattice iff
    /// `k b_i` is an integer.
    pub fn facet_index(&self) -> Result<u64> {
        let mut result = 1u64;
        for (row_idx, row) in self.normals.iter().enumerate() {
            let content = gcd_all(row.iter().map(|&a| a.unsigned_abs()));
            if content != 1 {
                return Err(Error::NonPrimitiveRow { row: row_idx });
            }
            result = num::integer::lcm(result, denominator_u64(&self.offsets[row_idx])?);
        }
        Ok(result)
    }

    /// Interpolate the counting function with period `vertex_denominator`
    /// and degree `dim`. Inconsistent counts mean the supplied facet/vertex
    /// data does not describe the same polytope.
    pub fn quasipolynomial(&self) -> Result<QuasiPolynomial> {
        self.quasipolynomial_with_budget(DEFAULT_POINT_BUDGET)
    }

    pub fn quasipolynomial_with_budget(&self, budget: u64) -> Result<QuasiPolynomial> {
        let period = self.vertex_denominator()?;
        let degree = self.dim() as i64;
        let count = period as usize * (degree as usize + 2);
        let mut values = Vec::with_capacity(count);
        for k in 0..count {
            values.push(Rational::from_integer(BigInt::from(
                self.count_lattice_points_with_budget(k as u64, budget)?,
            )));
        }
        QuasiPolynomial::interpolate(&values, period, degree).map_err(|err| match err {
            Error::NotQuasiPolynomial(_) => Error::CountsNotQuasiPolynomial,
            other => other,
        })
    }
}

/// JSON shape of an H-polytope; rationals as strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HPolytopeJson {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub b: Vec<String>,
    pub vertices: Vec<Vec<String>>,
    #[serde(rename = "box")]
    pub bounding_box: BoxJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoxJson {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl TryFrom<&HPolytopeJson> for HPolytope {
    type Error = Error;

    fn try_from(json: &HPolytopeJson) -> Result<Self> {
        let offsets = json
            .b
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let vertices = json
            .vertices
            .iter()
            .map(|v| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        HPolytope::new(
            json.a.clone(),
            offsets,
            vertices,
            json.bounding_box.lo.clone(),
            json.bounding_box.hi.clone(),
        )
    }
}

impl From<&HPolytope> for HPolytopeJson {
    fn from(p: &HPolytope) -> Self {
        HPolytopeJson {
            a: p.normals.clone(),
            b: p.offsets.iter().map(|b| b.to_string()).collect(),
            vertices: p
                .vertices
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
            bounding_box: BoxJson {
                lo: p.box_lo.clone(),
                hi: p.box_hi.clone(),
            },
        }
    }
}

/// Check that the leading coefficient row is a positive constant (the volume,
/// for a full-dimensional polytope).
pub fn leading_coefficient_is_constant_positive(q: &QuasiPolynomial) -> bool {
    match q.coefficient_rows().last() {
        None => false,
        Some(row) => row.iter().all(|c| c == &row[0]) && row[0].is_positive(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn spec(p: &[u64]) -> SimplexSpec {
        SimplexSpec::new(p.to_vec()).unwrap()
    }

    /// Independent oracle: count solutions of `sum p_i y_i = k` by nested
    /// exhaustive search, no dynamic programming.
    fn enumerate_denumerant(p: &[u64], k: u64) -> u64 {
        fn rec(p: &[u64], k: u64) -> u64 {
            match p {
                [] => u64::from(k == 0),
                [first, rest @ ..]=> {
                    let mut total = 0;
                    let mut used = 0;
                    while used <= k {
                        total += rec(rest, k - used);
                        used += first;
                    }
                    total
                }
            }
        }
        rec(p, k)
    }

    #[test]
    fn denumerant_examples() {
        assert_eq!(spec(&[1, 2]).denumerant(5), 3);
        assert_eq!(spec(&[1]).denumerant(7), 1);
        assert_eq!(spec(&[2, 2]).denumerant(3), 0);
    }

    #[test]
    fn denumerant_matches_exhaustive_enumeration() {
        for p in [
            vec![1],
            vec![2],
            vec![1, 2],
            vec![2, 2],
            vec![2, 3],
            vec![1, 2, 3],
            vec![2, 4, 6],
            vec![3, 4, 5],
        ] {
            let s = SimplexSpec::new(p.clone()).unwrap();
            for k in 0..=30 {
                assert_eq!(
                    s.denumerant(k),
                    enumerate_denumerant(&p, k),
                    "p = {p:?}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn interior_examples() {
        assert_eq!(spec(&[1, 1]).interior_denumerant(3), 2);
        assert_eq!(spec(&[1, 2]).interior_denumerant(2), 0);
        assert_eq!(spec(&[1]).interior_denumerant(1), 1);
    }

    #[test]
    fn series_pole_orders() {
        let orders = spec(&[1, 2, 4]).ehrhart_series().pole_orders();
        let expected: std::collections::BTreeMap<u64, u32> =
            [(1, 3), (2, 2), (4, 1)].into_iter().collect();
        assert_eq!(orders, expected);
        assert_eq!(
            spec(&[1, 1]).ehrhart_series().pole_orders(),
            [(1, 2)].into_iter().collect()
        );
        assert_eq!(
            spec(&[3]).ehrhart_series().pole_orders(),
            [(1, 1), (3, 1)].into_iter().collect()
        );
    }

    #[test]
    fn ehrhart_qp_examples() {
        let q = spec(&[2, 1]).ehrhart_qp().unwrap();
        assert_eq!(
            q.minimum_period_profile().coefficient_periods,
            vec![2, 1]
        );
        assert_eq!(q.evaluate(5), rat_int(3));
        assert_eq!(q.coefficient_rows()[0], vec![rat_int(1), rat(1, 2)]);

        let line = spec(&[1, 1]).ehrhart_qp().unwrap();
        assert_eq!(
            line,
            QuasiPolynomial::from_polynomial(&[rat_int(1), rat_int(1)])
        );

        let chain = spec(&[12, 6, 2, 1]).ehrhart_qp().unwrap();
        assert_eq!(
            chain.minimum_period_profile().coefficient_periods,
            vec![12, 6, 2, 1]
        );
    }

    #[test]
    fn j_index_examples() {
        let s = spec(&[12, 6, 2, 1]);
        assert_eq!(s.j_index(1).unwrap(), 6);
        for j in 0..4 {
            assert_eq!(s.j_index(j).unwrap(), s.parts()[j], "j = {j}");
        }
        let ones = spec(&[1, 1, 1]);
        for j in 0..3 {
            assert_eq!(ones.j_index(j).unwrap(), 1);
        }
        assert!(s.j_index(4).is_err());
    }

    #[test]
    fn series_product_is_join_series() {
        let a = spec(&[4, 1]);
        let b = spec(&[8, 2]);
        let joined = spec(&[4, 1, 8, 2]);
        assert_eq!(
            a.ehrhart_series().multiply(&b.ehrhart_series()),
            joined.ehrhart_series()
        );
    }

    #[test]
    fn chain_flags() {
        assert!(spec(&[12, 6, 2, 1]).is_distinct_chain());
        assert!(spec(&[4, 2, 2]).is_chain());
        assert!(!spec(&[4, 2, 2]).is_distinct_chain());
        assert!(!spec(&[2, 3]).is_chain());
    }

    fn unit_square() -> HPolytope {
        HPolytope::new(
            vec![vec![-1, 0], vec![0, -1], vec![1, 0], vec![0, 1]],
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(1)],
            vec![
                vec![rat_int(0), rat_int(0)],
                vec![rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(1)],
                vec![rat_int(1), rat_int(1)],
            ],
            vec![0, 0],
            vec![1, 1],
        )
        .unwrap()
    }

    fn half_triangle() -> HPolytope {
        HPolytope::new(
            vec![vec![-1, 0], vec![0, -1], vec![1, 1]],
            vec![rat_int(0), rat_int(0), rat(1, 2)],
            vec![
                vec![rat_int(0), rat_int(0)],
                vec![rat(1, 2), rat_int(0)],
                vec![rat_int(0), rat(1, 2)],
            ],
            vec![0, 0],
            vec![1, 1],
        )
        .unwrap()
    }

    fn segment(end: Rational) -> HPolytope {
        HPolytope::new(
            vec![vec![-1], vec![1]],
            vec![rat_int(0), end.clone()],
            vec![vec![rat_int(0)], vec![end]],
            vec![0],
            vec![1],
        )
        .unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(unit_square().count_lattice_points(3).unwrap(), 16);
        assert_eq!(half_triangle().count_lattice_points(4).unwrap(), 6);
        assert_eq!(segment(rat(1, 3)).count_lattice_points(2).unwrap(), 1);
    }

    #[test]
    fn count_budget_guard() {
        let err = unit_square().count_lattice_points_with_budget(3, 5);
        assert_eq!(
            err,
            Err(Error::BudgetExceeded {
                required: 16,
                budget: 5
            })
        );
    }

    #[test]
    fn hpolytope_qp_examples() {
        let sq = unit_square().quasipolynomial().unwrap();
        assert_eq!(
            sq,
            QuasiPolynomial::from_polynomial(&[rat_int(1), rat_int(2), rat_int(1)])
        );

        let tri = half_triangle().quasipolynomial().unwrap();
        assert_eq!(tri.period(), 2);
        assert_eq!(tri.degree(), 2);
        // even: k^2/8 + 3k/4 + 1; odd: k^2/8 + k/2 + 3/8
        assert_eq!(tri.coefficient_rows()[2], vec![rat(1, 8), rat(1, 8)]);
        assert_eq!(tri.coefficient_rows()[1], vec![rat(3, 4), rat(1, 2)]);
        assert_eq!(tri.coefficient_rows()[0], vec![rat_int(1), rat(3, 8)]);

        let seg = segment(rat(1, 2)).quasipolynomial().unwrap();
        assert_eq!(seg.coefficient_rows()[1], vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(seg.coefficient_rows()[0], vec![rat_int(1), rat(1, 2)]);
    }

    #[test]
    fn inconsistent_polytope_data_is_reported() {
        // The facets describe the period-2 half triangle, but the only vertex
        // supplied is integral, so the declared period 1 cannot fit the counts.
        let bad = HPolytope::new(
            vec![vec![-1, 0], vec![0, -1], vec![1, 1]],
            vec![rat_int(0), rat_int(0), rat(1, 2)],
            vec![vec![rat_int(0), rat_int(0)]],
            vec![0, 0],
            vec![1, 1],
        )
        .unwrap();
        assert_eq!(
            bad.quasipolynomial(),
            Err(Error::CountsNotQuasiPolynomial)
        );
    }

    #[test]
    fn facet_index_examples() {
        assert_eq!(unit_square().facet_index().unwrap(), 1);
        assert_eq!(half_triangle().facet_index().unwrap(), 2);
        assert_eq!(segment(rat(2, 3)).facet_index().unwrap(), 3);
    }

    #[test]
    fn facet_index_rejects_imprimitive_rows() {
        let poly = HPolytope::new(
            vec![vec![-2, 0], vec![0, -1], vec![2, 2]],
            vec![rat_int(0), rat_int(0), rat_int(1)],
            vec![vec![rat_int(0), rat_int(0)]],
            vec![0, 0],
            vec![1, 1],
        )
        .unwrap();
        assert_eq!(poly.facet_index(), Err(Error::NonPrimitiveRow { row: 0 }));
    }

    #[test]
    fn vertex_denominator_examples() {
        assert_eq!(unit_square().vertex_denominator().unwrap(), 1);
        assert_eq!(half_triangle().vertex_denominator().unwrap(), 2);
        let mixed = HPolytope::new(
            vec![vec![1]],
            vec![rat_int(1)],
            vec![vec![rat(1, 2)], vec![rat(1, 3)]],
            vec![0],
            vec![1],
        )
        .unwrap();
        assert_eq!(mixed.vertex_denominator().unwrap(), 6);
    }

    #[test]
    fn json_schemas() {
        let spec: SimplexSpec = serde_json::from_str(r#"{"p": [2, 1]}"#).unwrap();
        assert_eq!(spec, SimplexSpec::new(vec![2, 1]).unwrap());
        assert_eq!(serde_json::to_string(&spec).unwrap(), r#"{"p":[2,1]}"#);
        assert!(serde_json::from_str::<SimplexSpec>(r#"{"p": [0]}"#).is_err());

        let tri = half_triangle();
        let json = HPolytopeJson::from(&tri);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains(r#""A":"#));
        assert!(text.contains(r#""1/2""#));
        let parsed: HPolytopeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(HPolytope::try_from(&parsed).unwrap(), tri);
    }

    #[test]
    fn vertex_consistency_enforced() {
        let err = HPolytope::new(
            vec![vec![1]],
            vec![rat(1, 2)],
            vec![vec![rat_int(1)]],
            vec![0],
            vec![1],
        );
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }
}
