//! Orbifold bundles over marked curves: Chern numbers, Riemann-Roch indices,
//! and the degree-shifting numbers of linearized group actions.

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use crate::curve::MarkedOrbicurve;
use crate::group::FiniteGroup;

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid multiplicity: {0}")]
    InvalidMultiplicity(String),
    #[error("point mismatch: {0}")]
    PointMismatch(String),
    #[error("missing representation data: {0}")]
    MissingRepData(String),
}

/// Local data of a bundle at one special point: the point's multiplicity and
/// one isotropy exponent per fiber coordinate, each in `0..multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundlePoint {
    pub multiplicity: u64,
    pub exponents: Vec<u64>,
}

/// An orbifold bundle presented by its desingularization degree and the
/// isotropy exponents over each special point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbiBundleData {
    rank: u32,
    desing_degree: i64,
    points: Vec<BundlePoint>,
}

impl OrbiBundleData {
    pub fn new(
        rank: u32,
        desing_degree: i64,
        points: Vec<BundlePoint>,
    ) -> Result<Self, BundleError> {
        if rank == 0 {
            return Err(BundleError::DimensionMismatch(
                "bundle rank must be at least 1".into(),
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if p.multiplicity == 0 {
                return Err(BundleError::InvalidMultiplicity(format!(
                    "point {i} has multiplicity 0"
                )));
            }
            if p.exponents.len() != rank as usize {
                return Err(BundleError::DimensionMismatch(format!(
                    "point {i} lists {} exponents for a rank-{rank} bundle",
                    p.exponents.len()
                )));
            }
            if let Some(&a) = p.exponents.iter().find(|&&a| a >= p.multiplicity) {
                return Err(BundleError::InvalidMultiplicity(format!(
                    "point {i} has exponent {a} outside 0..{}",
                    p.multiplicity
                )));
            }
        }
        Ok(OrbiBundleData { rank, desing_degree, points })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn desing_degree(&self) -> i64 {
        self.desing_degree
    }

    pub fn points(&self) -> &[BundlePoint] {
        &self.points
    }

    fn exponent_sum(&self) -> BigRational {
        let mut s = BigRational::zero();
        for p in &self.points {
            let m = BigInt::from(p.multiplicity);
            for &a in &p.exponents {
                s += BigRational::new(BigInt::from(a), m.clone());
            }
        }
        s
    }
}

fn check_points(bundle: &OrbiBundleData, curve: &MarkedOrbicurve) -> Result<(), BundleError> {
    if bundle.points.len() != curve.num_marked() {
        return Err(BundleError::PointMismatch(format!(
            "bundle lists {} special points, curve has {}",
            bundle.points.len(),
            curve.num_marked()
        )));
    }
    for (i, (p, &m)) in bundle.points.iter().zip(curve.multiplicities()).enumerate() {
        if p.multiplicity != m {
            return Err(BundleError::PointMismatch(format!(
                "point {i}: bundle says multiplicity {}, curve says {m}",
                p.multiplicity
            )));
        }
    }
    Ok(())
}

/// Rational first Chern number: desingularization degree plus the exponent
/// defects a/m over every special point.
pub fn chern_number(
    bundle: &OrbiBundleData,
    curve: &MarkedOrbicurve,
) -> Result<BigRational, BundleError> {
    check_points(bundle, curve)?;
    Ok(BigRational::from(BigInt::from(bundle.desing_degree)) + bundle.exponent_sum())
}

/// Index of the twisted Dolbeault operator. Computed twice, once from the
/// desingularization and once from the Chern number, and the two integers
/// must agree; the result is always even.
pub fn riemann_roch_index(
    bundle: &OrbiBundleData,
    curve: &MarkedOrbicurve,
) -> Result<i64, BundleError> {
    check_points(bundle, curve)?;
    let n = i64::from(bundle.rank);
    let flat = 2 * n * (1 - i64::from(curve.genus()));
    let index = 2 * bundle.desing_degree + flat;

    let via_chern = chern_number(bundle, curve)? * BigRational::from(BigInt::from(2))
        - bundle.exponent_sum() * BigRational::from(BigInt::from(2))
        + BigRational::from(BigInt::from(flat));
    assert!(via_chern.is_integer(), "index must be an integer");
    assert_eq!(
        via_chern,
        BigRational::from(BigInt::from(index)),
        "the two index expressions disagree"
    );
    assert_eq!(index % 2, 0, "index must be even");
    Ok(index)
}

/// Canonical bundle of a marked curve: rank one, degree 2g - 2 downstairs,
/// exponent m - 1 at a multiplicity-m point.
pub fn canonical_bundle_of(curve: &MarkedOrbicurve) -> OrbiBundleData {
    let points = curve
        .multiplicities()
        .iter()
        .map(|&m| BundlePoint { multiplicity: m, exponents: vec![m - 1] })
        .collect();
    OrbiBundleData::new(1, 2 * i64::from(curve.genus()) - 2, points)
        .expect("canonical data is always valid")
}

/// Chern number of a global quotient: the upstairs degree divided by the
/// group order.
pub fn quotient_chern_number(
    upstairs_degree: i64,
    group_order: u64,
) -> Result<BigRational, BundleError> {
    if group_order == 0 {
        return Err(BundleError::InvalidMultiplicity(
            "group order must be at least 1".into(),
        ));
    }
    Ok(BigRational::new(
        BigInt::from(upstairs_degree),
        BigInt::from(group_order),
    ))
}

/// Eigenvalue exponents of a permutation matrix: every cycle of length l
/// contributes the pairs (0, l) through (l - 1, l). Cycles are reported in
/// order of their smallest point.
pub fn exponents_from_permutation(image: &[u32]) -> Vec<(u64, u64)> {
    let mut seen = vec![false; image.len()];
    let mut pairs = Vec::with_capacity(image.len());
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = image[x] as usize;
        }
        for a in 0..len {
            pairs.push((a, len));
        }
    }
    pairs
}

/// Diagonalized action data: for every group element, the list of eigenvalue
/// exponents (a, m) with the eigenvalue exp(2 pi i a/m), one per fiber
/// coordinate.
#[derive(Debug, Clone)]
pub struct LinearRepData {
    rank: u32,
    exponents: Vec<Vec<(u64, u64)>>,
}

impl LinearRepData {
    /// Validates one exponent list per element: entries (a, m) need m >= 1,
    /// a < m, and m dividing the element order; the identity must act
    /// trivially, and inverse elements must carry complementary exponents.
    pub fn new(
        group: &FiniteGroup,
        rank: u32,
        exponents: Vec<Vec<(u64, u64)>>,
    ) -> Result<Self, BundleError> {
        if exponents.len() != group.order() {
            return Err(BundleError::MissingRepData(format!(
                "got exponent lists for {} elements, group has {}",
                exponents.len(),
                group.order()
            )));
        }
        for (x, list) in exponents.iter().enumerate() {
            if list.len() != rank as usize {
                return Err(BundleError::DimensionMismatch(format!(
                    "element {x} lists {} exponents for rank {rank}",
                    list.len()
                )));
            }
            for &(a, m) in list {
                if m == 0 || a >= m {
                    return Err(BundleError::InvalidMultiplicity(format!(
                        "element {x}: exponent pair ({a}, {m}) is out of range"
                    )));
                }
                if !group.element_order(x).is_multiple_of(m) {
                    return Err(BundleError::InvalidMultiplicity(format!(
                        "element {x}: order {m} does not divide the element order {}",
                        group.element_order(x)
                    )));
                }
            }
        }
        if exponents[group.identity()].iter().any(|&(a, _)| a != 0) {
            return Err(BundleError::InvalidMultiplicity(
                "the identity must have all exponents zero".into(),
            ));
        }
        // Inverse elements act by conjugate eigenvalues, so their reduced
        // exponent multisets must complement each other.
        for x in 0..group.order() {
            let mine = reduced_multiset(&exponents[x]);
            let theirs: Vec<(u64, u64)> = exponents[group.inv(x)]
                .iter()
                .map(|&(a, m)| ((m - a) % m, m))
                .collect();
            if mine != reduced_multiset(&theirs) {
                return Err(BundleError::InvalidMultiplicity(format!(
                    "elements {x} and {} do not carry complementary exponents",
                    group.inv(x)
                )));
            }
        }
        Ok(LinearRepData { rank, exponents })
    }

    /// The linearization carried by the group's own permutation realization.
    pub fn from_permutation_action(group: &FiniteGroup) -> Result<Self, BundleError> {
        let action = group.permutation_action().ok_or_else(|| {
            BundleError::MissingRepData(
                "group carries no permutation realization".into(),
            )
        })?;
        let exponents = (0..group.order())
            .map(|x| exponents_from_permutation(action.image(x)))
            .collect();
        LinearRepData::new(group, action.degree() as u32, exponents)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn exponents(&self, element: usize) -> &[(u64, u64)] {
        &self.exponents[element]
    }

    /// Degree-shifting number: the sum of the normalized exponents a/m.
    pub fn iota(&self, element: usize) -> BigRational {
        let mut s = BigRational::zero();
        for &(a, m) in &self.exponents[element] {
            s += BigRational::new(BigInt::from(a), BigInt::from(m));
        }
        s
    }
}

fn reduced_multiset(pairs: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = pairs
        .iter()
        .map(|&(a, m)| {
            let g = gcd(a.max(1), m);
            if a == 0 { (0, 1) } else { (a / g, m / g) }
        })
        .collect();
    out.sort_unstable();
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
