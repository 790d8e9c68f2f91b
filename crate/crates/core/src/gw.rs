//! Sector-level bookkeeping for a point quotient: the twisted sectors with
//! their pairing, genus-zero three-point counts, the induced sector product
//! with exact associativity and splitting checks, and the dimension and
//! degree-selection calculators shared by all targets.

use num::{BigInt, BigRational, ToPrimitive, Zero};
use thiserror::Error;

use crate::group::{ConjugacyClassTable, FiniteGroup};
use crate::homcount::{
    count_homs_brute, count_homs_convolution, surface_class_function, CountOptions,
    HomcountError, SurfaceGroupSpec,
};

#[derive(Debug, Error)]
pub enum GwError {
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("unknown class index: {0}")]
    UnknownClass(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Count(#[from] HomcountError),
}

/// One twisted sector: a conjugacy class together with the numbers every
/// caller wants next to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub class: usize,
    pub size: usize,
    pub centralizer_order: u64,
    pub inverse: usize,
    pub element_order: u64,
}

/// Sectors in class-table order, and the pairing matrix: row C meets column
/// I(C) with weight |C_G(C)| and every other column with zero.
pub fn sectors_and_pairing(table: &ConjugacyClassTable) -> (Vec<Sector>, Vec<Vec<u64>>) {
    let c = table.num_classes();
    let sectors = (0..c)
        .map(|k| Sector {
            class: k,
            size: table.class_size(k),
            centralizer_order: table.centralizer_order(k),
            inverse: table.inverse_class(k),
            element_order: table.rep_order(k),
        })
        .collect();
    let pairing = (0..c)
        .map(|a| {
            let mut row = vec![0u64; c];
            row[table.inverse_class(a)] = table.centralizer_order(a);
            row
        })
        .collect();
    (sectors, pairing)
}

fn check_classes(table: &ConjugacyClassTable, classes: &[usize]) -> Result<(), GwError> {
    for &k in classes {
        if k >= table.num_classes() {
            return Err(GwError::UnknownClass(format!(
                "{k} (table has {} classes)",
                table.num_classes()
            )));
        }
    }
    Ok(())
}

/// Number of triples in C1 x C2 x C3 multiplying to the identity, counted by
/// the genus-zero walk.
pub fn three_point_count(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    classes: [usize; 3],
) -> Result<u64, GwError> {
    check_classes(table, &classes)?;
    let spec = SurfaceGroupSpec::with_classes(0, &classes);
    Ok(count_homs_brute(g, table, &spec, &CountOptions::default())?)
}

/// Structure constants of the sector product: K_i K_j = sum_k a_ijk K_k.
#[derive(Debug, Clone)]
pub struct ProductTable {
    num_classes: usize,
    coeffs: Vec<u64>,
}

/// First failed instance of the associativity comparison, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocCounterexample {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub lhs: u128,
    pub rhs: u128,
}

impl ProductTable {
    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u64 {
        let c = self.num_classes;
        self.coeffs[(i * c + j) * c + k]
    }

    /// Compares ((K_i K_j) K_k)_l with (K_i (K_j K_k))_l over every
    /// (i, j, k, l), exactly. Returns the first mismatch in scan order.
    pub fn check_associativity(&self) -> Option<AssocCounterexample> {
        let c = self.num_classes;
        for i in 0..c {
            for j in 0..c {
                for k in 0..c {
                    for l in 0..c {
                        let lhs: u128 = (0..c)
                            .map(|m| {
                                u128::from(self.coefficient(i, j, m))
                                    * u128::from(self.coefficient(m, k, l))
                            })
                            .sum();
                        let rhs: u128 = (0..c)
                            .map(|m| {
                                u128::from(self.coefficient(j, k, m))
                                    * u128::from(self.coefficient(i, m, l))
                            })
                            .sum();
                        if lhs != rhs {
                            return Some(AssocCounterexample { i, j, k, l, lhs, rhs });
                        }
                    }
                }
            }
        }
        None
    }
}

/// Builds the structure constants from three-point counts: a_ijk is
/// N0(C_i, C_j, I(C_k)) divided by |C_k|, an exact division.
pub fn product_table(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
) -> Result<ProductTable, GwError> {
    let c = table.num_classes();
    let mut coeffs = vec![0u64; c * c * c];
    for i in 0..c {
        for j in 0..c {
            for k in 0..c {
                let n0 = three_point_count(g, table, [i, j, table.inverse_class(k)])?;
                let size = table.class_size(k) as u64;
                assert_eq!(n0 % size, 0, "three-point count must split over the class");
                coeffs[(i * c + j) * c + k] = n0 / size;
            }
        }
    }
    Ok(ProductTable { num_classes: c, coeffs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionInput {
    pub chern_pairing: BigRational,
    pub complex_dim: u32,
    pub genus: u32,
    pub num_marked: u32,
    pub shifts: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualDimension {
    pub d: BigRational,
    pub two_d: BigRational,
}

fn int(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// d = chern + (n - 3)(1 - g) + k - sum of shifts, reported with its double.
pub fn virtual_dimension(input: &DimensionInput) -> Result<VirtualDimension, GwError> {
    if input.shifts.len() != input.num_marked as usize {
        return Err(GwError::ArityMismatch(format!(
            "{} marked points but {} shifts",
            input.num_marked,
            input.shifts.len()
        )));
    }
    if let Some(s) = input.shifts.iter().find(|s| **s < BigRational::zero()) {
        return Err(GwError::InvalidInput(format!("negative shift {s}")));
    }
    let mut d = input.chern_pairing.clone()
        + int(i64::from(input.complex_dim) - 3) * int(1 - i64::from(input.genus))
        + int(i64::from(input.num_marked));
    for s in &input.shifts {
        d -= s;
    }
    let two_d = &d * int(2);
    Ok(VirtualDimension { d, two_d })
}

/// One cohomology insertion: its orbifold degree and descendant power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub orbifold_degree: BigRational,
    pub descendant_power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionInput {
    pub deg_k: i64,
    pub insertions: Vec<Insertion>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub holds: bool,
}

/// Degree matching: the invariant can be nonzero only when
/// deg_K + sum(deg_orb + 2 l) meets 2 chern + 2(n - 3)(1 - g) + 2k.
pub fn selection_rule(
    sel: &SelectionInput,
    dim: &DimensionInput,
) -> Result<SelectionReport, GwError> {
    if sel.insertions.len() != dim.num_marked as usize {
        return Err(GwError::ArityMismatch(format!(
            "{} marked points but {} insertions",
            dim.num_marked,
            sel.insertions.len()
        )));
    }
    let mut lhs = int(sel.deg_k);
    for (i, ins) in sel.insertions.iter().enumerate() {
        if ins.orbifold_degree < BigRational::zero() {
            return Err(GwError::InvalidInput(format!(
                "insertion {i} has negative orbifold degree"
            )));
        }
        lhs += &ins.orbifold_degree + int(2 * i64::from(ins.descendant_power));
    }
    let rhs = dim.chern_pairing.clone() * int(2)
        + int(2 * (i64::from(dim.complex_dim) - 3)) * int(1 - i64::from(dim.genus))
        + int(2 * i64::from(dim.num_marked));
    let holds = lhs == rhs;
    Ok(SelectionReport { lhs, rhs, holds })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingCase {
    pub genus_first: u32,
    pub punctures_first: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonseparatingCase {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct SplittingReport {
    pub separating: Vec<SeparatingCase>,
    pub nonseparating: NonseparatingCase,
    pub all_hold: bool,
}

fn rational_to_u64(v: &BigRational) -> Result<u64, GwError> {
    if !v.is_integer() {
        return Err(GwError::InvalidInput(format!("expected an integer, got {v}")));
    }
    v.to_integer().to_u64().ok_or(GwError::Count(HomcountError::CountOverflow))
}

/// Checks both gluing identities against independent counts.
///
/// Separating: for every split g = g1 + g2 and prefix length k1, the count
/// over the glued surface equals sum over x in G of F1(x) F2(x^-1), where F
/// is the class function counting solutions by their defect. Non-separating:
/// adding a handle to the genus equals sum over sectors of |C_G(C)| times the
/// count with the puncture pair (C, I(C)) appended.
pub fn splitting_identities(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    genus: u32,
    classes: &[usize],
) -> Result<SplittingReport, GwError> {
    check_classes(table, classes)?;
    let mut separating = Vec::new();
    let lhs_sep = count_homs_convolution(g, table, &SurfaceGroupSpec::with_classes(genus, classes))?;
    for g1 in 0..=genus {
        for k1 in 0..=classes.len() {
            let f1 = surface_class_function(
                g,
                table,
                &SurfaceGroupSpec::with_classes(g1, &classes[..k1]),
            );
            let f2 = surface_class_function(
                g,
                table,
                &SurfaceGroupSpec::with_classes(genus - g1, &classes[k1..]),
            );
            let mut rhs = BigRational::zero();
            for c in 0..table.num_classes() {
                rhs += int(table.class_size(c) as i64)
                    * f1.value(c)
                    * f2.value(table.inverse_class(c));
            }
            let rhs = rational_to_u64(&rhs)?;
            separating.push(SeparatingCase {
                genus_first: g1,
                punctures_first: k1,
                lhs: lhs_sep,
                rhs,
                holds: lhs_sep == rhs,
            });
        }
    }

    let lhs_non =
        count_homs_convolution(g, table, &SurfaceGroupSpec::with_classes(genus + 1, classes))?;
    let mut rhs_non = 0u128;
    for c in 0..table.num_classes() {
        let mut extended = classes.to_vec();
        extended.push(c);
        extended.push(table.inverse_class(c));
        let n = count_homs_convolution(
            g,
            table,
            &SurfaceGroupSpec::with_classes(genus, &extended),
        )?;
        rhs_non += u128::from(table.centralizer_order(c)) * u128::from(n);
    }
    let rhs_non =
        u64::try_from(rhs_non).map_err(|_| GwError::Count(HomcountError::CountOverflow))?;
    let nonseparating = NonseparatingCase {
        lhs: lhs_non,
        rhs: rhs_non,
        holds: lhs_non == rhs_non,
    };
    let all_hold = nonseparating.holds && separating.iter().all(|c| c.holds);
    Ok(SplittingReport { separating, nonseparating, all_hold })
}
