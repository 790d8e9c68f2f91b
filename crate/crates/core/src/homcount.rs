//! Counting and enumerating solutions of the punctured surface relation
//!
//! ```text
//! [a_1, b_1] ... [a_g, b_g] c_1 ... c_k = e
//! ```
//!
//! with each puncture image c_j constrained to a conjugacy class or to an
//! exact element order. Three independent routes are provided:
//!
//! * [`count_homs_brute`]: element-level backtracking, the ground truth,
//!   with the last puncture forced by the relation and a hard work budget;
//! * [`count_homs_convolution`]: exact evaluation in the class algebra,
//!   `(T^{*g} * ind_1 * ... * ind_k)(e)` with T the commutator kernel;
//! * [`count_homs_frobenius`]: the character sum, floating point, accepted
//!   only when it lands within [`FROBENIUS_TOLERANCE`] of an integer.

use crate::group::{ClassFunction, ConjugacyClassTable, FiniteGroup};
use num::complex::Complex64;
use num::{BigInt, BigRational, Signed, ToPrimitive};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;
/// Largest pre-rounding distance from an integer the character sum may have.
pub const FROBENIUS_TOLERANCE: f64 = 1e-6;

/// Commutator lookup tables are only materialized up to this many entries.
const COMMUTATOR_TABLE_MAX: usize = 4_000_000;

#[derive(Debug, Error)]
pub enum HomcountError {
    #[error("budget exceeded: the walk needs about {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("enumeration cap exceeded: {count} solutions, cap is {cap}")]
    CapExceeded { count: u64, cap: u64 },
    #[error("count does not fit in 64 bits")]
    CountOverflow,
    #[error("character sum is {distance:.3e} away from the nearest admissible integer")]
    NonIntegralResult { distance: f64 },
    #[error("a character table is required for the Frobenius path")]
    MissingCharacterTable,
    #[error("exact-order constraints are not supported on the Frobenius path")]
    UnsupportedConstraint,
    #[error("character table rejected: {0}")]
    BadCharacterTable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PunctureConstraint {
    /// Image must lie in the conjugacy class with this table index.
    Class(usize),
    /// Image may lie in any class whose elements have exactly this order.
    ExactOrder(u64),
}

#[derive(Clone, Debug)]
pub struct SurfaceGroupSpec {
    pub genus: u32,
    pub punctures: Vec<PunctureConstraint>,
}

impl SurfaceGroupSpec {
    pub fn closed(genus: u32) -> SurfaceGroupSpec {
        SurfaceGroupSpec { genus, punctures: vec![] }
    }

    pub fn with_classes(genus: u32, classes: &[usize]) -> SurfaceGroupSpec {
        SurfaceGroupSpec {
            genus,
            punctures: classes.iter().map(|&k| PunctureConstraint::Class(k)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CountOptions {
    pub budget: u64,
    pub threads: usize,
}

impl Default for CountOptions {
    fn default() -> CountOptions {
        CountOptions { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub cap: u64,
    pub budget: u64,
    pub up_to_conjugacy: bool,
}

impl Default for EnumOptions {
    fn default() -> EnumOptions {
        EnumOptions { cap: DEFAULT_ENUM_CAP, budget: DEFAULT_BUDGET, up_to_conjugacy: false }
    }
}

/// One solution tuple: 2g handle images then k puncture images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Characteristic {
    pub handles: Vec<u32>,
    pub punctures: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    /// Lexicographically minimal member of the simultaneous-conjugation orbit.
    pub rep: Characteristic,
    pub size: u64,
}

#[derive(Clone, Debug)]
pub enum CharacteristicList {
    All(Vec<Characteristic>),
    Orbits(Vec<Orbit>),
}

#[derive(Clone, Debug)]
pub struct CharacteristicSet {
    pub total: u64,
    pub list: CharacteristicList,
}

/// Classes admitted by a constraint, in table order.
fn admitted_classes(table: &ConjugacyClassTable, c: &PunctureConstraint) -> Vec<usize> {
    match *c {
        PunctureConstraint::Class(k) => {
            assert!(k < table.num_classes(), "class index {k} out of range");
            vec![k]
        }
        PunctureConstraint::ExactOrder(m) => {
            (0..table.num_classes()).filter(|&k| table.rep_order(k) == m).collect()
        }
    }
}

fn admitted_elements(table: &ConjugacyClassTable, c: &PunctureConstraint) -> Vec<u32> {
    let mut out: Vec<u32> = admitted_classes(table, c)
        .into_iter()
        .flat_map(|k| table.class(k).iter().copied())
        .collect();
    out.sort_unstable();
    out
}

fn saturating_cost(group_order: usize, genus: u32, free_sizes: &[usize]) -> u128 {
    let mut cost: u128 = 1;
    for _ in 0..2 * genus {
        cost = cost.saturating_mul(group_order as u128);
    }
    for &s in free_sizes {
        cost = cost.saturating_mul(s as u128);
    }
    cost
}

struct Walk<'a> {
    g: &'a FiniteGroup,
    table: &'a ConjugacyClassTable,
    genus: usize,
    /// Allowed elements for every puncture except the last, ascending.
    free: Vec<Vec<u32>>,
    /// Class mask for the forced last puncture; None when there are no
    /// punctures and the relation itself is checked at the leaf.
    last_mask: Option<Vec<bool>>,
    comm: Option<Vec<u32>>,
}

impl<'a> Walk<'a> {
    fn new(
        g: &'a FiniteGroup,
        table: &'a ConjugacyClassTable,
        spec: &SurfaceGroupSpec,
    ) -> Walk<'a> {
        let k = spec.punctures.len();
        let free: Vec<Vec<u32>> = spec.punctures[..k.saturating_sub(1)]
            .iter()
            .map(|c| admitted_elements(table, c))
            .collect();
        let last_mask = spec.punctures.last().map(|c| {
            let mut mask = vec![false; table.num_classes()];
            for cls in admitted_classes(table, c) {
                mask[cls] = true;
            }
            mask
        });
        let n = g.order();
        let comm = if spec.genus > 0 && n * n <= COMMUTATOR_TABLE_MAX {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] =
                        g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b)) as u32;
                }
            }
            Some(t)
        } else {
            None
        };
        Walk { g, table, genus: spec.genus as usize, free, last_mask, comm }
    }

    fn cost(&self) -> u128 {
        let sizes: Vec<usize> = self.free.iter().map(|f| f.len()).collect();
        saturating_cost(self.g.order(), self.genus as u32, &sizes)
    }

    #[inline]
    fn commutator(&self, a: usize, b: usize) -> usize {
        match &self.comm {
            Some(t) => t[a * self.g.order() + b] as usize,
            None => {
                let g = self.g;
                g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b))
            }
        }
    }

    #[inline]
    fn leaf(&self, prefix: usize) -> u64 {
        match &self.last_mask {
            Some(mask) => mask[self.table.class_of(self.g.inv(prefix))] as u64,
            None => (prefix == self.g.identity()) as u64,
        }
    }

    fn count(&self, depth: usize, prefix: usize) -> u64 {
        let n = self.g.order();
        if depth < self.genus {
            let mut total = 0;
            for a in 0..n {
                for b in 0..n {
                    total += self.count(depth + 1, self.g.mul(prefix, self.commutator(a, b)));
                }
            }
            total
        } else if depth - self.genus < self.free.len() {
            let mut total = 0;
            for &c in &self.free[depth - self.genus] {
                total += self.count(depth + 1, self.g.mul(prefix, c as usize));
            }
            total
        } else {
            self.leaf(prefix)
        }
    }

    /// Deterministic parallel count: split on the first handle pair, or on
    /// the first free puncture when there are no handles. The aggregate is a
    /// sum of exact integers, so the thread count never changes the value.
    fn count_parallel(&self, threads: usize) -> u64 {
        let n = self.g.order();
        let e = self.g.identity();
        if self.genus == 0 && self.free.is_empty() {
            return self.leaf(e);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            if self.genus >= 1 {
                (0..n)
                    .into_par_iter()
                    .map(|a| {
                        let mut t = 0u64;
                        for b in 0..n {
                            t += self.count(1, self.commutator(a, b));
                        }
                        t
                    })
                    .sum()
            } else {
                self.free[0]
                    .par_iter()
                    .map(|&c| self.count(1, c as usize))
                    .sum()
            }
        })
    }
}

/// Exact count by element-level backtracking. The ground-truth path: loops
/// over all handle images and all admitted images of every puncture but the
/// last, which is forced by the relation and checked against its constraint.
pub fn count_homs_brute(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    spec: &SurfaceGroupSpec,
    opts: &CountOptions,
) -> Result<u64, HomcountError> {
    let walk = Walk::new(g, table, spec);
    let cost = walk.cost();
    if cost > opts.budget as u128 {
        return Err(HomcountError::BudgetExceeded { needed: cost, budget: opts.budget });
    }
    if let Some(mask) = &walk.last_mask {
        if mask.iter().all(|&m| !m) {
            return Ok(0);
        }
    }
    if opts.threads > 1 {
        Ok(walk.count_parallel(opts.threads))
    } else {
        Ok(walk.count(0, g.identity()))
    }
}

/// The commutator kernel T(z) = #{(a, b) : [a, b] = z} as a class function,
/// tallied by brute force and then checked against its class expansion
/// T = sum over classes of |G|/|C| (1_C * 1_{C^-1}).
pub fn commutator_kernel(g: &FiniteGroup, table: &ConjugacyClassTable) -> ClassFunction {
    let n = g.order();
    let mut tally = vec![0u64; table.num_classes()];
    for a in 0..n {
        for b in 0..n {
            let c = g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
            tally[table.class_of(c)] += 1;
        }
    }
    let mut kernel = ClassFunction::zeros(table.num_classes());
    for k in 0..table.num_classes() {
        let size = table.class_size(k) as u64;
        assert_eq!(tally[k] % size, 0, "commutator tally not constant on class {k}");
        kernel.set(k, BigRational::from_integer(BigInt::from(tally[k] / size)));
    }

    // Cross-check the class expansion, exactly.
    let mut expansion = ClassFunction::zeros(table.num_classes());
    for c in 0..table.num_classes() {
        let conv = table.convolve(
            g,
            &ClassFunction::indicator(table, c),
            &ClassFunction::indicator(table, table.inverse_class(c)),
        );
        let weight = BigRational::from_integer(BigInt::from(table.centralizer_order(c)));
        for k in 0..table.num_classes() {
            let v = expansion.value(k) + conv.value(k) * &weight;
            expansion.set(k, v);
        }
    }
    assert_eq!(kernel, expansion, "commutator kernel class expansion");
    kernel
}

/// The full class function F = T^{*g} * ind_1 * ... * ind_k, whose value at
/// the identity class is the homomorphism count. Exposed because the
/// splitting identities need its off-identity values too.
pub fn surface_class_function(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    spec: &SurfaceGroupSpec,
) -> ClassFunction {
    let mut f = ClassFunction::delta_identity(table);
    if spec.genus > 0 {
        let kernel = commutator_kernel(g, table);
        for _ in 0..spec.genus {
            f = table.convolve(g, &f, &kernel);
        }
    }
    for constraint in &spec.punctures {
        let mut ind = ClassFunction::zeros(table.num_classes());
        for k in admitted_classes(table, constraint) {
            ind.set(k, BigRational::from_integer(BigInt::from(1)));
        }
        f = table.convolve(g, &f, &ind);
    }
    f
}

fn exact_count(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    spec: &SurfaceGroupSpec,
) -> BigInt {
    let f = surface_class_function(g, table, spec);
    let v = f.value(table.identity_class());
    assert!(v.is_integer(), "convolution count must be an integer");
    assert!(!v.is_negative(), "convolution count must be non-negative");
    v.to_integer()
}

/// Exact count through the class algebra. Agrees with [`count_homs_brute`]
/// everywhere; polynomial in the number of classes instead of exponential in
/// the genus.
pub fn count_homs_convolution(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    spec: &SurfaceGroupSpec,
) -> Result<u64, HomcountError> {
    exact_count(g, table, spec).to_u64().ok_or(HomcountError::CountOverflow)
}

/// A complex character table, rows indexed by irreducible characters and
/// columns by conjugacy classes in table order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    rows: Vec<Vec<Complex64>>,
    identity_class: usize,
}

impl CharacterTable {
    /// Validates shape, that `reps[i]` really represents class i, that the
    /// degrees are positive near-integers, and completeness: the degree
    /// squares must sum to |G|.
    pub fn new(
        g: &FiniteGroup,
        table: &ConjugacyClassTable,
        reps: Vec<usize>,
        rows: Vec<Vec<Complex64>>,
    ) -> Result<CharacterTable, HomcountError> {
        let c = table.num_classes();
        if reps.len() != c {
            return Err(HomcountError::BadCharacterTable(format!(
                "{} class representatives for {c} classes",
                reps.len()
            )));
        }
        for (i, &r) in reps.iter().enumerate() {
            if r >= g.order() {
                return Err(HomcountError::BadCharacterTable(format!(
                    "representative {r} out of range"
                )));
            }
            if table.class_of(r) != i {
                return Err(HomcountError::BadCharacterTable(format!(
                    "representative {r} is not in class {i}; columns must follow table order"
                )));
            }
        }
        if rows.len() != c {
            return Err(HomcountError::BadCharacterTable(format!(
                "{} characters for {c} classes",
                rows.len()
            )));
        }
        let idc = table.identity_class();
        let mut degree_square_sum = 0.0;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(HomcountError::BadCharacterTable(format!(
                    "character {i} has {} values for {c} classes",
                    row.len()
                )));
            }
            let deg = row[idc];
            if deg.im.abs() > FROBENIUS_TOLERANCE
                || deg.re < 1.0 - FROBENIUS_TOLERANCE
                || (deg.re - deg.re.round()).abs() > FROBENIUS_TOLERANCE
            {
                return Err(HomcountError::BadCharacterTable(format!(
                    "character {i} has degree {deg} which is not a positive integer"
                )));
            }
            degree_square_sum += deg.re * deg.re;
        }
        if (degree_square_sum - g.order() as f64).abs() > 1e-6 * g.order() as f64 {
            return Err(HomcountError::BadCharacterTable(format!(
                "degree squares sum to {degree_square_sum}, group order is {}",
                g.order()
            )));
        }
        Ok(CharacterTable { rows, identity_class: idc })
    }

    pub fn num_characters(&self) -> usize {
        self.rows.len()
    }

    pub fn value(&self, character: usize, class: usize) -> Complex64 {
        self.rows[character][class]
    }
}

/// The character-sum count
///
/// ```text
/// |G|^{2g-1} * prod_j |C_j| * sum_chi prod_j chi(c_j) / chi(1)^{k+2g-2}
/// ```
///
/// computed in floating point and rounded, rejected via
/// [`HomcountError::NonIntegralResult`] if the sum strays more than
/// [`FROBENIUS_TOLERANCE`] from a non-negative integer. Class constraints
/// only.
pub fn count_homs_frobenius(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    spec: &SurfaceGroupSpec,
    chars: &CharacterTable,
) -> Result<u64, HomcountError> {
    let mut classes = Vec::with_capacity(spec.punctures.len());
    for p in &spec.punctures {
        match *p {
            PunctureConstraint::Class(k) => classes.push(k),
            PunctureConstraint::ExactOrder(_) => return Err(HomcountError::UnsupportedConstraint),
        }
    }

    let exponent = classes.len() as i32 + 2 * spec.genus as i32 - 2;
    let mut sum = Complex64::new(0.0, 0.0);
    for row in &chars.rows {
        let degree = row[chars.identity_class].re;
        let mut term = Complex64::new(1.0, 0.0);
        for &k in &classes {
            term *= row[k];
        }
        sum += term / degree.powi(exponent);
    }

    let mut scale = (g.order() as f64).powi(2 * spec.genus as i32 - 1);
    for &k in &classes {
        scale *= table.class_size(k) as f64;
    }
    let value = sum * scale;
    let rounded = value.re.round();
    let distance = ((value.re - rounded).powi(2) + value.im.powi(2)).sqrt();
    if distance > FROBENIUS_TOLERANCE || rounded < -0.5 {
        return Err(HomcountError::NonIntegralResult { distance });
    }
    if rounded < 0.5 {
        return Ok(0);
    }
    if rounded > u64::MAX as f64 {
        return Err(HomcountError::CountOverflow);
    }
    Ok(rounded as u64)
}

/// Walk the same tree as [`count_homs_brute`] but materialize the solutions,
/// in lexicographic order of the full tuple. With `up_to_conjugacy` the
/// solutions are folded into orbits under simultaneous conjugation, keyed by
/// their lexicographically minimal member; orbit sizes sum to the raw count.
pub fn enumerate_characteristics(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    spec: &SurfaceGroupSpec,
    opts: &EnumOptions,
) -> Result<CharacteristicSet, HomcountError> {
    let expected = exact_count(g, table, spec);
    if expected > BigInt::from(opts.cap) {
        let count = expected.to_u64().unwrap_or(u64::MAX);
        return Err(HomcountError::CapExceeded { count, cap: opts.cap });
    }
    let walk = Walk::new(g, table, spec);
    let cost = walk.cost();
    if cost > opts.budget as u128 {
        return Err(HomcountError::BudgetExceeded { needed: cost, budget: opts.budget });
    }

    let genus = spec.genus as usize;
    let k = spec.punctures.len();
    let mut items: Vec<Characteristic> = Vec::new();
    let mut handles = vec![0u32; 2 * genus];
    let mut punctures = vec![0u32; k];

    fn rec(
        walk: &Walk<'_>,
        depth: usize,
        prefix: usize,
        handles: &mut Vec<u32>,
        punctures: &mut Vec<u32>,
        items: &mut Vec<Characteristic>,
    ) {
        let g = walk.g;
        let n = g.order();
        if depth < walk.genus {
            for a in 0..n {
                for b in 0..n {
                    handles[2 * depth] = a as u32;
                    handles[2 * depth + 1] = b as u32;
                    rec(walk, depth + 1, g.mul(prefix, walk.commutator(a, b)), handles, punctures, items);
                }
            }
        } else if depth - walk.genus < walk.free.len() {
            let j = depth - walk.genus;
            for &c in &walk.free[j] {
                punctures[j] = c;
                rec(walk, depth + 1, g.mul(prefix, c as usize), handles, punctures, items);
            }
        } else {
            match &walk.last_mask {
                Some(mask) => {
                    let forced = g.inv(prefix);
                    if mask[walk.table.class_of(forced)] {
                        let last = punctures.len() - 1;
                        punctures[last] = forced as u32;
                        items.push(Characteristic {
                            handles: handles.clone(),
                            punctures: punctures.clone(),
                        });
                    }
                }
                None => {
                    if prefix == g.identity() {
                        items.push(Characteristic {
                            handles: handles.clone(),
                            punctures: punctures.clone(),
                        });
                    }
                }
            }
        }
    }
    rec(&walk, 0, g.identity(), &mut handles, &mut punctures, &mut items);
    let total = items.len() as u64;
    debug_assert_eq!(BigInt::from(total), expected, "enumeration disagrees with exact count");

    if !opts.up_to_conjugacy {
        return Ok(CharacteristicSet { total, list: CharacteristicList::All(items) });
    }

    let mut orbits: BTreeMap<Characteristic, u64> = BTreeMap::new();
    for item in &items {
        let canon = canonical_conjugate(g, item);
        *orbits.entry(canon).or_insert(0) += 1;
    }
    let orbits: Vec<Orbit> =
        orbits.into_iter().map(|(rep, size)| Orbit { rep, size }).collect();
    Ok(CharacteristicSet { total, list: CharacteristicList::Orbits(orbits) })
}

/// Lexicographically minimal simultaneous conjugate of a solution tuple.
fn canonical_conjugate(g: &FiniteGroup, item: &Characteristic) -> Characteristic {
    let mut best: Option<Characteristic> = None;
    for s in 0..g.order() {
        let conj = |x: &u32| g.mul(g.mul(s, *x as usize), g.inv(s)) as u32;
        let candidate = Characteristic {
            handles: item.handles.iter().map(conj).collect(),
            punctures: item.punctures.iter().map(conj).collect(),
        };
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.expect("group is never empty")
}
