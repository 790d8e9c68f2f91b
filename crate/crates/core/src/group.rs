//! Finite groups as explicit multiplication tables, plus the conjugacy-class
//! layer the counting code runs on: class tables, centralizer orders, the
//! inversion involution on classes, and exact convolution of rational class
//! functions through cached class-multiplication coefficients.
//!
//! Elements are plain indices `0..n`. A group built from permutation
//! generators stores its permutation action and numbers elements in
//! breadth-first discovery order with the identity at index 0; a group built
//! from a raw table keeps the caller's numbering.

use num::{BigInt, BigRational, Zero};
use std::collections::HashMap;
use std::sync::OnceLock;
use thiserror::Error;

/// Largest closure a permutation build will materialize by default. Tables
/// are stored dense, so memory grows quadratically; this is a desk-scale cap,
/// not a suggestion that counting is feasible anywhere near it.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Full associativity is checked only up to this order; larger tables get a
/// deterministic sample of triples.
const FULL_ASSOC_CHECK_MAX: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 500_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("closure exceeded the order cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

/// The permutation realization retained by [`FiniteGroup::from_permutations`].
#[derive(Clone, Debug)]
pub struct PermutationAction {
    degree: usize,
    images: Vec<Vec<u32>>,
}

impl PermutationAction {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image vector of one element: position i holds the image of point i.
    pub fn image(&self, element: usize) -> &[u32] {
        &self.images[element]
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    identity: usize,
    element_orders: Vec<u64>,
    action: Option<PermutationAction>,
}

impl FiniteGroup {
    /// Build from a full multiplication table, `table[a][b] = a*b`.
    ///
    /// Validates that rows and columns are permutations, that a two-sided
    /// identity and two-sided inverses exist, and that the operation is
    /// associative (exhaustively up to order 64, by deterministic sampling
    /// above that).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!(
                    "row {a} has length {} in a table of order {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(GroupError::NotAGroup(format!(
                        "entry {v} out of range in row {a}"
                    )));
                }
                flat.push(v as u32);
            }
        }

        // Latin square: cancellation on both sides.
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                let r = flat[a * n + b] as usize;
                let c = flat[b * n + a] as usize;
                if seen_row[r] {
                    return Err(GroupError::NotAGroup(format!("row {a} repeats {r}")));
                }
                if seen_col[c] {
                    return Err(GroupError::NotAGroup(format!("column {a} repeats {c}")));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] as usize == x && flat[x * n + e] as usize == x))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;

        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| flat[a * n + b] as usize == identity)
                .expect("Latin square always solves a*b = e");
            if flat[b * n + a] as usize != identity {
                return Err(GroupError::NotAGroup(format!(
                    "element {a} has only a one-sided inverse"
                )));
            }
            inverse[a] = b as u32;
        }

        if n <= FULL_ASSOC_CHECK_MAX {
            for a in 0..n {
                for b in 0..n {
                    let ab = flat[a * n + b] as usize;
                    for c in 0..n {
                        let bc = flat[b * n + c] as usize;
                        if flat[ab * n + c] != flat[a * n + bc] {
                            return Err(GroupError::NotAGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Deterministic LCG sample; light verification above the cap.
            let mut state: u64 = 0x9e3779b97f4a7c15;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (next() % n, next() % n, next() % n);
                let ab = flat[a * n + b] as usize;
                let bc = flat[b * n + c] as usize;
                if flat[ab * n + c] != flat[a * n + bc] {
                    return Err(GroupError::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }

        Ok(FiniteGroup::finish(n, flat, inverse, identity, None))
    }

    /// Closure of permutation generators under composition, breadth first.
    /// Element 0 is the identity; the rest are numbered in discovery order,
    /// which is deterministic in the generator list.
    ///
    /// Generators are image vectors of length `degree` (see
    /// [`perm_from_cycles`] for the cycle-notation front end). The product
    /// convention is `(p*q)(x) = p(q(x))`: the right factor acts first.
    pub fn from_permutations(
        degree: usize,
        generators: Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidPermutation("degree must be positive".into()));
        }
        for (i, p) in generators.iter().enumerate() {
            validate_permutation(degree, p)
                .map_err(|m| GroupError::InvalidPermutation(format!("generator {i}: {m}")))?;
        }

        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut list: Vec<Vec<u32>> = Vec::new();
        ids.insert(identity.clone(), 0);
        list.push(identity);

        let mut cursor = 0;
        while cursor < list.len() {
            for gen in &generators {
                // (w * gen)(x) = w(gen(x)).
                let w = &list[cursor];
                let product: Vec<u32> = gen.iter().map(|&x| w[x as usize]).collect();
                if !ids.contains_key(&product) {
                    if list.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    ids.insert(product.clone(), list.len() as u32);
                    list.push(product);
                }
            }
            cursor += 1;
        }

        let n = list.len();
        let mut flat = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let product: Vec<u32> = list[j].iter().map(|&x| list[i][x as usize]).collect();
                flat[i * n + j] = ids[&product];
            }
        }
        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let mut inv = vec![0u32; degree];
            for (x, &y) in list[i].iter().enumerate() {
                inv[y as usize] = x as u32;
            }
            inverse[i] = ids[&inv];
        }

        let action = PermutationAction { degree, images: list };
        Ok(FiniteGroup::finish(n, flat, inverse, 0, Some(action)))
    }

    fn finish(
        order: usize,
        table: Vec<u32>,
        inverse: Vec<u32>,
        identity: usize,
        action: Option<PermutationAction>,
    ) -> FiniteGroup {
        let mut element_orders = vec![0u64; order];
        for x in 0..order {
            let mut p = x;
            let mut m = 1u64;
            while p != identity {
                p = table[p * order + x] as usize;
                m += 1;
            }
            element_orders[x] = m;
        }
        FiniteGroup { order, table, inverse, identity, element_orders, action }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element_orders[a]
    }

    pub fn permutation_action(&self) -> Option<&PermutationAction> {
        self.action.as_ref()
    }
}

fn validate_permutation(degree: usize, p: &[u32]) -> Result<(), String> {
    if p.len() != degree {
        return Err(format!("length {} does not match degree {degree}", p.len()));
    }
    let mut seen = vec![false; degree];
    for &y in p {
        let y = y as usize;
        if y >= degree {
            return Err(format!("image {y} out of range"));
        }
        if seen[y] {
            return Err(format!("image {y} repeated"));
        }
        seen[y] = true;
    }
    Ok(())
}

/// Image vector of a product of disjoint cycles in 1-based notation, e.g.
/// `[[1,2],[3,4]]` for (1 2)(3 4). Fixed points may be omitted.
pub fn perm_from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<u32>, GroupError> {
    let mut image: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    for cycle in cycles {
        for w in 0..cycle.len() {
            let from = cycle[w];
            let to = cycle[(w + 1) % cycle.len()];
            if from == 0 || from > degree || to == 0 || to > degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "cycle point out of range 1..={degree}"
                )));
            }
            if used[from - 1] {
                return Err(GroupError::InvalidPermutation(format!(
                    "point {from} appears in two cycles"
                )));
            }
            used[from - 1] = true;
            image[from - 1] = (to - 1) as u32;
        }
    }
    Ok(image)
}

/// Conjugacy classes of a [`FiniteGroup`], in a canonical order: elements
/// ascending within each class, classes sorted by (size, smallest element).
/// Also carries centralizer orders, the inversion involution on classes, and
/// a lazily built tensor of class-multiplication coefficients.
#[derive(Debug)]
pub struct ConjugacyClassTable {
    group_order: usize,
    classes: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    centralizer_orders: Vec<u64>,
    inverse_class: Vec<u32>,
    rep_orders: Vec<u64>,
    identity_class: usize,
    products: OnceLock<Vec<u64>>,
}

impl ConjugacyClassTable {
    pub fn new(g: &FiniteGroup) -> ConjugacyClassTable {
        let n = g.order();
        let mut assigned = vec![false; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        // Ascending scan, so the first unassigned element is its class minimum.
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class = Vec::new();
            for t in 0..n {
                let y = g.mul(g.mul(t, x), g.inv(t));
                if !assigned[y] {
                    assigned[y] = true;
                    class.push(y as u32);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));

        let mut class_of = vec![0u32; n];
        for (k, class) in classes.iter().enumerate() {
            for &x in class {
                class_of[x as usize] = k as u32;
            }
        }

        let mut centralizer_orders = Vec::with_capacity(classes.len());
        for class in &classes {
            let rep = class[0] as usize;
            let cent = (0..n).filter(|&t| g.mul(t, rep) == g.mul(rep, t)).count() as u64;
            // Orbit-stabilizer, exact by construction; fail loudly if not.
            assert_eq!(cent * class.len() as u64, n as u64, "centralizer accounting");
            centralizer_orders.push(cent);
        }

        let inverse_class: Vec<u32> =
            classes.iter().map(|c| class_of[g.inv(c[0] as usize)]).collect();
        let rep_orders: Vec<u64> =
            classes.iter().map(|c| g.element_order(c[0] as usize)).collect();
        let identity_class = class_of[g.identity()] as usize;

        ConjugacyClassTable {
            group_order: n,
            classes,
            class_of,
            centralizer_orders,
            inverse_class,
            rep_orders,
            identity_class,
            products: OnceLock::new(),
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Elements of class `k`, ascending.
    pub fn class(&self, k: usize) -> &[u32] {
        &self.classes[k]
    }

    pub fn class_size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Smallest element of the class, used as its representative everywhere.
    pub fn rep(&self, k: usize) -> usize {
        self.classes[k][0] as usize
    }

    pub fn centralizer_order(&self, k: usize) -> u64 {
        self.centralizer_orders[k]
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k] as usize
    }

    /// Order of the elements in class `k`.
    pub fn rep_order(&self, k: usize) -> u64 {
        self.rep_orders[k]
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    /// Class-multiplication coefficients: `coefficient(i, j, k)` counts pairs
    /// (x, y) in C_i x C_j with xy equal to one fixed element of C_k. The
    /// count is independent of which element is fixed.
    pub fn product_coefficient(&self, g: &FiniteGroup, i: usize, j: usize, k: usize) -> u64 {
        let c = self.num_classes();
        self.products(g)[(i * c + j) * c + k]
    }

    fn products(&self, g: &FiniteGroup) -> &[u64] {
        self.products.get_or_init(|| {
            assert_eq!(g.order(), self.group_order, "table belongs to a different group");
            let c = self.num_classes();
            let mut tensor = vec![0u64; c * c * c];
            for i in 0..c {
                for j in 0..c {
                    let mut tally = vec![0u64; c];
                    for &x in &self.classes[i] {
                        for &y in &self.classes[j] {
                            tally[self.class_of[g.mul(x as usize, y as usize)] as usize] += 1;
                        }
                    }
                    for k in 0..c {
                        let size = self.classes[k].len() as u64;
                        // Products of two classes hit each element of a target
                        // class equally often.
                        assert_eq!(tally[k] % size, 0, "class product tally not constant");
                        tensor[(i * c + j) * c + k] = tally[k] / size;
                    }
                }
            }
            tensor
        })
    }

    /// Exact convolution (f * h)(z) = sum over xy = z of f(x) h(y), computed
    /// in the class algebra through the coefficient tensor.
    pub fn convolve(&self, g: &FiniteGroup, f: &ClassFunction, h: &ClassFunction) -> ClassFunction {
        let c = self.num_classes();
        assert_eq!(f.values.len(), c, "class function size");
        assert_eq!(h.values.len(), c, "class function size");
        let tensor = self.products(g);
        let mut out = vec![BigRational::zero(); c];
        for i in 0..c {
            if f.values[i].is_zero() {
                continue;
            }
            for j in 0..c {
                if h.values[j].is_zero() {
                    continue;
                }
                let fh = &f.values[i] * &h.values[j];
                let row = &tensor[(i * c + j) * c..(i * c + j) * c + c];
                for (k, &a) in row.iter().enumerate() {
                    if a != 0 {
                        out[k] += &fh * BigRational::from_integer(BigInt::from(a));
                    }
                }
            }
        }
        ClassFunction { values: out }
    }
}

/// A function constant on conjugacy classes, stored as one exact rational per
/// class in table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn zeros(num_classes: usize) -> ClassFunction {
        ClassFunction { values: vec![BigRational::zero(); num_classes] }
    }

    /// Indicator of one class: 1 on it, 0 elsewhere.
    pub fn indicator(table: &ConjugacyClassTable, class: usize) -> ClassFunction {
        let mut f = ClassFunction::zeros(table.num_classes());
        f.values[class] = BigRational::from_integer(BigInt::from(1));
        f
    }

    /// The convolution unit: indicator of the identity's class.
    pub fn delta_identity(table: &ConjugacyClassTable) -> ClassFunction {
        ClassFunction::indicator(table, table.identity_class())
    }

    pub fn num_classes(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, class: usize) -> &BigRational {
        &self.values[class]
    }

    pub fn set(&mut self, class: usize, v: BigRational) {
        self.values[class] = v;
    }

    /// Sum over all group elements: sum of |C_k| f(C_k).
    pub fn total_mass(&self, table: &ConjugacyClassTable) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, v) in self.values.iter().enumerate() {
            acc += v * BigRational::from_integer(BigInt::from(table.class_size(k)));
        }
        acc
    }
}
