//! A small catalog of concrete groups and character tables. These are the
//! fixtures the test suite counts against, and convenient starting points in
//! examples: cyclic groups, the Klein four group, S3, D4, Q8, A4, S4.
//!
//! Every catalog group carries a permutation action (cyclic and dihedral
//! groups act on points, Q8 by its left regular representation), so
//! degree-shifting computations work on all of them.

use crate::group::{perm_from_cycles, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::group::ConjugacyClassTable;
use crate::homcount::CharacterTable;
use num::complex::Complex64;

fn from_cycles(degree: usize, gens: &[&[usize]]) -> FiniteGroup {
    let images = gens
        .iter()
        .map(|c| perm_from_cycles(degree, &[c.to_vec()]).expect("catalog cycle"))
        .collect();
    FiniteGroup::from_permutations(degree, images, DEFAULT_ORDER_CAP).expect("catalog group")
}

/// Z_n as a raw table, `i * j = i + j mod n`; element k is the k-th power of
/// the generator, which the cyclic character table relies on.
pub fn z_table(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(table).expect("cyclic table")
}

pub fn z2() -> FiniteGroup {
    from_cycles(2, &[&[1, 2]])
}

pub fn z3() -> FiniteGroup {
    from_cycles(3, &[&[1, 2, 3]])
}

pub fn z4() -> FiniteGroup {
    from_cycles(4, &[&[1, 2, 3, 4]])
}

/// Klein four group acting on four points.
pub fn v4() -> FiniteGroup {
    from_cycles(4, &[&[1, 2], &[3, 4]])
}

pub fn s3() -> FiniteGroup {
    from_cycles(3, &[&[1, 2], &[1, 2, 3]])
}

pub fn d4() -> FiniteGroup {
    from_cycles(4, &[&[1, 2, 3, 4], &[1, 3]])
}

pub fn a4() -> FiniteGroup {
    from_cycles(4, &[&[1, 2, 3], &[2, 3, 4]])
}

pub fn s4() -> FiniteGroup {
    from_cycles(4, &[&[1, 2], &[1, 2, 3, 4]])
}

/// The quaternion group by its left regular representation on eight points.
/// Element encoding inside: 0..8 = +1, -1, +i, -i, +j, -j, +k, -k.
pub fn q8() -> FiniteGroup {
    fn qmul(a: usize, b: usize) -> usize {
        // unit_mul[u][v] = (unit of uv, extra sign of uv), units 1, i, j, k.
        const UNIT_MUL: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let (ua, sa) = (a / 2, a % 2);
        let (ub, sb) = (b / 2, b % 2);
        let (uc, s) = UNIT_MUL[ua][ub];
        uc * 2 + (sa ^ sb ^ s)
    }
    let regular = |gen: usize| -> Vec<u32> { (0..8).map(|x| qmul(gen, x) as u32).collect() };
    // Generators i and j suffice.
    FiniteGroup::from_permutations(8, vec![regular(2), regular(4)], DEFAULT_ORDER_CAP)
        .expect("quaternion group")
}

/// The nine standard fixtures, smallest first.
pub fn fixture_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z2", z2()),
        ("Z3", z3()),
        ("Z4", z4()),
        ("V4", v4()),
        ("S3", s3()),
        ("D4", d4()),
        ("Q8", q8()),
        ("A4", a4()),
        ("S4", s4()),
    ]
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Character table of a cyclic group whose element k is the k-th power of a
/// fixed generator, as produced by [`z_table`] or a single-cycle permutation
/// build: chi_j(g^k) = exp(2 pi i jk / n).
pub fn char_table_cyclic(g: &FiniteGroup, table: &ConjugacyClassTable) -> CharacterTable {
    let n = g.order();
    // The power structure the formula needs: element k+1 is element k times
    // the generator at index 1.
    for k in 0..n - 1 {
        assert_eq!(g.mul(k, 1), k + 1, "element indexing is not by generator powers");
    }
    let reps: Vec<usize> = (0..n).collect();
    let rows: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| {
                    let theta = std::f64::consts::TAU * (j * k % n) as f64 / n as f64;
                    Complex64::new(theta.cos(), theta.sin())
                })
                .collect()
        })
        .collect();
    CharacterTable::new(g, table, reps, rows).expect("cyclic character table")
}

/// Character table of S3, columns matched to the class table by class size
/// and element order.
pub fn char_table_s3(g: &FiniteGroup, table: &ConjugacyClassTable) -> CharacterTable {
    // Column values per class, rows (trivial, sign, standard).
    let column = |size: usize, order: u64| -> [f64; 3] {
        match (size, order) {
            (1, 1) => [1.0, 1.0, 2.0],
            (2, 3) => [1.0, 1.0, -1.0],
            (3, 2) => [1.0, -1.0, 0.0],
            other => panic!("not an S3 class shape: {other:?}"),
        }
    };
    build_by_class_shape(g, table, 3, column)
}

/// Character table of S4, columns matched by class size and element order.
pub fn char_table_s4(g: &FiniteGroup, table: &ConjugacyClassTable) -> CharacterTable {
    // Rows (trivial, sign, 2-dim, standard 3-dim, standard tensor sign).
    let column = |size: usize, order: u64| -> [f64; 5] {
        match (size, order) {
            (1, 1) => [1.0, 1.0, 2.0, 3.0, 3.0],
            (6, 2) => [1.0, -1.0, 0.0, 1.0, -1.0],
            (3, 2) => [1.0, 1.0, 2.0, -1.0, -1.0],
            (8, 3) => [1.0, 1.0, -1.0, 0.0, 0.0],
            (6, 4) => [1.0, -1.0, 0.0, -1.0, 1.0],
            other => panic!("not an S4 class shape: {other:?}"),
        }
    };
    build_by_class_shape(g, table, 5, column)
}

fn build_by_class_shape<const R: usize>(
    g: &FiniteGroup,
    table: &ConjugacyClassTable,
    rows: usize,
    column: impl Fn(usize, u64) -> [f64; R],
) -> CharacterTable {
    assert_eq!(rows, R);
    assert_eq!(table.num_classes(), R);
    let mut values = vec![vec![real(0.0); R]; R];
    for k in 0..R {
        let col = column(table.class_size(k), table.rep_order(k));
        for (r, &v) in col.iter().enumerate() {
            values[r][k] = real(v);
        }
    }
    let reps: Vec<usize> = (0..R).map(|k| table.rep(k)).collect();
    CharacterTable::new(g, table, reps, values).expect("catalog character table")
}
