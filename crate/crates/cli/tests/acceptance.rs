//! Acceptance gate for the workspace. Eight checks, one test each, covering
//! counting oracles, character-sum cross-checks, the splitting and
//! associativity laws, the Chern and index layer, dimension formulas, degree
//! shifting, and CLI determinism. Every check is exact; the only tolerance
//! anywhere is the 1e-6 integrality window inside the character-sum count,
//! and that is asserted by exact comparison against the integer answer.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, Zero};
use orbitwist_core::group::ConjugacyClassTable;
use orbitwist_core::homcount::{
    count_homs_brute, count_homs_convolution, count_homs_frobenius, CountOptions,
    SurfaceGroupSpec,
};
use orbitwist_core::{bundle, gw, samples};
use orbitwist_core::{
    BundlePoint, DimensionInput, LinearRepData, MarkedOrbicurve, OrbiBundleData, SelectionInput,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn class_tuples(num_classes: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * num_classes);
        for t in &out {
            for c in 0..num_classes {
                let mut t2 = t.clone();
                t2.push(c);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

#[test]
fn criterion_1_brute_count_equals_convolution_count() {
    let start = Instant::now();
    let opts = CountOptions { threads: 4, ..CountOptions::default() };
    let mut checked = 0u64;
    for (name, g) in samples::fixture_groups() {
        let table = ConjugacyClassTable::new(&g);
        let nc = table.num_classes();
        for genus in 0..=2 {
            for k in 0..=3 {
                for classes in class_tuples(nc, k) {
                    let spec = SurfaceGroupSpec::with_classes(genus, &classes);
                    let brute = count_homs_brute(&g, &table, &spec, &opts)
                        .unwrap_or_else(|e| panic!("{name} g={genus} {classes:?}: {e}"));
                    let conv = count_homs_convolution(&g, &table, &spec).unwrap();
                    assert_eq!(brute, conv, "{name} g={genus} classes {classes:?}");
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("[PASS] criterion 1: {checked} brute counts match convolution ({elapsed:?})");
}

#[test]
fn criterion_2_character_sums_match_exact_counts() {
    let cyclics = [
        ("Z2", samples::z2()),
        ("Z3", samples::z3()),
        ("Z4", samples::z4()),
        ("Z6", samples::z_table(6)),
    ];
    let mut cases: Vec<(&str, _, _)> = Vec::new();
    for (name, g) in cyclics {
        let table = ConjugacyClassTable::new(&g);
        let chars = samples::char_table_cyclic(&g, &table);
        cases.push((name, g, (table, chars)));
    }
    let s3 = samples::s3();
    let t3 = ConjugacyClassTable::new(&s3);
    let c3 = samples::char_table_s3(&s3, &t3);
    cases.push(("S3", s3, (t3, c3)));
    let s4 = samples::s4();
    let t4 = ConjugacyClassTable::new(&s4);
    let c4 = samples::char_table_s4(&s4, &t4);
    cases.push(("S4", s4, (t4, c4)));

    let mut checked = 0u64;
    for (name, g, (table, chars)) in &cases {
        let nc = table.num_classes();
        for genus in 0..=1 {
            for k in 0..=3 {
                for classes in class_tuples(nc, k) {
                    let spec = SurfaceGroupSpec::with_classes(genus, &classes);
                    let exact = count_homs_convolution(g, table, &spec).unwrap();
                    let frob = count_homs_frobenius(g, table, &spec, chars)
                        .unwrap_or_else(|e| panic!("{name} g={genus} {classes:?}: {e}"));
                    assert_eq!(frob, exact, "{name} g={genus} classes {classes:?}");
                    checked += 1;
                }
            }
        }
    }

    // The documented S3 values: two transpositions and a 3-cycle multiply to
    // the identity in 6 ways, three transpositions never do, and the torus
    // count for a single 3-cycle puncture is 18.
    let (_, s3, (t3, c3)) = &cases[4];
    assert_eq!(t3.class_size(2), 3);
    assert_eq!(t3.class_size(1), 2);
    let n = |genus, cl: &[usize]| {
        count_homs_frobenius(s3, t3, &SurfaceGroupSpec::with_classes(genus, cl), c3).unwrap()
    };
    assert_eq!(n(0, &[2, 2, 1]), 6);
    assert_eq!(n(0, &[2, 2, 2]), 0);
    assert_eq!(n(1, &[1]), 18);
    println!("[PASS] criterion 2: {checked} character-sum counts match, values 6, 0, 18 included");
}

#[test]
fn criterion_3_splitting_identities_hold() {
    let mut checked = 0u64;
    for (name, g) in samples::fixture_groups() {
        let table = ConjugacyClassTable::new(&g);
        let nc = table.num_classes();
        for genus in 0..=1 {
            for k in 0..=2 {
                for classes in class_tuples(nc, k) {
                    let report = gw::splitting_identities(&g, &table, genus, &classes)
                        .unwrap_or_else(|e| panic!("{name} g={genus} {classes:?}: {e}"));
                    assert!(report.all_hold, "{name} g={genus} classes {classes:?}: {report:?}");
                    checked += 1;
                }
            }
        }
    }

    // Worked instance: cutting the handle of the one-holed torus with a
    // 3-cycle boundary decomposes 18 as 2*6 + 3*2 over the cut class.
    let s3 = samples::s3();
    let table = ConjugacyClassTable::new(&s3);
    let ttr = gw::three_point_count(&s3, &table, [2, 2, 1]).unwrap();
    let rrr = gw::three_point_count(&s3, &table, [1, 1, 1]).unwrap();
    assert_eq!((ttr, rrr), (6, 2));
    assert_eq!((table.centralizer_order(2), table.centralizer_order(1)), (2, 3));
    let torus =
        count_homs_convolution(&s3, &table, &SurfaceGroupSpec::with_classes(1, &[1])).unwrap();
    assert_eq!(torus, 18);
    assert_eq!(2 * ttr + 3 * rrr, torus);
    let report = gw::splitting_identities(&s3, &table, 0, &[1]).unwrap();
    assert_eq!((report.nonseparating.lhs, report.nonseparating.rhs), (18, 18));
    println!("[PASS] criterion 3: {checked} splitting reports hold, 18 = 2*6 + 3*2 reproduced");
}

#[test]
fn criterion_4_sector_product_is_associative() {
    let start = Instant::now();
    for (name, g) in samples::fixture_groups() {
        let table = ConjugacyClassTable::new(&g);
        let product = gw::product_table(&g, &table).unwrap();
        assert_eq!(product.check_associativity(), None, "{name}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("[PASS] criterion 4: associativity exhaustive on all fixture groups ({elapsed:?})");
}

#[test]
fn criterion_5_chern_numbers_and_indices() {
    // Independent fraction arithmetic for the canonical degree, on i64 pairs.
    fn oracle(genus: u32, mults: &[u64]) -> BigRational {
        let (mut num, mut den) = (2 * i64::from(genus) - 2, 1i64);
        for &m in mults {
            let m = m as i64;
            num = num * m + (m - 1) * den;
            den *= m;
        }
        r(num, den)
    }

    let patterns: [&[u64]; 13] = [
        &[],
        &[2],
        &[3],
        &[4],
        &[7],
        &[12],
        &[2, 2],
        &[2, 3],
        &[2, 4],
        &[3, 3, 3],
        &[2, 3, 5],
        &[2, 3, 7],
        &[2, 2, 2, 2],
    ];
    let mut grid = 0;
    for genus in 0..=3 {
        for mults in patterns {
            let curve = MarkedOrbicurve::new(genus, mults.to_vec()).unwrap();
            assert_eq!(curve.canonical_degree(), oracle(genus, mults), "g={genus} {mults:?}");
            grid += 1;
        }
    }
    assert!(grid >= 50);
    let deg = |g, m: &[u64]| MarkedOrbicurve::new(g, m.to_vec()).unwrap().canonical_degree();
    assert_eq!(deg(0, &[3]), r(-4, 3));
    assert_eq!(deg(0, &[2, 3, 7]), r(1, 42));

    // The elliptic involution: the quotient of a flat torus by z -> -z is the
    // sphere with four half points, and both sides of deg K = 0 agree.
    assert_eq!(bundle::quotient_chern_number(0, 2).unwrap(), BigRational::zero());
    assert_eq!(deg(1, &[]), BigRational::zero());
    assert_eq!(deg(0, &[2, 2, 2, 2]), BigRational::zero());

    let mut rng = StdRng::seed_from_u64(11);
    for case in 0..1000 {
        let genus: u32 = rng.gen_range(0..=4);
        let rank: u32 = rng.gen_range(1..=3);
        let desing: i64 = rng.gen_range(-10..=10);
        let npts = rng.gen_range(0..=4);
        let mut points = Vec::new();
        let mut mults = Vec::new();
        for _ in 0..npts {
            let m: u64 = rng.gen_range(2..=12);
            mults.push(m);
            let exponents = (0..rank).map(|_| rng.gen_range(0..m)).collect();
            points.push(BundlePoint { multiplicity: m, exponents });
        }
        let curve = MarkedOrbicurve::new(genus, mults).unwrap();
        let bundle = OrbiBundleData::new(rank, desing, points.clone()).unwrap();

        let index = bundle::riemann_roch_index(&bundle, &curve).unwrap();
        assert_eq!(index % 2, 0, "case {case}: odd index {index}");

        let exp_sum: BigRational =
            points.iter().flat_map(|p| p.exponents.iter().map(|&a| r(a as i64, p.multiplicity as i64))).sum();
        let chern = bundle::chern_number(&bundle, &curve).unwrap();
        assert_eq!(chern, r(desing, 1) + exp_sum.clone(), "case {case}");
        let flat = r(2 * i64::from(rank) * (1 - i64::from(genus)), 1);
        assert_eq!(r(index, 1), r(2, 1) * (chern - exp_sum) + flat, "case {case}");
    }
    println!("[PASS] criterion 5: {grid}-case degree grid, 0 = 0, and 1000 even index pairs");
}

#[test]
fn criterion_6_virtual_dimensions() {
    // Hand-computed stable-map dimensions with every shift zero.
    let classical: [(&str, i64, u32, u32, u32, i64); 20] = [
        ("lines in the plane", 3, 2, 0, 0, 2),
        ("plane conics", 6, 2, 0, 0, 5),
        ("rational plane cubics", 9, 2, 0, 0, 8),
        ("lines in 3-space", 4, 3, 0, 0, 4),
        ("rational curves on a quintic 3-fold", 0, 3, 0, 0, 0),
        ("rational curves on a K3", 0, 2, 0, 0, -1),
        ("three points on a point", 0, 0, 0, 3, 0),
        ("pointed elliptic curves", 0, 0, 1, 1, 1),
        ("genus two curves", 0, 0, 2, 0, 3),
        ("genus three curves", 0, 0, 3, 0, 6),
        ("pointed genus two curves", 0, 0, 2, 1, 4),
        ("five points on a line", 0, 0, 0, 5, 2),
        ("degree three self-maps of the line", 6, 1, 0, 0, 4),
        ("elliptic plane cubics", 9, 2, 1, 0, 9),
        ("bidegree (1,1) curves on a quadric", 4, 2, 0, 0, 3),
        ("conics in 3-space", 8, 3, 0, 0, 8),
        ("lines in 4-space", 5, 4, 0, 0, 6),
        ("elliptic curves with two points", 0, 0, 1, 2, 2),
        ("pointed genus three curves", 0, 0, 3, 1, 7),
        ("genus two plane quartics", 12, 2, 2, 0, 13),
    ];
    for (what, chern, n, genus, k, want) in classical {
        let input = DimensionInput {
            chern_pairing: r(chern, 1),
            complex_dim: n,
            genus,
            num_marked: k,
            shifts: vec![BigRational::zero(); k as usize],
        };
        let dim = gw::virtual_dimension(&input).unwrap();
        assert_eq!(dim.d, r(want, 1), "{what}");
        assert_eq!(dim.two_d, r(2 * want, 1), "{what}");
    }

    // The degree condition agrees with the dimension formula identically.
    let mut rng = StdRng::seed_from_u64(12);
    for case in 0..1000 {
        let k: u32 = rng.gen_range(0..=5);
        let input = DimensionInput {
            chern_pairing: r(rng.gen_range(-20..=20), rng.gen_range(1..=9)),
            complex_dim: rng.gen_range(0..=6),
            genus: rng.gen_range(0..=4),
            num_marked: k,
            shifts: (0..k).map(|_| r(rng.gen_range(0..=6), rng.gen_range(1..=4))).collect(),
        };
        let dim = gw::virtual_dimension(&input).unwrap();
        let insertions: Vec<gw::Insertion> = (0..k)
            .map(|_| gw::Insertion {
                orbifold_degree: r(rng.gen_range(0..=8), rng.gen_range(1..=4)),
                descendant_power: rng.gen_range(0..=3),
            })
            .collect();
        let sel = SelectionInput { deg_k: rng.gen_range(-6..=6), insertions };
        let report = gw::selection_rule(&sel, &input).unwrap();

        let shift_sum: BigRational = input.shifts.iter().cloned().sum();
        assert_eq!(
            report.rhs,
            dim.two_d.clone() + r(2, 1) * shift_sum,
            "case {case}: rule degree differs from dimension identity"
        );
        let lhs: BigRational = r(sel.deg_k, 1)
            + sel
                .insertions
                .iter()
                .map(|i| i.orbifold_degree.clone() + r(2 * i64::from(i.descendant_power), 1))
                .sum::<BigRational>();
        assert_eq!(report.lhs, lhs, "case {case}");
        assert_eq!(report.holds, report.lhs == report.rhs, "case {case}");
    }
    println!("[PASS] criterion 6: 20 classical dimensions and 1000 degree-rule identities");
}

#[test]
fn criterion_7_degree_shifting_numbers() {
    let mut checked = 0u64;
    for (name, g) in samples::fixture_groups() {
        let rep = LinearRepData::from_permutation_action(&g)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        for x in 0..g.order() {
            let nonzero = rep.exponents(x).iter().filter(|(a, _)| *a != 0).count();
            let sum = rep.iota(x) + rep.iota(g.inv(x));
            assert_eq!(sum, r(nonzero as i64, 1), "{name} element {x}");
            checked += 1;
        }
    }

    // Documented values: the natural S3 action gives 0, 1/2, 1 by element
    // order; the diagonal Z3 action with weights (1, 2) gives 0, 1, 1.
    let s3 = samples::s3();
    let rep = LinearRepData::from_permutation_action(&s3).unwrap();
    for x in 0..s3.order() {
        let want = match s3.element_order(x) {
            1 => BigRational::zero(),
            2 => r(1, 2),
            3 => r(1, 1),
            o => panic!("unexpected order {o}"),
        };
        assert_eq!(rep.iota(x), want, "element {x}");
    }
    let z3 = samples::z3();
    let diag = LinearRepData::new(
        &z3,
        2,
        vec![vec![(0, 1), (0, 1)], vec![(1, 3), (2, 3)], vec![(2, 3), (1, 3)]],
    )
    .unwrap();
    let iotas: Vec<BigRational> = (0..3).map(|x| diag.iota(x)).collect();
    assert_eq!(iotas, vec![BigRational::zero(), r(1, 1), r(1, 1)]);
    println!("[PASS] criterion 7: shift pairing holds for {checked} elements, values 0, 1/2, 1");
}

include!("common/cases.rs");

#[test]
fn criterion_8_cli_outputs_are_deterministic() {
    let bin = env!("CARGO_BIN_EXE_orbitwist");
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let cases = golden_cases();
    assert!(cases.len() >= 30, "only {} commands", cases.len());

    let run = |case: &Case, extra: &[&str]| -> Vec<u8> {
        let out = Command::new(bin)
            .current_dir(&fixtures)
            .args(case.args)
            .args(extra)
            .output()
            .expect("spawn orbitwist");
        assert!(
            out.status.success(),
            "{}: {}",
            case.name,
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };
    for case in &cases {
        let first = run(case, &[]);
        assert_eq!(first, run(case, &[]), "{}: rerun differs", case.name);
        if case.threads_variant {
            assert_eq!(first, run(case, &["--threads", "1"]), "{}: threads 1", case.name);
            assert_eq!(first, run(case, &["--threads", "8"]), "{}: threads 8", case.name);
        }
    }
    println!("[PASS] criterion 8: {} commands byte-stable across reruns and thread counts", cases.len());
}
