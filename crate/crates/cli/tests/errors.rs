//! Failure-path contract: every malformed input maps to a stable error code
//! on stderr (JSON with "code" and "error" fields) and a documented exit
//! status. 2 = unreadable or invalid file/flag, 3 = inputs that parse but
//! violate a domain rule, 4 = a safety cap.

use std::path::Path;
use std::process::Command;

struct ErrCase {
    name: &'static str,
    args: &'static [&'static str],
    exit: i32,
    code: &'static str,
}

const CASES: &[ErrCase] = &[
    ErrCase {
        name: "missing_file",
        args: &["group", "--group", "no_such_file.json"],
        exit: 2,
        code: "parse/io",
    },
    ErrCase {
        name: "bad_json",
        args: &["group", "--group", "bad_json.json"],
        exit: 2,
        code: "parse/json",
    },
    ErrCase {
        name: "table_entry_out_of_range",
        args: &["group", "--group", "bad_table_entry.json"],
        exit: 2,
        code: "schema/group",
    },
    ErrCase {
        name: "table_not_a_group",
        args: &["group", "--group", "not_group.json"],
        exit: 2,
        code: "schema/group",
    },
    ErrCase {
        name: "cycle_point_out_of_range",
        args: &["group", "--group", "bad_cycle.json"],
        exit: 2,
        code: "schema/group",
    },
    ErrCase {
        name: "both_group_modes",
        args: &["group", "--group", "bad_group_keys.json"],
        exit: 2,
        code: "schema/group",
    },
    ErrCase {
        name: "closure_order_cap",
        args: &["group", "--group", "big_perm.json"],
        exit: 4,
        code: "budget/order-cap",
    },
    ErrCase {
        name: "zero_multiplicity",
        args: &["curve", "--curve", "bad_curve_mult.json"],
        exit: 2,
        code: "schema/curve",
    },
    ErrCase {
        name: "node_multiplicity_mismatch",
        args: &["curve", "--curve", "bad_node_mult.json"],
        exit: 2,
        code: "schema/curve",
    },
    ErrCase {
        name: "slot_used_twice",
        args: &["curve", "--curve", "bad_slot.json"],
        exit: 2,
        code: "schema/curve",
    },
    ErrCase {
        name: "disconnected_curve",
        args: &["curve", "--curve", "disconnected.json"],
        exit: 2,
        code: "schema/curve",
    },
    ErrCase {
        name: "exponent_at_least_multiplicity",
        args: &["bundle", "--bundle", "bad_bundle.json", "--curve", "sphere_m3.json"],
        exit: 2,
        code: "schema/bundle",
    },
    ErrCase {
        name: "bundle_points_mismatch_curve",
        args: &["bundle", "--bundle", "canonical_m3.json", "--curve", "sphere_3pts.json"],
        exit: 3,
        code: "domain/mismatch",
    },
    ErrCase {
        name: "bundle_without_curve",
        args: &["bundle", "--bundle", "canonical_m3.json"],
        exit: 2,
        code: "parse/flag",
    },
    ErrCase {
        name: "rep_not_complementary",
        args: &["bundle", "--rep", "bad_rep_pairing.json", "--group", "z3.json"],
        exit: 3,
        code: "domain/rep",
    },
    ErrCase {
        name: "rep_order_not_dividing",
        args: &["bundle", "--rep", "bad_rep_order.json", "--group", "z3.json"],
        exit: 3,
        code: "domain/rep",
    },
    ErrCase {
        name: "rep_needs_permutation_action",
        args: &["bundle", "--rep", "s3_natural.json", "--group", "z3.json"],
        exit: 3,
        code: "domain/rep",
    },
    ErrCase {
        name: "chars_row_norm_off",
        args: &["homs", "count", "--group", "s3.json", "--chars", "bad_chars_sum.json"],
        exit: 2,
        code: "schema/chars",
    },
    ErrCase {
        name: "chars_with_exact_orders",
        args: &[
            "homs", "count", "--group", "s3.json", "--exact-orders", "2", "--chars",
            "s3_chars.json",
        ],
        exit: 3,
        code: "domain/constraint",
    },
    ErrCase {
        name: "class_index_out_of_range",
        args: &["homs", "count", "--group", "s3.json", "--classes", "9"],
        exit: 3,
        code: "domain/classes",
    },
    ErrCase {
        name: "classes_and_exact_orders",
        args: &[
            "homs", "count", "--group", "s3.json", "--classes", "1", "--exact-orders", "2",
        ],
        exit: 3,
        code: "domain/input",
    },
    ErrCase {
        name: "enumeration_cap",
        args: &["homs", "enum", "--group", "s4.json", "--genus", "3"],
        exit: 4,
        code: "budget/enumeration",
    },
    ErrCase {
        name: "split_class_out_of_range",
        args: &["ring", "split", "--group", "z3.json", "--classes", "7"],
        exit: 3,
        code: "domain/classes",
    },
    ErrCase {
        name: "zero_denominator",
        args: &["dim", "--chern", "1/0", "--n", "0", "--k", "0"],
        exit: 2,
        code: "parse/flag",
    },
    ErrCase {
        name: "insertion_without_plus",
        args: &[
            "select", "--degK", "0", "--insertions", "2-1", "--chern", "0/1", "--n", "0",
            "--k", "1",
        ],
        exit: 2,
        code: "parse/flag",
    },
    ErrCase {
        name: "insertion_negative_power",
        args: &[
            "select", "--degK", "0", "--insertions", "2+-1", "--chern", "0/1", "--n", "0",
            "--k", "1",
        ],
        exit: 2,
        code: "parse/flag",
    },
    ErrCase {
        name: "insertion_arity",
        args: &[
            "select", "--degK", "0", "--insertions", "0/1+0", "--chern", "0/1", "--n", "0",
            "--k", "3",
        ],
        exit: 3,
        code: "domain/arity",
    },
    ErrCase {
        name: "shift_arity",
        args: &["dim", "--chern", "0/1", "--n", "0", "--k", "2", "--shifts", "0"],
        exit: 3,
        code: "domain/arity",
    },
    ErrCase {
        name: "negative_shift",
        args: &["dim", "--chern", "0/1", "--n", "0", "--k", "1", "--shifts=-1/2"],
        exit: 3,
        code: "domain/input",
    },
    ErrCase {
        name: "unknown_flag",
        args: &["group", "--group", "s3.json", "--bogus"],
        exit: 2,
        code: "parse/flag",
    },
    ErrCase {
        name: "zero_threads",
        args: &["homs", "count", "--group", "s3.json", "--threads", "0"],
        exit: 2,
        code: "parse/flag",
    },
];

#[test]
fn error_codes_and_exits_are_stable() {
    let bin = env!("CARGO_BIN_EXE_orbitwist");
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");

    for case in CASES {
        let out = Command::new(bin)
            .current_dir(&fixtures)
            .args(case.args)
            .output()
            .expect("spawn orbitwist");
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert_eq!(
            out.status.code(),
            Some(case.exit),
            "{}: wrong exit, stderr: {}",
            case.name,
            stderr
        );
        assert!(
            out.stdout.is_empty(),
            "{}: error paths must not write stdout",
            case.name
        );
        let line = stderr.lines().last().unwrap_or_else(|| {
            panic!("{}: empty stderr", case.name);
        });
        let doc: serde_json::Value = serde_json::from_str(line)
            .unwrap_or_else(|e| panic!("{}: stderr not JSON ({}): {}", case.name, e, line));
        assert_eq!(
            doc["code"].as_str(),
            Some(case.code),
            "{}: wrong code in {}",
            case.name,
            line
        );
        assert!(
            doc["error"].as_str().is_some_and(|m| !m.is_empty()),
            "{}: missing error message in {}",
            case.name,
            line
        );
    }
}

#[test]
fn help_and_version_exit_zero() {
    let bin = env!("CARGO_BIN_EXE_orbitwist");
    for flag in ["--help", "--version"] {
        let out = Command::new(bin).arg(flag).output().expect("spawn orbitwist");
        assert_eq!(out.status.code(), Some(0), "{} should exit 0", flag);
        assert!(!out.stdout.is_empty(), "{} should print to stdout", flag);
    }
}
