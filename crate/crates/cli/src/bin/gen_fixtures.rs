//! Writes the JSON fixture corpus used by the CLI test suites into
//! tests/fixtures. Deterministic: every byte of every file is fixed by this
//! source. Rerunning overwrites in place.

use std::fs;
use std::path::PathBuf;

use serde_json::json;

use orbitwist_core::group::{ConjugacyClassTable, FiniteGroup};
use orbitwist_core::samples;

fn table_json(g: &FiniteGroup) -> serde_json::Value {
    let n = g.order();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.mul(a, b)).collect()).collect();
    json!({ "order": n, "table": table })
}

fn perm_json(degree: usize, generators: Vec<Vec<Vec<usize>>>) -> serde_json::Value {
    json!({ "degree": degree, "perm_generators": generators })
}

/// Character rows in class-table order, entries as exact [re, im] pairs.
fn chars_json(g: &FiniteGroup, rows: Vec<Vec<[i64; 2]>>) -> serde_json::Value {
    let t = ConjugacyClassTable::new(g);
    let reps: Vec<usize> = (0..t.num_classes()).map(|k| t.rep(k)).collect();
    json!({ "classes": reps, "chars": rows })
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    fs::create_dir_all(&dir).expect("fixture directory");
    let write = |name: &str, content: String| {
        fs::write(dir.join(name), content).expect(name);
    };
    let write_json = |name: &str, value: serde_json::Value| {
        fs::write(dir.join(name), format!("{value}\n")).expect(name);
    };

    // Groups. Table files and cycle files share the element numbering with
    // the sample catalog: tables are dumped from it, and the cycle files
    // repeat the catalog's generators, so class indices line up everywhere.
    write_json("z2.json", table_json(&samples::z2()));
    write_json("z3.json", table_json(&samples::z3()));
    write_json("z4.json", perm_json(4, vec![vec![vec![1, 2, 3, 4]]]));
    write_json("v4.json", table_json(&samples::v4()));
    write_json("s3.json", perm_json(3, vec![vec![vec![1, 2]], vec![vec![1, 2, 3]]]));
    write_json("d4.json", perm_json(4, vec![vec![vec![1, 2, 3, 4]], vec![vec![1, 3]]]));
    write_json("q8.json", table_json(&samples::q8()));
    write_json("a4.json", perm_json(4, vec![vec![vec![1, 2, 3]], vec![vec![2, 3, 4]]]));
    write_json("s4.json", perm_json(4, vec![vec![vec![1, 2]], vec![vec![1, 2, 3, 4]]]));

    // Character tables with exact integer entries. Row order is arbitrary
    // but fixed; column order is class-table order.
    write_json(
        "s3_chars.json",
        chars_json(
            &samples::s3(),
            vec![
                vec![[1, 0], [1, 0], [1, 0]],
                vec![[1, 0], [1, 0], [-1, 0]],
                vec![[2, 0], [-1, 0], [0, 0]],
            ],
        ),
    );
    // Classes of the cyclic group are powers of the generator, so the rows
    // are i^(jk).
    write_json(
        "z4_chars.json",
        chars_json(
            &samples::z4(),
            vec![
                vec![[1, 0], [1, 0], [1, 0], [1, 0]],
                vec![[1, 0], [0, 1], [-1, 0], [0, -1]],
                vec![[1, 0], [-1, 0], [1, 0], [-1, 0]],
                vec![[1, 0], [0, -1], [-1, 0], [0, 1]],
            ],
        ),
    );
    // Class order: e, double transpositions, transpositions, 4-cycles,
    // 3-cycles.
    write_json(
        "s4_chars.json",
        chars_json(
            &samples::s4(),
            vec![
                vec![[1, 0], [1, 0], [1, 0], [1, 0], [1, 0]],
                vec![[1, 0], [1, 0], [-1, 0], [-1, 0], [1, 0]],
                vec![[2, 0], [2, 0], [0, 0], [0, 0], [-1, 0]],
                vec![[3, 0], [-1, 0], [1, 0], [-1, 0], [0, 0]],
                vec![[3, 0], [-1, 0], [-1, 0], [1, 0], [0, 0]],
            ],
        ),
    );

    // Curves.
    write_json("sphere_3pts.json", json!({ "components": [{ "genus": 0, "markings": [1, 1, 1] }] }));
    write_json("sphere_m3.json", json!({ "components": [{ "genus": 0, "markings": [3] }] }));
    write_json("sphere_m4.json", json!({ "components": [{ "genus": 0, "markings": [4] }] }));
    write_json("orb_sphere_237.json", json!({ "components": [{ "genus": 0, "markings": [2, 3, 7] }] }));
    write_json("elliptic_quot.json", json!({ "components": [{ "genus": 0, "markings": [2, 2, 2, 2] }] }));
    write_json(
        "two_tori.json",
        json!({
            "components": [
                { "genus": 1, "markings": [2, 2] },
                { "genus": 1, "markings": [2, 2] }
            ],
            "nodes": [
                { "a": [0, 0], "b": [1, 0], "mult": 2 },
                { "a": [0, 1], "b": [1, 1], "mult": 2 }
            ]
        }),
    );
    write_json(
        "chain.json",
        json!({
            "components": [
                { "genus": 0, "markings": [3, 1] },
                { "genus": 0, "markings": [1, 1] },
                { "genus": 0, "markings": [1, 3] }
            ],
            "nodes": [
                { "a": [0, 1], "b": [1, 0], "mult": 1 },
                { "a": [1, 1], "b": [2, 0], "mult": 1 }
            ]
        }),
    );
    write_json(
        "selfnode.json",
        json!({
            "components": [{ "genus": 0, "markings": [1, 1, 7] }],
            "nodes": [{ "a": [0, 0], "b": [0, 1], "mult": 1 }]
        }),
    );
    write_json(
        "reordered_markings.json",
        json!({
            "components": [{ "genus": 0, "markings": [2, 3, 5] }],
            "markings": [[0, 2], [0, 0], [0, 1]]
        }),
    );

    // Bundles.
    write_json(
        "canonical_m3.json",
        json!({ "rank": 1, "desing_degree": -2, "points": [{ "mult": 3, "exponents": [2] }] }),
    );
    write_json(
        "rank2.json",
        json!({ "rank": 2, "desing_degree": -1, "points": [{ "mult": 4, "exponents": [1, 2] }] }),
    );

    // Reps.
    write_json("s3_natural.json", json!({ "from_permutation_action": true }));
    write_json(
        "z3_diag.json",
        json!({
            "elements": [
                { "index": 0, "order": 1, "exponents": ["0/1", "0/1"] },
                { "index": 1, "order": 3, "exponents": ["1/3", "2/3"] },
                { "index": 2, "order": 3, "exponents": ["2/3", "1/3"] }
            ]
        }),
    );

    // Malformed inputs for the error corpus.
    write("bad_json.json", "{".to_string());
    write_json(
        "bad_table_entry.json",
        json!({
            "order": 6,
            "table": [
                [0, 1, 2, 3, 4, 5],
                [1, 2, 0, 5, 3, 4],
                [2, 0, 1, 4, 5, 3],
                [3, 4, 5, 0, 1, 2],
                [4, 5, 3, 2, 0, 1],
                [5, 3, 4, 1, 2, 7]
            ]
        }),
    );
    write_json(
        "not_group.json",
        json!({ "order": 3, "table": [[0, 2, 1], [1, 0, 2], [2, 1, 0]] }),
    );
    write_json("bad_cycle.json", perm_json(3, vec![vec![vec![1, 2, 4]]]));
    write_json(
        "bad_group_keys.json",
        json!({ "table": [[0]], "degree": 1, "perm_generators": [] }),
    );
    write_json(
        "big_perm.json",
        perm_json(12, vec![vec![vec![1, 2]], vec![(1..=12).collect::<Vec<usize>>()]]),
    );
    write_json(
        "bad_curve_mult.json",
        json!({ "components": [{ "genus": 0, "markings": [0, 2] }] }),
    );
    write_json(
        "bad_node_mult.json",
        json!({
            "components": [
                { "genus": 0, "markings": [2] },
                { "genus": 0, "markings": [3] }
            ],
            "nodes": [{ "a": [0, 0], "b": [1, 0], "mult": 2 }]
        }),
    );
    write_json(
        "bad_slot.json",
        json!({
            "components": [
                { "genus": 0, "markings": [1, 1] },
                { "genus": 0, "markings": [1, 1] }
            ],
            "nodes": [
                { "a": [0, 0], "b": [1, 0], "mult": 1 },
                { "a": [0, 0], "b": [1, 1], "mult": 1 }
            ]
        }),
    );
    write_json(
        "disconnected.json",
        json!({
            "components": [
                { "genus": 1, "markings": [] },
                { "genus": 2, "markings": [] }
            ]
        }),
    );
    write_json(
        "bad_bundle.json",
        json!({ "rank": 1, "desing_degree": 0, "points": [{ "mult": 3, "exponents": [3] }] }),
    );
    write_json(
        "bad_rep_pairing.json",
        json!({
            "elements": [
                { "index": 0, "order": 1, "exponents": ["0/1"] },
                { "index": 1, "order": 3, "exponents": ["1/3"] },
                { "index": 2, "order": 3, "exponents": ["1/3"] }
            ]
        }),
    );
    write_json(
        "bad_rep_order.json",
        json!({
            "elements": [
                { "index": 0, "order": 1, "exponents": ["0/1"] },
                { "index": 1, "order": 2, "exponents": ["1/3"] },
                { "index": 2, "order": 3, "exponents": ["2/3"] }
            ]
        }),
    );
    // Degree sum squares to 5, not |S3| = 6.
    write_json(
        "bad_chars_sum.json",
        chars_json(
            &samples::s3(),
            vec![
                vec![[1, 0], [1, 0], [1, 0]],
                vec![[2, 0], [-1, 0], [0, 0]],
            ],
        ),
    );

    println!("fixtures written to {}", dir.display());
}
