// Golden command corpus, shared by the golden harness and the determinism
// criterion via include!. Paths are relative to tests/fixtures.

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    // command accepts --threads; reruns use 1 and 8 workers
    pub threads_variant: bool,
}

const fn plain(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, threads_variant: false }
}

const fn threaded(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, threads_variant: true }
}

pub fn golden_cases() -> Vec<Case> {
    vec![
        plain("group_s3_perms", &["group", "--group", "s3.json"]),
        plain("group_q8_table", &["group", "--group", "q8.json"]),
        plain("group_s4_tsv", &["group", "--group", "s4.json", "--out", "tsv"]),
        plain("group_z4_cycle", &["group", "--group", "z4.json"]),
        plain("group_v4", &["group", "--group", "v4.json"]),
        plain("curve_two_tori", &["curve", "--curve", "two_tori.json"]),
        plain("curve_chain_tsv", &["curve", "--curve", "chain.json", "--out", "tsv"]),
        plain("curve_selfnode", &["curve", "--curve", "selfnode.json"]),
        plain("curve_orb_sphere", &["curve", "--curve", "orb_sphere_237.json"]),
        plain("curve_reordered", &["curve", "--curve", "reordered_markings.json"]),
        plain("curve_elliptic_quot", &["curve", "--curve", "elliptic_quot.json"]),
        plain("bundle_canonical_m3", &["bundle", "--bundle", "canonical_m3.json", "--curve", "sphere_m3.json"]),
        plain("bundle_rank2_tsv", &["bundle", "--bundle", "rank2.json", "--curve", "sphere_m4.json", "--out", "tsv"]),
        plain("bundle_rep_s3", &["bundle", "--rep", "s3_natural.json", "--group", "s3.json"]),
        plain("bundle_rep_z3_diag", &["bundle", "--rep", "z3_diag.json", "--group", "z3.json"]),
        plain("bundle_rep_s3_tsv", &["bundle", "--rep", "s3_natural.json", "--group", "s3.json", "--out", "tsv"]),
        threaded("homs_count_s3_ttr", &["homs", "count", "--group", "s3.json", "--classes", "2,2,1"]),
        threaded("homs_count_s3_torus", &["homs", "count", "--group", "s3.json", "--genus", "1"]),
        threaded("homs_count_s4_g2", &["homs", "count", "--group", "s4.json", "--genus", "2", "--classes", "4"]),
        threaded("homs_count_exact_orders", &["homs", "count", "--group", "s3.json", "--exact-orders", "2,2,3"]),
        threaded("homs_count_chars", &["homs", "count", "--group", "s3.json", "--genus", "1", "--classes", "1", "--chars", "s3_chars.json"]),
        threaded("homs_count_q8_tsv", &["homs", "count", "--group", "q8.json", "--genus", "1", "--out", "tsv"]),
        plain("homs_enum_s3", &["homs", "enum", "--group", "s3.json", "--classes", "2,2,1"]),
        plain("homs_enum_conj", &["homs", "enum", "--group", "s3.json", "--classes", "2,2,1", "--up-to-conj"]),
        plain("homs_enum_empty", &["homs", "enum", "--group", "z3.json", "--classes", "1,1"]),
        plain("homs_enum_torus_tsv", &["homs", "enum", "--group", "z3.json", "--genus", "1", "--out", "tsv"]),
        plain("homs_enum_exact_orders", &["homs", "enum", "--group", "d4.json", "--exact-orders", "4,4,2", "--up-to-conj"]),
        plain("ring_table_s3", &["ring", "table", "--group", "s3.json"]),
        plain("ring_table_q8_tsv", &["ring", "table", "--group", "q8.json", "--out", "tsv"]),
        plain("ring_assoc_q8", &["ring", "assoc", "--group", "q8.json"]),
        plain("ring_assoc_s4", &["ring", "assoc", "--group", "s4.json"]),
        plain("ring_split_s3_torus", &["ring", "split", "--group", "s3.json", "--classes", "1"]),
        plain("ring_split_a4_g1", &["ring", "split", "--group", "a4.json", "--genus", "1", "--classes", "2"]),
        plain("ring_split_v4_tsv", &["ring", "split", "--group", "v4.json", "--genus", "1", "--out", "tsv"]),
        plain("dim_point_quotient", &["dim", "--chern", "0/1", "--n", "0", "--genus", "0", "--k", "3", "--shifts", "0,0,0"]),
        plain("dim_twisted", &["dim", "--chern", "0/1", "--n", "3", "--genus", "0", "--k", "3", "--shifts", "1,1,1"]),
        plain("dim_rational", &["dim", "--chern", "7/3", "--n", "5", "--genus", "1", "--k", "0"]),
        plain("select_true", &["select", "--degK", "0", "--insertions", "0+0,0+0,0+0", "--chern", "0/1", "--n", "0", "--genus", "0", "--k", "3"]),
        plain("select_false_tsv", &["select", "--degK", "0", "--insertions", "2+0,0+0,0+0", "--chern", "0/1", "--n", "0", "--genus", "0", "--k", "3", "--out", "tsv"]),
        plain("select_descendant", &["select", "--degK", "2", "--insertions", "1/2+1,3/2+0", "--chern", "0/1", "--n", "3", "--genus", "0", "--k", "2"]),
    ]
}
