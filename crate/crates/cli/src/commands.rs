//! One function per subcommand, each returning a [`Document`].

use num::BigRational;
use serde_json::{json, Value};

use orbitwist_core::curve::NodalOrbicurve;
use orbitwist_core::group::{ConjugacyClassTable, FiniteGroup};
use orbitwist_core::gw::{
    product_table, sectors_and_pairing, selection_rule, splitting_identities, virtual_dimension,
    DimensionInput, Insertion, SelectionInput,
};
use orbitwist_core::homcount::{
    count_homs_brute, count_homs_convolution, count_homs_frobenius, enumerate_characteristics,
    CharacteristicList, CountOptions, EnumOptions, HomcountError, PunctureConstraint,
    SurfaceGroupSpec,
};
use orbitwist_core::bundle::{chern_number, riemann_roch_index};
use orbitwist_core::ratio::parse_ratio;

use crate::error::CliError;
use crate::output::{ratio_string, ratio_value, Document, Table};
use crate::schema;

fn with_table(path: &str) -> Result<(FiniteGroup, ConjugacyClassTable), CliError> {
    let g = schema::load_group(path)?;
    let t = ConjugacyClassTable::new(&g);
    Ok((g, t))
}

/// Parses one rational flag value, recording a warning when the input was
/// accepted but not in canonical form.
pub fn rational_flag(
    name: &str,
    raw: &str,
    warnings: &mut Vec<String>,
) -> Result<BigRational, CliError> {
    let parsed = parse_ratio(raw)
        .map_err(|m| CliError::flag(format!("--{name}: {m}")))?;
    if parsed.canonicalized {
        warnings.push(format!(
            "rational {raw:?} canonicalized to \"{}\"",
            ratio_string(&parsed.value)
        ));
    }
    Ok(parsed.value)
}

pub fn cmd_group(path: &str) -> Result<Document, CliError> {
    let (g, t) = with_table(path)?;
    let (sectors, _) = sectors_and_pairing(&t);
    let classes: Vec<Value> = sectors
        .iter()
        .map(|s| {
            json!({
                "index": s.class,
                "size": s.size,
                "rep": t.rep(s.class),
                "elements": t.class(s.class),
                "centralizer": s.centralizer_order,
                "inverse": s.inverse,
                "element_order": s.element_order,
            })
        })
        .collect();
    let json = json!({ "order": g.order(), "classes": classes });
    let mut table = Table::new(vec!["class", "size", "rep", "centralizer", "inverse", "element_order"]);
    for s in &sectors {
        table.row(vec![
            s.class.to_string(),
            s.size.to_string(),
            t.rep(s.class).to_string(),
            s.centralizer_order.to_string(),
            s.inverse.to_string(),
            s.element_order.to_string(),
        ]);
    }
    Ok(Document { json, table })
}

pub fn cmd_curve(path: &str) -> Result<Document, CliError> {
    let curve: NodalOrbicurve = schema::load_curve(path)?;
    let genus = curve.arithmetic_genus().map_err(CliError::from_curve)?;
    let stability = curve.check_stability(&[]);
    let components: Vec<Value> = curve
        .components()
        .iter()
        .map(|c| {
            json!({
                "genus": c.genus(),
                "slots": c.multiplicities(),
                "canonical_degree": ratio_string(&c.canonical_degree()),
            })
        })
        .collect();
    let markings: Vec<Value> = curve
        .markings()
        .iter()
        .map(|s| json!([s.component, s.slot]))
        .collect();
    let json = json!({
        "arithmetic_genus": genus,
        "components": components,
        "num_nodes": curve.nodes().len(),
        "markings": markings,
        "stable_as_curve": stability.stable_as_curve,
        "offending": stability.offending,
    });
    let offending: Vec<String> = stability.offending.iter().map(|c| c.to_string()).collect();
    let table = Table::keyed(vec![
        ("arithmetic_genus", genus.to_string()),
        ("num_components", curve.components().len().to_string()),
        ("num_nodes", curve.nodes().len().to_string()),
        ("num_markings", curve.markings().len().to_string()),
        ("stable_as_curve", stability.stable_as_curve.to_string()),
        ("offending", offending.join(",")),
    ]);
    Ok(Document { json, table })
}

pub fn cmd_bundle(
    bundle_path: Option<&str>,
    curve_path: Option<&str>,
    rep_path: Option<&str>,
    group_path: Option<&str>,
    warnings: &mut Vec<String>,
) -> Result<Document, CliError> {
    match (bundle_path, curve_path, rep_path, group_path) {
        (Some(bp), Some(cp), None, None) => {
            let bundle = schema::load_bundle(bp)?;
            let glued = schema::load_curve(cp)?;
            if glued.components().len() != 1 || !glued.nodes().is_empty() {
                return Err(CliError::domain(
                    "mismatch",
                    "bundle pairing needs a one-component curve without nodes",
                ));
            }
            let curve = glued.components()[0].clone();
            let chern = chern_number(&bundle, &curve).map_err(CliError::from_bundle_domain)?;
            let index = riemann_roch_index(&bundle, &curve).map_err(CliError::from_bundle_domain)?;
            let json = json!({
                "rank": bundle.rank(),
                "chern_number": ratio_string(&chern),
                "riemann_roch_index": index,
            });
            let table = Table::keyed(vec![
                ("rank", bundle.rank().to_string()),
                ("chern_number", ratio_string(&chern)),
                ("riemann_roch_index", index.to_string()),
            ]);
            Ok(Document { json, table })
        }
        (None, None, Some(rp), Some(gp)) => {
            let (g, t) = with_table(gp)?;
            let rep = schema::load_rep(rp, &g, warnings)?;
            let iota: Vec<Value> = (0..g.order())
                .map(|x| {
                    json!({
                        "element": x,
                        "class": t.class_of(x),
                        "order": g.element_order(x),
                        "iota": ratio_string(&rep.iota(x)),
                    })
                })
                .collect();
            let json = json!({ "rank": rep.rank(), "iota": iota });
            let mut table = Table::new(vec!["element", "class", "order", "iota"]);
            for x in 0..g.order() {
                table.row(vec![
                    x.to_string(),
                    t.class_of(x).to_string(),
                    g.element_order(x).to_string(),
                    ratio_string(&rep.iota(x)),
                ]);
            }
            Ok(Document { json, table })
        }
        _ => Err(CliError::flag(
            "bundle needs either --bundle with --curve, or --rep with --group",
        )),
    }
}

fn puncture_constraints(
    table: &ConjugacyClassTable,
    classes: &[usize],
    exact_orders: &[u64],
) -> Result<Vec<PunctureConstraint>, CliError> {
    if !classes.is_empty() && !exact_orders.is_empty() {
        return Err(CliError::domain(
            "input",
            "give --classes or --exact-orders, not both",
        ));
    }
    for &k in classes {
        if k >= table.num_classes() {
            return Err(CliError::domain(
                "classes",
                format!("class index {k} out of range (table has {})", table.num_classes()),
            ));
        }
    }
    Ok(if classes.is_empty() {
        exact_orders.iter().map(|&m| PunctureConstraint::ExactOrder(m)).collect()
    } else {
        classes.iter().map(|&k| PunctureConstraint::Class(k)).collect()
    })
}

pub fn cmd_homs_count(
    group_path: &str,
    genus: u32,
    classes: &[usize],
    exact_orders: &[u64],
    chars_path: Option<&str>,
    threads: usize,
) -> Result<Document, CliError> {
    let (g, t) = with_table(group_path)?;
    let punctures = puncture_constraints(&t, classes, exact_orders)?;
    let spec = SurfaceGroupSpec { genus, punctures };
    let count = count_homs_convolution(&g, &t, &spec).map_err(CliError::from_homcount)?;

    // The brute walk re-derives the count whenever it fits the step budget.
    let opts = CountOptions { threads, ..CountOptions::default() };
    let oracle_checked = match count_homs_brute(&g, &t, &spec, &opts) {
        Ok(b) => {
            assert_eq!(b, count, "brute walk disagrees with the convolution count");
            true
        }
        Err(HomcountError::BudgetExceeded { .. }) => false,
        Err(e) => return Err(CliError::from_homcount(e)),
    };

    let mut pairs = vec![
        ("count", count.to_string()),
        ("method", "convolution".to_string()),
        ("oracle_checked", oracle_checked.to_string()),
    ];
    let mut json = json!({
        "count": count,
        "method": "convolution",
        "oracle_checked": oracle_checked,
    });
    if let Some(cp) = chars_path {
        let chars = schema::load_chars(cp, &g, &t)?;
        let f = count_homs_frobenius(&g, &t, &spec, &chars).map_err(CliError::from_homcount)?;
        assert_eq!(f, count, "character sum disagrees with the convolution count");
        json["frobenius_checked"] = Value::Bool(true);
        pairs.push(("frobenius_checked", "true".to_string()));
    }
    Ok(Document { json, table: Table::keyed(pairs) })
}

pub fn cmd_homs_enum(
    group_path: &str,
    genus: u32,
    classes: &[usize],
    exact_orders: &[u64],
    up_to_conj: bool,
) -> Result<Document, CliError> {
    let (g, t) = with_table(group_path)?;
    let punctures = puncture_constraints(&t, classes, exact_orders)?;
    let spec = SurfaceGroupSpec { genus, punctures };
    let opts = EnumOptions { up_to_conjugacy: up_to_conj, ..EnumOptions::default() };
    let set = enumerate_characteristics(&g, &t, &spec, &opts).map_err(CliError::from_homcount)?;

    let join = |xs: &[u32]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    match set.list {
        CharacteristicList::All(items) => {
            let list: Vec<Value> = items
                .iter()
                .map(|c| json!({ "handles": c.handles, "punctures": c.punctures }))
                .collect();
            let json = json!({ "count": set.total, "characteristics": list });
            let mut table = Table::new(vec!["handles", "punctures"]);
            for c in &items {
                table.row(vec![join(&c.handles), join(&c.punctures)]);
            }
            Ok(Document { json, table })
        }
        CharacteristicList::Orbits(orbits) => {
            let list: Vec<Value> = orbits
                .iter()
                .map(|o| {
                    json!({
                        "rep": { "handles": o.rep.handles, "punctures": o.rep.punctures },
                        "size": o.size,
                    })
                })
                .collect();
            let json = json!({ "count": set.total, "orbits": list });
            let mut table = Table::new(vec!["handles", "punctures", "size"]);
            for o in &orbits {
                table.row(vec![join(&o.rep.handles), join(&o.rep.punctures), o.size.to_string()]);
            }
            Ok(Document { json, table })
        }
    }
}

pub fn cmd_ring_table(group_path: &str) -> Result<Document, CliError> {
    let (g, t) = with_table(group_path)?;
    let pt = product_table(&g, &t).map_err(CliError::from_gw)?;
    let c = pt.num_classes();
    let tensor: Vec<Vec<Vec<u64>>> = (0..c)
        .map(|i| (0..c).map(|j| (0..c).map(|k| pt.coefficient(i, j, k)).collect()).collect())
        .collect();
    let json = json!({ "num_classes": c, "coefficients": tensor });
    let mut table = Table::new(vec!["i", "j", "k", "coefficient"]);
    for i in 0..c {
        for j in 0..c {
            for k in 0..c {
                table.row(vec![
                    i.to_string(),
                    j.to_string(),
                    k.to_string(),
                    pt.coefficient(i, j, k).to_string(),
                ]);
            }
        }
    }
    Ok(Document { json, table })
}

pub fn cmd_ring_assoc(group_path: &str) -> Result<Document, CliError> {
    let (g, t) = with_table(group_path)?;
    let pt = product_table(&g, &t).map_err(CliError::from_gw)?;
    match pt.check_associativity() {
        None => Ok(Document {
            json: json!({ "associative": true }),
            table: Table::keyed(vec![("associative", "true".to_string())]),
        }),
        Some(cx) => {
            let json = json!({
                "associative": false,
                "counterexample": {
                    "i": cx.i, "j": cx.j, "k": cx.k, "l": cx.l,
                    "lhs": cx.lhs.to_string(),
                    "rhs": cx.rhs.to_string(),
                },
            });
            let table = Table::keyed(vec![
                ("associative", "false".to_string()),
                ("counterexample", format!("({},{},{},{})", cx.i, cx.j, cx.k, cx.l)),
            ]);
            Ok(Document { json, table })
        }
    }
}

pub fn cmd_ring_split(
    group_path: &str,
    genus: u32,
    classes: &[usize],
) -> Result<Document, CliError> {
    let (g, t) = with_table(group_path)?;
    let report = splitting_identities(&g, &t, genus, classes).map_err(CliError::from_gw)?;
    let separating: Vec<Value> = report
        .separating
        .iter()
        .map(|c| {
            json!({
                "genus_first": c.genus_first,
                "punctures_first": c.punctures_first,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "holds": c.holds,
            })
        })
        .collect();
    let json = json!({
        "genus": genus,
        "classes": classes,
        "separating": separating,
        "nonseparating": {
            "lhs": report.nonseparating.lhs,
            "rhs": report.nonseparating.rhs,
            "holds": report.nonseparating.holds,
        },
        "all_hold": report.all_hold,
    });
    let mut table = Table::new(vec!["kind", "genus_first", "punctures_first", "lhs", "rhs", "holds"]);
    for c in &report.separating {
        table.row(vec![
            "separating".to_string(),
            c.genus_first.to_string(),
            c.punctures_first.to_string(),
            c.lhs.to_string(),
            c.rhs.to_string(),
            c.holds.to_string(),
        ]);
    }
    table.row(vec![
        "nonseparating".to_string(),
        String::new(),
        String::new(),
        report.nonseparating.lhs.to_string(),
        report.nonseparating.rhs.to_string(),
        report.nonseparating.holds.to_string(),
    ]);
    Ok(Document { json, table })
}

/// Shared by `dim` and `select`: builds the dimension input from flags.
pub fn dimension_input(
    chern: &str,
    n: u32,
    genus: u32,
    k: u32,
    shifts: &[String],
    warnings: &mut Vec<String>,
) -> Result<DimensionInput, CliError> {
    let chern_pairing = rational_flag("chern", chern, warnings)?;
    let shifts = if shifts.is_empty() {
        vec![BigRational::from_integer(0.into()); k as usize]
    } else {
        shifts
            .iter()
            .map(|s| rational_flag("shifts", s, warnings))
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(DimensionInput { chern_pairing, complex_dim: n, genus, num_marked: k, shifts })
}

pub fn cmd_dim(input: &DimensionInput) -> Result<Document, CliError> {
    let v = virtual_dimension(input).map_err(CliError::from_gw)?;
    let json = json!({ "d": ratio_value(&v.d), "two_d": ratio_value(&v.two_d) });
    let table = Table::keyed(vec![
        ("d", ratio_string(&v.d)),
        ("two_d", ratio_string(&v.two_d)),
    ]);
    Ok(Document { json, table })
}

/// Insertion spec format: comma-separated "degree+power" items, degree a
/// rational, e.g. "0/1+0,2/1+1". Empty string means no insertions.
pub fn parse_insertions(
    raw: &str,
    warnings: &mut Vec<String>,
) -> Result<Vec<Insertion>, CliError> {
    let raw = raw.trim();
    if raw.is_empty() {
        return Ok(vec![]);
    }
    raw.split(',')
        .map(|item| {
            let (deg, power) = item.rsplit_once('+').ok_or_else(|| {
                CliError::flag(format!("--insertions item {item:?} is not \"degree+power\""))
            })?;
            let orbifold_degree = rational_flag("insertions", deg, warnings)?;
            let descendant_power = power.trim().parse::<u32>().map_err(|e| {
                CliError::flag(format!("--insertions item {item:?}: bad power: {e}"))
            })?;
            Ok(Insertion { orbifold_degree, descendant_power })
        })
        .collect()
}

pub fn cmd_select(
    deg_k: i64,
    insertions: Vec<Insertion>,
    dim: &DimensionInput,
) -> Result<Document, CliError> {
    let sel = SelectionInput { deg_k, insertions };
    let report = selection_rule(&sel, dim).map_err(CliError::from_gw)?;
    let json = json!({
        "lhs": ratio_value(&report.lhs),
        "rhs": ratio_value(&report.rhs),
        "holds": report.holds,
    });
    let table = Table::keyed(vec![
        ("lhs", ratio_string(&report.lhs)),
        ("rhs", ratio_string(&report.rhs)),
        ("holds", report.holds.to_string()),
    ]);
    Ok(Document { json, table })
}
