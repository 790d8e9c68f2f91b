//! Input file schemas and their validated loaders. Every loader returns
//! either a fully constructed core value or a [`CliError`] carrying the
//! stable code and exit status for its failure class.

use std::fs;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use orbitwist_core::bundle::{BundlePoint, LinearRepData, OrbiBundleData};
use orbitwist_core::curve::{BranchSlot, MarkedOrbicurve, Node, NodalOrbicurve};
use orbitwist_core::group::{perm_from_cycles, ConjugacyClassTable, FiniteGroup, DEFAULT_ORDER_CAP};
use orbitwist_core::homcount::CharacterTable;
use orbitwist_core::ratio::parse_ratio;

use crate::error::CliError;

fn read_json<T: DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::json(path, e))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    #[serde(default)]
    order: Option<usize>,
    #[serde(default)]
    table: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    degree: Option<usize>,
    #[serde(default)]
    perm_generators: Option<Vec<Vec<Vec<usize>>>>,
}

/// Either a full multiplication table or permutation generators in 1-based
/// cycle notation.
pub fn load_group(path: &str) -> Result<FiniteGroup, CliError> {
    let file: GroupFile = read_json(path)?;
    match (file.table, file.perm_generators) {
        (Some(table), None) => {
            if file.degree.is_some() {
                return Err(CliError::schema("group", "\"degree\" only applies to perm_generators"));
            }
            if let Some(order) = file.order {
                if order != table.len() {
                    return Err(CliError::schema(
                        "group",
                        format!("\"order\" says {order} but the table has {} rows", table.len()),
                    ));
                }
            }
            FiniteGroup::from_table(table).map_err(CliError::from_group)
        }
        (None, Some(gens)) => {
            if file.order.is_some() {
                return Err(CliError::schema("group", "\"order\" only applies to table input"));
            }
            let degree = file.degree.ok_or_else(|| {
                CliError::schema("group", "perm_generators input needs \"degree\"")
            })?;
            let images = gens
                .iter()
                .map(|cycles| perm_from_cycles(degree, cycles))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::from_group)?;
            FiniteGroup::from_permutations(degree, images, DEFAULT_ORDER_CAP)
                .map_err(CliError::from_group)
        }
        (Some(_), Some(_)) => Err(CliError::schema(
            "group",
            "give either \"table\" or \"perm_generators\", not both",
        )),
        (None, None) => Err(CliError::schema(
            "group",
            "expected a \"table\" or \"perm_generators\" key",
        )),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveComponentSpec {
    genus: u32,
    /// Special-point multiplicities; slot i is the i-th entry.
    #[serde(default)]
    markings: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeSpec {
    a: [usize; 2],
    b: [usize; 2],
    mult: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    components: Vec<CurveComponentSpec>,
    #[serde(default)]
    nodes: Vec<NodeSpec>,
    /// Optional global marked-point order as (component, slot) pairs;
    /// defaults to the slots left over after gluing, in lexicographic order.
    #[serde(default)]
    markings: Option<Vec<[usize; 2]>>,
}

fn slot(pair: [usize; 2]) -> BranchSlot {
    BranchSlot { component: pair[0], slot: pair[1] }
}

pub fn load_curve(path: &str) -> Result<NodalOrbicurve, CliError> {
    let file: CurveFile = read_json(path)?;
    let components = file
        .components
        .into_iter()
        .map(|c| MarkedOrbicurve::new(c.genus, c.markings))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::from_curve)?;
    let nodes = file
        .nodes
        .into_iter()
        .map(|n| Node { a: slot(n.a), b: slot(n.b), multiplicity: n.mult })
        .collect();
    let markings = file
        .markings
        .map(|list| list.into_iter().map(slot).collect());
    NodalOrbicurve::new(components, nodes, markings).map_err(CliError::from_curve)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BundlePointSpec {
    mult: u64,
    exponents: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleFile {
    rank: u32,
    desing_degree: i64,
    #[serde(default)]
    points: Vec<BundlePointSpec>,
}

pub fn load_bundle(path: &str) -> Result<OrbiBundleData, CliError> {
    let file: BundleFile = read_json(path)?;
    let points = file
        .points
        .into_iter()
        .map(|p| BundlePoint { multiplicity: p.mult, exponents: p.exponents })
        .collect();
    OrbiBundleData::new(file.rank, file.desing_degree, points)
        .map_err(CliError::from_bundle_schema)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepElementSpec {
    index: usize,
    order: u64,
    exponents: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFile {
    #[serde(default)]
    from_permutation_action: Option<bool>,
    #[serde(default)]
    elements: Option<Vec<RepElementSpec>>,
}

/// Linearized action data: either the group's own permutation realization or
/// one explicit exponent list per element, with eigenvalue angles written as
/// rationals "a/m".
pub fn load_rep(
    path: &str,
    group: &FiniteGroup,
    warnings: &mut Vec<String>,
) -> Result<LinearRepData, CliError> {
    let file: RepFile = read_json(path)?;
    match (file.from_permutation_action, file.elements) {
        (Some(true), None) => {
            LinearRepData::from_permutation_action(group).map_err(CliError::from_bundle_domain)
        }
        (None | Some(false), Some(elements)) => {
            if elements.len() != group.order() {
                return Err(CliError::schema(
                    "rep",
                    format!(
                        "{} element entries for a group of order {}",
                        elements.len(),
                        group.order()
                    ),
                ));
            }
            let mut lists: Vec<Option<Vec<(u64, u64)>>> = vec![None; group.order()];
            let mut rank = None;
            for e in &elements {
                if e.index >= group.order() {
                    return Err(CliError::schema("rep", format!("element index {} out of range", e.index)));
                }
                if lists[e.index].is_some() {
                    return Err(CliError::schema("rep", format!("element {} listed twice", e.index)));
                }
                if e.order != group.element_order(e.index) {
                    return Err(CliError::domain(
                        "rep",
                        format!(
                            "element {} has order {}, file says {}",
                            e.index,
                            group.element_order(e.index),
                            e.order
                        ),
                    ));
                }
                let rk = *rank.get_or_insert(e.exponents.len());
                if e.exponents.len() != rk {
                    return Err(CliError::schema("rep", "exponent lists must share one length"));
                }
                let mut pairs = Vec::with_capacity(rk);
                for s in &e.exponents {
                    let parsed = parse_ratio(s)
                        .map_err(|m| CliError::schema("rep", format!("exponent {s:?}: {m}")))?;
                    if parsed.canonicalized {
                        warnings.push(format!(
                            "rational {s:?} canonicalized to \"{}/{}\"",
                            parsed.value.numer(),
                            parsed.value.denom()
                        ));
                    }
                    let (a, m) = (parsed.value.numer().clone(), parsed.value.denom().clone());
                    let a = u64::try_from(a)
                        .map_err(|_| CliError::schema("rep", format!("negative exponent {s:?}")))?;
                    let m = u64::try_from(m).expect("parse_ratio keeps denominators positive");
                    pairs.push((a, m));
                }
                lists[e.index] = Some(pairs);
            }
            let exponents = lists
                .into_iter()
                .map(|l| l.expect("every index covered once"))
                .collect::<Vec<_>>();
            let rank = rank.unwrap_or(0) as u32;
            LinearRepData::new(group, rank, exponents).map_err(CliError::from_bundle_domain)
        }
        _ => Err(CliError::schema(
            "rep",
            "expected \"from_permutation_action\": true or an \"elements\" list",
        )),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CharsFile {
    /// One representative element per conjugacy class, in class-table order.
    classes: Vec<usize>,
    /// One row per irreducible character; entries are [re, im].
    chars: Vec<Vec<[f64; 2]>>,
}

pub fn load_chars(
    path: &str,
    group: &FiniteGroup,
    table: &ConjugacyClassTable,
) -> Result<CharacterTable, CliError> {
    let file: CharsFile = read_json(path)?;
    let rows = file
        .chars
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|[re, im]| num::complex::Complex64::new(re, im))
                .collect()
        })
        .collect();
    CharacterTable::new(group, table, file.classes, rows).map_err(CliError::from_homcount)
}
