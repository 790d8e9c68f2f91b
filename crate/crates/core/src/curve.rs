//! Orbifold curves: smooth components with multiplicity-marked points, and
//! nodal curves glued from them.

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("invalid multiplicity: {0}")]
    InvalidMultiplicity(String),
    #[error("slot conflict: {0}")]
    SlotConflict(String),
    #[error("node multiplicity mismatch: {0}")]
    NodeMultiplicityMismatch(String),
    #[error("curve is not connected")]
    Disconnected,
}

/// A smooth orbifold curve: an underlying genus together with the local
/// multiplicities of its special points. Slot `i` is the site of the `i`-th
/// special point; multiplicity 1 means an ordinary point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedOrbicurve {
    genus: u32,
    multiplicities: Vec<u64>,
}

impl MarkedOrbicurve {
    pub fn new(genus: u32, multiplicities: Vec<u64>) -> Result<Self, CurveError> {
        if let Some(pos) = multiplicities.iter().position(|&m| m == 0) {
            return Err(CurveError::InvalidMultiplicity(format!(
                "slot {pos} has multiplicity 0; multiplicities start at 1"
            )));
        }
        Ok(MarkedOrbicurve { genus, multiplicities })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn num_marked(&self) -> usize {
        self.multiplicities.len()
    }

    /// Degree of the canonical divisor: 2g - 2 plus (1 - 1/m) per special
    /// point. Negative exactly for the handful of spherical cases.
    pub fn canonical_degree(&self) -> BigRational {
        let mut deg = BigRational::from(BigInt::from(2 * i64::from(self.genus) - 2));
        for &m in &self.multiplicities {
            let m = BigInt::from(m);
            deg += BigRational::new(&m - 1, m);
        }
        deg
    }
}

/// Address of one special-point site on a nodal curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BranchSlot {
    pub component: usize,
    pub slot: usize,
}

/// A node joining two distinct slots. Both sides must carry the same local
/// multiplicity, repeated here so the gluing data is self-describing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub a: BranchSlot,
    pub b: BranchSlot,
    pub multiplicity: u64,
}

/// A connected (checked lazily) union of marked orbicurves glued at nodes.
/// Every slot is used exactly once, by a node branch or by a marking; the
/// marking list is the global order of the marked points.
#[derive(Debug, Clone)]
pub struct NodalOrbicurve {
    components: Vec<MarkedOrbicurve>,
    nodes: Vec<Node>,
    markings: Vec<BranchSlot>,
}

impl NodalOrbicurve {
    /// Validates the gluing data. With `markings: None` the slots left over
    /// after placing nodes become the marked points, in (component, slot)
    /// order; an explicit list must cover exactly those slots.
    pub fn new(
        components: Vec<MarkedOrbicurve>,
        nodes: Vec<Node>,
        markings: Option<Vec<BranchSlot>>,
    ) -> Result<Self, CurveError> {
        if components.is_empty() {
            return Err(CurveError::Disconnected);
        }
        let mut used: Vec<Vec<bool>> = components
            .iter()
            .map(|c| vec![false; c.num_marked()])
            .collect();
        let lookup = |s: BranchSlot| -> Result<u64, CurveError> {
            components
                .get(s.component)
                .and_then(|c| c.multiplicities().get(s.slot))
                .copied()
                .ok_or_else(|| {
                    CurveError::SlotConflict(format!(
                        "no slot {} on component {}",
                        s.slot, s.component
                    ))
                })
        };
        for (i, node) in nodes.iter().enumerate() {
            let ma = lookup(node.a)?;
            let mb = lookup(node.b)?;
            if node.a == node.b {
                return Err(CurveError::SlotConflict(format!(
                    "node {i} glues a slot to itself"
                )));
            }
            if ma != mb || ma != node.multiplicity {
                return Err(CurveError::NodeMultiplicityMismatch(format!(
                    "node {i} declares multiplicity {} but its branches carry {} and {}",
                    node.multiplicity, ma, mb
                )));
            }
            for s in [node.a, node.b] {
                if used[s.component][s.slot] {
                    return Err(CurveError::SlotConflict(format!(
                        "slot {} on component {} is used twice",
                        s.slot, s.component
                    )));
                }
                used[s.component][s.slot] = true;
            }
        }
        let markings = match markings {
            Some(list) => {
                for (i, &s) in list.iter().enumerate() {
                    lookup(s)?;
                    if used[s.component][s.slot] {
                        return Err(CurveError::SlotConflict(format!(
                            "marking {i} lands on slot {} of component {}, already in use",
                            s.slot, s.component
                        )));
                    }
                    used[s.component][s.slot] = true;
                }
                list
            }
            None => {
                let mut list = Vec::new();
                for (ci, slots) in used.iter_mut().enumerate() {
                    for (si, u) in slots.iter_mut().enumerate() {
                        if !*u {
                            *u = true;
                            list.push(BranchSlot { component: ci, slot: si });
                        }
                    }
                }
                list
            }
        };
        if let Some((ci, si)) = used
            .iter()
            .enumerate()
            .find_map(|(ci, slots)| slots.iter().position(|u| !u).map(|si| (ci, si)))
        {
            return Err(CurveError::SlotConflict(format!(
                "slot {si} on component {ci} carries neither a node nor a marking"
            )));
        }
        Ok(NodalOrbicurve { components, nodes, markings })
    }

    pub fn components(&self) -> &[MarkedOrbicurve] {
        &self.components
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn markings(&self) -> &[BranchSlot] {
        &self.markings
    }

    /// Genus of the glued curve: component genera plus the first Betti
    /// number of the dual graph. Errors if the dual graph is disconnected.
    pub fn arithmetic_genus(&self) -> Result<u64, CurveError> {
        let v = self.components.len();
        let mut reach = vec![false; v];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(c) = stack.pop() {
            for node in &self.nodes {
                for (x, y) in [(node.a, node.b), (node.b, node.a)] {
                    if x.component == c && !reach[y.component] {
                        reach[y.component] = true;
                        stack.push(y.component);
                    }
                }
            }
        }
        if !reach.iter().all(|&r| r) {
            return Err(CurveError::Disconnected);
        }
        let genera: u64 = self.components.iter().map(|c| u64::from(c.genus())).sum();
        Ok(genera + self.nodes.len() as u64 + 1 - v as u64)
    }

    /// Per-component stability. A component is stable as a curve when
    /// special points plus twice the genus reach three; a non-constant
    /// component of a map is exempt. `offending` lists the components that
    /// fail the curve condition.
    pub fn check_stability(&self, constant_components: &[usize]) -> StabilityReport {
        let mut offending = Vec::new();
        let mut stable_as_map = true;
        for (ci, comp) in self.components.iter().enumerate() {
            // Every slot carries exactly one special point, so the count is
            // the slot count; a self-node contributes its two slots.
            let k = comp.num_marked() as u64;
            let stable = k + 2 * u64::from(comp.genus()) >= 3;
            if !stable {
                offending.push(ci);
                if constant_components.contains(&ci) {
                    stable_as_map = false;
                }
            }
        }
        StabilityReport {
            stable_as_curve: offending.is_empty(),
            stable_as_map,
            offending,
        }
    }
}

#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub stable_as_curve: bool,
    pub stable_as_map: bool,
    pub offending: Vec<usize>,
}

impl StabilityReport {
    pub fn holds(&self) -> bool {
        self.stable_as_curve
    }
}

/// True when the canonical degree vanishes, the flat borderline cases.
pub fn is_canonically_flat(curve: &MarkedOrbicurve) -> bool {
    curve.canonical_degree().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(genus: u32, mults: &[u64]) -> MarkedOrbicurve {
        MarkedOrbicurve::new(genus, mults.to_vec()).unwrap()
    }

    #[test]
    fn rejects_zero_multiplicity() {
        assert!(MarkedOrbicurve::new(0, vec![2, 0]).is_err());
    }

    #[test]
    fn default_markings_fill_leftover_slots_in_order() {
        let glued = NodalOrbicurve::new(
            vec![c(0, &[1, 2, 1]), c(1, &[2])],
            vec![Node {
                a: BranchSlot { component: 0, slot: 1 },
                b: BranchSlot { component: 1, slot: 0 },
                multiplicity: 2,
            }],
            None,
        )
        .unwrap();
        assert_eq!(
            glued.markings(),
            &[
                BranchSlot { component: 0, slot: 0 },
                BranchSlot { component: 0, slot: 2 },
            ]
        );
    }

    #[test]
    fn explicit_markings_must_cover_all_free_slots() {
        let r = NodalOrbicurve::new(
            vec![c(0, &[1, 1])],
            vec![],
            Some(vec![BranchSlot { component: 0, slot: 1 }]),
        );
        assert!(matches!(r, Err(CurveError::SlotConflict(_))));
    }

    #[test]
    fn explicit_markings_may_reorder() {
        let glued = NodalOrbicurve::new(
            vec![c(0, &[1, 1, 1])],
            vec![],
            Some(vec![
                BranchSlot { component: 0, slot: 2 },
                BranchSlot { component: 0, slot: 0 },
                BranchSlot { component: 0, slot: 1 },
            ]),
        )
        .unwrap();
        assert_eq!(glued.markings()[0].slot, 2);
    }

    #[test]
    fn self_gluing_one_slot_is_rejected() {
        let r = NodalOrbicurve::new(
            vec![c(0, &[1, 1, 1])],
            vec![Node {
                a: BranchSlot { component: 0, slot: 0 },
                b: BranchSlot { component: 0, slot: 0 },
                multiplicity: 1,
            }],
            None,
        );
        assert!(matches!(r, Err(CurveError::SlotConflict(_))));
    }

    #[test]
    fn genus_is_invariant_under_component_relabeling() {
        let a = NodalOrbicurve::new(
            vec![c(2, &[1]), c(0, &[1, 1, 1])],
            vec![Node {
                a: BranchSlot { component: 0, slot: 0 },
                b: BranchSlot { component: 1, slot: 2 },
                multiplicity: 1,
            }],
            None,
        )
        .unwrap();
        let b = NodalOrbicurve::new(
            vec![c(0, &[1, 1, 1]), c(2, &[1])],
            vec![Node {
                a: BranchSlot { component: 1, slot: 0 },
                b: BranchSlot { component: 0, slot: 2 },
                multiplicity: 1,
            }],
            None,
        )
        .unwrap();
        assert_eq!(a.arithmetic_genus().unwrap(), b.arithmetic_genus().unwrap());
    }
}
