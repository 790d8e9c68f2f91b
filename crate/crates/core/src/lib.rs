//! Exact combinatorial invariants of orbifold curves over finite groups.
//!
//! The crate is organized around five layers:
//!
//! * [`group`]: finite groups as explicit multiplication tables, conjugacy
//!   data, and the exact convolution algebra of rational class functions.
//! * [`curve`]: marked and nodal orbifold curves, canonical degrees,
//!   arithmetic genus, stability.
//! * [`bundle`]: orbifold line/vector bundle data over a marked curve, first
//!   Chern numbers, index computations, and degree-shifting numbers of linear
//!   representations.
//! * [`homcount`]: counting and enumerating solutions of the punctured
//!   surface relation, by brute force, by class-algebra convolution, and by
//!   character sums.
//! * [`gw`]: twisted sectors of a point quotient, the pairing, the exact
//!   three-point product table with its associativity and splitting checks,
//!   virtual dimensions, and the degree selection rule.
//!
//! Everything except the character-sum path is exact integer or rational
//! arithmetic. The [`samples`] module ships a small catalog of groups and
//! character tables used throughout the test suite and handy in examples.

pub mod bundle;
pub mod curve;
pub mod group;
pub mod gw;
pub mod homcount;
pub mod ratio;
pub mod samples;

pub use bundle::{BundleError, BundlePoint, LinearRepData, OrbiBundleData};
pub use curve::{BranchSlot, CurveError, MarkedOrbicurve, NodalOrbicurve};
pub use group::{ClassFunction, ConjugacyClassTable, FiniteGroup, GroupError};
pub use gw::{DimensionInput, GwError, SelectionInput, SelectionReport, VirtualDimension};
pub use homcount::{CharacterTable, HomcountError, PunctureConstraint, SurfaceGroupSpec};
