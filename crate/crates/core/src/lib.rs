//! Comaximal subgroup graphs of finite groups: lattices, graphs, exact
//! independence and domination numbers, and structural deciders.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod lattice;
pub mod par;
pub mod properties;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BitGraph, ComaximalGraph, GraphSignature};
pub use group::Group;
pub use invariants::{Budget, DominationResult, IndependenceResult};
pub use lattice::{Subgroup, SubgroupLattice};
pub use properties::PropertyProfile;
pub use verify::{Suite, VerificationReport, Verifier};
