//! Finite multiplicative lattices, lattice modules over them, expansion
//! functions, and an exhaustive checker for statements about δ-primary
//! elements.
//!
//! Everything is finite: every element is compact, so the compactness and
//! compact-generation side conditions that appear in the general theory hold
//! automatically and every predicate is decidable by enumeration.

pub mod classify;
pub mod dot;
pub mod expansion;
pub mod generate;
pub mod latspec;
pub mod lattice;
pub mod module;
pub mod report;
pub mod search;
pub mod verify;

pub use classify::{classify_m, minimal_primes_over, rad_m, ClassifyError, MClassification};
pub use dot::emit_dot;
pub use expansion::{ExpansionError, ExpansionL, ExpansionM, Label};
pub use generate::{gen_frame, gen_zn, FrameShape, GenerateError};
pub use latspec::{
    emit_latspec, parse_latspec, LatSpecDocument, LatSpecError, LoadedInstance, Side,
};
pub use lattice::{Elem, Lattice, LatticeError, MulLattice};
pub use module::{HypothesisFlags, InstanceBundle, InstanceError, LatticeModule};
pub use report::{Failure, ValidationReport};
pub use search::{search, Family, SearchError, SearchGoal, SearchHit};
