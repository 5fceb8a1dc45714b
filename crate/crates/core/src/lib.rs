//! Exact semimatroids: axioms, minors, activities, and the multivariate
//! Tutte polynomial together with its specializations.
//!
//! Everything is exact. Ranks are stored per central set, polynomials have
//! big-integer coefficients, and arrangements are handled over the
//! rationals without floating point anywhere.

pub mod axioms;
pub mod error;
pub mod ground;
pub mod identities;
pub mod ingest;
pub mod invariants;
pub mod minors;
pub mod poly;
pub mod semimatroid;
pub mod subset;
pub mod vars;

#[cfg(test)]
pub(crate) mod fixtures;

pub use axioms::{check_axioms, Axiom, AxiomViolation, CheckError, RawSemimatroid};
pub use error::{DomainError, Error, InputError, Result};
pub use ground::GroundSet;
pub use identities::{check_all, check_identity, check_many, check_scalar, IdentityId, IdentityReport, Verdict};
pub use invariants::{
    ActivityRecord, Decomposition, DecompositionError, Interval, Invariant, InvariantError, Route,
};
pub use minors::{Fingerprint, MinorKey};
pub use poly::{Monomial, PolyError, SparsePoly, Var};
pub use semimatroid::{CentralFamily, ElementKind, Semimatroid};
pub use subset::SubsetMask;
pub use ingest::{
    emit, from_arrangement, from_explicit, from_matroid_rank, load, random_instance, ArrangementDoc, Document,
    ExplicitDoc, RandomSpec,
};
