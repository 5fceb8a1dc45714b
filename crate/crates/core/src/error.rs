use thiserror::Error;

use crate::axioms::AxiomViolation;
use crate::poly::PolyError;
use crate::SubsetMask;

/// Malformed construction data: the input does not even describe a
/// candidate semimatroid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("ground set has {0} elements; at most 64 are supported")]
    TooManyElements(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid element label `{0}` (use ASCII letters, digits and `_`)")]
    InvalidLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("label `{label}` repeated inside one subset")]
    RepeatedInSubset { label: String },
    #[error("subset {0} listed twice")]
    DuplicateSubset(String),
    #[error("no rank given for central set {0}")]
    MissingRank(String),
    #[error("rank given for {0}, which is not in the central family")]
    RankOutsideFamily(String),
    #[error("rank table must cover all {expected} subsets, found {found}")]
    IncompleteRankTable { expected: usize, found: usize },
    #[error("order must list every ground element exactly once")]
    BadOrder,
    #[error("hyperplane `{0}` has a zero normal vector")]
    ZeroNormal(String),
    #[error("hyperplane `{label}` has {found} normal coordinates, expected {expected}")]
    DimensionMismatch {
        label: String,
        expected: usize,
        found: usize,
    },
    #[error("rational with zero denominator")]
    ZeroDenominator,
    #[error("malformed document: {0}")]
    Document(String),
}

/// A query outside the domain on which it is defined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("{0:?} is not a central set")]
    NotCentral(SubsetMask),
    #[error("element index {0} is not in the ground set")]
    NotInGround(usize),
    #[error("{0:?} is not a subset of the ground set")]
    NotASubset(SubsetMask),
    #[error("{0:?} is not a basis")]
    NotABasis(SubsetMask),
    #[error("element index {element} lies in the basis {basis:?}")]
    ElementInBasis { basis: SubsetMask, element: usize },
    #[error("element index {element} does not lie in the basis {basis:?}")]
    ElementNotInBasis { basis: SubsetMask, element: usize },
}

/// Top-level error for operations that combine construction, queries and
/// polynomial work.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("{} axiom violation(s), first: {}", .0.len(), .0[0])]
    Axioms(Vec<AxiomViolation>),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Invariant(#[from] crate::invariants::InvariantError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
