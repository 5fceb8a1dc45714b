//! The seven polynomial invariants, each computable by several routes.
//!
//! | invariant        | variables        |
//! |------------------|------------------|
//! | `Z`              | `λ` (Laurent), `x_e` |
//! | dichromatic      | `λ` (Laurent), `x`   |
//! | Tutte `T`        | `λ`, `x`             |
//! | characteristic χ | `λ`                  |
//! | subset-corank    | `λ`, `x_e`           |
//! | size-corank      | `λ`, `x`             |
//! | rank generating  | `λ`, `x`             |
//!
//! Every route must produce the same polynomial term for term.

mod activities;
mod dc;
mod sum;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poly::{PolyError, SparsePoly, Var};
use crate::semimatroid::Semimatroid;
use crate::vars;

pub use activities::{ActivityRecord, Decomposition, DecompositionError, Interval};
pub use dc::{deletion_contraction, DcStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    Z,
    Dichromatic,
    Tutte,
    Characteristic,
    SubsetCorank,
    SizeCorank,
    RankGenerating,
}

impl Invariant {
    pub const ALL: [Invariant; 7] = [
        Invariant::Z,
        Invariant::Dichromatic,
        Invariant::Tutte,
        Invariant::Characteristic,
        Invariant::SubsetCorank,
        Invariant::SizeCorank,
        Invariant::RankGenerating,
    ];

    /// Uses one variable per element.
    pub fn is_multivariate(self) -> bool {
        matches!(self, Invariant::Z | Invariant::SubsetCorank)
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Z => "z",
            Invariant::Dichromatic => "dichromatic",
            Invariant::Tutte => "tutte",
            Invariant::Characteristic => "characteristic",
            Invariant::SubsetCorank => "subset-corank",
            Invariant::SizeCorank => "size-corank",
            Invariant::RankGenerating => "rank-gen",
        }
    }

    /// Routes this invariant supports, in evaluation order.
    pub fn routes(self) -> &'static [Route] {
        match self {
            Invariant::Z => &[Route::SubsetSum, Route::DeletionContraction, Route::Activities],
            _ => &[
                Route::SubsetSum,
                Route::DeletionContraction,
                Route::Activities,
                Route::ViaZ,
            ],
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown invariant `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Direct sum over central sets.
    SubsetSum,
    /// Four-case recursion on the smallest element, memoized.
    DeletionContraction,
    /// Sum over bases weighted by internal/external activity.
    Activities,
    /// Specialization of the multivariate `Z` (through `λ^r Z`).
    ViaZ,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::SubsetSum => "sum",
            Route::DeletionContraction => "dc",
            Route::Activities => "activities",
            Route::ViaZ => "via-z",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error("route {route} is not available for {invariant}")]
    UnsupportedRoute { invariant: Invariant, route: Route },
    #[error("polynomial arithmetic failed: {0}")]
    Poly(#[from] PolyError),
}

/// Evaluate `inv` on `sm` by `route`.
pub fn evaluate(sm: &Semimatroid, inv: Invariant, route: Route) -> Result<SparsePoly, InvariantError> {
    match route {
        Route::SubsetSum => Ok(sum::subset_sum(sm, inv)),
        Route::DeletionContraction => Ok(dc::deletion_contraction(sm, inv, true).0),
        Route::Activities => Ok(activities::activity_expansion(sm, inv)),
        Route::ViaZ => via_z(sm, inv),
    }
}

fn via_z(sm: &Semimatroid, inv: Invariant) -> Result<SparsePoly, InvariantError> {
    let r = sm.rank() as i32;
    let z = || dc::deletion_contraction(sm, Invariant::Z, true).0;
    let subset_corank = || -> SparsePoly { &vars::lambda_pow(r) * &z() };
    let size_corank = || -> Result<SparsePoly, PolyError> { to_scalar_x(sm, &subset_corank()) };
    Ok(match inv {
        Invariant::Z => {
            return Err(InvariantError::UnsupportedRoute {
                invariant: inv,
                route: Route::ViaZ,
            })
        }
        Invariant::Dichromatic => to_scalar_x(sm, &z())?,
        Invariant::SubsetCorank => subset_corank(),
        Invariant::SizeCorank => size_corank()?,
        Invariant::Characteristic => size_corank()?.subs([(Var::x(), vars::c(-1))])?,
        Invariant::RankGenerating => rank_gen_from_size_corank(&size_corank()?, r)?,
        Invariant::Tutte => tutte_from_size_corank(&size_corank()?, r)?,
    })
}

/// Replace every `x_e` of the semimatroid by the scalar `x`.
pub fn to_scalar_x(sm: &Semimatroid, p: &SparsePoly) -> Result<SparsePoly, PolyError> {
    p.substitute(
        &sm.elements()
            .iter()
            .map(|e| (Var::X(e as u8), vars::x()))
            .collect(),
    )
}

/// `R(λ, x) = x^{-r} SC(λx, x)`.
pub fn rank_gen_from_size_corank(sc: &SparsePoly, rank: i32) -> Result<SparsePoly, PolyError> {
    sc.subs([(Var::Lambda, &vars::lambda() * &vars::x())])?
        .shift(&Var::x(), -rank)
}

/// `T(λ, x) = (λ-1)^r Z((λ-1)(x-1), x-1)` computed on `SC = λ^r Z`.
///
/// With `u = x - 1` this is `u^{-r} SC((λ-1)u, u)`. The powers of `u` are
/// tracked in `ξ` so that the `u^{-r}` prefactor is an exact Laurent shift,
/// and only then is `ξ` replaced by `x - 1`.
pub fn tutte_from_size_corank(sc: &SparsePoly, rank: i32) -> Result<SparsePoly, PolyError> {
    let tracked = sc
        .subs([
            (Var::Lambda, &vars::lambda() * &vars::xi()),
            (Var::x(), vars::xi()),
        ])?
        .shift(&Var::Xi, -rank)?;
    tracked.subs([
        (Var::Lambda, &vars::lambda() - &vars::c(1)),
        (Var::Xi, &vars::x() - &vars::c(1)),
    ])
}

macro_rules! named {
    ($($(#[$m:meta])* $fn:ident => $inv:expr;)*) => {$(
        $(#[$m])*
        pub fn $fn(sm: &Semimatroid, route: Route) -> Result<SparsePoly, InvariantError> {
            evaluate(sm, $inv, route)
        }
    )*};
}

named! {
    /// Multivariate Tutte polynomial `Σ_A λ^{-r(A)} x^A`.
    z_multivariate => Invariant::Z;
    /// `Σ_A λ^{-r(A)} x^{|A|}`.
    dichromatic => Invariant::Dichromatic;
    /// `Σ_A (λ-1)^{r-r(A)} (x-1)^{|A|-r(A)}`.
    tutte => Invariant::Tutte;
    /// `Σ_A (-1)^{|A|} λ^{r-r(A)}`.
    characteristic => Invariant::Characteristic;
    /// `Σ_A λ^{r-r(A)} x^A`.
    subset_corank => Invariant::SubsetCorank;
    /// `Σ_A λ^{r-r(A)} x^{|A|}`.
    size_corank => Invariant::SizeCorank;
    /// `Σ_A λ^{r-r(A)} x^{|A|-r(A)}`.
    rank_generating => Invariant::RankGenerating;
}
