//! Fundamental circuits and cocircuits, internal/external activity, the
//! interval decomposition of the central family, and the activity
//! expansions of every invariant.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use super::Invariant;
use crate::error::DomainError;
use crate::poly::{SparsePoly, Var};
use crate::semimatroid::Semimatroid;
use crate::subset::SubsetMask;
use crate::vars::{self, lambda, x, x_e};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityRecord {
    pub basis: SubsetMask,
    pub internally_active: SubsetMask,
    pub externally_active: SubsetMask,
    /// `C(e, B)` for every `e ∉ B` with `B ⊔ e` central.
    pub fund_circuits: BTreeMap<usize, SubsetMask>,
    /// `C*(e, B)` for every `e ∈ B`.
    pub fund_cocircuits: BTreeMap<usize, SubsetMask>,
}

/// One block `[lower, upper]` of the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub basis: SubsetMask,
    pub lower: SubsetMask,
    pub upper: SubsetMask,
}

impl Interval {
    pub fn size(&self) -> usize {
        1 << self.upper.difference(self.lower).len()
    }

    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.upper
            .difference(self.lower)
            .subsets()
            .map(|s| s.union(self.lower))
    }
}

/// Intervals `[B - IA(B), B ⊔ EA(B)]` over all bases, verified to
/// partition the central family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub intervals: Vec<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("{set:?} lies in the intervals of two bases {first:?} and {second:?}")]
    DoubleCovered {
        set: SubsetMask,
        first: SubsetMask,
        second: SubsetMask,
    },
    #[error("central set {0:?} is covered by no interval")]
    Missed(SubsetMask),
    #[error("interval of {basis:?} contains the non-central set {set:?}")]
    NotCentral { basis: SubsetMask, set: SubsetMask },
    #[error("rank law fails in the interval of {basis:?} at {set:?}")]
    RankLaw { basis: SubsetMask, set: SubsetMask },
}

impl Semimatroid {
    fn require_basis(&self, basis: SubsetMask) -> Result<(), DomainError> {
        if self.is_basis(basis) {
            Ok(())
        } else {
            Err(DomainError::NotABasis(basis))
        }
    }

    /// The unique circuit inside `B ⊔ e`.
    ///
    /// Every subset of `B ⊔ e` is central, so `f` lies on the circuit
    /// exactly when removing it from `B ⊔ e` leaves an independent set.
    pub fn fundamental_circuit(&self, basis: SubsetMask, e: usize) -> Result<SubsetMask, DomainError> {
        self.require_basis(basis)?;
        if !self.elements.contains(e) {
            return Err(DomainError::NotInGround(e));
        }
        if basis.contains(e) {
            return Err(DomainError::ElementInBasis { basis, element: e });
        }
        let joined = basis.with(e);
        if !self.is_central(joined) {
            return Err(DomainError::NotCentral(joined));
        }
        Ok(joined
            .iter()
            .filter(|&f| self.is_independent(joined.without(f)))
            .collect())
    }

    /// `{e} ∪ {f ∉ B : (B - e) ⊔ f is a basis}`.
    pub fn fundamental_cocircuit(&self, basis: SubsetMask, e: usize) -> Result<SubsetMask, DomainError> {
        self.require_basis(basis)?;
        if !basis.contains(e) {
            return Err(DomainError::ElementNotInBasis { basis, element: e });
        }
        let rest = basis.without(e);
        Ok(self
            .elements
            .difference(basis)
            .iter()
            .filter(|&f| self.is_basis(rest.with(f)))
            .fold(SubsetMask::singleton(e), |m, f| m.with(f)))
    }

    /// Internal and external activity of `B` under the linear order.
    pub fn activities(&self, basis: SubsetMask) -> Result<ActivityRecord, DomainError> {
        self.require_basis(basis)?;
        let g = self.ground();
        let mut rec = ActivityRecord {
            basis,
            internally_active: SubsetMask::EMPTY,
            externally_active: SubsetMask::EMPTY,
            fund_circuits: BTreeMap::new(),
            fund_cocircuits: BTreeMap::new(),
        };
        for e in basis.iter() {
            let co = self.fundamental_cocircuit(basis, e)?;
            if g.min_in(co) == Some(e) {
                rec.internally_active = rec.internally_active.with(e);
            }
            rec.fund_cocircuits.insert(e, co);
        }
        for e in self.elements.difference(basis).iter() {
            if !self.is_central(basis.with(e)) {
                continue;
            }
            let circ = self.fundamental_circuit(basis, e)?;
            if g.min_in(circ) == Some(e) {
                rec.externally_active = rec.externally_active.with(e);
            }
            rec.fund_circuits.insert(e, circ);
        }
        Ok(rec)
    }

    /// Activity records of every basis, in canonical basis order.
    pub fn all_activities(&self) -> Vec<ActivityRecord> {
        self.bases()
            .into_iter()
            .map(|b| self.activities(b).expect("listed bases are bases"))
            .collect()
    }

    /// Build the basis intervals and verify that they partition the central
    /// family and obey `r(C) - r(B - I ⊔ S) = |I|`.
    pub fn interval_decomposition(&self) -> Result<Decomposition, DecompositionError> {
        let r = self.rank();
        let mut owner: HashMap<SubsetMask, SubsetMask> = HashMap::with_capacity(self.central().len());
        let mut intervals = Vec::new();
        for rec in self.all_activities() {
            let b = rec.basis;
            let iv = Interval {
                basis: b,
                lower: b.difference(rec.internally_active),
                upper: b.union(rec.externally_active),
            };
            for set in iv.members() {
                let Some(rank) = self.central().rank(set) else {
                    return Err(DecompositionError::NotCentral { basis: b, set });
                };
                let removed = b.difference(set).len() as u32;
                if r - rank != removed {
                    return Err(DecompositionError::RankLaw { basis: b, set });
                }
                if let Some(&first) = owner.get(&set) {
                    return Err(DecompositionError::DoubleCovered {
                        set,
                        first,
                        second: b,
                    });
                }
                owner.insert(set, b);
            }
            intervals.push(iv);
        }
        if let Some(set) = self.central_sets().into_iter().find(|s| !owner.contains_key(s)) {
            return Err(DecompositionError::Missed(set));
        }
        Ok(Decomposition { intervals })
    }
}

/// Activity expansions, all written without denominators: the factors
/// `(λ/x_i + 1)` are multiplied through by `x_i`, which `x^B` supplies.
pub(super) fn activity_expansion(sm: &Semimatroid, inv: Invariant) -> SparsePoly {
    let r = sm.rank() as i32;
    let one = vars::c(1);
    let mut out = SparsePoly::zero();
    for rec in sm.all_activities() {
        let ia = rec.internally_active;
        let ea = rec.externally_active;
        let (ni, ne) = (ia.len() as u32, ea.len() as u32);
        let term = match inv {
            Invariant::Z | Invariant::SubsetCorank => {
                let mut t = SparsePoly::term(
                    vars::mono_over(rec.basis.difference(ia), Var::X),
                    1,
                );
                for e in ea.iter() {
                    t = &t * &(&x_e(e) + &one);
                }
                for i in ia.iter() {
                    t = &t * &(&lambda() + &x_e(i));
                }
                t
            }
            Invariant::Dichromatic | Invariant::SizeCorank => {
                &(&x().pow(r as u32 - ni) * &(&lambda() + &x()).pow(ni)) * &(&x() + &one).pow(ne)
            }
            Invariant::RankGenerating => &(&lambda() + &one).pow(ni) * &(&x() + &one).pow(ne),
            Invariant::Tutte => &lambda().pow(ni) * &x().pow(ne),
            Invariant::Characteristic => {
                if ne > 0 {
                    continue;
                }
                (&one - &lambda()).pow(ni)
            }
        };
        out += term;
    }
    match inv {
        Invariant::Z | Invariant::Dichromatic => out.mul_monomial(
            &crate::poly::Monomial::var(Var::Lambda, -r).expect("λ is Laurent"),
        ),
        Invariant::Characteristic if r % 2 == 1 => -out,
        _ => out,
    }
}
