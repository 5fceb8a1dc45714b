//! Validation of candidate semimatroids against SR1–SR5.
//!
//! Every pair of central sets is examined, so checking is quadratic in the
//! size of the family. That is fine for the desk-scale instances this crate
//! targets and it means every violation is reported, not only the first.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::error::InputError;
use crate::ground::GroundSet;
use crate::semimatroid::{CentralFamily, Semimatroid};
use crate::subset::SubsetMask;

/// Unvalidated construction data.
#[derive(Clone, Debug)]
pub struct RawSemimatroid {
    pub ground: Arc<GroundSet>,
    /// The ground set proper; usually every label of `ground`.
    pub elements: SubsetMask,
    pub central: Vec<SubsetMask>,
    pub rank: Vec<(SubsetMask, i64)>,
}

impl RawSemimatroid {
    pub fn new(ground: GroundSet, central: Vec<SubsetMask>, rank: Vec<(SubsetMask, i64)>) -> Self {
        let elements = ground.full();
        RawSemimatroid {
            ground: Arc::new(ground),
            elements,
            central,
            rank,
        }
    }

    /// Convenience for families given with their ranks inline.
    pub fn from_ranked(ground: GroundSet, sets: Vec<(SubsetMask, i64)>) -> Self {
        let central = sets.iter().map(|&(s, _)| s).collect();
        RawSemimatroid::new(ground, central, sets)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    #[serde(rename = "NONEMPTY")]
    Nonempty,
    #[serde(rename = "NOT_SIMPLICIAL")]
    NotSimplicial,
    SR1,
    SR2,
    SR3,
    SR4,
    SR5,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Nonempty => "NONEMPTY",
            Axiom::NotSimplicial => "NOT_SIMPLICIAL",
            Axiom::SR1 => "SR1",
            Axiom::SR2 => "SR2",
            Axiom::SR3 => "SR3",
            Axiom::SR4 => "SR4",
            Axiom::SR5 => "SR5",
        })
    }
}

/// One failed axiom together with the sets that witness the failure.
///
/// Witness layout: `NotSimplicial` → `[X, Y]` with `Y ⊂ X` missing;
/// `SR1` → `[X]`; `SR2..SR5` → `[X, Y]` in the roles the axiom names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<SubsetMask>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} witnessed by {:?}", self.axiom, self.witness)
    }
}

impl AxiomViolation {
    fn new(axiom: Axiom, witness: Vec<SubsetMask>) -> Self {
        AxiomViolation { axiom, witness }
    }

    /// Re-evaluate the named axiom on the witness sets alone.
    pub fn reproduces(&self, raw: &RawSemimatroid) -> bool {
        let ranks: HashMap<SubsetMask, i64> = raw.rank.iter().copied().collect();
        let members: HashSet<SubsetMask> = raw.central.iter().copied().collect();
        let r = |s: SubsetMask| ranks.get(&s).copied();
        let w = &self.witness;
        match self.axiom {
            Axiom::Nonempty => members.is_empty(),
            Axiom::NotSimplicial => {
                w.len() == 2
                    && members.contains(&w[0])
                    && w[1].is_subset_of(w[0])
                    && !members.contains(&w[1])
            }
            Axiom::SR1 => match (w.first(), w.first().and_then(|&x| r(x))) {
                (Some(&x), Some(rx)) => rx < 0 || rx > x.len() as i64,
                _ => false,
            },
            _ if w.len() != 2 => false,
            Axiom::SR2 => {
                let (x, y) = (w[0], w[1]);
                matches!((r(x), r(y)), (Some(rx), Some(ry)) if x.is_subset_of(y) && rx > ry)
            }
            Axiom::SR3 => {
                let (x, y) = (w[0], w[1]);
                match (r(x), r(y), r(x.union(y)), r(x.intersection(y))) {
                    (Some(rx), Some(ry), Some(ru), Some(ri)) => ri + ru > rx + ry,
                    _ => false,
                }
            }
            Axiom::SR4 => {
                let (x, y) = (w[0], w[1]);
                matches!((r(x), r(x.intersection(y))), (Some(rx), Some(ri))
                    if members.contains(&y) && rx == ri && !members.contains(&x.union(y)))
            }
            Axiom::SR5 => {
                let (x, y) = (w[0], w[1]);
                matches!((r(x), r(y)), (Some(rx), Some(ry)) if rx < ry
                    && y.difference(x).iter().all(|e| !members.contains(&x.with(e))))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{} axiom violation(s)", .0.len())]
    Axioms(Vec<AxiomViolation>),
}

impl From<CheckError> for crate::Error {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Input(i) => crate::Error::Input(i),
            CheckError::Axioms(v) => crate::Error::Axioms(v),
        }
    }
}

/// Validate raw data; returns the semimatroid or every violation found.
pub fn check_axioms(raw: &RawSemimatroid) -> Result<Semimatroid, CheckError> {
    let ground = &raw.ground;
    let fmt = |s: SubsetMask| ground.fmt_set(s);

    let mut ranks: HashMap<SubsetMask, i64> = HashMap::with_capacity(raw.rank.len());
    for &(s, r) in &raw.rank {
        if ranks.insert(s, r).is_some() {
            return Err(InputError::DuplicateSubset(fmt(s)).into());
        }
    }
    let mut members: HashSet<SubsetMask> = HashSet::with_capacity(raw.central.len());
    for &s in &raw.central {
        if !s.is_subset_of(raw.elements) {
            return Err(InputError::Document(format!("{} is not inside the ground set", fmt(s))).into());
        }
        if !members.insert(s) {
            return Err(InputError::DuplicateSubset(fmt(s)).into());
        }
        if !ranks.contains_key(&s) {
            return Err(InputError::MissingRank(fmt(s)).into());
        }
    }
    if let Some(&s) = ranks.keys().find(|s| !members.contains(s)) {
        return Err(InputError::RankOutsideFamily(fmt(s)).into());
    }

    let mut sets: Vec<SubsetMask> = raw.central.clone();
    ground.sort_canonical(&mut sets);
    let r = |s: &SubsetMask| ranks[s];
    let mut out = Vec::new();

    if sets.is_empty() {
        out.push(AxiomViolation::new(Axiom::Nonempty, vec![]));
    }
    for &x in &sets {
        for e in x.iter() {
            if !members.contains(&x.without(e)) {
                out.push(AxiomViolation::new(Axiom::NotSimplicial, vec![x, x.without(e)]));
            }
        }
    }
    for &x in &sets {
        let rx = r(&x);
        if rx < 0 || rx > x.len() as i64 {
            out.push(AxiomViolation::new(Axiom::SR1, vec![x]));
        }
    }
    for (i, &x) in sets.iter().enumerate() {
        let rx = r(&x);
        for (j, &y) in sets.iter().enumerate() {
            let ry = r(&y);
            if x.is_subset_of(y) && rx > ry {
                out.push(AxiomViolation::new(Axiom::SR2, vec![x, y]));
            }
            let meet = x.intersection(y);
            let join = x.union(y);
            // Symmetric in X and Y; report each unordered pair once.
            if i < j {
                if let (Some(&ru), Some(&ri)) = (ranks.get(&join), ranks.get(&meet)) {
                    if ri + ru > rx + ry {
                        out.push(AxiomViolation::new(Axiom::SR3, vec![x, y]));
                    }
                }
            }
            if let Some(&ri) = ranks.get(&meet) {
                if rx == ri && !members.contains(&join) {
                    out.push(AxiomViolation::new(Axiom::SR4, vec![x, y]));
                }
            }
            if rx < ry && y.difference(x).iter().all(|e| !members.contains(&x.with(e))) {
                out.push(AxiomViolation::new(Axiom::SR5, vec![x, y]));
            }
        }
    }

    if !out.is_empty() {
        return Err(CheckError::Axioms(out));
    }
    let family = ranks.into_iter().map(|(s, r)| (s, r as u32)).collect();
    Ok(Semimatroid::from_parts(
        raw.ground.clone(),
        raw.elements,
        CentralFamily::from_ranks(family),
        SubsetMask::EMPTY,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn plt_raw() -> RawSemimatroid {
        plt().to_raw()
    }

    fn violations(raw: &RawSemimatroid) -> Vec<AxiomViolation> {
        match check_axioms(raw) {
            Err(CheckError::Axioms(v)) => v,
            other => panic!("expected violations, got {other:?}"),
        }
    }

    #[test]
    fn plt_is_valid() {
        let sm = check_axioms(&plt_raw()).unwrap();
        assert_eq!(sm.rank(), 2);
        assert_eq!(sm.central().len(), 6);
    }

    #[test]
    fn dropped_singleton_rank_breaks_submodularity() {
        let mut raw = plt_raw();
        let a = raw.ground.mask_of(&["a"]).unwrap();
        let c = raw.ground.mask_of(&["c"]).unwrap();
        for (s, r) in raw.rank.iter_mut() {
            if *s == a {
                *r = 0;
            }
        }
        let v = violations(&raw);
        assert!(v.contains(&AxiomViolation::new(Axiom::SR3, vec![a, c])));
        assert!(v.iter().all(|x| x.reproduces(&raw)));
    }

    #[test]
    fn removing_ac_breaks_augmentation() {
        let mut raw = plt_raw();
        let ac = raw.ground.mask_of(&["a", "c"]).unwrap();
        raw.central.retain(|&s| s != ac);
        raw.rank.retain(|&(s, _)| s != ac);
        let v = violations(&raw);
        let a = raw.ground.mask_of(&["a"]).unwrap();
        let bc = raw.ground.mask_of(&["b", "c"]).unwrap();
        assert!(v.contains(&AxiomViolation::new(Axiom::SR5, vec![a, bc])));
        assert!(v.iter().all(|x| x.reproduces(&raw)));
    }

    #[test]
    fn missing_rank_is_an_input_error() {
        let mut raw = plt_raw();
        raw.rank.pop();
        assert!(matches!(
            check_axioms(&raw),
            Err(CheckError::Input(InputError::MissingRank(_)))
        ));
    }

    #[test]
    fn non_simplicial_and_empty() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let ab = g.full();
        let raw = RawSemimatroid::from_ranked(
            g,
            vec![(SubsetMask::EMPTY, 0), (ab, 2), (SubsetMask::singleton(0), 1)],
        );
        let v = violations(&raw);
        assert!(v.iter().any(|x| x.axiom == Axiom::NotSimplicial));
        assert!(v.iter().all(|x| x.reproduces(&raw)));

        let raw = RawSemimatroid::from_ranked(GroundSet::empty(), vec![]);
        assert_eq!(violations(&raw)[0].axiom, Axiom::Nonempty);
    }

    #[test]
    fn negative_and_oversized_ranks() {
        let g = GroundSet::new(["a"]).unwrap();
        let raw = RawSemimatroid::from_ranked(
            g,
            vec![(SubsetMask::EMPTY, -1), (SubsetMask::singleton(0), 2)],
        );
        let v = violations(&raw);
        assert_eq!(v.iter().filter(|x| x.axiom == Axiom::SR1).count(), 2);
    }
}
