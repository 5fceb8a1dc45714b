//! Deletion, restriction and contraction, plus the canonical key used to
//! memoize recursions over minors.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::error::DomainError;
use crate::semimatroid::{CentralFamily, Semimatroid};
use crate::subset::SubsetMask;

impl Semimatroid {
    /// `C \ S`: central sets avoiding `S`, ranks unchanged. `S` need not be
    /// central.
    pub fn delete(&self, set: SubsetMask) -> Result<Semimatroid, DomainError> {
        if !set.is_subset_of(self.elements) {
            return Err(DomainError::NotASubset(set));
        }
        if set.is_empty() {
            return Ok(self.clone());
        }
        let ranks: HashMap<_, _> = self
            .central
            .iter()
            .filter(|&(s, _)| s.is_disjoint(set))
            .collect();
        Ok(Semimatroid::from_parts(
            self.ground_arc().clone(),
            self.elements.difference(set),
            CentralFamily::from_ranks(ranks),
            self.contracted,
        ))
    }

    /// `C | X = C \ (E - X)`.
    pub fn restrict(&self, set: SubsetMask) -> Result<Semimatroid, DomainError> {
        if !set.is_subset_of(self.elements) {
            return Err(DomainError::NotASubset(set));
        }
        self.delete(self.elements.difference(set))
    }

    /// `C / X` for central `X`: sets `Y` with `Y ⊔ X` central, rank
    /// `r(Y ⊔ X) - r(X)`.
    pub fn contract(&self, set: SubsetMask) -> Result<Semimatroid, DomainError> {
        let base = self.rank_of(set)?;
        if set.is_empty() {
            return Ok(self.clone());
        }
        let ranks: HashMap<_, _> = self
            .central
            .iter()
            .filter(|&(s, _)| set.is_subset_of(s))
            .map(|(s, r)| (s.difference(set), r - base))
            .collect();
        Ok(Semimatroid::from_parts(
            self.ground_arc().clone(),
            self.elements.difference(set),
            CentralFamily::from_ranks(ranks),
            self.contracted.union(set),
        ))
    }

    pub fn delete_element(&self, e: usize) -> Result<Semimatroid, DomainError> {
        self.delete(SubsetMask::singleton(e))
    }

    pub fn contract_element(&self, e: usize) -> Result<Semimatroid, DomainError> {
        self.contract(SubsetMask::singleton(e))
    }

    /// Canonical key of this semimatroid; see [`MinorKey`].
    pub fn canonical_key(&self) -> MinorKey {
        MinorKey {
            ground_subset: self.elements,
            contracted: self.contracted,
            fingerprint: Fingerprint::of(self),
        }
    }
}

/// Full structural description of a semimatroid after relabeling its
/// elements to `0..n` in the linear order. Equal fingerprints mean equal
/// families and ranks under that relabeling; no hashing is involved in the
/// comparison, so there are no collisions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    n: u8,
    sets: Vec<(u64, u32)>,
}

impl Fingerprint {
    pub fn of(sm: &Semimatroid) -> Self {
        let mut relabel = [0u64; 64];
        for (k, i) in sm.ordered_elements().enumerate() {
            relabel[i] = 1u64 << k;
        }
        let mut sets: Vec<(u64, u32)> = sm
            .central()
            .iter()
            .map(|(s, r)| (s.iter().fold(0u64, |acc, i| acc | relabel[i]), r))
            .collect();
        sets.sort_unstable();
        Fingerprint {
            n: sm.len() as u8,
            sets,
        }
    }
}

/// Memoization key for minors.
///
/// Equality and hashing look only at the relabeled fingerprint, so
/// structurally identical minors on different elements share a key. The
/// ground subset and contracted set are kept as provenance.
#[derive(Clone, Debug)]
pub struct MinorKey {
    pub ground_subset: SubsetMask,
    pub contracted: SubsetMask,
    pub fingerprint: Fingerprint,
}

impl PartialEq for MinorKey {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl Eq for MinorKey {}

impl Hash for MinorKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.fingerprint.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_axioms;
    use crate::fixtures::*;

    fn family(sm: &Semimatroid) -> Vec<(Vec<String>, u32)> {
        sm.central_sets()
            .into_iter()
            .map(|s| (sm.ground().labels_of(s), sm.rank_of(s).unwrap()))
            .collect()
    }

    fn strs(v: &[(&[&str], u32)]) -> Vec<(Vec<String>, u32)> {
        v.iter()
            .map(|(s, r)| (s.iter().map(|x| x.to_string()).collect(), *r))
            .collect()
    }

    #[test]
    fn plt_delete_b() {
        let sm = plt();
        let d = sm.delete(sm.mask_of(&["b"]).unwrap()).unwrap();
        assert_eq!(d.ground().labels_of(d.elements()), vec!["a", "c"]);
        assert_eq!(
            family(&d),
            strs(&[(&[], 0), (&["a"], 1), (&["c"], 1), (&["a", "c"], 2)])
        );
        check_axioms(&d.to_raw()).unwrap();
    }

    #[test]
    fn plt_delete_c_and_contract_c() {
        let sm = plt();
        let c = sm.mask_of(&["c"]).unwrap();
        let expect = strs(&[(&[], 0), (&["a"], 1), (&["b"], 1)]);
        let d = sm.delete(c).unwrap();
        let k = sm.contract(c).unwrap();
        assert_eq!(family(&d), expect);
        assert_eq!(family(&k), expect);
        assert_eq!(k.contracted(), c);
        check_axioms(&d.to_raw()).unwrap();
        check_axioms(&k.to_raw()).unwrap();
    }

    #[test]
    fn empty_minors_are_identity() {
        let sm = plt();
        assert_eq!(sm.delete(SubsetMask::EMPTY).unwrap(), sm);
        assert_eq!(sm.contract(SubsetMask::EMPTY).unwrap(), sm);
        assert_eq!(
            sm.canonical_key(),
            sm.delete(SubsetMask::EMPTY).unwrap().canonical_key()
        );
    }

    #[test]
    fn contraction_can_create_a_loop() {
        let u = uniform(1, 2);
        let k = u.contract(u.mask_of(&["1"]).unwrap()).unwrap();
        assert_eq!(family(&k), strs(&[(&[], 0), (&["2"], 0)]));
        assert_eq!(k.rank(), 0);
    }

    #[test]
    fn contract_requires_central() {
        let sm = plt();
        let ab = sm.mask_of(&["a", "b"]).unwrap();
        assert_eq!(sm.contract(ab), Err(DomainError::NotCentral(ab)));
    }

    #[test]
    fn keys_compare_structure() {
        let sm = plt();
        let d = sm.delete(sm.mask_of(&["b"]).unwrap()).unwrap();
        assert_eq!(d.canonical_key(), free(&["a", "c"]).canonical_key());
        assert_ne!(sm.canonical_key(), uniform(2, 3).canonical_key());
    }
}
