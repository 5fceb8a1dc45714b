use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::axioms::RawSemimatroid;
use crate::error::{DomainError, InputError};
use crate::ground::GroundSet;
use crate::subset::SubsetMask;

/// The downward-closed family of central sets, each carrying its rank.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CentralFamily {
    ranks: HashMap<SubsetMask, u32>,
}

impl CentralFamily {
    pub(crate) fn from_ranks(ranks: HashMap<SubsetMask, u32>) -> Self {
        CentralFamily { ranks }
    }

    #[inline]
    pub fn contains(&self, set: SubsetMask) -> bool {
        self.ranks.contains_key(&set)
    }

    #[inline]
    pub fn rank(&self, set: SubsetMask) -> Option<u32> {
        self.ranks.get(&set).copied()
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Members with their ranks, in no particular order.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, u32)> + '_ {
        self.ranks.iter().map(|(&s, &r)| (s, r))
    }
}

/// How a single element sits inside a semimatroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    /// `{e}` is central of rank 0.
    Loop,
    /// `{e}` is not central at all.
    NonCentral,
    /// `e` lies in every basis.
    Isthmus,
    Ordinary,
}

/// A validated semimatroid `(E, C, r)`.
///
/// Values are immutable. The ground set is a mask over a shared
/// [`GroundSet`] so that minors keep the labels (and variable indices) of the
/// semimatroid they came from.
#[derive(Clone)]
pub struct Semimatroid {
    pub(crate) ground: Arc<GroundSet>,
    pub(crate) elements: SubsetMask,
    pub(crate) central: CentralFamily,
    pub(crate) rank: u32,
    /// Elements contracted away on the way from the root semimatroid.
    pub(crate) contracted: SubsetMask,
}

impl Semimatroid {
    /// Assemble without validation; callers guarantee the axioms.
    pub(crate) fn from_parts(
        ground: Arc<GroundSet>,
        elements: SubsetMask,
        central: CentralFamily,
        contracted: SubsetMask,
    ) -> Self {
        let rank = central.iter().map(|(_, r)| r).max().unwrap_or(0);
        Semimatroid {
            ground,
            elements,
            central,
            rank,
            contracted,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub(crate) fn ground_arc(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// The ground set of this semimatroid as a mask.
    pub fn elements(&self) -> SubsetMask {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn central(&self) -> &CentralFamily {
        &self.central
    }

    pub fn contracted(&self) -> SubsetMask {
        self.contracted
    }

    /// `r(C)`, the common rank of the maximal central sets.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    #[inline]
    pub fn is_central(&self, set: SubsetMask) -> bool {
        self.central.contains(set)
    }

    pub fn rank_of(&self, set: SubsetMask) -> Result<u32, DomainError> {
        self.central
            .rank(set)
            .ok_or(DomainError::NotCentral(set))
    }

    /// Central sets in canonical order.
    pub fn central_sets(&self) -> Vec<SubsetMask> {
        let mut sets: Vec<_> = self.central.iter().map(|(s, _)| s).collect();
        self.ground.sort_canonical(&mut sets);
        sets
    }

    /// Elements of this semimatroid in the linear order.
    pub fn ordered_elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.ground.sorted(self.elements)
    }

    pub fn element(&self, label: &str) -> Result<usize, InputError> {
        let i = self.ground.index_of(label)?;
        if self.elements.contains(i) {
            Ok(i)
        } else {
            Err(InputError::UnknownLabel(label.to_string()))
        }
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask, InputError> {
        let m = self.ground.mask_of(labels)?;
        match m.difference(self.elements).iter().next() {
            Some(i) => Err(InputError::UnknownLabel(self.ground.label(i).to_string())),
            None => Ok(m),
        }
    }

    fn check_central(&self, set: SubsetMask) -> Result<u32, DomainError> {
        self.rank_of(set)
    }

    /// `cl(X) = {e : X ∪ e central and r(X ∪ e) = r(X)}`.
    pub fn closure(&self, set: SubsetMask) -> Result<SubsetMask, DomainError> {
        let r = self.check_central(set)?;
        Ok(self
            .elements
            .iter()
            .filter(|&e| self.central.rank(set.with(e)) == Some(r))
            .collect())
    }

    /// All flats in canonical order.
    pub fn flats(&self) -> Vec<SubsetMask> {
        let mut out: Vec<_> = self
            .central
            .iter()
            .filter(|&(s, r)| {
                self.elements
                    .difference(s)
                    .iter()
                    .all(|e| self.central.rank(s.with(e)) != Some(r))
            })
            .map(|(s, _)| s)
            .collect();
        self.ground.sort_canonical(&mut out);
        out
    }

    pub fn is_independent(&self, set: SubsetMask) -> bool {
        self.central.rank(set) == Some(set.len() as u32)
    }

    /// Maximal independent central sets, in canonical order.
    pub fn bases(&self) -> Vec<SubsetMask> {
        let mut out: Vec<_> = self
            .central
            .iter()
            .filter(|&(s, r)| r as usize == s.len())
            .filter(|&(s, _)| {
                self.elements
                    .difference(s)
                    .iter()
                    .all(|e| !self.is_independent(s.with(e)))
            })
            .map(|(s, _)| s)
            .collect();
        self.ground.sort_canonical(&mut out);
        out
    }

    pub fn is_basis(&self, set: SubsetMask) -> bool {
        self.is_independent(set) && set.len() == self.rank as usize
    }

    /// Minimal dependent central sets, in canonical order.
    pub fn circuits(&self) -> Vec<SubsetMask> {
        let mut out: Vec<_> = self
            .central
            .iter()
            .filter(|&(s, r)| (r as usize) < s.len())
            .filter(|&(s, _)| s.iter().all(|e| self.is_independent(s.without(e))))
            .map(|(s, _)| s)
            .collect();
        self.ground.sort_canonical(&mut out);
        out
    }

    /// Classify `e`; loops and non-central elements are decided first.
    ///
    /// `e` is an isthmus exactly when no central set avoiding `e` reaches
    /// the full rank `r(C)`: such a set would contain a basis without `e`.
    pub fn classify_element(&self, e: usize) -> Result<ElementKind, DomainError> {
        if !self.elements.contains(e) {
            return Err(DomainError::NotInGround(e));
        }
        Ok(match self.central.rank(SubsetMask::singleton(e)) {
            None => ElementKind::NonCentral,
            Some(0) => ElementKind::Loop,
            Some(_) => {
                let avoids_full_rank = self
                    .central
                    .iter()
                    .any(|(s, r)| r == self.rank && !s.contains(e));
                if avoids_full_rank {
                    ElementKind::Ordinary
                } else {
                    ElementKind::Isthmus
                }
            }
        })
    }

    pub fn has_loop(&self) -> bool {
        self.elements
            .iter()
            .any(|e| self.central.rank(SubsetMask::singleton(e)) == Some(0))
    }

    pub fn has_isthmus(&self) -> bool {
        self.elements
            .iter()
            .any(|e| self.classify_element(e) == Ok(ElementKind::Isthmus))
    }

    /// A flat whose restriction has no isthmus.
    pub fn is_cyclic_flat(&self, set: SubsetMask) -> Result<bool, DomainError> {
        if self.closure(set)? != set {
            return Ok(false);
        }
        let restricted = self.restrict(set)?;
        Ok(!restricted.has_isthmus())
    }

    /// The same semimatroid with a different linear order. The order lists
    /// every label of the underlying label set, including labels that a
    /// minor no longer contains.
    pub fn with_order<S: AsRef<str>>(&self, order: &[S]) -> Result<Semimatroid, InputError> {
        let ground = self.ground.with_order(order)?;
        Ok(self.reground(ground))
    }

    pub fn with_order_indices(&self, order: Vec<usize>) -> Result<Semimatroid, InputError> {
        let ground = self.ground.with_order_indices(order)?;
        Ok(self.reground(ground))
    }

    fn reground(&self, ground: GroundSet) -> Semimatroid {
        Semimatroid {
            ground: Arc::new(ground),
            ..self.clone()
        }
    }

    /// Raw data suitable for [`check_axioms`](crate::check_axioms).
    pub fn to_raw(&self) -> RawSemimatroid {
        let central = self.central_sets();
        let rank = central
            .iter()
            .map(|&s| (s, i64::from(self.central.rank(s).unwrap())))
            .collect();
        RawSemimatroid {
            ground: self.ground.clone(),
            elements: self.elements,
            central,
            rank,
        }
    }
}

impl PartialEq for Semimatroid {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ground, &other.ground) || self.ground == other.ground)
            && self.elements == other.elements
            && self.central == other.central
    }
}

impl Eq for Semimatroid {}

impl fmt::Debug for Semimatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.ground;
        let sets: Vec<String> = self
            .central_sets()
            .into_iter()
            .map(|s| format!("{}:{}", g.fmt_set(s), self.central.rank(s).unwrap()))
            .collect();
        f.debug_struct("Semimatroid")
            .field("ground", &g.labels_of(self.elements))
            .field("rank", &self.rank)
            .field("central", &sets)
            .finish()
    }
}
