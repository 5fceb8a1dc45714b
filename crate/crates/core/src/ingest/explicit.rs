use serde::{Deserialize, Serialize};

use crate::axioms::{check_axioms, RawSemimatroid};
use crate::error::{Error, InputError, Result};
use crate::ground::GroundSet;
use crate::semimatroid::Semimatroid;
use crate::subset::SubsetMask;

/// A semimatroid written out in full: labels, central sets and ranks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitDoc {
    pub ground: Vec<String>,
    pub central: Vec<Vec<String>>,
    pub rank: Vec<(Vec<String>, i64)>,
}

impl ExplicitDoc {
    /// The unvalidated data, with labels resolved to masks.
    pub fn to_raw(&self) -> Result<RawSemimatroid, InputError> {
        let ground = GroundSet::new(self.ground.iter().cloned())?;
        let central = self
            .central
            .iter()
            .map(|s| ground.mask_of(s))
            .collect::<Result<Vec<_>, _>>()?;
        let rank = self
            .rank
            .iter()
            .map(|(s, r)| Ok((ground.mask_of(s)?, *r)))
            .collect::<Result<Vec<_>, InputError>>()?;
        Ok(RawSemimatroid::new(ground, central, rank))
    }
}

pub fn from_explicit(doc: &ExplicitDoc) -> Result<Semimatroid> {
    Ok(check_axioms(&doc.to_raw()?)?)
}

/// The explicit document of `sm`. Labels follow storage order, sets are
/// listed in canonical order and each set lists its labels in the linear
/// order. Minors keep only their own elements.
pub fn emit(sm: &Semimatroid) -> ExplicitDoc {
    let g = sm.ground();
    let sets = sm.central_sets();
    ExplicitDoc {
        ground: sm.elements().iter().map(|e| g.label(e).to_string()).collect(),
        central: sets.iter().map(|&s| g.labels_of(s)).collect(),
        rank: sets
            .iter()
            .map(|&s| (g.labels_of(s), i64::from(sm.central().rank(s).expect("listed"))))
            .collect(),
    }
}

/// A matroid given by its rank on every subset, as the semimatroid whose
/// central family is the full power set.
pub fn from_matroid_rank(labels: &[&str], rank: impl Fn(SubsetMask) -> i64) -> Result<Semimatroid> {
    let ground = GroundSet::new(labels.iter().copied())?;
    let sets: Vec<_> = ground.full().subsets().map(|s| (s, rank(s))).collect();
    Ok(check_axioms(&RawSemimatroid::from_ranked(ground, sets))?)
}

/// Like [`from_matroid_rank`] but from an explicit table, which must list
/// every subset exactly once.
pub fn from_matroid_table(labels: &[&str], table: &[(Vec<String>, i64)]) -> Result<Semimatroid> {
    let ground = GroundSet::new(labels.iter().copied())?;
    let expected = 1usize << labels.len();
    if table.len() != expected {
        return Err(Error::Input(InputError::IncompleteRankTable {
            expected,
            found: table.len(),
        }));
    }
    let sets = table
        .iter()
        .map(|(s, r)| Ok((ground.mask_of(s)?, *r)))
        .collect::<Result<Vec<_>, InputError>>()?;
    Ok(check_axioms(&RawSemimatroid::from_ranked(ground, sets))?)
}
