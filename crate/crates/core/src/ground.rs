use std::collections::HashMap;

use crate::error::InputError;
use crate::subset::{SubsetMask, MAX_ELEMENTS};

/// Element labels together with the linear order used for activities.
///
/// Elements are stored in document order; that storage index is the bit
/// position inside a [`SubsetMask`] and the order in which per-element
/// variables are printed. The activity order is a separate permutation
/// that defaults to storage order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Storage indices listed from smallest to largest in the linear order.
    order: Vec<usize>,
    /// `position[i]` is the rank of storage index `i` in the linear order.
    position: Vec<usize>,
}

pub(crate) fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, InputError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(InputError::TooManyElements(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if !valid_label(l) {
                return Err(InputError::InvalidLabel(l.clone()));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(InputError::DuplicateLabel(l.clone()));
            }
        }
        let order: Vec<usize> = (0..labels.len()).collect();
        Ok(GroundSet {
            position: order.clone(),
            order,
            labels,
            index,
        })
    }

    pub fn empty() -> Self {
        GroundSet::new(Vec::<String>::new()).expect("empty ground set is valid")
    }

    /// Same labels, with the linear order given as a full list of labels.
    pub fn with_order<S: AsRef<str>>(&self, order: &[S]) -> Result<Self, InputError> {
        if order.len() != self.len() {
            return Err(InputError::BadOrder);
        }
        let mut seen = SubsetMask::EMPTY;
        let mut idx = Vec::with_capacity(order.len());
        for l in order {
            let i = self.index_of(l.as_ref())?;
            if seen.contains(i) {
                return Err(InputError::BadOrder);
            }
            seen = seen.with(i);
            idx.push(i);
        }
        self.with_order_indices(idx)
    }

    /// Same labels, with the linear order given as storage indices.
    pub fn with_order_indices(&self, order: Vec<usize>) -> Result<Self, InputError> {
        let n = self.len();
        if order.len() != n {
            return Err(InputError::BadOrder);
        }
        let mut position = vec![usize::MAX; n];
        for (p, &i) in order.iter().enumerate() {
            if i >= n || position[i] != usize::MAX {
                return Err(InputError::BadOrder);
            }
            position[i] = p;
        }
        Ok(GroundSet {
            labels: self.labels.clone(),
            index: self.index.clone(),
            order,
            position,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, InputError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| InputError::UnknownLabel(label.to_string()))
    }

    /// Storage indices in increasing linear order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of storage index `i` in the linear order.
    #[inline]
    pub fn position(&self, i: usize) -> usize {
        self.position[i]
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    /// The smallest element of `set` under the linear order.
    pub fn min_in(&self, set: SubsetMask) -> Option<usize> {
        set.iter().min_by_key(|&i| self.position[i])
    }

    /// Parse a list of labels into a mask, rejecting repeats.
    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask, InputError> {
        let mut m = SubsetMask::EMPTY;
        for l in labels {
            let i = self.index_of(l.as_ref())?;
            if m.contains(i) {
                return Err(InputError::RepeatedInSubset {
                    label: l.as_ref().to_string(),
                });
            }
            m = m.with(i);
        }
        Ok(m)
    }

    /// Labels of `set`, in the linear order.
    pub fn labels_of(&self, set: SubsetMask) -> Vec<String> {
        self.sorted(set).map(|i| self.labels[i].clone()).collect()
    }

    /// Indices of `set` in the linear order.
    pub fn sorted(&self, set: SubsetMask) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().copied().filter(move |&i| set.contains(i))
    }

    /// `{a, c}` style rendering used in diagnostics.
    pub fn fmt_set(&self, set: SubsetMask) -> String {
        format!("{{{}}}", self.labels_of(set).join(", "))
    }

    /// Canonical listing comparator: by cardinality, then lexicographically
    /// on the elements sorted by the linear order.
    pub fn canonical_cmp(&self, a: SubsetMask, b: SubsetMask) -> std::cmp::Ordering {
        a.len()
            .cmp(&b.len())
            .then_with(|| self.sorted(a).map(|i| self.position[i]).cmp(self.sorted(b).map(|i| self.position[i])))
    }

    pub fn sort_canonical(&self, sets: &mut [SubsetMask]) {
        sets.sort_by(|&a, &b| self.canonical_cmp(a, b));
    }
}
