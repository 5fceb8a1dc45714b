use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::axioms::{check_axioms, RawSemimatroid};
use crate::error::{InputError, Result};
use crate::ground::GroundSet;
use crate::semimatroid::Semimatroid;
use crate::subset::SubsetMask;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalDoc {
    pub num: i64,
    pub den: i64,
}

impl RationalDoc {
    pub fn integer(n: i64) -> Self {
        RationalDoc { num: n, den: 1 }
    }

    fn to_big(self) -> Result<BigRational, InputError> {
        if self.den == 0 {
            return Err(InputError::ZeroDenominator);
        }
        Ok(BigRational::new(self.num.into(), self.den.into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneDoc {
    pub label: String,
    pub normal: Vec<RationalDoc>,
    pub offset: RationalDoc,
}

/// Affine hyperplanes `<normal, p> = offset` in rational `d`-space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    pub dimension: usize,
    pub hyperplanes: Vec<HyperplaneDoc>,
}

/// Row `[normal | offset]` scaled to coprime integers.
fn integer_row(h: &HyperplaneDoc, d: usize) -> Result<Vec<BigInt>, InputError> {
    if h.normal.len() != d {
        return Err(InputError::DimensionMismatch {
            label: h.label.clone(),
            expected: d,
            found: h.normal.len(),
        });
    }
    let entries = h
        .normal
        .iter()
        .chain(std::iter::once(&h.offset))
        .map(|q| q.to_big())
        .collect::<Result<Vec<_>, _>>()?;
    if entries[..d].iter().all(Zero::is_zero) {
        return Err(InputError::ZeroNormal(h.label.clone()));
    }
    let lcm = entries.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let row: Vec<BigInt> = entries.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    Ok(row.into_iter().map(|v| v / &g).collect())
}

/// Fraction-free (Bareiss) row reduction. Returns the pivot columns.
///
/// After each step every entry below the pivot rows is a minor of the
/// original matrix, so the division by the previous pivot is exact.
pub fn bareiss_pivots(mut m: Vec<Vec<BigInt>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    for col in 0..cols {
        let k = pivots.len();
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(k, p);
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in col + 1..cols {
                let v = &pivot_row[col] * &row[j] - &row[col] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = m[k][col].clone();
        pivots.push(col);
    }
    pivots
}

/// `(rank of the normals, whether the system is consistent)`.
fn analyse(rows: &[&Vec<BigInt>], d: usize) -> (usize, bool) {
    let pivots = bareiss_pivots(rows.iter().map(|r| (*r).clone()).collect());
    let inconsistent = pivots.last() == Some(&d);
    (pivots.len() - usize::from(inconsistent), !inconsistent)
}

/// Central sets are the subsets with a common point; their rank is the rank
/// of their normal vectors. The result is run through the axiom checker.
pub fn from_arrangement(doc: &ArrangementDoc) -> Result<Semimatroid> {
    let d = doc.dimension;
    let ground = GroundSet::new(doc.hyperplanes.iter().map(|h| h.label.clone()))?;
    let rows = doc
        .hyperplanes
        .iter()
        .map(|h| integer_row(h, d))
        .collect::<Result<Vec<_>, _>>()?;

    // Depth-first over sets listed in increasing index order; a set that is
    // not central has no central superset, so its branch is cut.
    let n = rows.len();
    let mut sets = vec![(SubsetMask::EMPTY, 0i64)];
    let mut stack = vec![(SubsetMask::EMPTY, 0usize)];
    while let Some((set, next)) = stack.pop() {
        for e in next..n {
            let grown = set.with(e);
            let chosen: Vec<&Vec<BigInt>> = grown.iter().map(|i| &rows[i]).collect();
            let (rank, consistent) = analyse(&chosen, d);
            if consistent {
                sets.push((grown, rank as i64));
                stack.push((grown, e + 1));
            }
        }
    }
    Ok(check_axioms(&RawSemimatroid::from_ranked(ground, sets))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn line(label: &str, a: i64, b: i64, c: i64) -> HyperplaneDoc {
        HyperplaneDoc {
            label: label.into(),
            normal: vec![RationalDoc::integer(a), RationalDoc::integer(b)],
            offset: RationalDoc::integer(c),
        }
    }

    fn plane(hs: Vec<HyperplaneDoc>) -> ArrangementDoc {
        ArrangementDoc {
            dimension: 2,
            hyperplanes: hs,
        }
    }

    #[test]
    fn parallel_pair_and_a_crossing_line() {
        let sm = from_arrangement(&plane(vec![line("a", 1, 0, 0), line("b", 1, 0, 1), line("c", 0, 1, 0)])).unwrap();
        assert_eq!(sm, plt());
    }

    #[test]
    fn concurrent_lines_form_a_matroid() {
        let sm = from_arrangement(&plane(vec![line("1", 1, 0, 0), line("2", 0, 1, 0), line("3", 1, 1, 0)])).unwrap();
        assert_eq!(sm, uniform(2, 3));
    }

    #[test]
    fn single_hyperplane() {
        let sm = from_arrangement(&plane(vec![line("e", 2, 3, 5)])).unwrap();
        assert_eq!(sm, single_isthmus());
    }

    #[test]
    fn rational_entries_are_cleared() {
        // x/2 = 1/3 and 3x = 2 are the same line.
        let h = HyperplaneDoc {
            label: "p".into(),
            normal: vec![RationalDoc { num: 1, den: 2 }, RationalDoc::integer(0)],
            offset: RationalDoc { num: 1, den: 3 },
        };
        let sm = from_arrangement(&plane(vec![h, line("q", 3, 0, 2)])).unwrap();
        assert_eq!(sm.rank(), 1);
        assert_eq!(sm.central().len(), 4);
        assert_eq!(sm.circuits(), vec![sm.elements()]);
    }

    #[test]
    fn malformed_documents() {
        let zero = plane(vec![line("z", 0, 0, 1)]);
        assert!(matches!(
            from_arrangement(&zero),
            Err(crate::Error::Input(InputError::ZeroNormal(_)))
        ));
        let mut short = plane(vec![line("s", 1, 0, 0)]);
        short.hyperplanes[0].normal.pop();
        assert!(matches!(
            from_arrangement(&short),
            Err(crate::Error::Input(InputError::DimensionMismatch { .. }))
        ));
        let mut bad = plane(vec![line("s", 1, 0, 0)]);
        bad.hyperplanes[0].offset.den = 0;
        assert!(matches!(
            from_arrangement(&bad),
            Err(crate::Error::Input(InputError::ZeroDenominator))
        ));
    }

    #[test]
    fn bareiss_matches_small_ranks() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
        };
        assert_eq!(bareiss_pivots(m(&[&[1, 2], &[2, 4]])), vec![0]);
        assert_eq!(bareiss_pivots(m(&[&[0, 1, 0], &[0, 0, 1]])), vec![1, 2]);
        assert_eq!(bareiss_pivots(m(&[&[2, 0, 1], &[1, 1, 0], &[3, 1, 1]])), vec![0, 1]);
    }
}
