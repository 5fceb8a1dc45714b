//! Small hand-built instances shared by the unit tests.

use crate::axioms::{check_axioms, RawSemimatroid};
use crate::ground::GroundSet;
use crate::semimatroid::Semimatroid;
use crate::subset::SubsetMask;

fn build(labels: &[&str], central: impl Fn(SubsetMask) -> bool, rank: impl Fn(SubsetMask) -> i64) -> Semimatroid {
    let g = GroundSet::new(labels.iter().copied()).unwrap();
    let sets = g
        .full()
        .subsets()
        .filter(|&s| central(s))
        .map(|s| (s, rank(s)))
        .collect();
    check_axioms(&RawSemimatroid::from_ranked(g, sets)).unwrap()
}

/// Lines `a: x=0`, `b: x=1`, `c: y=0` in the plane.
pub fn plt() -> Semimatroid {
    // a and b are parallel, so {a, b} has no common point.
    build(&["a", "b", "c"], |s| !(s.contains(0) && s.contains(1)), |s| s.len() as i64)
}

/// `U(k, n)` on labels `1..=n`.
pub fn uniform(k: usize, n: usize) -> Semimatroid {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    build(&refs, |_| true, |s| s.len().min(k) as i64)
}

pub fn free(labels: &[&str]) -> Semimatroid {
    build(labels, |_| true, |s| s.len() as i64)
}

pub fn single_loop() -> Semimatroid {
    build(&["e"], |_| true, |_| 0)
}

pub fn single_isthmus() -> Semimatroid {
    free(&["e"])
}

pub fn empty() -> Semimatroid {
    build(&[], |_| true, |_| 0)
}
