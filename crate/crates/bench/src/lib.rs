//! Instance builders shared by the benchmarks.

use semimatroid::{from_matroid_rank, random_instance, RandomSpec, Semimatroid};

/// The uniform matroid of rank `k` on `n` elements.
pub fn uniform(k: usize, n: usize) -> Semimatroid {
    let labels: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    from_matroid_rank(&refs, |s| s.len().min(k) as i64).expect("uniform matroids are valid")
}

/// A seeded affine arrangement; the same arguments always give the same instance.
pub fn arrangement(seed: u64, n: usize, d: usize) -> Semimatroid {
    random_instance(RandomSpec { seed, n, d, bound: 2 }).expect("positive dimension and bound")
}
