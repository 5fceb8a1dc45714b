//! The shared test corpus. Every instance carries the library's
//! semimatroid together with the family computed by an oracle.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use semimatroid::ingest::random_arrangement;
use semimatroid::{from_arrangement, from_matroid_rank, RandomSpec, Semimatroid};

use super::oracle::{self, Family};

pub struct Instance {
    pub name: String,
    pub sm: Semimatroid,
    pub family: Family,
}

impl Instance {
    pub fn n(&self) -> usize {
        self.sm.len()
    }
}

fn from_family(name: String, labels: Vec<String>, family: Family) -> Instance {
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let table: std::collections::HashMap<u64, u32> = family.iter().copied().collect();
    let sm = from_matroid_rank(&refs, |s| i64::from(table[&s.bits()])).expect("matroid is valid");
    Instance { name, sm, family }
}

pub fn uniform(k: u32, n: usize) -> Instance {
    let labels = (1..=n).map(|i| format!("u{i}")).collect();
    from_family(format!("U({k},{n})"), labels, oracle::uniform_family(k, n))
}

pub fn uniform_matroids() -> Vec<Instance> {
    (0..=6).flat_map(|n| (0..=n as u32).map(move |k| uniform(k, n))).collect()
}

/// Every labelled simple graph on 1 to 4 vertices.
pub fn graphic_matroids() -> Vec<Instance> {
    let mut out = Vec::new();
    for v in 1..=4usize {
        let all: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        for pick in 0..1u64 << all.len() {
            let edges: Vec<(usize, usize)> = (0..all.len()).filter(|i| pick >> i & 1 == 1).map(|i| all[i]).collect();
            let labels = edges.iter().map(|(a, b)| format!("e{a}{b}")).collect();
            let family = oracle::graphic_family(v, &edges);
            out.push(from_family(format!("K{v}[{pick:b}]"), labels, family));
        }
    }
    out
}

pub fn random_spec(i: u64) -> RandomSpec {
    RandomSpec {
        seed: 1000 + i,
        n: 1 + (i % 10) as usize,
        d: 1 + (i / 10 % 4) as usize,
        bound: 1 + (i % 3) as u32,
    }
}

pub fn arrangement(spec: RandomSpec) -> Instance {
    let doc = random_arrangement(spec).expect("valid spec");
    let sm = from_arrangement(&doc).expect("arrangements are semimatroids");
    let planes: Vec<(Vec<i64>, i64)> = doc
        .hyperplanes
        .iter()
        .map(|h| (h.normal.iter().map(|q| q.num).collect(), h.offset.num))
        .collect();
    Instance {
        name: format!("arr(seed={}, n={}, d={}, b={})", spec.seed, spec.n, spec.d, spec.bound),
        sm,
        family: oracle::arrangement_family(&planes),
    }
}

pub fn random_arrangements(count: u64) -> Vec<Instance> {
    (0..count).map(|i| arrangement(random_spec(i))).collect()
}

pub fn full() -> Vec<Instance> {
    let mut all = uniform_matroids();
    all.extend(graphic_matroids());
    all.extend(random_arrangements(120));
    all
}

/// Deterministic permutations of `0..n`.
pub fn random_orders(n: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                p.swap(i, j);
            }
            p
        })
        .collect()
}

pub fn all_orders(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
        }
        for i in 0..rest.len() {
            let e = rest.remove(i);
            prefix.push(e);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, e);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}
