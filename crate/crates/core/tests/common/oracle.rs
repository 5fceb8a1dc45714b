//! Reference computations that share no code with the library: rank
//! tables from first principles, polynomials as exponent-vector maps with
//! machine-integer coefficients, and a direct axiom checker.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use semimatroid::{SparsePoly, Var};

/// Central family as `(bitmask, rank)` pairs.
pub type Family = Vec<(u64, u32)>;

pub fn popcount(m: u64) -> u32 {
    m.count_ones()
}

pub fn full_family(n: usize, rank: impl Fn(u64) -> u32) -> Family {
    (0..1u64 << n).map(|m| (m, rank(m))).collect()
}

pub fn uniform_family(k: u32, n: usize) -> Family {
    full_family(n, |m| popcount(m).min(k))
}

/// Graphic matroid: rank is vertices minus components of the spanning
/// subgraph, found with a small union-find.
pub fn graphic_family(vertices: usize, edges: &[(usize, usize)]) -> Family {
    full_family(edges.len(), |m| {
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(p: &mut Vec<usize>, v: usize) -> usize {
            let mut v = v;
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        let mut merged = 0;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if m >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    merged += 1;
                }
            }
        }
        merged
    })
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in 0..cols {
                    let v = &f * &rows[rank][j];
                    rows[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Arrangement `<normal, p> = offset` with integer data; every subset is
/// tested from scratch by rational Gauss-Jordan elimination.
pub fn arrangement_family(hyperplanes: &[(Vec<i64>, i64)]) -> Family {
    let n = hyperplanes.len();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut out = Vec::new();
    for m in 0..1u64 << n {
        let chosen: Vec<&(Vec<i64>, i64)> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| &hyperplanes[i]).collect();
        let normals: Vec<Vec<BigRational>> = chosen.iter().map(|(nv, _)| nv.iter().map(|&v| q(v)).collect()).collect();
        let augmented: Vec<Vec<BigRational>> = chosen
            .iter()
            .map(|(nv, c)| nv.iter().map(|&v| q(v)).chain([q(*c)]).collect())
            .collect();
        let r = rational_rank(normals);
        if r == rational_rank(augmented) {
            out.push((m, r as u32));
        }
    }
    out
}

/// Exponents over `[λ, x, x_0, x_1, ...]`.
pub type Poly = BTreeMap<Vec<i32>, i128>;

fn add(p: &mut Poly, e: Vec<i32>, c: i128) {
    let slot = p.entry(e.clone()).or_insert(0);
    *slot += c;
    if *slot == 0 {
        p.remove(&e);
    }
}

fn binom(n: u32, k: u32) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

pub fn rank_of(f: &Family) -> u32 {
    f.iter().map(|&(_, r)| r).max().unwrap_or(0)
}

pub fn width(n: usize) -> usize {
    n + 2
}

fn mono(n: usize, lam: i32, x: i32, per: u64) -> Vec<i32> {
    let mut e = vec![0; width(n)];
    e[0] = lam;
    e[1] = x;
    for i in 0..n {
        if per >> i & 1 == 1 {
            e[2 + i] = 1;
        }
    }
    e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Z,
    Dichromatic,
    Tutte,
    Characteristic,
    SubsetCorank,
    SizeCorank,
    RankGenerating,
}

/// The defining subset sum, expanded by hand.
pub fn invariant(f: &Family, n: usize, which: Which) -> Poly {
    let r = rank_of(f) as i32;
    let mut p = Poly::new();
    for &(m, ra) in f {
        let (ra, size) = (ra as i32, popcount(m) as i32);
        match which {
            Which::Z => add(&mut p, mono(n, -ra, 0, m), 1),
            Which::Dichromatic => add(&mut p, mono(n, -ra, size, 0), 1),
            Which::SubsetCorank => add(&mut p, mono(n, r - ra, 0, m), 1),
            Which::SizeCorank => add(&mut p, mono(n, r - ra, size, 0), 1),
            Which::RankGenerating => add(&mut p, mono(n, r - ra, size - ra, 0), 1),
            Which::Characteristic => add(&mut p, mono(n, r - ra, 0, 0), if size % 2 == 0 { 1 } else { -1 }),
            Which::Tutte => {
                let (a, b) = ((r - ra) as u32, (size - ra) as u32);
                for i in 0..=a {
                    for j in 0..=b {
                        let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                        add(&mut p, mono(n, i as i32, j as i32, 0), sign * binom(a, i) * binom(b, j));
                    }
                }
            }
        }
    }
    p
}

/// Library polynomial in oracle form. Only `λ`, `x` and `x_e` may occur.
pub fn from_library(p: &SparsePoly, n: usize) -> Poly {
    let mut out = Poly::new();
    for (m, c) in p.terms() {
        let mut e = vec![0; width(n)];
        for (v, k) in m.iter() {
            let slot = match v {
                Var::Lambda => 0,
                Var::X(i) => 2 + *i as usize,
                v if *v == Var::x() => 1,
                other => panic!("unexpected variable {other:?}"),
            };
            e[slot] = k;
        }
        add(&mut out, e, c.to_i128().expect("coefficient fits"));
    }
    out
}

/// Axioms checked straight from their statements, on plain data.
pub fn satisfies_axioms(f: &[(u64, i64)]) -> bool {
    let rank: HashMap<u64, i64> = f.iter().copied().collect();
    if rank.len() != f.len() || f.is_empty() {
        return false;
    }
    let members: HashSet<u64> = rank.keys().copied().collect();
    for &m in &members {
        let mut sub = m;
        loop {
            if !members.contains(&sub) {
                return false;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
        let r = rank[&m];
        if r < 0 || r > popcount(m) as i64 {
            return false;
        }
    }
    for (&x, &rx) in &rank {
        for (&y, &ry) in &rank {
            if x & y == x && rx > ry {
                return false;
            }
            if let (Some(&ru), Some(&ri)) = (rank.get(&(x | y)), rank.get(&(x & y))) {
                if ru + ri > rx + ry {
                    return false;
                }
            }
            if rx == rank[&(x & y)] && !members.contains(&(x | y)) {
                return false;
            }
            if rx < ry {
                let extra = y & !x;
                let can_grow = (0..64).any(|e| extra >> e & 1 == 1 && members.contains(&(x | 1 << e)));
                if !can_grow {
                    return false;
                }
            }
        }
    }
    true
}
