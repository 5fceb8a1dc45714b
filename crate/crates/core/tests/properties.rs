mod common;

use std::collections::HashMap;

use common::corpus;
use common::oracle;
use proptest::prelude::*;
use semimatroid::invariants::{deletion_contraction, Invariant};
use semimatroid::{
    check_axioms, emit, from_explicit, random_instance, ElementKind, GroundSet, Monomial, RandomSpec, Semimatroid,
    SparsePoly, SubsetMask, Var,
};

fn ground() -> GroundSet {
    GroundSet::new(["a", "b"]).unwrap()
}

fn small_poly() -> impl Strategy<Value = SparsePoly> {
    let term = (-2i32..=2, -1i32..=2, 0i32..=2, 0i32..=1, -4i64..=4);
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        ts.into_iter()
            .map(|(l, xi, xa, yb, c)| {
                let m = Monomial::from_pairs([
                    (Var::Lambda, l),
                    (Var::Xi, xi),
                    (Var::X(0), xa),
                    (Var::Y(1), yb),
                ])
                .unwrap();
                SparsePoly::term(m, c)
            })
            .sum()
    })
}

fn spec() -> impl Strategy<Value = RandomSpec> {
    (any::<u64>(), 0usize..=7, 1usize..=3, 1u32..=2).prop_map(|(seed, n, d, bound)| RandomSpec { seed, n, d, bound })
}

fn instance() -> impl Strategy<Value = Semimatroid> {
    spec().prop_map(|s| random_instance(s).unwrap())
}

fn same_structure(a: &Semimatroid, b: &Semimatroid) -> bool {
    a.elements() == b.elements() && a.central_sets() == b.central_sets()
        && a.central_sets().iter().all(|&s| a.rank_of(s) == b.rank_of(s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &SparsePoly::one(), p.clone());
    }

    #[test]
    fn text_round_trip(p in small_poly()) {
        let g = ground();
        let text = p.to_text(&g);
        prop_assert_eq!(SparsePoly::parse(&text, &g).unwrap(), p);
    }

    #[test]
    fn substitution_identity_and_composition(p in small_poly()) {
        let id = p.subs([(Var::X(0), SparsePoly::var(Var::X(0)))]).unwrap();
        prop_assert_eq!(&id, &p);
        let both = p
            .subs([(Var::X(0), &SparsePoly::var(Var::x()) + &SparsePoly::one()), (Var::Y(1), SparsePoly::constant(3))])
            .unwrap();
        let stepwise = p
            .subs([(Var::X(0), &SparsePoly::var(Var::x()) + &SparsePoly::one())])
            .unwrap()
            .subs([(Var::Y(1), SparsePoly::constant(3))])
            .unwrap();
        prop_assert_eq!(both, stepwise);
    }

    #[test]
    fn closure_is_a_closure(sm in instance()) {
        for x in sm.central_sets() {
            let c = sm.closure(x).unwrap();
            prop_assert!(x.is_subset_of(c));
            prop_assert_eq!(sm.closure(c).unwrap(), c);
            prop_assert_eq!(sm.rank_of(c).unwrap(), sm.rank_of(x).unwrap());
        }
    }

    #[test]
    fn bases_circuits_and_kinds(sm in instance()) {
        let bases = sm.bases();
        prop_assert!(bases.iter().all(|b| b.len() as u32 == sm.rank()));
        for c in sm.circuits() {
            prop_assert_eq!(sm.rank_of(c).unwrap() as usize, c.len() - 1);
        }
        for e in sm.elements().iter() {
            match sm.classify_element(e).unwrap() {
                ElementKind::Loop | ElementKind::NonCentral => prop_assert!(bases.iter().all(|b| !b.contains(e))),
                ElementKind::Isthmus => prop_assert!(bases.iter().all(|b| b.contains(e))),
                ElementKind::Ordinary => {}
            }
        }
    }

    #[test]
    fn results_survive_revalidation(sm in instance()) {
        let again = check_axioms(&sm.to_raw()).unwrap();
        prop_assert!(same_structure(&sm, &again));
        prop_assert_eq!(from_explicit(&emit(&sm)).unwrap(), sm);
    }

    #[test]
    fn minors_compose(sm in instance(), a in any::<u64>(), b in any::<u64>()) {
        let full = sm.elements();
        let s1 = SubsetMask::from_bits(a).intersection(full);
        let s2 = SubsetMask::from_bits(b).intersection(full);
        let twice = sm.delete(s1).unwrap().delete(s2.difference(s1)).unwrap();
        prop_assert!(same_structure(&twice, &sm.delete(s1.union(s2)).unwrap()));

        let central = sm.central_sets();
        let x = central[a as usize % central.len()];
        let cx = sm.contract(x).unwrap();
        prop_assert!(check_axioms(&cx.to_raw()).is_ok());
        prop_assert_eq!(cx.rank(), sm.rank() - sm.rank_of(x).unwrap());
        for &y in cx.central_sets().iter() {
            let joint = sm.contract(x.union(y)).unwrap();
            prop_assert!(same_structure(&cx.contract(y).unwrap(), &joint));
        }
        for e in full.difference(x).iter() {
            let del = sm.delete(SubsetMask::singleton(e)).unwrap();
            if del.is_central(x) {
                let one = cx.delete(SubsetMask::singleton(e)).unwrap();
                prop_assert!(same_structure(&one, &del.contract(x).unwrap()));
            }
        }
    }

    #[test]
    fn memo_is_transparent(sm in instance()) {
        for inv in Invariant::ALL {
            prop_assert_eq!(deletion_contraction(&sm, inv, true).0, deletion_contraction(&sm, inv, false).0);
        }
    }

    #[test]
    fn activity_records_are_consistent(sm in instance()) {
        for rec in sm.all_activities() {
            prop_assert!(rec.internally_active.is_subset_of(rec.basis));
            for e in rec.externally_active.iter() {
                prop_assert!(!rec.basis.contains(e) && sm.is_central(rec.basis.with(e)));
            }
            for (&e, &c) in &rec.fund_circuits {
                prop_assert!(c.contains(e) && c.is_subset_of(rec.basis.with(e)));
                prop_assert!(sm.circuits().contains(&c));
                prop_assert_eq!(sm.ground().min_in(c) == Some(e), rec.externally_active.contains(e));
            }
            for (&e, &c) in &rec.fund_cocircuits {
                prop_assert!(c.difference(SubsetMask::singleton(e)).is_disjoint(rec.basis));
                prop_assert_eq!(sm.ground().min_in(c) == Some(e), rec.internally_active.contains(e));
            }
        }
    }
}

/// Bases, circuits and flats straight from a full rank table.
fn brute_force(n: usize, rank: &HashMap<u64, u32>) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let r = rank.values().copied().max().unwrap_or(0);
    let all: Vec<u64> = (0..1u64 << n).collect();
    let bases = all.iter().copied().filter(|&m| m.count_ones() == r && rank[&m] == r).collect();
    let dependent = |m: u64| rank[&m] < m.count_ones();
    let circuits = all
        .iter()
        .copied()
        .filter(|&m| dependent(m) && (0..n).filter(|i| m >> i & 1 == 1).all(|i| !dependent(m & !(1 << i))))
        .collect();
    let flats = all
        .iter()
        .copied()
        .filter(|&m| (0..n).filter(|i| m >> i & 1 == 0).all(|i| rank[&(m | 1 << i)] > rank[&m]))
        .collect();
    (bases, circuits, flats)
}

#[test]
fn graphic_matroids_match_brute_force() {
    for inst in corpus::graphic_matroids() {
        let table: HashMap<u64, u32> = inst.family.iter().copied().collect();
        let (mut b, mut c, mut f) = brute_force(inst.n(), &table);
        let bits = |v: Vec<SubsetMask>| {
            let mut v: Vec<u64> = v.into_iter().map(SubsetMask::bits).collect();
            v.sort();
            v
        };
        b.sort();
        c.sort();
        f.sort();
        assert_eq!(bits(inst.sm.bases()), b, "{}", inst.name);
        assert_eq!(bits(inst.sm.circuits()), c, "{}", inst.name);
        assert_eq!(bits(inst.sm.flats()), f, "{}", inst.name);
    }
}

#[test]
fn arrangement_families_match_rational_elimination() {
    for inst in corpus::random_arrangements(40) {
        let mut lib: Vec<(u64, u32)> = inst.sm.central().iter().map(|(s, r)| (s.bits(), r)).collect();
        lib.sort();
        let mut want = inst.family.clone();
        want.sort();
        assert_eq!(lib, want, "{}", inst.name);
    }
}

#[test]
fn oracle_axiom_checker_agrees_on_valid_instances() {
    for inst in corpus::uniform_matroids().into_iter().chain(corpus::random_arrangements(20)) {
        let plain: Vec<(u64, i64)> = inst.family.iter().map(|&(m, r)| (m, i64::from(r))).collect();
        assert!(oracle::satisfies_axioms(&plain), "{}", inst.name);
    }
}
