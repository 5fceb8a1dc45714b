use std::collections::HashMap;

use super::Invariant;
use crate::poly::{Monomial, SparsePoly, Var};
use crate::semimatroid::Semimatroid;
use crate::vars;

/// Direct evaluation of the defining sum over central sets.
pub(super) fn subset_sum(sm: &Semimatroid, inv: Invariant) -> SparsePoly {
    let r = sm.rank() as i32;
    let mut out = SparsePoly::zero();
    if inv == Invariant::Tutte {
        let mut lam: HashMap<i32, SparsePoly> = HashMap::new();
        let mut xm1: HashMap<i32, SparsePoly> = HashMap::new();
        for (a, ra) in sm.central().iter() {
            let ra = ra as i32;
            let p = lam
                .entry(r - ra)
                .or_insert_with(|| (&vars::lambda() - &vars::c(1)).pow((r - ra) as u32));
            let q = xm1
                .entry(a.len() as i32 - ra)
                .or_insert_with(|| (&vars::x() - &vars::c(1)).pow((a.len() as i32 - ra) as u32));
            out += &(&*p * &*q);
        }
        return out;
    }
    for (a, ra) in sm.central().iter() {
        let ra = ra as i32;
        let size = a.len() as i32;
        let per_element = || a.iter().map(|e| (Var::X(e as u8), 1));
        let (pairs, coeff): (Vec<(Var, i32)>, i64) = match inv {
            Invariant::Z => (std::iter::once((Var::Lambda, -ra)).chain(per_element()).collect(), 1),
            Invariant::Dichromatic => (vec![(Var::Lambda, -ra), (Var::x(), size)], 1),
            Invariant::SubsetCorank => {
                (std::iter::once((Var::Lambda, r - ra)).chain(per_element()).collect(), 1)
            }
            Invariant::SizeCorank => (vec![(Var::Lambda, r - ra), (Var::x(), size)], 1),
            Invariant::RankGenerating => (vec![(Var::Lambda, r - ra), (Var::x(), size - ra)], 1),
            Invariant::Characteristic => {
                (vec![(Var::Lambda, r - ra)], if size % 2 == 0 { 1 } else { -1 })
            }
            Invariant::Tutte => unreachable!(),
        };
        let pairs = pairs.into_iter().filter(|&(_, e)| e != 0);
        out += SparsePoly::term(Monomial::from_pairs(pairs).expect("valid exponents"), coeff);
    }
    out
}
