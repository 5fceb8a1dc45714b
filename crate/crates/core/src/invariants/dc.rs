use std::collections::HashMap;

use super::Invariant;
use crate::minors::Fingerprint;
use crate::poly::SparsePoly;
use crate::semimatroid::{ElementKind, Semimatroid};
use crate::subset::SubsetMask;
use crate::vars::{self, lambda, x, x_e};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DcStats {
    /// Recursive calls made (including cache hits).
    pub calls: usize,
    pub cache_hits: usize,
}

/// Multiplier for the loop case, the isthmus case, and the weight on the
/// contraction term in the ordinary case.
fn factors(inv: Invariant, e: usize) -> (SparsePoly, SparsePoly, SparsePoly) {
    let linv = vars::lambda_pow(-1);
    let one = vars::c(1);
    match inv {
        Invariant::Z => (&x_e(e) + &one, &(&x_e(e) * &linv) + &one, &x_e(e) * &linv),
        Invariant::Dichromatic => (&x() + &one, &(&x() * &linv) + &one, &x() * &linv),
        Invariant::SubsetCorank => (&x_e(e) + &one, &x_e(e) + &lambda(), x_e(e)),
        Invariant::SizeCorank => (&x() + &one, &x() + &lambda(), x()),
        Invariant::RankGenerating => (&x() + &one, &lambda() + &one, one),
        Invariant::Tutte => (x(), lambda(), one),
        Invariant::Characteristic => (SparsePoly::zero(), &lambda() - &one, vars::c(-1)),
    }
}

struct Recursion {
    inv: Invariant,
    memo: Option<HashMap<(SubsetMask, Fingerprint), SparsePoly>>,
    stats: DcStats,
}

impl Recursion {
    fn eval(&mut self, sm: &Semimatroid) -> SparsePoly {
        self.stats.calls += 1;
        let Some(e) = sm.ordered_elements().next() else {
            return SparsePoly::one();
        };
        // Scalar invariants only see structure; multivariate ones also see
        // which elements carry which variables.
        let key = self.memo.as_ref().map(|_| {
            let owner = if self.inv.is_multivariate() {
                sm.elements()
            } else {
                SubsetMask::EMPTY
            };
            (owner, Fingerprint::of(sm))
        });
        if let (Some(memo), Some(k)) = (&self.memo, &key) {
            if let Some(p) = memo.get(k) {
                self.stats.cache_hits += 1;
                return p.clone();
            }
        }

        let kind = sm.classify_element(e).expect("pivot is in the ground set");
        let deleted = sm.delete_element(e).expect("element of ground set");
        let (loop_f, isthmus_f, contract_w) = factors(self.inv, e);
        let value = match kind {
            ElementKind::NonCentral => self.eval(&deleted),
            ElementKind::Loop => &loop_f * &self.eval(&deleted),
            ElementKind::Isthmus => &isthmus_f * &self.eval(&deleted),
            ElementKind::Ordinary => {
                let contracted = sm.contract_element(e).expect("{e} is central");
                let d = self.eval(&deleted);
                let c = self.eval(&contracted);
                &d + &(&contract_w * &c)
            }
        };

        if let (Some(memo), Some(k)) = (&mut self.memo, key) {
            memo.insert(k, value.clone());
        }
        value
    }
}

/// Deletion–contraction on the smallest remaining element (in the linear
/// order), with non-central and loop pivots handled before isthmus and
/// ordinary ones. The cache lives for this one call.
pub fn deletion_contraction(sm: &Semimatroid, inv: Invariant, memoize: bool) -> (SparsePoly, DcStats) {
    let mut rec = Recursion {
        inv,
        memo: memoize.then(HashMap::new),
        stats: DcStats::default(),
    };
    let p = rec.eval(sm);
    (p, rec.stats)
}
