//! Exact sparse multivariate polynomials over `BigInt`.
//!
//! `λ` and `ξ` may carry negative exponents (Laurent variables); every other
//! variable is an ordinary polynomial variable. The ring is closed under
//! `+`, `-` and `*`; there is no division apart from exact monomial shifts
//! and substitution of invertible monomials into negative powers.

mod text;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

pub use text::canonical_term_order;

/// A polynomial variable.
///
/// The derived order (λ, ξ, `x_e` by element index, `y_e` by element index,
/// plain names) is the variable order used for printing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Var {
    Lambda,
    Xi,
    /// Per-element variable `x_e`, by storage index of `e`.
    X(u8),
    /// Per-element variable `y_e`, by storage index of `e`.
    Y(u8),
    Plain(Arc<str>),
}

impl Var {
    pub fn plain(name: &str) -> Var {
        Var::Plain(Arc::from(name))
    }

    /// The scalar `x` of the bivariate invariants.
    pub fn x() -> Var {
        Var::plain("x")
    }

    /// The scalar `y` of the scalar convolution identities.
    pub fn y() -> Var {
        Var::plain("y")
    }

    pub fn is_laurent(&self) -> bool {
        matches!(self, Var::Lambda | Var::Xi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("negative exponent on non-Laurent variable {0:?}")]
    NegativeExponent(Var),
    #[error("cannot substitute into a negative power of {0:?}: image is not invertible")]
    NotInvertible(Var),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Sorted `(variable, exponent)` pairs with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[(Var, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, exp: i32) -> Result<Self, PolyError> {
        Monomial::from_pairs([(v, exp)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Result<Self, PolyError> {
        let mut m = Monomial::one();
        for (v, e) in pairs.into_iter().filter(|&(_, e)| e != 0) {
            m = m.mul_unchecked(&Monomial(smallvec::smallvec![(v, e)]));
        }
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), PolyError> {
        match self.0.iter().find(|(v, e)| *e < 0 && !v.is_laurent()) {
            Some((v, _)) => Err(PolyError::NegativeExponent(v.clone())),
            None => Ok(()),
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &Var) -> i32 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map_or(0, |(_, e)| *e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, i32)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    /// Sum of absolute exponents.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Merge two sorted exponent lists, dropping cancellations. Laurent
    /// exponents can only cancel, never turn a valid monomial invalid.
    fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().cloned());
        Monomial(out)
    }

    fn without(&self, v: &Var) -> Monomial {
        Monomial(self.0.iter().filter(|(w, _)| w != v).cloned().collect())
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        self.mul_unchecked(rhs)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v:?}^{e}")?;
        }
        Ok(())
    }
}

/// Sparse polynomial: monomial → nonzero `BigInt` coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: HashMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        SparsePoly::term(Monomial::one(), c)
    }

    pub fn term<C: Into<BigInt>>(m: Monomial, c: C) -> Self {
        let c = c.into();
        let mut terms = HashMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn var(v: Var) -> Self {
        SparsePoly::term(Monomial(smallvec::smallvec![(v, 1)]), 1)
    }

    /// `v^exp`; negative `exp` only for Laurent variables.
    pub fn var_pow(v: Var, exp: i32) -> Result<Self, PolyError> {
        Ok(SparsePoly::term(Monomial::var(v, exp)?, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> SparsePoly {
        let c = c.into();
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * &c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(t, k)| (t * m, k.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by `v^delta`. Fails if a non-Laurent exponent would become
    /// negative, which makes this an exact division for `delta < 0`.
    pub fn shift(&self, v: &Var, delta: i32) -> Result<SparsePoly, PolyError> {
        let m = Monomial(smallvec::smallvec![(v.clone(), delta)]);
        let out = if delta == 0 { self.clone() } else { self.mul_monomial(&m) };
        for t in out.terms.keys() {
            t.validate()?;
        }
        Ok(out)
    }

    /// Smallest exponent of `v` over all terms (0 for the zero polynomial).
    pub fn min_exponent(&self, v: &Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0)
    }

    pub fn max_exponent(&self, v: &Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Simultaneous substitution of polynomials for variables.
    ///
    /// A variable occurring with a negative exponent may only be replaced by
    /// a single term `c·m` with `m` a Laurent monomial in `λ, ξ`; the
    /// coefficient `c^k` must divide the affected coefficient exactly.
    pub fn substitute(&self, sigma: &HashMap<Var, SparsePoly>) -> Result<SparsePoly, PolyError> {
        let mut powers: HashMap<(Var, i32), SparsePoly> = HashMap::new();
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Monomial::one();
            let mut factors: Vec<SparsePoly> = Vec::new();
            for (v, e) in m.iter() {
                let Some(image) = sigma.get(v) else {
                    kept = kept.mul_unchecked(&Monomial(smallvec::smallvec![(v.clone(), e)]));
                    continue;
                };
                if e >= 0 {
                    let p = powers
                        .entry((v.clone(), e))
                        .or_insert_with(|| image.pow(e as u32));
                    factors.push(p.clone());
                    continue;
                }
                let (im, ic) = match image.single_term() {
                    Some((im, ic)) if im.0.iter().all(|(w, _)| w.is_laurent()) => (im, ic),
                    _ => return Err(PolyError::NotInvertible(v.clone())),
                };
                let k = e.unsigned_abs();
                let denom = num_traits::pow::Pow::pow(ic, k);
                let (q, r) = coeff.div_rem(&denom);
                if !r.is_zero() {
                    return Err(PolyError::NotInvertible(v.clone()));
                }
                coeff = q;
                let inv = Monomial(im.0.iter().map(|(w, x)| (w.clone(), -x * k as i32)).collect());
                kept = kept.mul_unchecked(&inv);
            }
            let mut term = SparsePoly::term(kept, coeff);
            for f in &factors {
                term = &term * f;
            }
            out += &term;
        }
        for t in out.terms.keys() {
            t.validate()?;
        }
        Ok(out)
    }

    fn single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Convenience: substitute from `(var, image)` pairs.
    pub fn subs<I: IntoIterator<Item = (Var, SparsePoly)>>(&self, pairs: I) -> Result<SparsePoly, PolyError> {
        self.substitute(&pairs.into_iter().collect())
    }

    /// Split by the exponent of `v`: `Σ_k v^k · coefficient_k`.
    pub fn collect_by(&self, v: &Var) -> Vec<(i32, SparsePoly)> {
        let mut groups: HashMap<i32, SparsePoly> = HashMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.exponent(v))
                .or_default()
                .add_term(m.without(v), c.clone());
        }
        let mut out: Vec<_> = groups.into_iter().collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// Every variable that occurs.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Terms sorted in the canonical printing order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| canonical_term_order(a.0, b.0));
        ts
    }

    /// Evaluate with every variable replaced by an integer; Laurent
    /// variables must evaluate to ±1 where they carry negative powers.
    pub fn eval_integers(&self, values: &HashMap<Var, BigInt>) -> Option<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = values.get(v)?;
                if e >= 0 {
                    t *= num_traits::pow::Pow::pow(x, e as u32);
                } else if x.abs().is_one() {
                    t *= num_traits::pow::Pow::pow(x, e.unsigned_abs());
                } else {
                    return None;
                }
            }
            total += t;
        }
        Some(total)
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{m:?}")?;
        }
        Ok(())
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for SparsePoly {
    fn add_assign(&mut self, rhs: SparsePoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&SparsePoly> for SparsePoly {
    fn sub_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        self += rhs;
        self
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        self -= &rhs;
        self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = SparsePoly {
            terms: HashMap::with_capacity(large.terms.len()),
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}

impl std::iter::Sum for SparsePoly {
    fn sum<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        iter.fold(SparsePoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for SparsePoly {
    fn product<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        iter.fold(SparsePoly::one(), |a, b| &a * &b)
    }
}

impl From<i64> for SparsePoly {
    fn from(c: i64) -> Self {
        SparsePoly::constant(c)
    }
}

impl From<Var> for SparsePoly {
    fn from(v: Var) -> Self {
        SparsePoly::var(v)
    }
}
