//! Symbolic verification of the convolution, weighted-sum and
//! specialization identities on a concrete semimatroid.
//!
//! Left-hand sides come from the direct subset sum. Every factor on a
//! right-hand side comes from deletion–contraction on the relevant minor, so
//! a pass compares two independent evaluators.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::invariants::{self, Invariant, Route};
use crate::poly::{SparsePoly, Var};
use crate::semimatroid::Semimatroid;
use crate::subset::SubsetMask;
use crate::vars::{c, lambda, lambda_pow, x, x_e, xi, xi_pow, y, y_e};

macro_rules! identities {
    ($($variant:ident = $name:literal, $multi:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId { $($variant),* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(IdentityId::$variant => $name),* }
            }

            /// Involves one variable per element (x_e and possibly y_e).
            pub fn is_multivariate(self) -> bool {
                match self { $(IdentityId::$variant => $multi),* }
            }
        }
    };
}

identities! {
    ZConvolution = "z-convolution", true;
    ZConvolutionSpecial = "z-convolution-special", true;
    DichromaticConvolution = "dichromatic-convolution", false;
    DichromaticConvolutionSpecial = "dichromatic-convolution-special", false;
    CharacteristicConvolution = "characteristic-convolution", false;
    CharacteristicConvolutionFlats = "characteristic-convolution-flats", false;
    ZWeighted = "z-weighted", true;
    DichromaticWeighted = "dichromatic-weighted", false;
    ZWeightedFlats = "z-weighted-flats", true;
    DichromaticWeightedFlats = "dichromatic-weighted-flats", false;
    SubsetCorankConvolution = "subset-corank-convolution", true;
    SubsetCorankConvolutionSpecial = "subset-corank-convolution-special", true;
    SubsetCorankWeighted = "subset-corank-weighted", true;
    SubsetCorankWeightedFlats = "subset-corank-weighted-flats", true;
    SizeCorankConvolution = "size-corank-convolution", false;
    SizeCorankConvolutionSpecial = "size-corank-convolution-special", false;
    SizeCorankWeighted = "size-corank-weighted", false;
    SizeCorankWeightedFlats = "size-corank-weighted-flats", false;
    RankGenConvolution = "rank-gen-convolution", false;
    RankGenConvolutionSpecial = "rank-gen-convolution-special", false;
    RankGenProduct = "rank-gen-product", false;
    RankGenProductFlats = "rank-gen-product-flats", false;
    RankGenProductCyclicFlats = "rank-gen-product-cyclic-flats", false;
    SubsetCorankFromZ = "subset-corank-from-z", true;
    DichromaticFromZ = "dichromatic-from-z", true;
    SizeCorankFromSubsetCorank = "size-corank-from-subset-corank", true;
    SizeCorankFromRankGen = "size-corank-from-rank-gen", false;
    TutteFromRankGen = "tutte-from-rank-gen", false;
    TutteFromZ = "tutte-from-z", true;
    CharacteristicFromSubsetCorank = "characteristic-from-subset-corank", true;
    CharacteristicFromZ = "characteristic-from-z", true;
    CharacteristicFromTutte = "characteristic-from-tutte", false;
    CharacteristicFromRankGen = "characteristic-from-rank-gen", false;
    TutteFromActivities = "tutte-from-activities", false;
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub lhs: SparsePoly,
    pub rhs: SparsePoly,
    /// `lhs - rhs`; zero exactly when the identity holds.
    pub diff: SparsePoly,
    pub verdict: Verdict,
}

impl IdentityReport {
    fn new(id: IdentityId, lhs: SparsePoly, rhs: SparsePoly) -> Self {
        let diff = &lhs - &rhs;
        let verdict = if diff.is_zero() { Verdict::Pass } else { Verdict::Fail };
        IdentityReport {
            id,
            lhs,
            rhs,
            diff,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Side {
    Restrict,
    Contract,
}

/// One instance plus caches of every minor polynomial computed so far.
struct Lab<'a> {
    sm: &'a Semimatroid,
    central: Vec<SubsetMask>,
    flats: Option<Vec<SubsetMask>>,
    sums: HashMap<Invariant, SparsePoly>,
    minors: HashMap<(Invariant, Side, SubsetMask), SparsePoly>,
}

/// Image map sending each `x_e` of the instance to `f(e)`.
fn per_element(sm: &Semimatroid, v: fn(u8) -> Var, f: impl Fn(usize) -> SparsePoly) -> Vec<(Var, SparsePoly)> {
    sm.elements().iter().map(|e| (v(e as u8), f(e))).collect()
}

fn signed_y(t: SubsetMask) -> SparsePoly {
    t.iter().map(|e| -y_e(e)).product()
}

fn weight(t: SubsetMask) -> SparsePoly {
    t.iter().map(|e| &y_e(e) * &(&x_e(e) + &c(1))).product()
}

fn shifted_x(t: SubsetMask) -> SparsePoly {
    t.iter().map(|e| &x_e(e) + &c(1)).product()
}

impl<'a> Lab<'a> {
    fn new(sm: &'a Semimatroid) -> Self {
        Lab {
            sm,
            central: sm.central_sets(),
            flats: None,
            sums: HashMap::new(),
            minors: HashMap::new(),
        }
    }

    fn r(&self) -> i32 {
        self.sm.rank() as i32
    }

    fn rank(&self, t: SubsetMask) -> i32 {
        self.sm.central().rank(t).expect("summation runs over central sets") as i32
    }

    fn flats(&mut self) -> Vec<SubsetMask> {
        self.flats.get_or_insert_with(|| self.sm.flats()).clone()
    }

    fn cyclic_flats(&mut self) -> Vec<SubsetMask> {
        self.flats()
            .into_iter()
            .filter(|&t| self.sm.is_cyclic_flat(t).expect("flats are central"))
            .collect()
    }

    fn sum(&mut self, inv: Invariant) -> SparsePoly {
        let sm = self.sm;
        self.sums
            .entry(inv)
            .or_insert_with(|| invariants::evaluate(sm, inv, Route::SubsetSum).expect("subset sum always applies"))
            .clone()
    }

    fn minor(&mut self, inv: Invariant, side: Side, t: SubsetMask) -> SparsePoly {
        let sm = self.sm;
        self.minors
            .entry((inv, side, t))
            .or_insert_with(|| {
                let m = match side {
                    Side::Restrict => sm.restrict(t),
                    Side::Contract => sm.contract(t),
                }
                .expect("minor of a central set");
                invariants::deletion_contraction(&m, inv, true).0
            })
            .clone()
    }

    fn res(&mut self, inv: Invariant, t: SubsetMask) -> SparsePoly {
        self.minor(inv, Side::Restrict, t)
    }

    fn con(&mut self, inv: Invariant, t: SubsetMask) -> SparsePoly {
        self.minor(inv, Side::Contract, t)
    }

    /// The whole instance, by deletion–contraction.
    fn dc(&mut self, inv: Invariant) -> SparsePoly {
        self.con(inv, SubsetMask::EMPTY)
    }

    fn over<F>(&mut self, sets: Vec<SubsetMask>, mut f: F) -> Result<SparsePoly>
    where
        F: FnMut(&mut Self, SubsetMask) -> Result<SparsePoly>,
    {
        let mut acc = SparsePoly::zero();
        for t in sets {
            acc += f(self, t)?;
        }
        Ok(acc)
    }

    fn check(&mut self, id: IdentityId) -> Result<IdentityReport> {
        use IdentityId::*;
        use Invariant as I;
        let sm = self.sm;
        let r = self.r();
        let central = self.central.clone();
        let lam_xi = &lambda() * &xi();
        let (lhs, rhs) = match id {
            ZConvolution => {
                let mut sub = per_element(sm, Var::X, |e| &x_e(e) * &y_e(e));
                sub.push((Var::Lambda, lam_xi));
                let lhs = self.sum(I::Z).subs(sub)?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab.res(I::Z, t).subs(per_element(sm, Var::X, |e| -x_e(e)))?;
                    let mut to_y = per_element(sm, Var::X, y_e);
                    to_y.push((Var::Lambda, xi()));
                    let b = lab.con(I::Z, t).subs(to_y)?;
                    Ok(&(&xi_pow(-lab.rank(t)) * &signed_y(t)) * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            ZConvolutionSpecial => {
                let lhs = self.sum(I::Z).subs(per_element(sm, Var::X, y_e))?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab.res(I::Z, t).subs(per_element(sm, Var::X, |_| c(-1)))?;
                    let mut to_y = per_element(sm, Var::X, y_e);
                    to_y.push((Var::Lambda, c(1)));
                    let b = lab.con(I::Z, t).subs(to_y)?;
                    Ok(&signed_y(t) * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            DichromaticConvolution => {
                let lhs = self
                    .sum(I::Dichromatic)
                    .subs([(Var::Lambda, lam_xi), (Var::x(), &x() * &y())])?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab.res(I::Dichromatic, t).subs([(Var::x(), -x())])?;
                    let b = lab
                        .con(I::Dichromatic, t)
                        .subs([(Var::Lambda, xi()), (Var::x(), y())])?;
                    let sign = (-y()).pow(t.len() as u32);
                    Ok(&(&xi_pow(-lab.rank(t)) * &sign) * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            DichromaticConvolutionSpecial => {
                let lhs = self.sum(I::Dichromatic).subs([(Var::x(), y())])?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab.res(I::Dichromatic, t).subs([(Var::x(), c(-1))])?;
                    let b = lab
                        .con(I::Dichromatic, t)
                        .subs([(Var::Lambda, c(1)), (Var::x(), y())])?;
                    Ok(&(-y()).pow(t.len() as u32) * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            CharacteristicConvolution | CharacteristicConvolutionFlats => {
                let lhs = self.sum(I::Characteristic).subs([(Var::Lambda, lam_xi)])?;
                let sets = if id == CharacteristicConvolution {
                    central
                } else {
                    self.flats()
                };
                let rhs = self.over(sets, |lab, t| {
                    let a = lab.res(I::Characteristic, t);
                    let b = lab.con(I::Characteristic, t).subs([(Var::Lambda, xi())])?;
                    Ok(&lambda().pow((r - lab.rank(t)) as u32) * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            ZWeighted => {
                let mut sub = per_element(sm, Var::X, |e| &x_e(e) * &y_e(e));
                sub.push((Var::Lambda, xi()));
                let lhs = self.sum(I::Z).subs(sub)?;
                let rhs = self.over(central, |lab, t| {
                    let mut to_y = per_element(sm, Var::X, |e| -y_e(e));
                    to_y.push((Var::Lambda, xi()));
                    let b = lab.con(I::Z, t).subs(to_y)?;
                    Ok(&(&xi_pow(-lab.rank(t)) * &weight(t)) * &b)
                })?;
                (lhs, rhs)
            }
            DichromaticWeighted => {
                let lhs = self
                    .sum(I::Dichromatic)
                    .subs([(Var::Lambda, xi()), (Var::x(), &x() * &y())])?;
                let rhs = self.over(central, |lab, t| {
                    let b = lab
                        .con(I::Dichromatic, t)
                        .subs([(Var::Lambda, xi()), (Var::x(), -y())])?;
                    let w = (&y() * &(&x() + &c(1))).pow(t.len() as u32);
                    Ok(&(&xi_pow(-lab.rank(t)) * &w) * &b)
                })?;
                (lhs, rhs)
            }
            ZWeightedFlats => {
                let lhs = self.sum(I::Z).subs([(Var::Lambda, xi())])?;
                let flats = self.flats();
                let rhs = self.over(flats, |lab, t| {
                    let chi = lab.con(I::Characteristic, t).subs([(Var::Lambda, xi())])?;
                    Ok(&shifted_x(t) * &chi)
                })?;
                (lhs, &xi_pow(-r) * &rhs)
            }
            DichromaticWeightedFlats => {
                let lhs = self.sum(I::Dichromatic).subs([(Var::Lambda, xi())])?;
                let flats = self.flats();
                let rhs = self.over(flats, |lab, t| {
                    let chi = lab.con(I::Characteristic, t).subs([(Var::Lambda, xi())])?;
                    Ok(&(&x() + &c(1)).pow(t.len() as u32) * &chi)
                })?;
                (lhs, &xi_pow(-r) * &rhs)
            }
            SubsetCorankConvolution => {
                let mut sub = per_element(sm, Var::X, |e| &x_e(e) * &y_e(e));
                sub.push((Var::Lambda, lam_xi));
                let lhs = self.sum(I::SubsetCorank).subs(sub)?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab
                        .res(I::SubsetCorank, t)
                        .subs(per_element(sm, Var::X, |e| -x_e(e)))?;
                    let mut to_y = per_element(sm, Var::X, y_e);
                    to_y.push((Var::Lambda, xi()));
                    let b = lab.con(I::SubsetCorank, t).subs(to_y)?;
                    let pre = &lambda().pow((r - lab.rank(t)) as u32) * &signed_y(t);
                    Ok(&pre * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            SubsetCorankConvolutionSpecial => {
                let lhs = self.sum(I::SubsetCorank).subs(per_element(sm, Var::X, y_e))?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab
                        .res(I::SubsetCorank, t)
                        .subs(per_element(sm, Var::X, |_| c(-1)))?;
                    let mut to_y = per_element(sm, Var::X, y_e);
                    to_y.push((Var::Lambda, c(1)));
                    let b = lab.con(I::SubsetCorank, t).subs(to_y)?;
                    let pre = &lambda().pow((r - lab.rank(t)) as u32) * &signed_y(t);
                    Ok(&pre * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            SubsetCorankWeighted => {
                let mut sub = per_element(sm, Var::X, |e| &x_e(e) * &y_e(e));
                sub.push((Var::Lambda, xi()));
                let lhs = self.sum(I::SubsetCorank).subs(sub)?;
                let rhs = self.over(central, |lab, t| {
                    let mut to_y = per_element(sm, Var::X, |e| -y_e(e));
                    to_y.push((Var::Lambda, xi()));
                    let b = lab.con(I::SubsetCorank, t).subs(to_y)?;
                    Ok(&weight(t) * &b)
                })?;
                (lhs, rhs)
            }
            SubsetCorankWeightedFlats => {
                let lhs = self.sum(I::SubsetCorank).subs([(Var::Lambda, xi())])?;
                let flats = self.flats();
                let rhs = self.over(flats, |lab, t| {
                    let chi = lab.con(I::Characteristic, t).subs([(Var::Lambda, xi())])?;
                    Ok(&shifted_x(t) * &chi)
                })?;
                (lhs, rhs)
            }
            SizeCorankConvolution => {
                let lhs = self
                    .sum(I::SizeCorank)
                    .subs([(Var::Lambda, lam_xi), (Var::x(), &x() * &y())])?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab.res(I::SizeCorank, t).subs([(Var::x(), -x())])?;
                    let b = lab
                        .con(I::SizeCorank, t)
                        .subs([(Var::Lambda, xi()), (Var::x(), y())])?;
                    let pre = &lambda().pow((r - lab.rank(t)) as u32) * &(-y()).pow(t.len() as u32);
                    Ok(&pre * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            SizeCorankConvolutionSpecial => {
                let lhs = self.sum(I::SizeCorank).subs([(Var::x(), y())])?;
                let rhs = self.over(central, |lab, t| {
                    let a = lab.res(I::SizeCorank, t).subs([(Var::x(), c(-1))])?;
                    let b = lab
                        .con(I::SizeCorank, t)
                        .subs([(Var::Lambda, c(1)), (Var::x(), y())])?;
                    let pre = &lambda().pow((r - lab.rank(t)) as u32) * &(-y()).pow(t.len() as u32);
                    Ok(&pre * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            SizeCorankWeighted => {
                let lhs = self
                    .sum(I::SizeCorank)
                    .subs([(Var::Lambda, xi()), (Var::x(), &x() * &y())])?;
                let rhs = self.over(central, |lab, t| {
                    let b = lab
                        .con(I::SizeCorank, t)
                        .subs([(Var::Lambda, xi()), (Var::x(), -y())])?;
                    Ok(&(&y() * &(&x() + &c(1))).pow(t.len() as u32) * &b)
                })?;
                (lhs, rhs)
            }
            SizeCorankWeightedFlats => {
                let lhs = self.sum(I::SizeCorank).subs([(Var::Lambda, xi())])?;
                let flats = self.flats();
                let rhs = self.over(flats, |lab, t| {
                    let chi = lab.con(I::Characteristic, t).subs([(Var::Lambda, xi())])?;
                    Ok(&(&x() + &c(1)).pow(t.len() as u32) * &chi)
                })?;
                (lhs, rhs)
            }
            RankGenConvolution => {
                let lhs = self
                    .sum(I::RankGenerating)
                    .subs([(Var::Lambda, lam_xi), (Var::x(), &x() * &y())])?;
                let rhs = self.over(central, |lab, t| {
                    let rt = lab.rank(t);
                    let a = lab
                        .res(I::RankGenerating, t)
                        .subs([(Var::Lambda, -lambda()), (Var::x(), -x())])?;
                    let b = lab
                        .con(I::RankGenerating, t)
                        .subs([(Var::Lambda, xi()), (Var::x(), y())])?;
                    let pre = &lambda().pow((r - rt) as u32) * &(-y()).pow(t.len() as u32 - rt as u32);
                    Ok(&pre * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            RankGenConvolutionSpecial => {
                let lhs = self.sum(I::RankGenerating).subs([(Var::x(), y())])?;
                let rhs = self.over(central, |lab, t| {
                    let rt = lab.rank(t);
                    let a = lab.res(I::RankGenerating, t).subs([(Var::x(), c(-1))])?;
                    let b = lab
                        .con(I::RankGenerating, t)
                        .subs([(Var::Lambda, c(-1)), (Var::x(), y())])?;
                    let pre = &(-lambda()).pow((r - rt) as u32) * &(-y()).pow(t.len() as u32 - rt as u32);
                    Ok(&pre * &(&a * &b))
                })?;
                (lhs, rhs)
            }
            RankGenProduct | RankGenProductFlats | RankGenProductCyclicFlats => {
                let lhs = self.sum(I::RankGenerating).subs([(Var::Lambda, xi())])?;
                let sets = match id {
                    RankGenProduct => central,
                    RankGenProductFlats => self.flats(),
                    _ => self.cyclic_flats(),
                };
                let rhs = self.over(sets, |lab, t| {
                    let a = lab.res(I::RankGenerating, t).subs([(Var::Lambda, c(-1))])?;
                    let b = lab
                        .con(I::RankGenerating, t)
                        .subs([(Var::Lambda, xi()), (Var::x(), c(-1))])?;
                    Ok(&a * &b)
                })?;
                (lhs, rhs)
            }
            SubsetCorankFromZ => (self.sum(I::SubsetCorank), &lambda_pow(r) * &self.dc(I::Z)),
            DichromaticFromZ => {
                let z = self.dc(I::Z);
                (self.sum(I::Dichromatic), invariants::to_scalar_x(sm, &z)?)
            }
            SizeCorankFromSubsetCorank => {
                let sc = self.dc(I::SubsetCorank);
                (self.sum(I::SizeCorank), invariants::to_scalar_x(sm, &sc)?)
            }
            SizeCorankFromRankGen => {
                // x^r R(λ/x, x), with ξ standing in for x while the
                // negative powers are cleared.
                let rg = self
                    .dc(I::RankGenerating)
                    .subs([(Var::Lambda, &lambda() * &xi_pow(-1)), (Var::x(), xi())])?
                    .shift(&Var::Xi, r)?;
                let min = rg.min_exponent(&Var::Xi);
                if min < 0 {
                    return Err(crate::poly::PolyError::NegativeExponent(Var::Xi).into());
                }
                (self.sum(I::SizeCorank), rg.subs([(Var::Xi, x())])?)
            }
            TutteFromRankGen => {
                let rg = self.dc(I::RankGenerating);
                let rhs = rg.subs([(Var::Lambda, &lambda() - &c(1)), (Var::x(), &x() - &c(1))])?;
                (self.sum(I::Tutte), rhs)
            }
            TutteFromZ => {
                let sc = &lambda_pow(r) * &self.dc(I::Z);
                let rhs = invariants::tutte_from_size_corank(&invariants::to_scalar_x(sm, &sc)?, r)?;
                (self.sum(I::Tutte), rhs)
            }
            CharacteristicFromSubsetCorank => {
                let sc = self.dc(I::SubsetCorank);
                (
                    self.sum(I::Characteristic),
                    sc.subs(per_element(sm, Var::X, |_| c(-1)))?,
                )
            }
            CharacteristicFromZ => {
                let lhs = self.sum(I::Z).subs(per_element(sm, Var::X, |_| c(-1)))?;
                (lhs, &lambda_pow(-r) * &self.dc(I::Characteristic))
            }
            CharacteristicFromTutte => {
                let t = self.dc(I::Tutte);
                let rhs = t.subs([(Var::Lambda, &c(1) - &lambda()), (Var::x(), c(0))])?;
                (self.sum(I::Characteristic), sign(r) * rhs)
            }
            CharacteristicFromRankGen => {
                let rg = self.dc(I::RankGenerating);
                let rhs = rg.subs([(Var::Lambda, -lambda()), (Var::x(), c(-1))])?;
                (self.sum(I::Characteristic), sign(r) * rhs)
            }
            TutteFromActivities => (
                self.sum(I::Tutte),
                invariants::evaluate(sm, I::Tutte, Route::Activities)?,
            ),
        };
        Ok(IdentityReport::new(id, lhs, rhs))
    }
}

fn sign(r: i32) -> SparsePoly {
    c(if r % 2 == 0 { 1 } else { -1 })
}

/// Check the listed identities, sharing minor computations between them.
pub fn check_many(sm: &Semimatroid, ids: &[IdentityId]) -> Result<Vec<IdentityReport>> {
    let mut lab = Lab::new(sm);
    ids.iter().map(|&id| lab.check(id)).collect()
}

pub fn check_identity(sm: &Semimatroid, id: IdentityId) -> Result<IdentityReport> {
    Lab::new(sm).check(id)
}

/// Every identity, in declaration order.
pub fn check_all(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    check_many(sm, IdentityId::ALL)
}

/// Only the identities in `λ, ξ, x, y`, for instances too large for the
/// per-element variable budget.
pub fn check_scalar(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    let ids: Vec<_> = IdentityId::ALL.iter().copied().filter(|i| !i.is_multivariate()).collect();
    check_many(sm, &ids)
}

pub fn check_convolution_multivariate(sm: &Semimatroid) -> Result<IdentityReport> {
    check_identity(sm, IdentityId::ZConvolution)
}

pub fn check_convolution_multivariate_special(sm: &Semimatroid) -> Result<IdentityReport> {
    check_identity(sm, IdentityId::ZConvolutionSpecial)
}

/// The scalar convolution and its `ξ = 1, x = 1` form.
pub fn check_convolution_scalar(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(sm, &[DichromaticConvolution, DichromaticConvolutionSpecial])
}

/// Over all central sets and over flats only.
pub fn check_characteristic_convolution(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(sm, &[CharacteristicConvolution, CharacteristicConvolutionFlats])
}

pub fn check_weighted_sum(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(sm, &[ZWeighted, DichromaticWeighted])
}

/// Multivariate and scalar forms.
pub fn check_weighted_flats(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(sm, &[ZWeightedFlats, DichromaticWeightedFlats])
}

pub fn check_sc_identities(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(
        sm,
        &[
            SubsetCorankConvolution,
            SubsetCorankConvolutionSpecial,
            SubsetCorankWeighted,
            SubsetCorankWeightedFlats,
        ],
    )
}

pub fn check_size_corank_identities(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(
        sm,
        &[
            SizeCorankConvolution,
            SizeCorankConvolutionSpecial,
            SizeCorankWeighted,
            SizeCorankWeightedFlats,
        ],
    )
}

pub fn check_rank_gen_identities(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(
        sm,
        &[
            RankGenConvolution,
            RankGenConvolutionSpecial,
            RankGenProduct,
            RankGenProductFlats,
            RankGenProductCyclicFlats,
        ],
    )
}

/// The specialization lattice tying the seven invariants together.
pub fn check_specializations(sm: &Semimatroid) -> Result<Vec<IdentityReport>> {
    use IdentityId::*;
    check_many(
        sm,
        &[
            SubsetCorankFromZ,
            DichromaticFromZ,
            SizeCorankFromSubsetCorank,
            SizeCorankFromRankGen,
            TutteFromRankGen,
            TutteFromZ,
            CharacteristicFromSubsetCorank,
            CharacteristicFromZ,
            CharacteristicFromTutte,
            CharacteristicFromRankGen,
            TutteFromActivities,
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn all_pass(sm: &Semimatroid) {
        for rep in check_all(sm).unwrap() {
            assert!(rep.passed(), "{} failed: diff {:?}", rep.id, rep.diff);
        }
    }

    #[test]
    fn every_identity_on_small_instances() {
        for sm in [plt(), empty(), single_loop(), single_isthmus(), uniform(1, 2), uniform(2, 3), uniform(2, 4)] {
            all_pass(&sm);
        }
    }

    #[test]
    fn names_round_trip() {
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>(), Ok(id));
        }
        assert!("nope".parse::<IdentityId>().is_err());
    }

    #[test]
    fn loop_convolution_sides() {
        let l = single_loop();
        let rep = check_convolution_multivariate(&l).unwrap();
        let expected = SparsePoly::parse("x_e*y_e + 1", l.ground()).unwrap();
        assert_eq!(rep.lhs, expected);
        assert_eq!(rep.rhs, expected);
        let rep = check_identity(&l, IdentityId::ZWeighted).unwrap();
        assert_eq!(rep.lhs, expected);
    }

    #[test]
    fn isthmus_special_and_weighted_flats() {
        let i = single_isthmus();
        let rep = check_convolution_multivariate_special(&i).unwrap();
        assert_eq!(rep.lhs, SparsePoly::parse("l^-1*y_e + 1", i.ground()).unwrap());
        assert!(rep.passed());
        let rep = check_identity(&i, IdentityId::DichromaticWeightedFlats).unwrap();
        assert_eq!(&xi() * &rep.rhs, SparsePoly::parse("xi + x", i.ground()).unwrap());
    }

    #[test]
    fn plt_characteristic_convolution_lhs() {
        let p = plt();
        let reps = check_characteristic_convolution(&p).unwrap();
        let lhs = SparsePoly::parse("l^2*xi^2 - 3*l*xi + 2", p.ground()).unwrap();
        assert!(reps.iter().all(|r| r.passed() && r.lhs == lhs));
    }

    #[test]
    fn plt_cyclic_flats_keep_only_empty_set() {
        let p = plt();
        let mut lab = Lab::new(&p);
        assert_eq!(lab.cyclic_flats(), vec![SubsetMask::EMPTY]);
        let rep = lab.check(IdentityId::RankGenProductCyclicFlats).unwrap();
        assert_eq!(rep.rhs, SparsePoly::parse("xi^2 + 3*xi + 2", p.ground()).unwrap());
    }

    #[test]
    fn a_wrong_identity_is_reported_with_its_diff() {
        let rep = IdentityReport::new(IdentityId::TutteFromZ, x(), y());
        assert_eq!(rep.verdict, Verdict::Fail);
        assert_eq!(rep.diff, &x() - &y());
    }
}
