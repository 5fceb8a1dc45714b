//! Shorthands for the polynomials that appear over and over.

use crate::poly::{Monomial, SparsePoly, Var};

pub fn lambda() -> SparsePoly {
    SparsePoly::var(Var::Lambda)
}

pub fn xi() -> SparsePoly {
    SparsePoly::var(Var::Xi)
}

pub fn lambda_pow(k: i32) -> SparsePoly {
    SparsePoly::var_pow(Var::Lambda, k).expect("λ is Laurent")
}

pub fn xi_pow(k: i32) -> SparsePoly {
    SparsePoly::var_pow(Var::Xi, k).expect("ξ is Laurent")
}

pub fn x() -> SparsePoly {
    SparsePoly::var(Var::x())
}

pub fn y() -> SparsePoly {
    SparsePoly::var(Var::y())
}

pub fn x_e(e: usize) -> SparsePoly {
    SparsePoly::var(Var::X(e as u8))
}

pub fn y_e(e: usize) -> SparsePoly {
    SparsePoly::var(Var::Y(e as u8))
}

pub fn c(k: i64) -> SparsePoly {
    SparsePoly::constant(k)
}

/// `∏_{e ∈ set} v(e)` as a bare monomial.
pub fn mono_over(set: crate::SubsetMask, v: fn(u8) -> Var) -> Monomial {
    Monomial::from_pairs(set.iter().map(|e| (v(e as u8), 1))).expect("nonnegative")
}
