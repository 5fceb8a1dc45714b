//! Canonical text form.
//!
//! Variables are spelled `l` (λ), `xi` (ξ), `x_<label>`, `y_<label>` and
//! plain names such as `x`, `y`. A term is `coeff*var^exp*...` with the
//! coefficient omitted when it is ±1, terms joined by ` + ` / ` - `.
//!
//! Terms are ordered by decreasing weight (sum of absolute exponents), then
//! lexicographically along the variable order λ, ξ, `x_e`, `y_e`, plain:
//! at the first variable where two monomials differ, the one with the
//! larger absolute exponent comes first, and a positive exponent precedes
//! its negative. So `λ² + λ` prints as `l^2 + l` and `1 + x_a + λ⁻¹` as
//! `l^-1 + x_a + 1`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, PolyError, SparsePoly, Var};
use crate::ground::GroundSet;

pub fn canonical_term_order(a: &Monomial, b: &Monomial) -> Ordering {
    b.weight().cmp(&a.weight()).then_with(|| {
        let (a, b) = (&a.0, &b.0);
        for k in 0..a.len().max(b.len()) {
            match (a.get(k), b.get(k)) {
                (Some((va, ea)), Some((vb, eb))) => {
                    let ord = va
                        .cmp(vb)
                        .then_with(|| eb.abs().cmp(&ea.abs()))
                        .then_with(|| eb.cmp(ea));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (None, None) => break,
            }
        }
        Ordering::Equal
    })
}

fn var_name(v: &Var, ground: &GroundSet) -> String {
    match v {
        Var::Lambda => "l".into(),
        Var::Xi => "xi".into(),
        Var::X(i) => format!("x_{}", ground.label(*i as usize)),
        Var::Y(i) => format!("y_{}", ground.label(*i as usize)),
        Var::Plain(n) => n.to_string(),
    }
}

impl SparsePoly {
    /// Canonical text; `ground` names the per-element variables.
    pub fn to_text(&self, ground: &GroundSet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, e) in m.iter() {
                let name = var_name(v, ground);
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the text form produced by [`SparsePoly::to_text`]. Whitespace
    /// is insignificant; coefficients may appear as any factor.
    pub fn parse(text: &str, ground: &GroundSet) -> Result<SparsePoly, PolyError> {
        Parser { s: text.as_bytes(), pos: 0, ground }.poly()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ground: &'a GroundSet,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<SparsePoly, PolyError> {
        let mut acc = SparsePoly::zero();
        let mut negative = self.eat(b'-');
        loop {
            let t = self.term()?;
            if negative {
                acc -= &t;
            } else {
                acc += t;
            }
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly, PolyError> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.integer()?,
                Some(c) if c.is_ascii_alphabetic() => {
                    let v = self.variable()?;
                    let e = if self.eat(b'^') {
                        let neg = self.eat(b'-');
                        let k = self.integer()?;
                        let k: i32 = match i32::try_from(&k) {
                            Ok(k) => k,
                            Err(_) => return self.err("exponent out of range"),
                        };
                        if neg { -k } else { k }
                    } else {
                        1
                    };
                    mono = &mono * &Monomial::var(v, e)?;
                }
                _ => return self.err("expected a coefficient or variable"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(SparsePoly::term(mono, coeff))
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits parse"))
    }

    fn variable(&mut self) -> Result<Var, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        let element = |label: &str| -> Result<u8, PolyError> {
            self.ground
                .index_of(label)
                .map(|i| i as u8)
                .map_err(|_| PolyError::Parse {
                    pos: start,
                    msg: format!("unknown element `{label}`"),
                })
        };
        Ok(match name {
            "l" => Var::Lambda,
            "xi" => Var::Xi,
            _ if name.starts_with("x_") => Var::X(element(&name[2..])?),
            _ if name.starts_with("y_") => Var::Y(element(&name[2..])?),
            _ => Var::plain(name),
        })
    }
}
