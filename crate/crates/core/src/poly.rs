//! Sparse multivariate polynomials over `Z[ω]`.
//!
//! Variable slot 0 is `t`, slot 1 is `q`, slots 2.. are `x` or `x_1, x_2, …`.
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration (and
//! the serialized form) is lexicographically sorted and canonical: equality
//! is structural equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::cyclo::{totient, CyclotomicInt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    r: u32,
    arity: usize,
    terms: BTreeMap<Vec<u32>, CyclotomicInt>,
}

impl Poly {
    pub fn zero(r: u32, arity: usize) -> Self {
        Self { r, arity, terms: BTreeMap::new() }
    }

    pub fn constant(r: u32, arity: usize, c: CyclotomicInt) -> Self {
        let mut p = Self::zero(r, arity);
        p.add_term(&vec![0; arity], &c);
        p
    }

    pub fn one(r: u32, arity: usize) -> Self {
        Self::constant(r, arity, CyclotomicInt::one(r))
    }

    pub fn int(r: u32, arity: usize, v: i64) -> Self {
        Self::constant(r, arity, CyclotomicInt::from_int(r, v))
    }

    /// The monomial `c · ∏ slot^exp`.
    pub fn monomial(r: u32, exps: Vec<u32>, c: CyclotomicInt) -> Self {
        let arity = exps.len();
        let mut p = Self::zero(r, arity);
        p.add_term(&exps, &c);
        p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &CyclotomicInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> CyclotomicInt {
        self.terms.get(exps).cloned().unwrap_or_else(|| CyclotomicInt::zero(self.r))
    }

    /// Accumulate `c` on the monomial `exps`; drops the entry if it cancels.
    pub fn add_term(&mut self, exps: &[u32], c: &CyclotomicInt) {
        debug_assert_eq!(exps.len(), self.arity);
        debug_assert_eq!(c.r(), self.r);
        if c.is_zero() {
            return;
        }
        if let Some(slot) = self.terms.get_mut(exps) {
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(exps);
            }
        } else {
            self.terms.insert(exps.to_vec(), c.clone());
        }
    }

    pub fn scale(&self, c: &CyclotomicInt) -> Poly {
        let mut out = Poly::zero(self.r, self.arity);
        for (e, a) in &self.terms {
            out.add_term(e, &(a * c));
        }
        out
    }

    /// Substitute 1 for the given variable slot (exponent folded away).
    pub fn substitute_one(&self, slot: usize) -> Poly {
        assert!(slot < self.arity);
        let mut out = Poly::zero(self.r, self.arity);
        let mut key = vec![0u32; self.arity];
        for (e, c) in &self.terms {
            key.copy_from_slice(e);
            key[slot] = 0;
            out.add_term(&key, c);
        }
        out
    }

    /// Remap variable slots (summing exponents that collide); slots may be
    /// merged to collapse `x_1 = x_2 = … = x`.
    pub fn remap_vars(&self, new_arity: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.arity);
        assert!(map.iter().all(|&m| m < new_arity));
        let mut out = Poly::zero(self.r, new_arity);
        let mut key = vec![0u32; new_arity];
        for (e, c) in &self.terms {
            key.iter_mut().for_each(|k| *k = 0);
            for (slot, &exp) in e.iter().enumerate() {
                key[map[slot]] += exp;
            }
            out.add_term(&key, c);
        }
        out
    }

    fn check_compatible(&self, rhs: &Poly) {
        assert_eq!(self.r, rhs.r, "polynomial coefficient orders differ");
        assert_eq!(self.arity, rhs.arity, "polynomial arities differ");
    }

    /// Serialized canonical form (terms ascending by exponent vector).
    ///
    /// Coefficient entries render as JSON numbers when they fit in `i64`
    /// and as decimal strings beyond that.
    pub fn to_json(&self, vars: &[&str]) -> Value {
        assert_eq!(vars.len(), self.arity);
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let coef: Vec<Value> = c.coeffs().iter().map(bigint_json).collect();
                json!({ "exp": e, "coef": coef })
            })
            .collect();
        json!({ "r": self.r, "vars": vars, "terms": terms })
    }

    /// Standard variable names for an arity: `t`, `q`, then `x` or `x1…`.
    pub fn var_names(arity: usize) -> Vec<String> {
        let mut names = Vec::with_capacity(arity);
        if arity >= 1 {
            names.push("t".to_string());
        }
        if arity >= 2 {
            names.push("q".to_string());
        }
        match arity.saturating_sub(2) {
            0 => {}
            1 => names.push("x".to_string()),
            k => {
                for i in 1..=k {
                    names.push(format!("x{i}"));
                }
            }
        }
        names
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::from(v.to_string()),
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        self.check_compatible(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_compatible(rhs);
        let mut out = Poly::zero(self.r, self.arity);
        let mut key = vec![0u32; self.arity];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                for (k, (a, b)) in key.iter_mut().zip(ea.iter().zip(eb)) {
                    *k = a + b;
                }
                out.add_term(&key, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = Poly::var_names(self.arity);
        let mut first = true;
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], exp)
                    }
                })
                .collect();
            let coef = if let Some(v) = c.as_int() {
                if mono.is_empty() {
                    v.to_string()
                } else if v == &BigInt::from(1) {
                    String::new()
                } else if v == &BigInt::from(-1) {
                    "-".to_string()
                } else {
                    format!("{v}·")
                }
            } else {
                format!("({c})·")
            };
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}{}", coef, mono.join("·"))?;
            first = false;
        }
        Ok(())
    }
}

/// `∏_j (1 − t^{t_exp} q^{q_exps[j]})`, expanded exactly; with `arity ≥ 2`.
pub fn product_one_minus(r: u32, arity: usize, t_exp: u32, q_exps: &[u32]) -> Poly {
    assert!(arity >= 2);
    let mut acc = Poly::one(r, arity);
    for &qe in q_exps {
        let mut factor = Poly::one(r, arity);
        let mut exps = vec![0u32; arity];
        exps[0] = t_exp;
        exps[1] = qe;
        factor.add_term(&exps, &CyclotomicInt::from_int(r, -1));
        acc = &acc * &factor;
    }
    acc
}

/// `[i]_x = 1 + x + … + x^{i−1}` with `x = s·q`, `s = ±1`, as a (t,q) poly.
fn q_bracket(r: u32, arity: usize, i: u32, sign: i64) -> Poly {
    let mut acc = Poly::zero(r, arity);
    let mut exps = vec![0u32; arity];
    for e in 0..i {
        exps[1] = e;
        let coef = if e % 2 == 1 && sign < 0 { -1 } else { 1 };
        acc.add_term(&exps, &CyclotomicInt::from_int(r, coef));
    }
    acc
}

/// `[1]_q [2]_{−q} [3]_q ⋯ [n]_{(−1)^{n−1} q}`.
pub fn gessel_simion_rhs(r: u32, arity: usize, n: u32) -> Poly {
    assert!(n >= 1);
    let mut acc = Poly::one(r, arity);
    for i in 1..=n {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        acc = &acc * &q_bracket(r, arity, i, sign);
    }
    acc
}

/// `[n]_q! = [n]_q [n−1]_q ⋯ [1]_q`.
pub fn q_factorial(r: u32, arity: usize, n: u32) -> Poly {
    let mut acc = Poly::one(r, arity);
    for i in 1..=n {
        acc = &acc * &q_bracket(r, arity, i, 1);
    }
    acc
}

/// Helper shared with reports: the number of coefficient slots per term.
pub fn coef_width(r: u32) -> usize {
    totient(r) as usize
}
