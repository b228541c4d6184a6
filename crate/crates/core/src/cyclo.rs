//! Exact integers in `Z[ω]`, ω a primitive r-th root of unity.
//!
//! Elements are canonical residues modulo the r-th cyclotomic polynomial
//! `Φ_r`, stored as `φ(r)` big-integer coefficients, so equality is plain
//! coefficient comparison. `r = 1, 2` collapse to ordinary integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Euler totient, by trial division. Desk-scale `r` only.
pub fn totient(r: u32) -> u32 {
    let mut n = r;
    let mut result = r;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of `Φ_r`, ascending degree, computed by exact
/// division of `x^r − 1` by the product of the proper-divisor cyclotomics.
pub fn cyclotomic_polynomial(r: u32) -> Vec<BigInt> {
    assert!(r >= 1);
    // x^r − 1
    let mut num = vec![BigInt::zero(); r as usize + 1];
    num[0] = -BigInt::one();
    num[r as usize] = BigInt::one();
    for d in 1..r {
        if r % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quo = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quo[k] = c;
    }
    assert!(rem.iter().all(BigInt::is_zero), "division was not exact");
    quo
}

/// An element of `Z[ω]` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    r: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(r: u32) -> Self {
        Self { r, coeffs: vec![BigInt::zero(); totient(r) as usize] }
    }

    pub fn one(r: u32) -> Self {
        Self::from_int(r, 1)
    }

    pub fn from_int(r: u32, value: i64) -> Self {
        Self::from_bigint(r, BigInt::from(value))
    }

    pub fn from_bigint(r: u32, value: BigInt) -> Self {
        let mut out = Self::zero(r);
        out.coeffs[0] = value;
        out
    }

    /// Canonical residue of `ω^e` (e taken mod r).
    pub fn omega_power(r: u32, e: i64) -> Self {
        let phi = totient(r) as usize;
        let e = e.rem_euclid(r as i64) as usize;
        if e < phi {
            let mut out = Self::zero(r);
            out.coeffs[e] = BigInt::one();
            return out;
        }
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        Self { r, coeffs: reduce_mod_phi(poly, r) }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Canonical coefficients, length `φ(r)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigInt::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(BigInt::is_zero)
    }

    /// The plain integer value, when the element is rational.
    pub fn as_int(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(BigInt::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same(&self, rhs: &Self) {
        assert_eq!(self.r, rhs.r, "cyclotomic order mismatch: {} vs {}", self.r, rhs.r);
    }
}

/// Reduce ascending-degree coefficients modulo `Φ_r` to length `φ(r)`.
fn reduce_mod_phi(mut poly: Vec<BigInt>, r: u32) -> Vec<BigInt> {
    let phi_r = cyclotomic_polynomial(r);
    let phi = phi_r.len() - 1;
    while poly.len() > phi {
        let deg = poly.len() - 1;
        let lead = poly.pop().expect("nonempty");
        if !lead.is_zero() {
            // x^deg ≡ x^{deg-phi} · (x^phi − Φ_r)
            for i in 0..phi {
                let adj = &lead * &phi_r[i];
                poly[deg - phi + i] -= adj;
            }
        }
    }
    poly.resize(phi, BigInt::zero());
    poly
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicInt { r: self.r, coeffs }
    }
}

impl AddAssign<&CyclotomicInt> for CyclotomicInt {
    fn add_assign(&mut self, rhs: &CyclotomicInt) {
        self.check_same(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicInt { r: self.r, coeffs }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            r: self.r,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same(rhs);
        let n = self.coeffs.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CyclotomicInt { r: self.r, coeffs: reduce_mod_phi(prod, self.r) }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}·")?;
                    }
                    if e == 1 {
                        write!(f, "w")?;
                    } else {
                        write!(f, "w^{e}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
