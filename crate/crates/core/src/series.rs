//! Truncated integer power series in one variable `t`.
//!
//! Just enough machinery for the barred-permutation counting: the three
//! closed-form series, exact truncated products, and division by powers of
//! `(1 − t)` and `(1 − t²)` (units at t = 0, so division is exact).

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(cap: usize) -> Self {
        Self { cap, coeffs: vec![BigInt::zero(); cap + 1] }
    }

    pub fn from_coeffs(cap: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(cap + 1, BigInt::zero());
        Self { cap, coeffs }
    }

    /// Truncate a univariate (in `t`) polynomial: all other exponents must
    /// be zero.
    pub fn from_poly(p: &Poly, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        for (e, c) in p.terms() {
            assert!(e[1..].iter().all(|&x| x == 0), "series need t-only polynomials");
            let deg = e[0] as usize;
            if deg <= cap {
                out.coeffs[deg] = c.as_int().expect("integer coefficients").clone();
            }
        }
        out
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `Σ_k (k+1)^n ⌈(k+1)/2⌉ t^k`.
    pub fn posi2(n: u32, cap: usize) -> Self {
        Self::closed_form(cap, |k| {
            let kp1 = BigInt::from(k as u64 + 1);
            kp1.pow(n) * BigInt::from((k as u64 + 2) / 2)
        })
    }

    /// `Σ_k (k+1)^n ⌊(k+1)/2⌋ t^k`.
    pub fn nega2(n: u32, cap: usize) -> Self {
        Self::closed_form(cap, |k| {
            let kp1 = BigInt::from(k as u64 + 1);
            kp1.pow(n) * BigInt::from((k as u64 + 1) / 2)
        })
    }

    /// `Σ_k (2k+1)^n t^{2k}`.
    pub fn nepo(n: u32, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        let mut k = 0usize;
        while 2 * k <= cap {
            out.coeffs[2 * k] = BigInt::from(2 * k as u64 + 1).pow(n);
            k += 1;
        }
        out
    }

    /// `Σ_k (2k+1)^n t^k`.
    pub fn brenti(n: u32, cap: usize) -> Self {
        Self::closed_form(cap, |k| BigInt::from(2 * k as u64 + 1).pow(n))
    }

    fn closed_form(cap: usize, f: impl Fn(usize) -> BigInt) -> Self {
        Self { cap, coeffs: (0..=cap).map(f).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cap, rhs.cap);
        let mut out = Self::zero(self.cap);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > self.cap {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Divide by `(1 − t)^a (1 − t²)^b`; exact truncated inverse via
    /// prefix sums (multiplying by `Σ t^k` and `Σ t^{2k}`).
    pub fn div_one_minus(&self, a: u32, b: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..a {
            for i in 1..=out.cap {
                let prev = out.coeffs[i - 1].clone();
                out.coeffs[i] += prev;
            }
        }
        for _ in 0..b {
            for i in 2..=out.cap {
                let prev = out.coeffs[i - 2].clone();
                out.coeffs[i] += prev;
            }
        }
        out
    }

    /// Multiply by `(1 − t)^a (1 − t²)^b` (inverse of [`Self::div_one_minus`]).
    pub fn mul_one_minus(&self, a: u32, b: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..a {
            for i in (1..=out.cap).rev() {
                let prev = out.coeffs[i - 1].clone();
                out.coeffs[i] -= prev;
            }
        }
        for _ in 0..b {
            for i in (2..=out.cap).rev() {
                let prev = out.coeffs[i - 2].clone();
                out.coeffs[i] -= prev;
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => Value::from(v),
                Err(_) => Value::from(c.to_string()),
            })
            .collect();
        json!({ "cap": self.cap, "coeffs": coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn posi2_n1_values() {
        let s = TruncatedSeries::posi2(1, 3);
        assert_eq!(s.coeffs(), ints(&[1, 2, 6, 8]).as_slice());
    }

    #[test]
    fn geometric_series() {
        let one = TruncatedSeries::from_coeffs(3, ints(&[1]));
        let inv = one.div_one_minus(1, 0);
        assert_eq!(inv.coeffs(), ints(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn nepo_n1_values() {
        let s = TruncatedSeries::nepo(1, 4);
        assert_eq!(s.coeffs(), ints(&[1, 0, 3, 0, 5]).as_slice());
    }

    #[test]
    fn division_round_trips() {
        let s = TruncatedSeries::from_coeffs(8, ints(&[3, -1, 4, 1, -5, 9, 2, 6, -5]));
        for (a, b) in [(1, 0), (0, 1), (2, 3), (3, 1)] {
            assert_eq!(s.div_one_minus(a, b).mul_one_minus(a, b), s);
        }
    }

    #[test]
    fn brenti_matches_nega_posi_merge() {
        // posi2 + nega2 at even exponents reproduce nepo's nonzero entries:
        // (k+1)^n·((k+2)/2 + (k+1)/2) = (k+1)^{n+1}, and nepo picks even k.
        let n = 3;
        let cap = 8;
        let p = TruncatedSeries::posi2(n, cap);
        let m = TruncatedSeries::nega2(n, cap);
        for k in 0..=cap {
            let sum = &p.coeffs()[k] + &m.coeffs()[k];
            assert_eq!(sum, BigInt::from(k as u64 + 1).pow(n + 1));
            let diff = &p.coeffs()[k] - &m.coeffs()[k];
            let want = if k % 2 == 0 { BigInt::from(k as u64 + 1).pow(n) } else { BigInt::zero() };
            assert_eq!(diff, want, "posi2 − nega2 must equal nepo at k={k}");
        }
    }
}
