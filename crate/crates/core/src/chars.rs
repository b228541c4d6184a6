//! The 2r one-dimensional characters of `G(r,1,n)`.
//!
//! Two formulations are carried side by side: the length form
//! `(−1)^{a(ℓ(π)−col(π))} ω^{b·col(π)}` and the classical form
//! `(−1)^{a·inv(|π|)} ω^{b·col(π)}`. The two families coincide as sets of
//! functions; [`label_correspondence`] reports the observed pairing instead
//! of assuming the labels line up.

use crate::cyclo::CyclotomicInt;
use crate::enumerate::FamilySpec;
use crate::perm::ColoredPermutation;
use crate::stats::{inv_abs, len_g};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharForm {
    Length,
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharacterLabel {
    pub a: u8,
    pub b: u32,
    pub form: CharForm,
}

impl CharacterLabel {
    pub fn new(a: u8, b: u32, form: CharForm) -> Self {
        debug_assert!(a <= 1);
        Self { a, b, form }
    }
}

/// Exact character value in `Z[ω]`.
pub fn chi(label: CharacterLabel, p: &ColoredPermutation) -> CyclotomicInt {
    let r = p.r();
    debug_assert!(label.b < r.max(1));
    let col = p.col();
    let parity = match label.form {
        CharForm::Length => {
            // ℓ(π) − col(π) is nonnegative: every colored position
            // contributes σ_i + z_i − 1 ≥ z_i to ℓ.
            len_g(p) - col
        }
        CharForm::Classical => inv_abs(p),
    };
    let sign = if label.a == 1 && parity % 2 == 1 { -1 } else { 1 };
    let omega = CyclotomicInt::omega_power(r, label.b as i64 * col as i64);
    if sign == 1 {
        omega
    } else {
        -&omega
    }
}

/// For each length-form label, the classical-form label that takes the same
/// value on every element of `G(r,1,n)`, when a unique one exists.
pub fn label_correspondence(r: u32, n: usize) -> Vec<((u8, u32), Option<(u8, u32)>)> {
    let spec = FamilySpec::G { r, n };
    let elements = spec.elements();
    let table = |label: CharacterLabel| -> Vec<CyclotomicInt> {
        elements.iter().map(|p| chi(label, p)).collect()
    };
    let mut out = Vec::new();
    for a in 0..=1u8 {
        for b in 0..r {
            let len_values = table(CharacterLabel::new(a, b, CharForm::Length));
            let mut matched = None;
            for a2 in 0..=1u8 {
                for b2 in 0..r {
                    let old = table(CharacterLabel::new(a2, b2, CharForm::Classical));
                    if old == len_values {
                        matched = match matched {
                            None => Some((a2, b2)),
                            // two classical labels with identical values
                            // (possible at tiny n); keep the first
                            Some(prev) => Some(prev),
                        };
                    }
                }
            }
            out.push(((a, b), matched));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::len_b;

    fn parse(w: &str, r: u32) -> ColoredPermutation {
        ColoredPermutation::parse(w, r).unwrap()
    }

    #[test]
    fn worked_example_value() {
        // ℓ = 9, col = 4 at r = 3: χ_{a,b} = (−1)^{5a} ω^{4b}
        let p = parse("3[1] 1[2] 4 2[1]", 3);
        assert_eq!(len_g(&p), 9);
        assert_eq!(p.col(), 4);
        for b in 0..3 {
            let v0 = chi(CharacterLabel::new(0, b, CharForm::Length), &p);
            assert_eq!(v0, CyclotomicInt::omega_power(3, 4 * b as i64));
            let v1 = chi(CharacterLabel::new(1, b, CharForm::Length), &p);
            assert_eq!(v1, -&CyclotomicInt::omega_power(3, 4 * b as i64));
        }
    }

    #[test]
    fn identity_maps_to_one() {
        for r in 1..=5u32 {
            let id = ColoredPermutation::identity(r, 3);
            for a in 0..=1 {
                for b in 0..r {
                    for form in [CharForm::Length, CharForm::Classical] {
                        assert!(chi(CharacterLabel::new(a, b, form), &id).is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn b_n_character_table() {
        // r = 2 length-form family is {1, (−1)^neg, (−1)^{inv|π|}, (−1)^{ℓ_B}}.
        for n in 0..=4usize {
            FamilySpec::B { n }.scan(|p| {
                let val = |a, b| chi(CharacterLabel::new(a, b, CharForm::Length), p);
                assert!(val(0, 0).is_one());
                let neg = p.neg() as u64;
                assert_eq!(val(0, 1), CyclotomicInt::from_int(2, if neg % 2 == 0 { 1 } else { -1 }));
                let linv = inv_abs(p);
                assert_eq!(val(1, 0), CyclotomicInt::from_int(2, if linv % 2 == 0 { 1 } else { -1 }));
                let lb = len_b(p);
                assert_eq!(val(1, 1), CyclotomicInt::from_int(2, if lb % 2 == 0 { 1 } else { -1 }));
            });
        }
    }

    #[test]
    fn multiplicativity_small() {
        for r in 1..=3u32 {
            for n in 0..=2usize {
                let elems = FamilySpec::G { r, n }.elements();
                for a in 0..=1u8 {
                    for b in 0..r {
                        for form in [CharForm::Length, CharForm::Classical] {
                            let label = CharacterLabel::new(a, b, form);
                            for p in &elems {
                                for q in &elems {
                                    let pq = p.compose(q).unwrap();
                                    assert_eq!(
                                        chi(label, &pq),
                                        &chi(label, p) * &chi(label, q),
                                        "χ_{{{a},{b}}} not multiplicative at {} · {}",
                                        p.window(),
                                        q.window()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn families_coincide_as_sets() {
        for r in 1..=4u32 {
            for n in 1..=3usize {
                let pairs = label_correspondence(r, n);
                for ((a, b), matched) in pairs {
                    assert!(
                        matched.is_some(),
                        "length-form ({a},{b}) has no classical twin at r={r}, n={n}"
                    );
                }
            }
        }
    }
}
