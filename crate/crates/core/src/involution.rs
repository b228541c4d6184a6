//! Sign-reversing involutions on colored and signed permutations.
//!
//! Each involution locates the smallest qualifying pair of letters
//! `(2i−1, 2i)` (or the smallest misplaced letter, for `theta`) and swaps the
//! two absolute letters; position colors/signs stay put, except for the
//! `psi` rules that flip both swapped signs and `theta` which flips one.
//! Fixed points are also generated directly from their structural
//! characterization so the two definitions can be cross-checked.

use thiserror::Error;

use crate::enumerate::{next_permutation, FamilySpec};
use crate::perm::ColoredPermutation;
use crate::restrict::{RestrictionTuple, TildeRestriction};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("tag {0:?} requires r = 2")]
    NeedsRankTwo(InvolutionTag),
    #[error("tag {0:?} requires an even window size")]
    NeedsEvenSize(InvolutionTag),
    #[error("tag {0:?} requires an odd window size")]
    NeedsOddSize(InvolutionTag),
    #[error("tag {0:?} acts on even-signed permutations only")]
    NeedsEvenNegatives(InvolutionTag),
    #[error("restriction length {got} does not match window size {want}")]
    RestrictionLength { got: usize, want: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionTag {
    /// Pair-swapper on `G(r,1,2n)(H)` and on `B_{2n+1}`.
    Phi,
    /// Type-D pair-swapper on `D_{2n}`.
    Eta,
    /// Type-D pair-swapper on `D_{2n+1}`.
    Iota,
    /// Sign-flipping pair-swapper on `B_n`.
    PsiB,
    /// Sign-flipping pair-swapper on `D_n`.
    PsiD,
    /// Single-letter sign flip on `B_n`.
    Theta,
}

fn check_domain(tag: InvolutionTag, p: &ColoredPermutation) -> Result<(), InvolutionError> {
    use InvolutionTag::*;
    match tag {
        Phi => Ok(()),
        Eta => {
            if p.r() != 2 {
                Err(InvolutionError::NeedsRankTwo(tag))
            } else if p.n() % 2 != 0 {
                Err(InvolutionError::NeedsEvenSize(tag))
            } else if p.neg() % 2 != 0 {
                Err(InvolutionError::NeedsEvenNegatives(tag))
            } else {
                Ok(())
            }
        }
        Iota => {
            if p.r() != 2 {
                Err(InvolutionError::NeedsRankTwo(tag))
            } else if p.n() % 2 != 1 {
                Err(InvolutionError::NeedsOddSize(tag))
            } else if p.neg() % 2 != 0 {
                Err(InvolutionError::NeedsEvenNegatives(tag))
            } else {
                Ok(())
            }
        }
        PsiB | Theta => {
            if p.r() != 2 {
                Err(InvolutionError::NeedsRankTwo(tag))
            } else {
                Ok(())
            }
        }
        PsiD => {
            if p.r() != 2 {
                Err(InvolutionError::NeedsRankTwo(tag))
            } else if p.neg() % 2 != 0 {
                Err(InvolutionError::NeedsEvenNegatives(tag))
            } else {
                Ok(())
            }
        }
    }
}

fn swap_letters(p: &ColoredPermutation, pa: usize, pb: usize) -> ColoredPermutation {
    let mut sigma = p.sigma().to_vec();
    sigma.swap(pa - 1, pb - 1);
    ColoredPermutation::new(p.r(), sigma, p.colors().to_vec()).expect("swap keeps validity")
}

fn swap_letters_flip_signs(p: &ColoredPermutation, pa: usize, pb: usize) -> ColoredPermutation {
    let mut sigma = p.sigma().to_vec();
    let mut colors = p.colors().to_vec();
    sigma.swap(pa - 1, pb - 1);
    colors[pa - 1] ^= 1;
    colors[pb - 1] ^= 1;
    ColoredPermutation::new(p.r(), sigma, colors).expect("swap keeps validity")
}

/// Apply the tagged involution; returns the input unchanged exactly on its
/// fixed points.
pub fn involute(tag: InvolutionTag, p: &ColoredPermutation) -> Result<ColoredPermutation, InvolutionError> {
    check_domain(tag, p)?;
    let n = p.n();
    let pairs = n / 2;
    let pos = |v: u32| p.position_of(v);
    let adjacent = |pa: usize, pb: usize| pa.abs_diff(pb) == 1;
    match tag {
        InvolutionTag::Phi => {
            for i in 1..=pairs {
                let (pa, pb) = (pos(2 * i as u32 - 1), pos(2 * i as u32));
                if p.color(pa) != p.color(pb) || !adjacent(pa, pb) {
                    return Ok(swap_letters(p, pa, pb));
                }
            }
            Ok(p.clone())
        }
        InvolutionTag::Eta => {
            for i in 1..=pairs {
                let (pa, pb) = (pos(2 * i as u32 - 1), pos(2 * i as u32));
                let at_last_two = pa.min(pb) == n - 1;
                if !adjacent(pa, pb) {
                    return Ok(swap_letters(p, pa, pb));
                }
                let same_sign = p.color(pa) == p.color(pb);
                if !same_sign && !at_last_two {
                    return Ok(swap_letters(p, pa, pb));
                }
                if same_sign && at_last_two && p.color(pa) == 1 {
                    return Ok(swap_letters(p, pa, pb));
                }
            }
            Ok(p.clone())
        }
        InvolutionTag::Iota => {
            for i in 1..=pairs {
                let (pa, pb) = (pos(2 * i as u32 - 1), pos(2 * i as u32));
                let at_last_two = adjacent(pa, pb) && pa.min(pb) == n - 1;
                if !adjacent(pa, pb) {
                    return Ok(swap_letters(p, pa, pb));
                }
                let same_sign = p.color(pa) == p.color(pb);
                if !same_sign && !at_last_two {
                    return Ok(swap_letters(p, pa, pb));
                }
                // both at the last two positions and the second-to-last
                // window entry is negative
                if at_last_two && p.color(n - 1) == 1 {
                    return Ok(swap_letters(p, pa, pb));
                }
            }
            Ok(p.clone())
        }
        InvolutionTag::PsiB | InvolutionTag::PsiD => {
            let d_type = tag == InvolutionTag::PsiD;
            for i in 1..=pairs {
                let (pa, pb) = (pos(2 * i as u32 - 1), pos(2 * i as u32));
                if !adjacent(pa, pb) {
                    return Ok(swap_letters(p, pa, pb));
                }
                let same_sign = p.color(pa) == p.color(pb);
                let home = pa.min(pb) == 2 * i - 1;
                if !same_sign {
                    // type D spares the first pair when it sits up front
                    if d_type && i == 1 && home {
                        continue;
                    }
                    return Ok(swap_letters(p, pa, pb));
                }
                if !home {
                    return Ok(swap_letters_flip_signs(p, pa, pb));
                }
            }
            Ok(p.clone())
        }
        InvolutionTag::Theta => {
            for k in 1..=n {
                if p.letter(k) as usize != k {
                    let i = pos(k as u32);
                    let mut colors = p.colors().to_vec();
                    colors[i - 1] ^= 1;
                    return Ok(ColoredPermutation::new(2, p.sigma().to_vec(), colors)
                        .expect("sign flip keeps validity"));
                }
            }
            Ok(p.clone())
        }
    }
}

/// Structural fixed-point enumerations, sorted by `(sigma, z)`.
///
/// `size` is the window size of the domain; `phi` additionally takes the
/// restriction `H` (defaults to the full tuple). These never call
/// [`involute`], so tests can cross-check filter-based and structural sets.
pub fn fixed_points(
    tag: InvolutionTag,
    r: u32,
    size: usize,
    restriction: Option<&RestrictionTuple>,
) -> Result<Vec<ColoredPermutation>, InvolutionError> {
    if let Some(h) = restriction {
        if h.len() != size {
            return Err(InvolutionError::RestrictionLength { got: h.len(), want: size });
        }
    }
    let mut out = match tag {
        InvolutionTag::Phi => phi_fixed(r, size, restriction),
        InvolutionTag::Eta => {
            if r != 2 {
                return Err(InvolutionError::NeedsRankTwo(tag));
            }
            if size % 2 != 0 {
                return Err(InvolutionError::NeedsEvenSize(tag));
            }
            eta_fixed(size)
        }
        InvolutionTag::Iota => {
            if r != 2 {
                return Err(InvolutionError::NeedsRankTwo(tag));
            }
            if size % 2 != 1 {
                return Err(InvolutionError::NeedsOddSize(tag));
            }
            iota_fixed(size)
        }
        InvolutionTag::PsiB => {
            if r != 2 {
                return Err(InvolutionError::NeedsRankTwo(tag));
            }
            psi_b_fixed(size)
        }
        InvolutionTag::PsiD => {
            if r != 2 {
                return Err(InvolutionError::NeedsRankTwo(tag));
            }
            psi_d_fixed(size)
        }
        InvolutionTag::Theta => {
            if r != 2 {
                return Err(InvolutionError::NeedsRankTwo(tag));
            }
            theta_fixed(size)
        }
    };
    out.sort();
    Ok(out)
}

/// Visit every block arrangement: a permutation `tau` of pair values and a
/// per-slot descending/ascending bit.
fn for_each_block_order(pairs: usize, mut f: impl FnMut(&[u32], u32)) {
    if pairs == 0 {
        f(&[], 0);
        return;
    }
    let mut tau: Vec<u32> = (1..=pairs as u32).collect();
    loop {
        for bits in 0..(1u32 << pairs) {
            f(&tau, bits);
        }
        if !next_permutation(&mut tau) {
            break;
        }
    }
}

fn phi_fixed(r: u32, size: usize, restriction: Option<&RestrictionTuple>) -> Vec<ColoredPermutation> {
    let full;
    let h = match restriction {
        Some(h) => h,
        None => {
            full = RestrictionTuple::full(r, size);
            &full
        }
    };
    let mut out = Vec::new();
    if size % 2 == 0 {
        let n = size / 2;
        let slot_sets: Vec<Vec<u32>> = (1..=n)
            .map(|i| h.entry(2 * i - 1).intersect(h.entry(2 * i)).colors())
            .collect();
        for_each_block_order(n, |tau, bits| {
            emit_colored_blocks(r, tau, bits, &slot_sets, None, &mut out);
        });
    } else {
        // B_{2n+1}: one slot holds the maximal letter, the rest are pairs.
        assert_eq!(r, 2, "odd phi domains are signed");
        let tilde = h.tilde_family().expect("odd length");
        for tr in &tilde {
            let n = tr.base().len() - 1;
            let k = tr.k();
            let max_colors = tr.base().entry(k).colors();
            let slot_sets: Vec<Vec<u32>> = (1..=tr.base().len())
                .filter(|&i| i != k)
                .map(|i| tr.base().entry(i).colors())
                .collect();
            for_each_block_order(n, |tau, bits| {
                for &mc in &max_colors {
                    emit_colored_blocks(r, tau, bits, &slot_sets, Some((k, mc)), &mut out);
                }
            });
        }
    }
    out
}

/// Lay out pair blocks (and an optional single maximal letter at folded slot
/// `k`) into a window, one element per admissible color vector.
fn emit_colored_blocks(
    r: u32,
    tau: &[u32],
    bits: u32,
    slot_sets: &[Vec<u32>],
    max_at: Option<(usize, u32)>,
    out: &mut Vec<ColoredPermutation>,
) {
    let pairs = tau.len();
    let size = 2 * pairs + max_at.is_some() as usize;
    if slot_sets.iter().any(|s| s.is_empty()) {
        return;
    }
    // color odometer over the pair slots
    let mut idx = vec![0usize; pairs];
    loop {
        let mut sigma = Vec::with_capacity(size);
        let mut colors = Vec::with_capacity(size);
        let mut slot = 0usize;
        let mut folded = 1usize;
        while folded <= pairs + max_at.is_some() as usize {
            if let Some((k, mc)) = max_at {
                if folded == k {
                    sigma.push(size as u32);
                    colors.push(mc);
                    folded += 1;
                    continue;
                }
            }
            let j = tau[slot];
            let c = slot_sets[slot][idx[slot]];
            if bits >> slot & 1 == 0 {
                sigma.push(2 * j - 1);
                sigma.push(2 * j);
            } else {
                sigma.push(2 * j);
                sigma.push(2 * j - 1);
            }
            colors.push(c);
            colors.push(c);
            slot += 1;
            folded += 1;
        }
        out.push(ColoredPermutation::new(r, sigma, colors).expect("structural element"));
        // advance
        let mut ppos = pairs;
        while ppos > 0 {
            let i = ppos - 1;
            if idx[i] + 1 < slot_sets[i].len() {
                idx[i] += 1;
                break;
            }
            idx[i] = 0;
            ppos -= 1;
        }
        if ppos == 0 {
            break;
        }
    }
}

fn eta_fixed(size: usize) -> Vec<ColoredPermutation> {
    let n = size / 2;
    let mut out = Vec::new();
    for_each_block_order(n, |tau, bits| {
        // signs per slot; the last slot must be positive
        for signs in 0..(1u32 << n.saturating_sub(1)) {
            let mut sigma = Vec::with_capacity(size);
            let mut colors = Vec::with_capacity(size);
            for slot in 0..n {
                let j = tau[slot];
                let c = if slot + 1 == n { 0 } else { signs >> slot & 1 };
                if bits >> slot & 1 == 0 {
                    sigma.extend([2 * j - 1, 2 * j]);
                } else {
                    sigma.extend([2 * j, 2 * j - 1]);
                }
                colors.extend([c, c]);
            }
            out.push(ColoredPermutation::new(2, sigma, colors).expect("structural element"));
        }
    });
    if size == 0 {
        out.push(ColoredPermutation::identity(2, 0));
        out.dedup();
    }
    out
}

fn iota_fixed(size: usize) -> Vec<ColoredPermutation> {
    let n = size / 2;
    let mut out = Vec::new();
    for k in 1..=n + 1 {
        for_each_block_order(n, |tau, bits| {
            // max letter sign, per-slot signs; pair at the last two positions
            // (present iff k <= n, always the last slot) has a free second
            // sign but a positive first entry.
            for max_sign in 0..2u32 {
                let free_slots = if k <= n { n - 1 } else { n };
                for signs in 0..(1u32 << free_slots) {
                    let tail_signs = if k <= n { 2 } else { 1 };
                    for tail in 0..tail_signs {
                        let mut sigma = Vec::with_capacity(size);
                        let mut colors = Vec::with_capacity(size);
                        let mut slot = 0usize;
                        for folded in 1..=n + 1 {
                            if folded == k {
                                sigma.push(size as u32);
                                colors.push(max_sign);
                                continue;
                            }
                            let j = tau[slot];
                            let last_pair = k <= n && folded == n + 1;
                            if bits >> slot & 1 == 0 {
                                sigma.extend([2 * j - 1, 2 * j]);
                            } else {
                                sigma.extend([2 * j, 2 * j - 1]);
                            }
                            if last_pair {
                                colors.extend([0, tail]);
                            } else {
                                let c = signs >> slot & 1;
                                colors.extend([c, c]);
                            }
                            slot += 1;
                        }
                        if colors.iter().filter(|&&c| c == 1).count() % 2 == 0 {
                            out.push(
                                ColoredPermutation::new(2, sigma, colors).expect("structural element"),
                            );
                        }
                    }
                }
            }
        });
    }
    out
}

fn psi_b_fixed(size: usize) -> Vec<ColoredPermutation> {
    let pairs = size / 2;
    let odd = size % 2 == 1;
    let mut out = Vec::new();
    let combos = 1u32 << (2 * pairs + odd as usize);
    for mask in 0..combos {
        let mut sigma = Vec::with_capacity(size);
        let mut colors = Vec::with_capacity(size);
        for i in 0..pairs {
            let order = mask >> (2 * i) & 1;
            let sign = mask >> (2 * i + 1) & 1;
            let (a, b) = (2 * i as u32 + 1, 2 * i as u32 + 2);
            if order == 0 {
                sigma.extend([a, b]);
            } else {
                sigma.extend([b, a]);
            }
            colors.extend([sign, sign]);
        }
        if odd {
            sigma.push(size as u32);
            colors.push(mask >> (2 * pairs) & 1);
        }
        out.push(ColoredPermutation::new(2, sigma, colors).expect("structural element"));
    }
    out
}

fn psi_d_fixed(size: usize) -> Vec<ColoredPermutation> {
    if size < 2 {
        return FamilySpec::D { n: size }.elements();
    }
    let pairs = size / 2;
    let odd = size % 2 == 1;
    let mut out = Vec::new();
    // first pair: letters 1, 2 in either order with independent signs
    for order1 in 0..2u32 {
        for s1 in 0..2u32 {
            for s2 in 0..2u32 {
                let tail_pairs = pairs - 1;
                for mask in 0..(1u32 << (2 * tail_pairs + odd as usize)) {
                    let mut sigma = Vec::with_capacity(size);
                    let mut colors = Vec::with_capacity(size);
                    if order1 == 0 {
                        sigma.extend([1, 2]);
                    } else {
                        sigma.extend([2, 1]);
                    }
                    colors.extend([s1, s2]);
                    for i in 0..tail_pairs {
                        let order = mask >> (2 * i) & 1;
                        let sign = mask >> (2 * i + 1) & 1;
                        let (a, b) = (2 * (i as u32 + 1) + 1, 2 * (i as u32 + 1) + 2);
                        if order == 0 {
                            sigma.extend([a, b]);
                        } else {
                            sigma.extend([b, a]);
                        }
                        colors.extend([sign, sign]);
                    }
                    if odd {
                        sigma.push(size as u32);
                        colors.push(mask >> (2 * tail_pairs) & 1);
                    }
                    if colors.iter().filter(|&&c| c == 1).count() % 2 == 0 {
                        out.push(ColoredPermutation::new(2, sigma, colors).expect("structural element"));
                    }
                }
            }
        }
    }
    out
}

fn theta_fixed(size: usize) -> Vec<ColoredPermutation> {
    let mut out = Vec::new();
    for mask in 0..(1u32 << size) {
        let sigma: Vec<u32> = (1..=size as u32).collect();
        let colors: Vec<u32> = (0..size).map(|i| mask >> i & 1).collect();
        out.push(ColoredPermutation::new(2, sigma, colors).expect("structural element"));
    }
    out
}
