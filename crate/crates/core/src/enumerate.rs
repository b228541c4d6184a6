//! Exhaustive enumeration of the permutation families.
//!
//! Every family is visited in lexicographic order on `(sigma, z)`, so CLI
//! output and JSON artifacts are byte-deterministic. The sigma index space
//! splits into contiguous rank ranges for parallel map-reduce scans; all
//! elements are immutable once yielded.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::parallel;
use crate::perm::ColoredPermutation;
use crate::restrict::{ColorSet, RestrictionTuple, TildeRestriction};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family D requires r = 2")]
    DNeedsRankTwo,
    #[error("window size {0} too large to enumerate")]
    TooLarge(usize),
}

/// A family of colored permutations closed under the statistics in this
/// crate: a full group, a restricted subset, or a tilde-marked subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// The symmetric group `S_n` (r = 1).
    Sym { n: usize },
    /// The hyperoctahedral group `B_n` (r = 2).
    B { n: usize },
    /// The even-signed subgroup `D_n` (r = 2, even number of negatives).
    D { n: usize },
    /// The full wreath product `G(r,1,n)`.
    G { r: u32, n: usize },
    /// `G(r,1,n)(S)`: position i's color restricted to `S_i`.
    RestrictedG { restriction: RestrictionTuple },
    /// `B_n(S_k)`: sign-restricted with the maximum letter pinned at slot k.
    TildeB { restriction: TildeRestriction },
}

impl FamilySpec {
    pub fn r(&self) -> u32 {
        match self {
            FamilySpec::Sym { .. } => 1,
            FamilySpec::B { .. } | FamilySpec::D { .. } | FamilySpec::TildeB { .. } => 2,
            FamilySpec::G { r, .. } => *r,
            FamilySpec::RestrictedG { restriction } => restriction.r(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            FamilySpec::Sym { n } | FamilySpec::B { n } | FamilySpec::D { n } | FamilySpec::G { n, .. } => *n,
            FamilySpec::RestrictedG { restriction } => restriction.len(),
            FamilySpec::TildeB { restriction } => restriction.base().len(),
        }
    }

    /// Exact number of elements.
    pub fn count(&self) -> u128 {
        let n = self.n();
        let fact = factorial_u128(n);
        match self {
            FamilySpec::Sym { .. } => fact,
            FamilySpec::B { .. } => fact << n,
            FamilySpec::D { .. } => {
                if n == 0 {
                    1
                } else {
                    fact << (n - 1)
                }
            }
            FamilySpec::G { r, .. } => fact * (*r as u128).pow(n as u32),
            FamilySpec::RestrictedG { restriction } => fact * restriction.color_count(),
            FamilySpec::TildeB { restriction } => {
                if n == 0 {
                    0
                } else {
                    factorial_u128(n - 1) * restriction.base().color_count()
                }
            }
        }
    }

    fn allowed_colors(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        match self {
            FamilySpec::Sym { .. } => vec![vec![0]; n],
            FamilySpec::B { .. } | FamilySpec::D { .. } => vec![vec![0, 1]; n],
            FamilySpec::G { r, .. } => vec![(0..*r).collect(); n],
            FamilySpec::RestrictedG { restriction } => {
                restriction.entries().iter().map(|e| e.colors()).collect()
            }
            FamilySpec::TildeB { restriction } => {
                restriction.base().entries().iter().map(|e| e.colors()).collect()
            }
        }
    }

    fn needs_even_neg(&self) -> bool {
        matches!(self, FamilySpec::D { .. })
    }

    fn pinned_max_slot(&self) -> Option<usize> {
        match self {
            FamilySpec::TildeB { restriction } => Some(restriction.k()),
            _ => None,
        }
    }

    /// Visit every element in lexicographic `(sigma, z)` order.
    pub fn scan<F: FnMut(&ColoredPermutation)>(&self, mut f: F) {
        let total = factorial_u64(self.n());
        self.try_scan_sigma_range(0, total, |p| {
            f(p);
            ControlFlow::Continue(())
        });
    }

    /// As [`FamilySpec::scan`] but stoppable.
    pub fn try_scan<F: FnMut(&ColoredPermutation) -> ControlFlow<()>>(&self, f: F) -> ControlFlow<()> {
        let total = factorial_u64(self.n());
        self.try_scan_sigma_range(0, total, f)
    }

    /// Visit the elements whose sigma has lexicographic rank in `[start, end)`.
    pub fn scan_sigma_range<F: FnMut(&ColoredPermutation)>(&self, start: u64, end: u64, mut f: F) {
        self.try_scan_sigma_range(start, end, |p| {
            f(p);
            ControlFlow::Continue(())
        });
    }

    fn try_scan_sigma_range<F>(&self, start: u64, end: u64, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&ColoredPermutation) -> ControlFlow<()>,
    {
        let n = self.n();
        let total = factorial_u64(n);
        let start = start.min(total);
        let end = end.min(total);
        if start >= end {
            return ControlFlow::Continue(());
        }
        let allowed = self.allowed_colors();
        if allowed.iter().any(|a| a.is_empty()) {
            return ControlFlow::Continue(());
        }
        let even_neg = self.needs_even_neg();
        let pinned = self.pinned_max_slot();
        let mut sigma = unrank_permutation(n, start);
        let init_colors: Vec<u32> = allowed.iter().map(|a| a[0]).collect();
        let mut elem = ColoredPermutation::raw(self.r(), sigma.clone(), init_colors.clone());
        let mut idx = vec![0usize; n];
        for _ in start..end {
            let sigma_ok = match pinned {
                Some(k) => sigma[k - 1] as usize == n,
                None => true,
            };
            if sigma_ok {
                elem.sigma_mut().copy_from_slice(&sigma);
                // reset color odometer
                for i in 0..n {
                    idx[i] = 0;
                }
                elem.colors_mut().copy_from_slice(&init_colors);
                let mut nonzero = init_colors.iter().filter(|&&c| c != 0).count();
                loop {
                    if !even_neg || nonzero % 2 == 0 {
                        f(&elem)?;
                    }
                    // advance rightmost-fastest, keeping z lexicographic
                    let mut pos = n;
                    loop {
                        if pos == 0 {
                            break;
                        }
                        let i = pos - 1;
                        if idx[i] + 1 < allowed[i].len() {
                            let old = allowed[i][idx[i]];
                            idx[i] += 1;
                            let new = allowed[i][idx[i]];
                            elem.colors_mut()[i] = new;
                            nonzero = nonzero + (new != 0) as usize - (old != 0) as usize;
                            break;
                        }
                        let old = allowed[i][idx[i]];
                        idx[i] = 0;
                        let new = allowed[i][0];
                        elem.colors_mut()[i] = new;
                        nonzero = nonzero + (new != 0) as usize - (old != 0) as usize;
                        pos -= 1;
                    }
                    if pos == 0 {
                        break;
                    }
                }
            }
            if !next_permutation(&mut sigma) {
                break;
            }
        }
        ControlFlow::Continue(())
    }

    /// Parallel fold over the family: each chunk folds into its own
    /// accumulator; parts come back in chunk order for deterministic merge.
    pub fn par_fold<T, Init, Step>(&self, jobs: usize, init: Init, step: Step) -> Vec<T>
    where
        T: Send,
        Init: Fn() -> T + Sync,
        Step: Fn(&mut T, &ColoredPermutation) + Sync,
    {
        let total = factorial_u64(self.n());
        parallel::run_chunked(total, jobs, |a, b| {
            let mut acc = init();
            self.scan_sigma_range(a, b, |p| step(&mut acc, p));
            acc
        })
    }

    /// Collect the whole family; intended for small sizes.
    pub fn elements(&self) -> Vec<ColoredPermutation> {
        let mut out = Vec::new();
        self.scan(|p| out.push(p.clone()));
        out
    }
}

pub(crate) fn factorial_u64(n: usize) -> u64 {
    assert!(n <= 20, "window size {n} too large to enumerate");
    (1..=n as u64).product()
}

pub(crate) fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// The permutation of `1..=n` with the given lexicographic rank.
pub fn unrank_permutation(n: usize, mut rank: u64) -> Vec<u32> {
    let mut digits = vec![0u64; n];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    digits
        .iter()
        .map(|&d| pool.remove(d as usize))
        .collect()
}

/// Advance to the next permutation in lexicographic order; false at the last.
pub fn next_permutation(a: &mut [u32]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restrict::{signs, RestrictionTuple};

    fn windows(spec: &FamilySpec) -> Vec<String> {
        spec.elements().iter().map(|p| p.window()).collect()
    }

    #[test]
    fn sym3_has_six_elements() {
        let spec = FamilySpec::Sym { n: 3 };
        let elems = spec.elements();
        assert_eq!(elems.len(), 6);
        assert_eq!(spec.count(), 6);
        assert_eq!(elems[0].window(), "1 2 3");
        assert_eq!(elems[5].window(), "3 2 1");
    }

    #[test]
    fn counts_match_formulas() {
        for n in 0..=4 {
            assert_eq!(FamilySpec::B { n }.elements().len() as u128, FamilySpec::B { n }.count());
            assert_eq!(FamilySpec::D { n }.elements().len() as u128, FamilySpec::D { n }.count());
        }
        for r in 1..=3u32 {
            for n in 0..=3 {
                let g = FamilySpec::G { r, n };
                assert_eq!(g.elements().len() as u128, g.count());
                assert_eq!(g.count(), factorial_u128(n) * (r as u128).pow(n as u32));
            }
        }
    }

    #[test]
    fn restricted_g42_example() {
        let s = RestrictionTuple::new(
            4,
            vec![
                crate::restrict::ColorSet::from_colors(&[0, 2]),
                crate::restrict::ColorSet::from_colors(&[2, 3]),
            ],
        )
        .unwrap();
        let spec = FamilySpec::RestrictedG { restriction: s };
        let got = windows(&spec);
        let want = vec![
            "1 2[2]", "1 2[3]", "1[2] 2[2]", "1[2] 2[3]",
            "2 1[2]", "2 1[3]", "2[2] 1[2]", "2[2] 1[3]",
        ];
        assert_eq!(got, want);
        assert_eq!(spec.count(), 8);
    }

    #[test]
    fn empty_entry_gives_empty_stream() {
        let s = signs("+0-");
        let spec = FamilySpec::RestrictedG { restriction: s };
        assert!(spec.elements().is_empty());
        assert_eq!(spec.count(), 0);
    }

    #[test]
    fn tilde_b_example() {
        // S = (−, +̃, ±): negatives at slot 1, max letter positive at slot 2.
        let tr = TildeRestriction::new(signs("-+b"), 2).unwrap();
        let spec = FamilySpec::TildeB { restriction: tr };
        let got = windows(&spec);
        assert_eq!(got, vec!["-1 3 2", "-1 3 -2", "-2 3 1", "-2 3 -1"]);
    }

    #[test]
    fn d_family_filters_parity() {
        let spec = FamilySpec::D { n: 2 };
        assert_eq!(windows(&spec), vec!["1 2", "-1 -2", "2 1", "-2 -1"]);
    }

    #[test]
    fn n_zero_families_have_one_element() {
        for spec in [FamilySpec::Sym { n: 0 }, FamilySpec::B { n: 0 }, FamilySpec::D { n: 0 }] {
            let elems = spec.elements();
            assert_eq!(elems.len(), 1);
            assert_eq!(elems[0].n(), 0);
        }
    }

    #[test]
    fn unrank_agrees_with_iteration() {
        let n = 5;
        let mut sigma: Vec<u32> = (1..=n as u32).collect();
        let mut rank = 0u64;
        loop {
            assert_eq!(unrank_permutation(n, rank), sigma);
            rank += 1;
            if !next_permutation(&mut sigma) {
                break;
            }
        }
        assert_eq!(rank, factorial_u64(n));
    }

    #[test]
    fn sigma_ranges_partition_the_scan() {
        let spec = FamilySpec::B { n: 3 };
        let all = spec.elements();
        let mut chunked = Vec::new();
        let total = factorial_u64(3);
        for (a, b) in crate::parallel::split_range(total, 4) {
            spec.scan_sigma_range(a, b, |p| chunked.push(p.clone()));
        }
        assert_eq!(all, chunked);
    }
}
