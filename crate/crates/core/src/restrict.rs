//! Per-position color restrictions.
//!
//! A restriction tuple assigns each window position a subset of `0..r`;
//! an element is admitted when every position's color lies in its subset.
//! The half-length refinement `S ≺ H` intersects consecutive entries, and
//! the odd-length tilde variants `S_k ◁ H` additionally pin where the
//! maximum letter sits.

use std::fmt;

use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RestrictError {
    #[error("restriction entry mentions color {color} but r = {r}")]
    ColorOutOfRange { color: u32, r: u32 },
    #[error("refinement needs an even-length tuple, got {0}")]
    OddLength(usize),
    #[error("tilde families need an odd-length tuple, got {0}")]
    EvenLength(usize),
    #[error("tilde position {k} out of range 1..={n}")]
    BadTildePosition { k: usize, n: usize },
    #[error("sign shorthand `{0}` requires r = 2")]
    ShorthandNeedsRankTwo(String),
    #[error("cannot parse restriction entry: {0}")]
    BadEntry(String),
    #[error("restriction JSON must be an array of entries (or {{\"k\", \"entries\"}})")]
    BadShape,
    #[error("r must be at least 1 and at most 64")]
    BadRank,
}

/// A subset of `Z_r`, stored as a bitmask (r ≤ 64).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full(r: u32) -> Self {
        debug_assert!(r >= 1 && r <= 64);
        if r == 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << r) - 1)
        }
    }

    pub fn from_colors(colors: &[u32]) -> Self {
        ColorSet(colors.iter().fold(0, |m, &c| m | (1u64 << c)))
    }

    pub fn contains(self, c: u32) -> bool {
        c < 64 && self.0 & (1 << c) != 0
    }

    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        (0..64).filter(move |&c| self.0 & (1 << c) != 0)
    }

    pub fn colors(self) -> Vec<u32> {
        self.iter().collect()
    }
}

/// The paper-style tuple `S = (S_1, ..., S_n)` with `S_i ⊆ Z_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionTuple {
    r: u32,
    entries: Vec<ColorSet>,
}

impl RestrictionTuple {
    pub fn new(r: u32, entries: Vec<ColorSet>) -> Result<Self, RestrictError> {
        if r == 0 || r > 64 {
            return Err(RestrictError::BadRank);
        }
        let full = ColorSet::full(r);
        for e in &entries {
            if e.intersect(full) != *e {
                let bad = e.iter().find(|&c| c >= r).unwrap_or(r);
                return Err(RestrictError::ColorOutOfRange { color: bad, r });
            }
        }
        Ok(Self { r, entries })
    }

    /// The unrestricted tuple `(Z_r, ..., Z_r)`.
    pub fn full(r: u32, n: usize) -> Self {
        Self { r, entries: vec![ColorSet::full(r); n] }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> ColorSet {
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[ColorSet] {
        &self.entries
    }

    pub fn admits(&self, colors: &[u32]) -> bool {
        colors.len() == self.entries.len()
            && colors.iter().zip(&self.entries).all(|(&c, e)| e.contains(c))
    }

    /// Number of admitted color vectors, `∏ |S_i|`.
    pub fn color_count(&self) -> u128 {
        self.entries.iter().map(|e| e.len() as u128).product()
    }

    /// The unique `S ≺ H` with `S_i = H_{2i-1} ∩ H_{2i}`.
    pub fn refine(&self) -> Result<RestrictionTuple, RestrictError> {
        if self.len() % 2 != 0 {
            return Err(RestrictError::OddLength(self.len()));
        }
        let entries = self
            .entries
            .chunks_exact(2)
            .map(|pair| pair[0].intersect(pair[1]))
            .collect();
        Ok(RestrictionTuple { r: self.r, entries })
    }

    /// All tilde tuples `S_k ◁ H` for odd-length `H` (length 2n+1), k = 1..=n+1.
    ///
    /// Slot i takes `H_{2i-1} ∩ H_{2i}` before the tilde, `H_{2k-1}` at it,
    /// and `H_{2i-2} ∩ H_{2i-1}` after it.
    pub fn tilde_family(&self) -> Result<Vec<TildeRestriction>, RestrictError> {
        let m = self.len();
        if m % 2 == 0 {
            return Err(RestrictError::EvenLength(m));
        }
        let half = (m + 1) / 2;
        let mut out = Vec::with_capacity(half);
        for k in 1..=half {
            let mut entries = Vec::with_capacity(half);
            for i in 1..=half {
                let set = if i < k {
                    self.entry(2 * i - 1).intersect(self.entry(2 * i))
                } else if i == k {
                    self.entry(2 * k - 1)
                } else {
                    self.entry(2 * i - 2).intersect(self.entry(2 * i - 1))
                };
                entries.push(set);
            }
            out.push(TildeRestriction {
                base: RestrictionTuple { r: self.r, entries },
                k,
            });
        }
        Ok(out)
    }

    /// Parse the JSON form: an array whose entries are color arrays, or
    /// (r = 2) the shorthand strings `"+"`, `"-"`, `"±"`.
    pub fn from_json(value: &Value, r: u32) -> Result<Self, RestrictError> {
        let arr = value.as_array().ok_or(RestrictError::BadShape)?;
        let mut entries = Vec::with_capacity(arr.len());
        for item in arr {
            entries.push(entry_from_json(item, r)?);
        }
        RestrictionTuple::new(r, entries)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| Value::Array(e.iter().map(|c| Value::from(c)).collect()))
                .collect(),
        )
    }
}

fn entry_from_json(item: &Value, r: u32) -> Result<ColorSet, RestrictError> {
    match item {
        Value::Array(colors) => {
            let mut set = ColorSet::EMPTY;
            for c in colors {
                let c = c
                    .as_u64()
                    .ok_or_else(|| RestrictError::BadEntry(c.to_string()))?;
                if c >= r as u64 {
                    return Err(RestrictError::ColorOutOfRange { color: c as u32, r });
                }
                set = ColorSet(set.0 | (1 << c));
            }
            Ok(set)
        }
        Value::String(s) => {
            let set = match s.as_str() {
                "+" => ColorSet::from_colors(&[0]),
                "-" | "\u{2212}" => ColorSet::from_colors(&[1]),
                "±" | "+-" | "pm" => ColorSet::from_colors(&[0, 1]),
                other => return Err(RestrictError::BadEntry(other.to_string())),
            };
            if r != 2 {
                return Err(RestrictError::ShorthandNeedsRankTwo(s.clone()));
            }
            Ok(set)
        }
        other => Err(RestrictError::BadEntry(other.to_string())),
    }
}

impl fmt::Display for RestrictionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if self.r == 2 {
                match (e.contains(0), e.contains(1)) {
                    (true, true) => write!(f, "±")?,
                    (true, false) => write!(f, "+")?,
                    (false, true) => write!(f, "-")?,
                    (false, false) => write!(f, "∅")?,
                }
            } else {
                write!(f, "{{{}}}", e.colors().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))?;
            }
        }
        write!(f, ")")
    }
}

/// A restriction with the extra tilde on slot `k`: elements must put the
/// maximum letter at position `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeRestriction {
    base: RestrictionTuple,
    k: usize,
}

impl TildeRestriction {
    pub fn new(base: RestrictionTuple, k: usize) -> Result<Self, RestrictError> {
        let n = base.len();
        if k == 0 || k > n {
            return Err(RestrictError::BadTildePosition { k, n });
        }
        Ok(Self { base, k })
    }

    pub fn base(&self) -> &RestrictionTuple {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl fmt::Display for TildeRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~{}", self.base, self.k)
    }
}

/// Convenience constructor for r = 2 tuples out of `'+'`, `'-'`, `'b'` (both)
/// and `'0'` (empty) characters; handy in tests.
pub fn signs(pattern: &str) -> RestrictionTuple {
    let entries = pattern
        .chars()
        .map(|ch| match ch {
            '+' => ColorSet::from_colors(&[0]),
            '-' => ColorSet::from_colors(&[1]),
            'b' => ColorSet::from_colors(&[0, 1]),
            '0' => ColorSet::EMPTY,
            _ => panic!("bad sign pattern char {ch:?}"),
        })
        .collect();
    RestrictionTuple::new(2, entries).expect("r = 2 pattern")
}
