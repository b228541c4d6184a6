//! Colored permutations in window notation.
//!
//! An element of the wreath product `Z_r ≀ S_n` is a pair `(σ, z)` where `σ`
//! is a permutation of `1..=n` and `z` attaches a color in `0..r` to each
//! *window position*. `r = 1` gives plain permutations, `r = 2` signed ones
//! (color 1 renders the letter negative).

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("sigma is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("color {color} out of range for r = {r}")]
    ColorOutOfRange { color: u32, r: u32 },
    #[error("r must be at least 1")]
    ZeroRank,
    #[error("color/letter length mismatch")]
    LengthMismatch,
    #[error("signed token `{0}` requires r = 2")]
    SignedNeedsRankTwo(String),
    #[error("cannot parse window token `{0}`")]
    BadToken(String),
    #[error("signed formatting requires r = 2")]
    SignedStyleNeedsRankTwo,
    #[error("operands have mismatched r or n")]
    DimensionMismatch,
    #[error("generator index {0} out of range")]
    BadGenerator(usize),
}

/// Window style accepted by [`ColoredPermutation::format`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowStyle {
    /// `d` / `d[c]` tokens, color 0 implicit. Valid for every r.
    Brackets,
    /// `d` / `-d` tokens. Only valid for r = 2.
    Signed,
}

/// An element of `G(r,1,n)` in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    r: u32,
    sigma: Vec<u32>,
    colors: Vec<u32>,
}

impl ColoredPermutation {
    pub fn new(r: u32, sigma: Vec<u32>, colors: Vec<u32>) -> Result<Self, PermError> {
        if r == 0 {
            return Err(PermError::ZeroRank);
        }
        if sigma.len() != colors.len() {
            return Err(PermError::LengthMismatch);
        }
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s == 0 || s as usize > n || seen[s as usize - 1] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[s as usize - 1] = true;
        }
        for &c in &colors {
            if c >= r {
                return Err(PermError::ColorOutOfRange { color: c, r });
            }
        }
        Ok(Self { r, sigma, colors })
    }

    /// Unchecked constructor for enumerator internals.
    pub(crate) fn raw(r: u32, sigma: Vec<u32>, colors: Vec<u32>) -> Self {
        debug_assert!(Self::new(r, sigma.clone(), colors.clone()).is_ok());
        Self { r, sigma, colors }
    }

    pub(crate) fn sigma_mut(&mut self) -> &mut [u32] {
        &mut self.sigma
    }

    pub(crate) fn colors_mut(&mut self) -> &mut [u32] {
        &mut self.colors
    }

    pub fn identity(r: u32, n: usize) -> Self {
        Self {
            r,
            sigma: (1..=n as u32).collect(),
            colors: vec![0; n],
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// Letters of the window, 1-based values.
    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    /// Per-position colors, each in `0..r`.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Letter at window position `i` (1-based).
    pub fn letter(&self, i: usize) -> u32 {
        self.sigma[i - 1]
    }

    /// Color at window position `i` (1-based).
    pub fn color(&self, i: usize) -> u32 {
        self.colors[i - 1]
    }

    /// Signed value at position `i` (1-based); requires r <= 2.
    pub fn signed(&self, i: usize) -> i64 {
        debug_assert!(self.r <= 2);
        let v = self.sigma[i - 1] as i64;
        if self.colors[i - 1] == 0 {
            v
        } else {
            -v
        }
    }

    /// Number of positions with nonzero color (`neg` for r = 2).
    pub fn neg(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// Sum of colors.
    pub fn col(&self) -> u64 {
        self.colors.iter().map(|&c| c as u64).sum()
    }

    /// 1-based window position of the letter `v`.
    pub fn position_of(&self, v: u32) -> usize {
        self.sigma.iter().position(|&s| s == v).expect("letter in range") + 1
    }

    /// Same letters, all colors zeroed (the paper's `|π|`).
    pub fn absolute(&self) -> Self {
        Self {
            r: self.r,
            sigma: self.sigma.clone(),
            colors: vec![0; self.sigma.len()],
        }
    }

    /// Group product of `Z_r ≀ S_n`: `(σ,z)·(τ,w)` has letters `σ∘τ` and
    /// color `z_{τ(i)} + w_i (mod r)` at position `i`.
    pub fn compose(&self, rhs: &Self) -> Result<Self, PermError> {
        if self.r != rhs.r || self.n() != rhs.n() {
            return Err(PermError::DimensionMismatch);
        }
        let n = self.n();
        let mut sigma = Vec::with_capacity(n);
        let mut colors = Vec::with_capacity(n);
        for i in 0..n {
            let t = rhs.sigma[i] as usize;
            sigma.push(self.sigma[t - 1]);
            colors.push((self.colors[t - 1] + rhs.colors[i]) % self.r);
        }
        Ok(Self { r: self.r, sigma, colors })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut sigma = vec![0u32; n];
        let mut colors = vec![0u32; n];
        for i in 0..n {
            let img = self.sigma[i] as usize;
            sigma[img - 1] = i as u32 + 1;
        }
        for i in 0..n {
            let pre = sigma[i] as usize;
            colors[i] = (self.r - self.colors[pre - 1]) % self.r;
        }
        Self { r: self.r, sigma, colors }
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(|&c| c == 0)
            && self.sigma.iter().enumerate().all(|(i, &s)| s as usize == i + 1)
    }

    /// Right action by a Coxeter-type generator.
    ///
    /// `Color0` bumps the color of the first window letter by one (mod r);
    /// `Swap(i)` exchanges window positions `i` and `i+1` (1-based, letter
    /// and color travel together); `DSwap` is the type-D generator, swapping
    /// the first two positions and flipping both signs (r = 2 only).
    pub fn apply_generator(&self, g: Generator) -> Result<Self, PermError> {
        let n = self.n();
        let mut out = self.clone();
        match g {
            Generator::Color0 => {
                if n == 0 {
                    return Err(PermError::BadGenerator(0));
                }
                out.colors[0] = (out.colors[0] + 1) % out.r;
            }
            Generator::Swap(i) => {
                if i == 0 || i >= n {
                    return Err(PermError::BadGenerator(i));
                }
                out.sigma.swap(i - 1, i);
                out.colors.swap(i - 1, i);
            }
            Generator::DSwap => {
                if self.r != 2 || n < 2 {
                    return Err(PermError::BadGenerator(0));
                }
                out.sigma.swap(0, 1);
                out.colors.swap(0, 1);
                out.colors[0] ^= 1;
                out.colors[1] ^= 1;
            }
        }
        Ok(out)
    }

    /// Parse window notation: whitespace-separated `d`, `d[c]`, or (r = 2
    /// only) `-d` tokens. The empty string is the n = 0 element.
    pub fn parse(text: &str, r: u32) -> Result<Self, PermError> {
        if r == 0 {
            return Err(PermError::ZeroRank);
        }
        let mut sigma = Vec::new();
        let mut colors = Vec::new();
        for tok in text.split_whitespace() {
            let (letter, color) = parse_token(tok, r)?;
            sigma.push(letter);
            colors.push(color);
        }
        Self::new(r, sigma, colors)
    }

    /// Canonical window text; inverse of [`ColoredPermutation::parse`].
    pub fn format(&self, style: WindowStyle) -> Result<String, PermError> {
        if style == WindowStyle::Signed && self.r != 2 {
            return Err(PermError::SignedStyleNeedsRankTwo);
        }
        let mut out = String::new();
        for i in 0..self.n() {
            if i > 0 {
                out.push(' ');
            }
            match style {
                WindowStyle::Brackets => {
                    if self.colors[i] == 0 {
                        out.push_str(&self.sigma[i].to_string());
                    } else {
                        out.push_str(&format!("{}[{}]", self.sigma[i], self.colors[i]));
                    }
                }
                WindowStyle::Signed => {
                    if self.colors[i] == 0 {
                        out.push_str(&self.sigma[i].to_string());
                    } else {
                        out.push_str(&format!("-{}", self.sigma[i]));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Default rendering: signed for r = 2, brackets otherwise.
    pub fn window(&self) -> String {
        let style = if self.r == 2 { WindowStyle::Signed } else { WindowStyle::Brackets };
        self.format(style).expect("style matches r")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Color0,
    Swap(usize),
    DSwap,
}

fn parse_token(tok: &str, r: u32) -> Result<(u32, u32), PermError> {
    let bad = || PermError::BadToken(tok.to_string());
    if let Some(rest) = tok.strip_prefix('-') {
        if r != 2 {
            return Err(PermError::SignedNeedsRankTwo(tok.to_string()));
        }
        let letter: u32 = rest.parse().map_err(|_| bad())?;
        return Ok((letter, 1));
    }
    if let Some(open) = tok.find('[') {
        if !tok.ends_with(']') {
            return Err(bad());
        }
        let letter: u32 = tok[..open].parse().map_err(|_| bad())?;
        let color: u32 = tok[open + 1..tok.len() - 1].parse().map_err(|_| bad())?;
        if color >= r {
            return Err(PermError::ColorOutOfRange { color, r });
        }
        return Ok((letter, color));
    }
    let letter: u32 = tok.parse().map_err(|_| bad())?;
    Ok((letter, 0))
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.window())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_bracket_window() {
        let p = ColoredPermutation::parse("5 1[1] 3 4[2] 2[1] 6[3]", 4).unwrap();
        assert_eq!(p.sigma(), &[5, 1, 3, 4, 2, 6]);
        assert_eq!(p.colors(), &[0, 1, 0, 2, 1, 3]);
    }

    #[test]
    fn parse_identity() {
        let p = ColoredPermutation::parse("1 2 3", 1).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn parse_signed_window() {
        let p = ColoredPermutation::parse("-2 3 -5 -1 -4", 2).unwrap();
        assert_eq!(p.sigma(), &[2, 3, 5, 1, 4]);
        assert_eq!(p.colors(), &[1, 0, 1, 1, 1]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            ColoredPermutation::parse("1 1", 1),
            Err(PermError::NotAPermutation(2))
        ));
        assert!(matches!(
            ColoredPermutation::parse("1 3", 1),
            Err(PermError::NotAPermutation(2))
        ));
        assert!(matches!(
            ColoredPermutation::parse("1[5] 2", 4),
            Err(PermError::ColorOutOfRange { color: 5, r: 4 })
        ));
        assert!(matches!(
            ColoredPermutation::parse("-1 2", 3),
            Err(PermError::SignedNeedsRankTwo(_))
        ));
        assert!(ColoredPermutation::parse("x 2", 1).is_err());
    }

    #[test]
    fn format_round_trips() {
        let p = ColoredPermutation::parse("5 1[1] 3 4[2] 2[1] 6[3]", 4).unwrap();
        assert_eq!(p.format(WindowStyle::Brackets).unwrap(), "5 1[1] 3 4[2] 2[1] 6[3]");
        let q = ColoredPermutation::parse("-2 3 -5 -1 -4", 2).unwrap();
        assert_eq!(q.format(WindowStyle::Signed).unwrap(), "-2 3 -5 -1 -4");
        assert_eq!(ColoredPermutation::identity(1, 3).format(WindowStyle::Brackets).unwrap(), "1 2 3");
        assert!(ColoredPermutation::identity(3, 2).format(WindowStyle::Signed).is_err());
    }

    #[test]
    fn empty_window_is_n_zero() {
        let p = ColoredPermutation::parse("", 4).unwrap();
        assert_eq!(p.n(), 0);
        assert_eq!(p.window(), "");
    }

    #[test]
    fn absolute_zeroes_colors() {
        let p = ColoredPermutation::parse("-2 3 -5 -1 -4", 2).unwrap();
        assert_eq!(p.absolute().sigma(), &[2, 3, 5, 1, 4]);
        assert_eq!(p.absolute().colors(), &[0; 5]);
        let q = ColoredPermutation::parse("5 1[1] 3 4[2] 2[1] 6[3]", 4).unwrap();
        assert_eq!(q.absolute().sigma(), &[5, 1, 3, 4, 2, 6]);
    }

    #[test]
    fn compose_and_inverse() {
        let p = ColoredPermutation::parse("3[2] 1 2[1]", 3).unwrap();
        let id = ColoredPermutation::identity(3, 3);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn s0_squared_is_identity_in_b1() {
        let s0 = ColoredPermutation::identity(2, 1).apply_generator(Generator::Color0).unwrap();
        assert_eq!(s0.window(), "-1");
        assert!(s0.compose(&s0).unwrap().is_identity());
    }

    #[test]
    fn generators_act_on_the_window() {
        let id = ColoredPermutation::identity(3, 3);
        assert_eq!(id.apply_generator(Generator::Swap(1)).unwrap().sigma(), &[2, 1, 3]);
        let b1 = ColoredPermutation::identity(2, 1);
        assert_eq!(b1.apply_generator(Generator::Color0).unwrap().window(), "-1");
        let d2 = ColoredPermutation::identity(2, 2);
        assert_eq!(d2.apply_generator(Generator::DSwap).unwrap().window(), "-2 -1");
    }
}
