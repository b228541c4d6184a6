//! Permutation statistics under the three linear orders.
//!
//! Window entries compare as `(letter, color)` pairs ranked by an
//! [`OrderTag`]:
//!
//! * `Natural` — the signed order `n̄ < ⋯ < 1̄ < 1 < ⋯ < n` (r ≤ 2);
//! * `OrderL` — colored letters below uncolored ones, colored ranked by
//!   letter descending then color descending, used by the length formula;
//! * `Flag` — higher colors first, letters ascending inside a color.
//!
//! Ties are impossible since letters are distinct.

use serde::Serialize;
use thiserror::Error;

use crate::perm::ColoredPermutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatsError {
    #[error("length family {0:?} requires r = 2")]
    NeedsRankTwo(LengthFamily),
    #[error("type-D length is defined only for an even number of negatives")]
    OddNegatives,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderTag {
    Natural,
    OrderL,
    Flag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthFamily {
    G,
    B,
    D,
}

/// Prefix convention for descent sets: none, `π_0 := 0` (type B), or
/// `π_0 := −π_2` (type D, needs n ≥ 2 and the natural order).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prefix {
    None,
    Zero,
    MinusPi2,
}

/// `a < b` for window entries `(letter, color)` under the given order.
pub fn entry_lt(tag: OrderTag, a: (u32, u32), b: (u32, u32)) -> bool {
    match tag {
        OrderTag::Natural => {
            debug_assert!(a.1 <= 1 && b.1 <= 1, "natural order needs r <= 2");
            signed_value(a) < signed_value(b)
        }
        OrderTag::OrderL => match (a.1 > 0, b.1 > 0) {
            (true, false) => true,
            (false, true) => false,
            (false, false) => a.0 < b.0,
            (true, true) => (b.0, b.1) < (a.0, a.1),
        },
        OrderTag::Flag => {
            if a.1 != b.1 {
                a.1 > b.1
            } else {
                a.0 < b.0
            }
        }
    }
}

fn signed_value(e: (u32, u32)) -> i64 {
    if e.1 == 0 {
        e.0 as i64
    } else {
        -(e.0 as i64)
    }
}

fn entry(p: &ColoredPermutation, i: usize) -> (u32, u32) {
    (p.sigma()[i], p.colors()[i])
}

/// `|{(i,j) : i<j, p_i > p_j}|` under the chosen order.
pub fn inversions(p: &ColoredPermutation, tag: OrderTag) -> u64 {
    let n = p.n();
    let mut inv = 0;
    for i in 0..n {
        for j in i + 1..n {
            if entry_lt(tag, entry(p, j), entry(p, i)) {
                inv += 1;
            }
        }
    }
    inv
}

/// Inversions of the underlying plain permutation `|π| = σ`.
pub fn inv_abs(p: &ColoredPermutation) -> u64 {
    inv_abs_sigma(p.sigma())
}

pub(crate) fn inv_abs_sigma(sigma: &[u32]) -> u64 {
    let n = sigma.len();
    let mut inv = 0;
    for i in 0..n {
        for j in i + 1..n {
            if sigma[i] > sigma[j] {
                inv += 1;
            }
        }
    }
    inv
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    /// Descent positions; may include 0 under a prefix convention.
    pub set: Vec<usize>,
    pub count: u64,
    pub index_sum: u64,
}

/// Descent set, number and index sum of `p` under `tag`, optionally with a
/// virtual entry in front.
pub fn descent_data(p: &ColoredPermutation, tag: OrderTag, prefix: Prefix) -> DescentData {
    if prefix != Prefix::None {
        assert!(tag == OrderTag::Natural, "prefix conventions use the natural order");
        assert!(p.r() <= 2, "prefix conventions need r <= 2");
    }
    let n = p.n();
    let mut set = Vec::new();
    match prefix {
        Prefix::None => {}
        Prefix::Zero => {
            if n >= 1 && signed_value(entry(p, 0)) < 0 {
                set.push(0);
            }
        }
        Prefix::MinusPi2 => {
            assert!(n >= 2, "π_0 := -π_2 needs n >= 2");
            if -signed_value(entry(p, 1)) > signed_value(entry(p, 0)) {
                set.push(0);
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        if entry_lt(tag, entry(p, i + 1), entry(p, i)) {
            set.push(i + 1);
        }
    }
    let count = set.len() as u64;
    let index_sum = set.iter().map(|&i| i as u64).sum();
    DescentData { set, count, index_sum }
}

/// Flag statistics bundle: `fdes = r·des_F + z_1`, `fmaj = r·maj_F + col`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagStats {
    pub des_f_set: Vec<usize>,
    pub des_f: u64,
    pub maj_f: u64,
    pub fdes: u64,
    pub fmaj: u64,
    pub col: u64,
    pub neg: u64,
    pub neg_set: Vec<usize>,
}

pub fn flag_stats(p: &ColoredPermutation) -> FlagStats {
    let d = descent_data(p, OrderTag::Flag, Prefix::None);
    let r = p.r() as u64;
    let col = p.col();
    let z1 = if p.n() >= 1 { p.colors()[0] as u64 } else { 0 };
    let neg_set: Vec<usize> = (1..=p.n()).filter(|&i| p.color(i) != 0).collect();
    FlagStats {
        des_f: d.count,
        maj_f: d.index_sum,
        fdes: r * d.count + z1,
        fmaj: r * d.index_sum + col,
        col,
        neg: neg_set.len() as u64,
        neg_set,
        des_f_set: d.set,
    }
}

/// `fdes` without building the descent set.
pub fn fdes(p: &ColoredPermutation) -> u64 {
    let (d, _) = flag_des_maj(p);
    let z1 = if p.n() >= 1 { p.colors()[0] as u64 } else { 0 };
    p.r() as u64 * d + z1
}

/// `(fdes, fmaj)` without building the descent set.
pub fn fdes_fmaj(p: &ColoredPermutation) -> (u64, u64) {
    let (d, m) = flag_des_maj(p);
    let r = p.r() as u64;
    let z1 = if p.n() >= 1 { p.colors()[0] as u64 } else { 0 };
    (r * d + z1, r * m + p.col())
}

fn flag_des_maj(p: &ColoredPermutation) -> (u64, u64) {
    let n = p.n();
    let (mut d, mut m) = (0u64, 0u64);
    for i in 0..n.saturating_sub(1) {
        if entry_lt(OrderTag::Flag, entry(p, i + 1), entry(p, i)) {
            d += 1;
            m += (i + 1) as u64;
        }
    }
    (d, m)
}

/// Coxeter length via the combinatorial formulas.
///
/// * `G`: `inv_L + Σ_{z_i>0}(σ_i + z_i − 1)`
/// * `B`: `inv_natural − Σ_{i∈Neg} π_i`
/// * `D`: `inv_natural − Σ_{i∈Neg}(π_i + 1)`, defined only on even-signed input
pub fn length(p: &ColoredPermutation, family: LengthFamily) -> Result<u64, StatsError> {
    match family {
        LengthFamily::G => Ok(len_g(p)),
        LengthFamily::B => {
            if p.r() != 2 {
                return Err(StatsError::NeedsRankTwo(LengthFamily::B));
            }
            Ok(len_b(p))
        }
        LengthFamily::D => {
            if p.r() != 2 {
                return Err(StatsError::NeedsRankTwo(LengthFamily::D));
            }
            if p.neg() % 2 != 0 {
                return Err(StatsError::OddNegatives);
            }
            Ok(len_d(p))
        }
    }
}

pub fn len_g(p: &ColoredPermutation) -> u64 {
    let extra: u64 = p
        .sigma()
        .iter()
        .zip(p.colors())
        .filter(|(_, &z)| z > 0)
        .map(|(&s, &z)| (s + z - 1) as u64)
        .sum();
    inversions(p, OrderTag::OrderL) + extra
}

pub fn len_b(p: &ColoredPermutation) -> u64 {
    debug_assert_eq!(p.r(), 2);
    let extra: u64 = p
        .sigma()
        .iter()
        .zip(p.colors())
        .filter(|(_, &z)| z == 1)
        .map(|(&s, _)| s as u64)
        .sum();
    inversions(p, OrderTag::Natural) + extra
}

pub fn len_d(p: &ColoredPermutation) -> u64 {
    debug_assert_eq!(p.r(), 2);
    debug_assert_eq!(p.neg() % 2, 0);
    let extra: u64 = p
        .sigma()
        .iter()
        .zip(p.colors())
        .filter(|(_, &z)| z == 1)
        .map(|(&s, _)| (s - 1) as u64)
        .sum();
    inversions(p, OrderTag::Natural) + extra
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DStats {
    pub ddes: u64,
    pub dmaj: u64,
    pub sgm: u8,
}

/// Type-D Eulerian data: flag statistics of the word with the last letter
/// made positive, plus the sign of the maximum letter.
pub fn d_stats(p: &ColoredPermutation) -> DStats {
    assert_eq!(p.r(), 2, "d_stats needs signed permutations");
    let n = p.n();
    if n == 0 {
        return DStats { ddes: 0, dmaj: 0, sgm: 0 };
    }
    let at = |i: usize| -> (u32, u32) {
        if i == n - 1 {
            (p.sigma()[i], 0)
        } else {
            entry(p, i)
        }
    };
    let (mut d, mut m) = (0u64, 0u64);
    for i in 0..n - 1 {
        if entry_lt(OrderTag::Flag, at(i + 1), at(i)) {
            d += 1;
            m += (i + 1) as u64;
        }
    }
    let z1 = if n == 1 { 0 } else { p.colors()[0] as u64 };
    let col: u64 = (0..n).map(|i| at(i).1 as u64).sum();
    let sgm = p.color(p.position_of(n as u32)) as u8;
    DStats { ddes: 2 * d + z1, dmaj: 2 * m + col, sgm }
}

/// `ddes` alone, allocation-free.
pub fn ddes(p: &ColoredPermutation) -> u64 {
    d_stats(p).ddes
}

/// Sign-change vector `δ^π` and total change `ch(π)`; r = 2 only.
pub fn sign_change(p: &ColoredPermutation) -> (Vec<u8>, u64) {
    assert_eq!(p.r(), 2, "sign change needs signed permutations");
    let n = p.n();
    let z = p.colors();
    let mut delta = vec![0u8; n];
    for i in 0..n {
        let flip = if i + 1 < n { z[i] != z[i + 1] } else { z[i] == 1 };
        delta[i] = flip as u8;
    }
    let ch = delta.iter().map(|&d| d as u64).sum();
    (delta, ch)
}

/// Full statistic bundle with the paper's key names; fields that a family
/// does not admit are omitted.
#[derive(Debug, Clone, Serialize)]
pub struct StatBundle {
    pub r: u32,
    pub n: usize,
    pub window: String,
    #[serde(rename = "inv_L")]
    pub inv_l: u64,
    #[serde(rename = "inv_natural", skip_serializing_if = "Option::is_none")]
    pub inv_natural: Option<u64>,
    #[serde(rename = "inv_abs")]
    pub inv_abs: u64,
    #[serde(rename = "Des", skip_serializing_if = "Option::is_none")]
    pub des_set: Option<Vec<usize>>,
    #[serde(rename = "des", skip_serializing_if = "Option::is_none")]
    pub des: Option<u64>,
    #[serde(rename = "maj", skip_serializing_if = "Option::is_none")]
    pub maj: Option<u64>,
    #[serde(rename = "Des_F")]
    pub des_f_set: Vec<usize>,
    #[serde(rename = "des_F")]
    pub des_f: u64,
    #[serde(rename = "maj_F")]
    pub maj_f: u64,
    pub fdes: u64,
    pub fmaj: u64,
    pub col: u64,
    pub neg: u64,
    #[serde(rename = "Neg")]
    pub neg_set: Vec<usize>,
    #[serde(rename = "len_G")]
    pub len_g: u64,
    #[serde(rename = "len_B", skip_serializing_if = "Option::is_none")]
    pub len_b: Option<u64>,
    #[serde(rename = "len_D", skip_serializing_if = "Option::is_none")]
    pub len_d: Option<u64>,
    #[serde(rename = "Des_B", skip_serializing_if = "Option::is_none")]
    pub des_b_set: Option<Vec<usize>>,
    #[serde(rename = "des_B", skip_serializing_if = "Option::is_none")]
    pub des_b: Option<u64>,
    #[serde(rename = "maj_B", skip_serializing_if = "Option::is_none")]
    pub maj_b: Option<u64>,
    #[serde(rename = "Des_D", skip_serializing_if = "Option::is_none")]
    pub des_d_set: Option<Vec<usize>>,
    #[serde(rename = "des_D", skip_serializing_if = "Option::is_none")]
    pub des_d: Option<u64>,
    #[serde(rename = "maj_D", skip_serializing_if = "Option::is_none")]
    pub maj_d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ddes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dmaj: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sgm: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ch: Option<u64>,
}

pub fn stat_bundle(p: &ColoredPermutation) -> StatBundle {
    let r = p.r();
    let n = p.n();
    let flags = flag_stats(p);
    let inv_natural = if r <= 2 { Some(inversions(p, OrderTag::Natural)) } else { None };
    // r = 1: plain des/maj are the flag family specialized.
    let (des_set, des, maj) = if r == 1 {
        (
            Some(flags.des_f_set.clone()),
            Some(flags.des_f),
            Some(flags.maj_f),
        )
    } else {
        (None, None, None)
    };
    let (len_b_v, len_d_v) = if r == 2 {
        (
            Some(len_b(p)),
            if p.neg() % 2 == 0 { Some(len_d(p)) } else { None },
        )
    } else {
        (None, None)
    };
    let (des_b_set, des_b, maj_b) = if r == 2 {
        let d = descent_data(p, OrderTag::Natural, Prefix::Zero);
        (Some(d.set), Some(d.count), Some(d.index_sum))
    } else {
        (None, None, None)
    };
    let (des_d_set, des_d, maj_d) = if r == 2 && n >= 2 {
        let d = descent_data(p, OrderTag::Natural, Prefix::MinusPi2);
        (Some(d.set), Some(d.count), Some(d.index_sum))
    } else {
        (None, None, None)
    };
    let (ddes_v, dmaj_v, sgm_v, delta_v, ch_v) = if r == 2 {
        let ds = d_stats(p);
        let (delta, ch) = sign_change(p);
        let delta_str: String = delta.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
        (Some(ds.ddes), Some(ds.dmaj), Some(ds.sgm), Some(delta_str), Some(ch))
    } else {
        (None, None, None, None, None)
    };
    StatBundle {
        r,
        n,
        window: p.window(),
        inv_l: inversions(p, OrderTag::OrderL),
        inv_natural,
        inv_abs: inv_abs(p),
        des_set,
        des,
        maj,
        des_f_set: flags.des_f_set,
        des_f: flags.des_f,
        maj_f: flags.maj_f,
        fdes: flags.fdes,
        fmaj: flags.fmaj,
        col: flags.col,
        neg: flags.neg,
        neg_set: flags.neg_set,
        len_g: len_g(p),
        len_b: len_b_v,
        len_d: len_d_v,
        des_b_set,
        des_b,
        maj_b,
        des_d_set,
        des_d,
        maj_d,
        ddes: ddes_v,
        dmaj: dmaj_v,
        sgm: sgm_v,
        delta: delta_v,
        ch: ch_v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::FamilySpec;
    use crate::perm::Generator;
    use std::collections::HashMap;

    fn parse(w: &str, r: u32) -> ColoredPermutation {
        ColoredPermutation::parse(w, r).unwrap()
    }

    #[test]
    fn order_l_inversions_match_worked_example() {
        let p = parse("5 1[1] 3 4[2] 2[1] 6[3]", 4);
        assert_eq!(inversions(&p, OrderTag::OrderL), 13);
        assert_eq!(inversions(&ColoredPermutation::identity(4, 6), OrderTag::OrderL), 0);
        assert_eq!(inversions(&parse("3 2 1", 1), OrderTag::OrderL), 3);
    }

    #[test]
    fn length_examples() {
        let p = parse("5 1[1] 3 4[2] 2[1] 6[3]", 4);
        assert_eq!(length(&p, LengthFamily::G).unwrap(), 29);
        assert_eq!(p.col(), 7);

        let d = parse("-2 3 -5 -1 -4", 2);
        assert_eq!(inversions(&d, OrderTag::Natural), 6);
        assert_eq!(length(&d, LengthFamily::D).unwrap(), 14);

        assert_eq!(length(&parse("-1", 2), LengthFamily::B).unwrap(), 1);
        assert_eq!(length(&parse("-2 -1", 2), LengthFamily::D).unwrap(), 1);
    }

    #[test]
    fn length_rejects_bad_domains() {
        let p = parse("1[2] 2", 3);
        assert!(length(&p, LengthFamily::B).is_err());
        let odd = parse("-1 2", 2);
        assert_eq!(length(&odd, LengthFamily::D), Err(StatsError::OddNegatives));
    }

    #[test]
    fn flag_stats_examples() {
        let p = parse("4[2] 5 1[1] 3 2[1] 6[3]", 4);
        let f = flag_stats(&p);
        assert_eq!(f.des_f_set, vec![2, 4, 5]);
        assert_eq!(f.fdes, 14);
        assert_eq!(f.fmaj, 51);

        let id = ColoredPermutation::identity(4, 6);
        let fid = flag_stats(&id);
        assert_eq!((fid.fdes, fid.fmaj, fid.col), (0, 0, 0));
    }

    #[test]
    fn descent_prefix_examples() {
        let p = parse("-2 1", 2);
        let d = descent_data(&p, OrderTag::Natural, Prefix::Zero);
        assert_eq!((d.set.clone(), d.count, d.index_sum), (vec![0], 1, 0));

        let q = parse("-1 -2", 2);
        let dq = descent_data(&q, OrderTag::Natural, Prefix::MinusPi2);
        assert_eq!((dq.set.clone(), dq.count, dq.index_sum), (vec![0, 1], 2, 1));

        let id = ColoredPermutation::identity(2, 2);
        let did = descent_data(&id, OrderTag::Natural, Prefix::MinusPi2);
        assert_eq!((did.set.clone(), did.count, did.index_sum), (vec![], 0, 0));
    }

    #[test]
    fn d_stats_examples() {
        let p = parse("-2 3 -5 -1 -4", 2);
        let ds = d_stats(&p);
        assert_eq!((ds.ddes, ds.dmaj), (5, 13));

        assert_eq!(d_stats(&parse("-2 5 1 -3 4", 2)).sgm, 0);
        assert_eq!(d_stats(&parse("-2 -5 1 -3 4", 2)).sgm, 1);
        let id = ColoredPermutation::identity(2, 3);
        assert_eq!(d_stats(&id), DStats { ddes: 0, dmaj: 0, sgm: 0 });
    }

    #[test]
    fn sign_change_examples() {
        let p = parse("-1 -3 4 2 -5", 2);
        let (delta, ch) = sign_change(&p);
        assert_eq!(delta, vec![0, 1, 0, 1, 1]);
        assert_eq!(ch, 3);

        let incr = ColoredPermutation::identity(2, 4);
        assert_eq!(sign_change(&incr), (vec![0; 4], 0));

        let one = parse("-1", 2);
        assert_eq!(sign_change(&one), (vec![1], 1));
        assert_eq!(fdes(&one), 1);
    }

    #[test]
    fn eq_ch_holds_on_small_groups() {
        for n in 0..=4 {
            FamilySpec::B { n }.scan(|p| {
                let f = flag_stats(p);
                let (delta, ch) = sign_change(p);
                let extra: u64 = f
                    .des_f_set
                    .iter()
                    .filter(|&&i| delta[i - 1] == 0)
                    .map(|_| 2)
                    .sum();
                assert_eq!(f.fdes, ch + extra, "eq-ch fails at {}", p.window());
            });
        }
    }

    #[test]
    fn natural_and_order_l_agree_for_signed() {
        for n in 0..=4 {
            FamilySpec::B { n }.scan(|p| {
                assert_eq!(inversions(p, OrderTag::Natural), inversions(p, OrderTag::OrderL));
            });
        }
    }

    #[test]
    fn fdes_fmaj_congruences() {
        for r in 1..=4u32 {
            FamilySpec::G { r, n: 3 }.scan(|p| {
                let f = flag_stats(p);
                let z1 = p.colors()[0] as u64;
                assert_eq!(f.fdes % r as u64, z1 % r as u64);
                assert_eq!(f.fmaj % r as u64, f.col % r as u64);
                let (fd, fm) = fdes_fmaj(p);
                assert_eq!((fd, fm), (f.fdes, f.fmaj));
            });
        }
    }

    #[test]
    fn plain_des_maj_specialize_flag_family() {
        FamilySpec::Sym { n: 5 }.scan(|p| {
            let f = flag_stats(p);
            // independent classic computation
            let s = p.sigma();
            let mut des = 0u64;
            let mut maj = 0u64;
            for i in 0..4 {
                if s[i] > s[i + 1] {
                    des += 1;
                    maj += (i + 1) as u64;
                }
            }
            assert_eq!((f.des_f, f.maj_f), (des, maj));
            assert_eq!((f.fdes, f.fmaj), (des, maj));
        });
    }

    #[test]
    fn macmahon_at_small_n() {
        for n in 0..=5usize {
            let mut by_maj: HashMap<u64, u64> = HashMap::new();
            let mut by_inv: HashMap<u64, u64> = HashMap::new();
            FamilySpec::Sym { n }.scan(|p| {
                *by_maj.entry(flag_stats(p).maj_f).or_default() += 1;
                *by_inv.entry(inversions(p, OrderTag::Natural)).or_default() += 1;
            });
            assert_eq!(by_maj, by_inv, "maj/inv distributions differ at n={n}");
        }
    }

    #[test]
    fn bfs_oracle_small() {
        use std::collections::VecDeque;
        // BFS distance from the identity in the generator graph.
        let bfs = |r: u32, n: usize, d_type: bool| -> HashMap<ColoredPermutation, u64> {
            let id = ColoredPermutation::identity(r, n);
            let mut dist = HashMap::new();
            dist.insert(id.clone(), 0u64);
            let mut queue = VecDeque::from([id]);
            let mut gens = Vec::new();
            if d_type {
                gens.push(Generator::DSwap);
            } else {
                gens.push(Generator::Color0);
            }
            for i in 1..n {
                gens.push(Generator::Swap(i));
            }
            while let Some(p) = queue.pop_front() {
                let d = dist[&p];
                for &g in &gens {
                    let q = p.apply_generator(g).unwrap();
                    dist.entry(q.clone()).or_insert_with(|| {
                        queue.push_back(q);
                        d + 1
                    });
                }
            }
            dist
        };
        for n in 1..=3 {
            let dist = bfs(2, n, false);
            FamilySpec::B { n }.scan(|p| {
                assert_eq!(length(p, LengthFamily::B).unwrap(), dist[p], "ℓ_B at {}", p.window());
            });
        }
        for n in 2..=3 {
            let dist = bfs(2, n, true);
            FamilySpec::D { n }.scan(|p| {
                assert_eq!(length(p, LengthFamily::D).unwrap(), dist[p], "ℓ_D at {}", p.window());
            });
        }
        for r in 1..=3u32 {
            let dist = bfs(r, 2, false);
            FamilySpec::G { r, n: 2 }.scan(|p| {
                assert_eq!(length(p, LengthFamily::G).unwrap(), dist[p], "ℓ_G at {}", p.window());
            });
        }
    }

    #[test]
    fn bundle_has_expected_fields() {
        let p = parse("5 1[1] 3 4[2] 2[1] 6[3]", 4);
        let b = stat_bundle(&p);
        assert_eq!(b.len_g, 29);
        assert_eq!(b.col, 7);
        assert!(b.len_b.is_none());
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(json["len_G"], 29);
        assert_eq!(json["col"], 7);

        let q = parse("-1 2", 2);
        let bq = stat_bundle(&q);
        assert_eq!(bq.len_b, Some(1));
        assert!(bq.len_d.is_none(), "odd neg has no ℓ_D");
    }
}
