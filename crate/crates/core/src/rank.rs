//! Rank (shifted dimension) of orbits.

use serde::{Deserialize, Serialize};

use crate::clan::Clan;
use crate::error::{Error, Result};
use crate::family::{validate_param, Family, Param};
use crate::perm::{Involution, Perm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankInfo {
    pub rank: usize,
    pub dim: usize,
    pub closed_dim: usize,
}

/// Derived pair counts used by the rank formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairStats {
    /// Pairs `s < N/2 < t < N+1-s` (1-based).
    pub a: usize,
    /// Pairs `s < N/2 < t <= N+1-s`.
    pub b: usize,
    /// Pairs `s <= m < t <= 2m+1-s` with `m = N/2`.
    pub middle: usize,
    pub self_mirror: usize,
}

pub fn pair_stats(c: &Clan) -> PairStats {
    let n = c.len();
    let m = n / 2;
    let mut st = PairStats { a: 0, b: 0, middle: 0, self_mirror: 0 };
    for (s0, t0) in c.pairs() {
        let (s, t) = (s0 + 1, t0 + 1);
        if 2 * s < n && n < 2 * t {
            if t < n + 1 - s {
                st.a += 1;
            }
            if t <= n + 1 - s {
                st.b += 1;
            }
        }
        if s <= m && m < t && t <= 2 * m + 1 - s {
            st.middle += 1;
        }
        if t == n + 1 - s {
            st.self_mirror += 1;
        }
    }
    st
}

/// `ℓ(c) = Σ_{pairs s<t} (t - s - #{pairs (u,v): u < s < v < t})`.
pub fn rank_aiii(c: &Clan) -> usize {
    let pairs = c.pairs();
    pairs.iter().map(|&(s, t)| t - s - pairs.iter().filter(|&&(u, v)| u < s && s < v && v < t).count()).sum()
}

pub fn dim_aiii(c: &Clan) -> usize {
    let (p, q) = c.signature();
    Family::AIII { p, q }.closed_dim() + rank_aiii(c)
}

fn half(num: isize, what: &str) -> Result<usize> {
    if num < 0 || num % 2 != 0 {
        return Err(Error::InternalInvariant(format!("{what}: numerator {num} is not a nonnegative even integer")));
    }
    Ok(num as usize / 2)
}

/// `(ℓ(c) + #{pairs s <= m < t <= 2m+1-s}) / 2`, shared by CI and CII.
pub fn rank_ci_cii(c: &Clan) -> Result<usize> {
    half((rank_aiii(c) + pair_stats(c).middle) as isize, "CI/CII rank")
}

/// Rank in types BDI and DIII: `(ℓ - a) / 2`, and `(ℓ - a - 1) / 2` for BDI
/// with `p, q` both odd, where every valid clan carries an odd number of
/// self-mirror pairs.
pub fn rank_bd(c: &Clan, f: &Family) -> Result<usize> {
    let st = pair_stats(c);
    let mut num = rank_aiii(c) as isize - st.a as isize;
    if let Family::BDI { p, q } = f {
        if p % 2 == 1 && q % 2 == 1 {
            num -= 1;
        }
    }
    half(num, "BDI/DIII rank")
}

/// Rank formula taken literally for BDI: `b` replaces `a` when `p, q`
/// are both odd. Kept for auditing; it disagrees with the closure order as
/// soon as a clan has three self-mirror pairs.
pub fn rank_bd_literal(c: &Clan, f: &Family) -> Option<isize> {
    let st = pair_stats(c);
    let sub = match f {
        Family::BDI { p, q } if p % 2 == 1 && q % 2 == 1 => st.b,
        _ => st.a,
    };
    let num = rank_aiii(c) as isize - sub as isize;
    (num % 2 == 0).then_some(num / 2)
}

/// `⌊n²/4⌋ - Σ_{i<π(i)} (π(i) - i - #{k: i<k<π(i), π(k)<i})`.
pub fn rank_ai(w: &Perm) -> usize {
    let n = w.len();
    let mut sum = 0;
    for i in 1..=n {
        let j = w.at(i);
        if i < j {
            sum += j - i - (i + 1..j).filter(|&k| w.at(k) < i).count();
        }
    }
    n * n / 4 - sum
}

/// `⌊n²/4⌋ - (inv(π) + exc(π)) / 2`.
pub fn rank_ai_alt(w: &Perm) -> usize {
    let n = w.len();
    n * n / 4 - (w.inversions() + w.excedances()) / 2
}

pub fn rank_aii(w: &Involution) -> Result<usize> {
    if !w.is_fixed_point_free() {
        return Err(Error::NotFixedPointFree(w.to_string()));
    }
    Ok(rank_ai(w.perm()))
}

/// Alternative AII formula `m² - m - (inv(π) - m) / 2` with `n = 2m`.
pub fn rank_aii_alt(w: &Involution) -> usize {
    let m = w.len() / 2;
    m * m - m - (w.inversions() - m) / 2
}

pub fn rank(x: &Param, f: &Family) -> Result<usize> {
    if !validate_param(x, f)? {
        return Err(Error::FamilyMismatch(format!("{x} in {f}")));
    }
    match (x, f) {
        (Param::Inv(w), Family::AI { .. }) => Ok(rank_ai(w.perm())),
        (Param::Inv(w), Family::AII { .. }) => rank_aii(w),
        (Param::Clan(c), Family::AIII { .. }) => Ok(rank_aiii(c)),
        (Param::Clan(c), Family::CI { .. } | Family::CII { .. }) => rank_ci_cii(c),
        (Param::Clan(c), Family::BDI { .. } | Family::DIII { .. }) => rank_bd(c, f),
        _ => Err(Error::FamilyMismatch(format!("{x} in {f}"))),
    }
}

pub fn rank_info(x: &Param, f: &Family) -> Result<RankInfo> {
    let r = rank(x, f)?;
    let closed_dim = f.closed_dim();
    Ok(RankInfo { rank: r, dim: closed_dim + r, closed_dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clan(s: &str) -> Clan {
        s.parse().unwrap()
    }

    fn inv(s: &str) -> Involution {
        s.parse().unwrap()
    }

    #[test]
    fn aiii_values() {
        assert_eq!(rank_aiii(&clan("1221")), 4);
        assert_eq!(rank_aiii(&clan("1212")), 3);
        assert_eq!(rank_aiii(&clan("++--")), 0);
        assert_eq!(dim_aiii(&clan("++--")), 2);
        assert_eq!(dim_aiii(&clan("1221")), 6);
        assert_eq!(dim_aiii(&clan("1+1")), 3);
    }

    #[test]
    fn ai_aii_values() {
        assert_eq!(rank_ai(&"1234".parse().unwrap()), 4);
        assert_eq!(rank_ai(&"4321".parse().unwrap()), 0);
        assert_eq!(rank_ai(&"2143".parse().unwrap()), 2);
        assert_eq!(rank_ai_alt(&"2143".parse().unwrap()), 2);
        assert_eq!(rank_ai_alt(&"4321".parse().unwrap()), 0);
        assert_eq!(rank_aii(&inv("2143")).unwrap(), 2);
        assert_eq!(rank_aii(&inv("3412")).unwrap(), 1);
        assert_eq!(rank_aii(&inv("4321")).unwrap(), 0);
        assert!(rank_aii(&inv("1324")).is_err());
        for w in ["2143", "3412", "4321", "214365", "654321"] {
            assert_eq!(rank_aii_alt(&inv(w)), rank_aii(&inv(w)).unwrap(), "{w}");
        }
    }

    #[test]
    fn alternative_formulas_agree() {
        for n in 1..=8 {
            for w in crate::perm::all_involutions(n, false) {
                assert_eq!(rank_ai_alt(w.perm()), rank_ai(w.perm()), "{w}");
                if w.is_fixed_point_free() {
                    assert_eq!(rank_aii_alt(&w), rank_aii(&w).unwrap(), "{w}");
                }
            }
        }
    }

    #[test]
    fn symplectic_values() {
        assert_eq!(rank_ci_cii(&clan("+--+")).unwrap(), 0);
        assert_eq!(rank_ci_cii(&clan("1221")).unwrap(), 3);
        assert_eq!(rank_ci_cii(&clan("1122")).unwrap(), 1);
    }

    #[test]
    fn orthogonal_values() {
        let f = Family::BDI { p: 1, q: 1 };
        assert_eq!(rank_bd(&clan("11"), &f).unwrap(), 0);
        let f = Family::BDI { p: 3, q: 3 };
        assert_eq!(rank_bd(&clan("123321"), &f).unwrap(), 4);
        assert_ne!(rank_bd_literal(&clan("123321"), &f), Some(4));
    }
}
