//! Symmetric-pair families, their orbit parameters, validation and enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clan::{all_clans, Clan, Entry};
use crate::error::{Error, Result};
use crate::perm::{all_involutions, Involution, Perm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    AI,
    AII,
    AIII,
    CI,
    CII,
    BDI,
    DIII,
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyTag> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "AI" => FamilyTag::AI,
            "AII" => FamilyTag::AII,
            "AIII" => FamilyTag::AIII,
            "CI" => FamilyTag::CI,
            "CII" => FamilyTag::CII,
            "BDI" => FamilyTag::BDI,
            "DIII" => FamilyTag::DIII,
            _ => return Err(Error::InvalidFamily(s.to_string())),
        })
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A symmetric pair with its sizes.
///
/// * `AI { n }`: involutions in `S_n`.
/// * `AII { n }`: fixed-point-free involutions in `S_n`, `n` even.
/// * `AIII { p, q }`: clans of signature `(p, q)`.
/// * `CI { m }`: skew-symmetric clans of length `2m`.
/// * `CII { p, q }`: symmetric clans of length `2p + 2q`, signature `(2p, 2q)`.
/// * `BDI { p, q }`: orthosymmetric clans of signature `(p, q)`.
/// * `DIII { n }`: even skew-symmetric clans of length `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Family {
    AI { n: usize },
    AII { n: usize },
    AIII { p: usize, q: usize },
    CI { m: usize },
    CII { p: usize, q: usize },
    BDI { p: usize, q: usize },
    DIII { n: usize },
}

impl Family {
    /// Checked constructor.
    pub fn new(tag: FamilyTag, n: Option<usize>, m: Option<usize>, p: Option<usize>, q: Option<usize>) -> Result<Family> {
        let need = |x: Option<usize>, name: &str| x.ok_or_else(|| Error::InvalidFamily(format!("{tag} needs --{name}")));
        let f = match tag {
            FamilyTag::AI => Family::AI { n: need(n, "n")? },
            FamilyTag::AII => Family::AII { n: need(n, "n")? },
            FamilyTag::AIII => Family::AIII { p: need(p, "p")?, q: need(q, "q")? },
            FamilyTag::CI => Family::CI { m: need(m.or(n), "m")? },
            FamilyTag::CII => Family::CII { p: need(p, "p")?, q: need(q, "q")? },
            FamilyTag::BDI => Family::BDI { p: need(p, "p")?, q: need(q, "q")? },
            FamilyTag::DIII => Family::DIII { n: need(n.or(m), "n")? },
        };
        f.check()?;
        Ok(f)
    }

    pub fn check(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            Family::AI { n: 0 } => bad("n must be positive"),
            Family::AII { n } if n == 0 || n % 2 == 1 => bad("n must be even and positive"),
            Family::CI { m } | Family::DIII { n: m } if m == 0 => bad("size must be positive"),
            Family::AIII { p, q } | Family::CII { p, q } | Family::BDI { p, q } if p + q == 0 => bad("p + q must be positive"),
            _ => Ok(()),
        }
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            Family::AI { .. } => FamilyTag::AI,
            Family::AII { .. } => FamilyTag::AII,
            Family::AIII { .. } => FamilyTag::AIII,
            Family::CI { .. } => FamilyTag::CI,
            Family::CII { .. } => FamilyTag::CII,
            Family::BDI { .. } => FamilyTag::BDI,
            Family::DIII { .. } => FamilyTag::DIII,
        }
    }

    pub fn is_clan_family(&self) -> bool {
        !matches!(self, Family::AI { .. } | Family::AII { .. })
    }

    /// True for the families whose clans obey a mirror condition.
    pub fn is_mirrored(&self) -> bool {
        matches!(self, Family::CI { .. } | Family::CII { .. } | Family::BDI { .. } | Family::DIII { .. })
    }

    /// Length of a parameter: clan length, or `n` for involutions.
    pub fn param_len(&self) -> usize {
        match *self {
            Family::AI { n } | Family::AII { n } => n,
            Family::AIII { p, q } | Family::BDI { p, q } => p + q,
            Family::CII { p, q } => 2 * (p + q),
            Family::CI { m } => 2 * m,
            Family::DIII { n } => 2 * n,
        }
    }

    /// Whether the mirror of a sign is the same sign.
    pub(crate) fn mirror_same_sign(&self) -> bool {
        matches!(self, Family::CII { .. } | Family::BDI { .. })
    }

    /// Dimension of the flag variety `G/B`.
    pub fn flag_dim(&self) -> usize {
        match *self {
            Family::AI { n } | Family::AII { n } => n * (n - 1) / 2,
            Family::AIII { p, q } => (p + q) * (p + q - 1) / 2,
            Family::CI { m } => m * m,
            Family::CII { p, q } => (p + q) * (p + q),
            Family::BDI { p, q } => orthogonal_flag_dim(p + q),
            Family::DIII { n } => n * (n - 1),
        }
    }

    /// Dimension of the flag variety of `K`, the dimension of every closed orbit.
    pub fn closed_dim(&self) -> usize {
        match *self {
            Family::AI { n } => {
                let m = n / 2;
                if n % 2 == 0 {
                    m * (m - 1)
                } else {
                    m * m
                }
            }
            Family::AII { n } => (n / 2) * (n / 2),
            Family::AIII { p, q } => (p * p.saturating_sub(1) + q * q.saturating_sub(1)) / 2,
            Family::CI { m } => m * (m - 1) / 2,
            Family::CII { p, q } => p * p + q * q,
            Family::BDI { p, q } => orthogonal_flag_dim(p) + orthogonal_flag_dim(q),
            Family::DIII { n } => n * (n - 1) / 2,
        }
    }

    pub fn parse_param(&self, text: &str) -> Result<Param> {
        let param = if self.is_clan_family() { Param::Clan(text.parse()?) } else { Param::Inv(text.parse::<Perm>()?.try_into()?) };
        if validate_param(&param, self)? {
            Ok(param)
        } else {
            Err(Error::FamilyMismatch(format!("{param} in {self}")))
        }
    }
}

fn orthogonal_flag_dim(n: usize) -> usize {
    let k = n / 2;
    if n.is_multiple_of(2) {
        k * k.saturating_sub(1)
    } else {
        k * k
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::AI { n } => write!(f, "AI(n={n})"),
            Family::AII { n } => write!(f, "AII(n={n})"),
            Family::AIII { p, q } => write!(f, "AIII(p={p},q={q})"),
            Family::CI { m } => write!(f, "CI(m={m})"),
            Family::CII { p, q } => write!(f, "CII(p={p},q={q})"),
            Family::BDI { p, q } => write!(f, "BDI(p={p},q={q})"),
            Family::DIII { n } => write!(f, "DIII(n={n})"),
        }
    }
}

/// An orbit parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Clan(Clan),
    Inv(Involution),
}

impl Param {
    pub fn as_clan(&self) -> Option<&Clan> {
        match self {
            Param::Clan(c) => Some(c),
            Param::Inv(_) => None,
        }
    }

    pub fn as_inv(&self) -> Option<&Involution> {
        match self {
            Param::Inv(w) => Some(w),
            Param::Clan(_) => None,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Param::Clan(c) => c.len(),
            Param::Inv(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Clan(c) => c.fmt(f),
            Param::Inv(w) => w.fmt(f),
        }
    }
}

impl From<Clan> for Param {
    fn from(c: Clan) -> Param {
        Param::Clan(c)
    }
}

impl From<Involution> for Param {
    fn from(w: Involution) -> Param {
        Param::Inv(w)
    }
}

/// Checks the mirror condition of the clan families. `same_sign`: mirror of
/// a sign is the same sign; `self_pairs`: pairs `(i, N+1-i)` allowed.
fn mirror_ok(c: &Clan, same_sign: bool, self_pairs: bool) -> bool {
    let e = c.entries();
    let n = e.len();
    let partners = c.partners();
    for i in 0..n {
        let j = n - 1 - i;
        match (e[i].is_sign(), e[j].is_sign()) {
            (true, true) => {
                if (e[i] == e[j]) != same_sign {
                    return false;
                }
            }
            (false, false) => {
                let t = partners[i].expect("paired entry");
                if t == j {
                    if !self_pairs {
                        return false;
                    }
                } else if partners[j] != Some(n - 1 - t) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

/// Family conditions on a clan; errors only when the length is wrong.
pub fn validate_family(c: &Clan, f: &Family) -> Result<bool> {
    if !f.is_clan_family() {
        return Err(Error::FamilyMismatch(format!("{f} is parametrized by involutions")));
    }
    if c.len() != f.param_len() {
        return Err(Error::LengthMismatch { expected: f.param_len(), got: c.len() });
    }
    Ok(valid_clan(c, f))
}

pub(crate) fn valid_clan(c: &Clan, f: &Family) -> bool {
    let n = c.len();
    match *f {
        Family::AIII { p, q } => c.signature() == (p, q),
        Family::CII { p, q } => c.signature() == (2 * p, 2 * q) && mirror_ok(c, true, false),
        Family::CI { .. } => mirror_ok(c, false, true),
        Family::BDI { p, q } => {
            c.signature() == (p, q) && mirror_ok(c, true, true) && (n.is_multiple_of(2) || c.entries()[n / 2].is_sign())
        }
        Family::DIII { n: half } => {
            if !mirror_ok(c, false, false) {
                return false;
            }
            let plus = c.entries()[..half].iter().filter(|&&e| e == Entry::Plus).count();
            let inside = c.pairs().iter().filter(|&&(_, t)| t < half).count();
            (plus + inside) % 2 == 0
        }
        Family::AI { .. } | Family::AII { .. } => false,
    }
}

pub fn validate_involution(w: &Perm, f: &Family) -> Result<bool> {
    if f.is_clan_family() {
        return Err(Error::FamilyMismatch(format!("{f} is parametrized by clans")));
    }
    if !w.is_involution() {
        return Err(Error::NotPermutation(format!("{w} is not self-inverse")));
    }
    if w.len() != f.param_len() {
        return Ok(false);
    }
    Ok(match f {
        Family::AII { .. } => w.len().is_multiple_of(2) && w.fixed_points().is_empty(),
        _ => true,
    })
}

pub fn validate_param(x: &Param, f: &Family) -> Result<bool> {
    match x {
        Param::Clan(c) => validate_family(c, f),
        Param::Inv(w) => validate_involution(w.perm(), f),
    }
}

/// Every valid parameter once, in lexicographic order.
pub fn enumerate(f: &Family) -> Vec<Param> {
    match *f {
        Family::AI { n } => all_involutions(n, false).into_iter().map(Param::Inv).collect(),
        Family::AII { n } => all_involutions(n, true).into_iter().map(Param::Inv).collect(),
        _ => enumerate_clans(f).into_iter().map(Param::Clan).collect(),
    }
}

pub fn enumerate_clans(f: &Family) -> Vec<Clan> {
    if !f.is_clan_family() {
        return Vec::new();
    }
    all_clans(f.param_len()).into_iter().filter(|c| valid_clan(c, f)).collect()
}

/// The nested clan `(1 ... k s ... s k ... 1)` with `k = min(p, q)`.
pub fn nested_clan(p: usize, q: usize) -> Clan {
    let k = p.min(q);
    let sign = if p >= q { Entry::Plus } else { Entry::Minus };
    let mut e: Vec<Entry> = (1..=k as u32).map(Entry::Pair).collect();
    e.extend(std::iter::repeat_n(sign, p.max(q) - k));
    e.extend((1..=k as u32).rev().map(Entry::Pair));
    Clan::canonical(e)
}

/// `(1, 2, ..., 2k, signs, 2k-1, 2k, ..., 1, 2)`: pairs `2j-1, 2j` cross
/// over the middle block.
fn crossed_clan(k: usize, middle: &[Entry]) -> Clan {
    let mut e: Vec<Entry> = (1..=2 * k as u32).map(Entry::Pair).collect();
    e.extend_from_slice(middle);
    for j in (1..=k as u32).rev() {
        e.push(Entry::Pair(2 * j - 1));
        e.push(Entry::Pair(2 * j));
    }
    Clan::canonical(e)
}

/// The parameter of the open orbit.
pub fn open_orbit(f: &Family) -> Param {
    match *f {
        Family::AI { n } => Param::Inv(Involution::new(Perm::identity(n)).expect("identity")),
        Family::AII { n } => {
            let w: Vec<usize> = (1..=n).map(|i| if i % 2 == 1 { i + 1 } else { i - 1 }).collect();
            Param::Inv(Involution::from_images(w).expect("fixed-point-free"))
        }
        Family::AIII { p, q } | Family::BDI { p, q } => Param::Clan(nested_clan(p, q)),
        Family::CI { m } => Param::Clan(nested_clan(m, m)),
        Family::CII { p, q } => {
            let k = p.min(q);
            let sign = if p >= q { Entry::Plus } else { Entry::Minus };
            let middle = vec![sign; 2 * (p.max(q) - k)];
            Param::Clan(crossed_clan(k, &middle))
        }
        Family::DIII { n } => {
            let k = n / 2;
            let candidates = if n % 2 == 0 {
                vec![crossed_clan(k, &[])]
            } else {
                vec![crossed_clan(k, &[Entry::Minus, Entry::Plus]), crossed_clan(k, &[Entry::Plus, Entry::Minus])]
            };
            let c = candidates.into_iter().find(|c| valid_clan(c, f)).expect("an even candidate");
            Param::Clan(c)
        }
    }
}

/// Closed orbits are the minimal elements of the closure order.
pub fn is_closed_orbit(x: &Param, f: &Family) -> bool {
    match (x, f) {
        (Param::Inv(w), Family::AI { n } | Family::AII { n }) => w.perm() == &Perm::longest(*n),
        (Param::Clan(c), Family::BDI { p, q }) if p % 2 == 1 && q % 2 == 1 => {
            let n = c.len();
            c.num_pairs() == 1 && c.pairs()[0] == (n / 2 - 1, n / 2)
        }
        (Param::Clan(c), _) => c.is_sign_only(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(f: Family) -> Vec<String> {
        enumerate(&f).iter().map(|x| x.to_string()).collect()
    }

    fn clan(s: &str) -> Clan {
        s.parse().unwrap()
    }

    #[test]
    fn aiii_two_one() {
        let mut got = names(Family::AIII { p: 2, q: 1 });
        got.sort();
        let mut want: Vec<String> = ["1+1", "+11", "11+", "++-", "+-+", "-++"].iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn ci_two_has_eleven() {
        let mut got = names(Family::CI { m: 2 });
        got.sort();
        let mut want: Vec<String> = ["++--", "+-+-", "-+-+", "--++", "1122", "1212", "1221", "1+-1", "1-+1", "+11-", "-11+"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn cii_one_one_has_four() {
        let mut got = names(Family::CII { p: 1, q: 1 });
        got.sort();
        assert_eq!(got, vec!["+--+", "-++-", "1122", "1212"]);
    }

    #[test]
    fn diii_evenness() {
        let f = Family::DIII { n: 4 };
        assert!(validate_family(&clan("12++--12"), &f).unwrap());
        assert!(!validate_family(&clan("12+-+-12"), &f).unwrap());
        assert!(validate_family(&clan("1212"), &Family::CI { m: 2 }).unwrap());
        assert!(matches!(validate_family(&clan("1212"), &f), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn open_orbits() {
        assert_eq!(open_orbit(&Family::AIII { p: 3, q: 2 }).to_string(), "12+21");
        assert_eq!(open_orbit(&Family::CI { m: 3 }).to_string(), "123321");
        assert_eq!(open_orbit(&Family::AII { n: 6 }).to_string(), "214365");
        assert_eq!(open_orbit(&Family::CII { p: 1, q: 1 }).to_string(), "1212");
        assert_eq!(open_orbit(&Family::CII { p: 2, q: 1 }).to_string(), "12++12");
        assert_eq!(open_orbit(&Family::DIII { n: 4 }).to_string(), "12343412");
        assert_eq!(open_orbit(&Family::DIII { n: 3 }).to_string(), "12-+12");
        for f in [Family::CII { p: 2, q: 1 }, Family::DIII { n: 3 }, Family::DIII { n: 5 }, Family::BDI { p: 3, q: 2 }] {
            let Param::Clan(c) = open_orbit(&f) else { panic!() };
            assert!(valid_clan(&c, &f), "{f}");
        }
    }

    #[test]
    fn closed_orbits() {
        let f = Family::AIII { p: 2, q: 2 };
        assert!(is_closed_orbit(&Param::Clan(clan("+-+-")), &f));
        assert!(!is_closed_orbit(&Param::Clan(clan("1122")), &f));
        let ai = Family::AI { n: 4 };
        assert!(is_closed_orbit(&ai.parse_param("4321").unwrap(), &ai));
        let bdi = Family::BDI { p: 1, q: 1 };
        assert_eq!(names(bdi), vec!["11"]);
        assert!(is_closed_orbit(&Param::Clan(clan("11")), &bdi));
    }

    #[test]
    fn reverse_preserves_symmetric() {
        let f = Family::CII { p: 2, q: 2 };
        for c in enumerate_clans(&f) {
            assert!(valid_clan(&c.reversed(), &f), "{c}");
        }
    }
}
