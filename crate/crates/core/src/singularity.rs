//! Pattern inclusion for clans and involutions, and the smoothness,
//! rational smoothness and lci classifiers.

use serde::{Deserialize, Serialize};

use crate::clan::{Clan, Entry};
use crate::error::{Error, Result};
use crate::family::{open_orbit, validate_family, Family, Param};
use crate::perm::{all_involutions, Involution, Perm};

pub const AIII_BAD: [&str; 8] = ["1+-1", "1-+1", "1212", "1+221", "1-221", "122+1", "122-1", "122331"];

pub const AII_BAD: [&str; 15] = [
    "351624", "64827153", "57681324", "53281764", "43218765", "65872143", "21654387", "21563487", "34127856", "36154287", "21754836",
    "63287154", "54821763", "46513287", "21768435",
];

/// Variants of two AII patterns, for auditing the list: (listed, variant).
/// Neither variant is an involution, so the variant list is rejected by
/// [`classify_aii_with`].
pub const AII_VARIANTS: [(&str, &str); 2] = [("21754836", "21754386"), ("54821763", "54827163")];

/// Two obstructions at `n = 8` that [`AII_BAD`] does not catch: both are
/// singular by bottom degree and by palindromicity.
pub const AII_SUPPLEMENT: [&str; 2] = ["34128765", "43217856"];

pub const AI_BAD: [&str; 24] = [
    "14325", "21543", "32154", "154326", "124356", "351624", "132546", "426153", "153624", "351426", "1243576", "2135467", "2137654",
    "4321576", "5276143", "5472163", "1657324", "4651327", "57681324", "65872143", "13247856", "34125768", "34127856", "64827153",
];

/// Allowed when an odd number of fixed points lies between its `21` and `43`.
pub const AI_CONDITIONAL: &str = "2143";

pub const AI_SMOOTH_EXTRA: [&str; 2] = ["1324", "2143"];

/// lci obstructions for 1212-avoiding clans, checked with their negations.
/// Two entries of the list repeat; they are kept once.
pub const LCI_BAD: [&str; 19] = [
    "1++-1", "1+--1", "1-22+1", "1++221", "1+-221", "122--1", "122+-1", "12+2-1", "1+2-21", "1+23321", "12332-1", "1-22331", "12+2331",
    "122+331", "1223-31", "12233+1", "12332441", "12234431", "12233441",
];

/// DIII: extra patterns for the inner clan of the second shape.
pub const DIII_EXTRA: [&str; 5] = ["+11", "-11", "11+", "11-", "1122"];

fn parse_clans(list: &[&str]) -> Vec<Clan> {
    list.iter().map(|s| s.parse().expect("pattern clan")).collect()
}

fn parse_invs(list: &[&str]) -> Vec<Involution> {
    list.iter().map(|s| s.parse().expect("pattern involution")).collect()
}

/// Positions `i_1 < ... < i_k` of `c` whose subsequence is a clan equal to
/// `pattern` after relabeling.
pub fn clan_includes(c: &Clan, pattern: &Clan) -> Option<Vec<usize>> {
    let k = pattern.len();
    if k > c.len() {
        return None;
    }
    let cp = c.partners();
    let pp = pattern.partners();
    let mut chosen = vec![0usize; k];
    let mut forced: Vec<Option<usize>> = vec![None; k];
    #[allow(clippy::too_many_arguments)]
    fn go(
        j: usize,
        start: usize,
        c: &Clan,
        pat: &Clan,
        cp: &[Option<usize>],
        pp: &[Option<usize>],
        chosen: &mut Vec<usize>,
        forced: &mut Vec<Option<usize>>,
    ) -> bool {
        if j == pat.len() {
            return true;
        }
        if let Some(t) = forced[j] {
            if t < start {
                return false;
            }
            chosen[j] = t;
            return go(j + 1, t + 1, c, pat, cp, pp, chosen, forced);
        }
        let want = pat.entries()[j];
        // Leave room for the rest of the pattern.
        let last = c.len() - (pat.len() - j);
        for i in start..=last {
            let e = c.entries()[i];
            let ok = match want {
                Entry::Pair(_) => match (cp[i], pp[j]) {
                    (Some(t), Some(j2)) if t > i && j2 > j => {
                        forced[j2] = Some(t);
                        true
                    }
                    _ => false,
                },
                s => e == s,
            };
            if ok {
                chosen[j] = i;
                if go(j + 1, i + 1, c, pat, cp, pp, chosen, forced) {
                    return true;
                }
                if let Some(j2) = pp[j] {
                    forced[j2] = None;
                }
            }
        }
        false
    }
    go(0, 0, c, pattern, &cp, &pp, &mut chosen, &mut forced).then_some(chosen)
}

/// Visits every occurrence of `pattern` in `w` on a `w`-stable index set
/// (1-based positions); stops when `visit` returns true.
pub fn involution_occurrences(w: &Perm, pattern: &Perm, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let r = pattern.len();
    if r > w.len() {
        return false;
    }
    let mut chosen = vec![0usize; r];
    let mut forced: Vec<Option<usize>> = vec![None; r];
    fn go(
        a: usize,
        start: usize,
        w: &Perm,
        mu: &Perm,
        chosen: &mut Vec<usize>,
        forced: &mut Vec<Option<usize>>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if a == mu.len() {
            return visit(chosen);
        }
        if let Some(x) = forced[a] {
            if x < start {
                return false;
            }
            chosen[a] = x;
            return go(a + 1, x + 1, w, mu, chosen, forced, visit);
        }
        let target = mu.images()[a] - 1;
        for x in start..=w.len() {
            let wx = w.at(x);
            let ok = if target == a { wx == x } else { target > a && wx > x };
            if !ok {
                continue;
            }
            chosen[a] = x;
            if target > a {
                forced[target] = Some(wx);
            }
            if go(a + 1, x + 1, w, mu, chosen, forced, visit) {
                return true;
            }
            if target > a {
                forced[target] = None;
            }
        }
        false
    }
    go(0, 1, w, pattern, &mut chosen, &mut forced, &mut visit)
}

pub fn involution_includes(w: &Involution, pattern: &Perm) -> Result<Option<Vec<usize>>> {
    if !pattern.is_involution() {
        return Err(Error::PatternNotInvolution(pattern.to_string()));
    }
    let mut found = None;
    involution_occurrences(w.perm(), pattern, |pos| {
        found = Some(pos.to_vec());
        true
    });
    Ok(found)
}

/// Classical occurrences (1-based positions) of `pattern` in `w`.
pub fn schubert_occurrences(w: &Perm, pattern: &Perm, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let r = pattern.len();
    if r > w.len() {
        return false;
    }
    let mut chosen = vec![0usize; r];
    fn go(a: usize, start: usize, w: &Perm, b: &Perm, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if a == b.len() {
            return visit(chosen);
        }
        for x in start..=w.len() - (b.len() - a - 1) {
            let ok = (0..a).all(|k| (w.at(chosen[k]) < w.at(x)) == (b.images()[k] < b.images()[a]));
            if ok {
                chosen[a] = x;
                if go(a + 1, x + 1, w, b, chosen, visit) {
                    return true;
                }
            }
        }
        false
    }
    go(0, 1, w, pattern, &mut chosen, &mut visit)
}

pub fn schubert_includes(w: &Perm, pattern: &Perm) -> Option<Vec<usize>> {
    let mut found = None;
    schubert_occurrences(w, pattern, |pos| {
        found = Some(pos.to_vec());
        true
    });
    found
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A bad pattern and the 1-based positions where it occurs.
    Pattern { pattern: String, positions: Vec<usize> },
    /// `left · middle · right`, with `middle` naming the central block.
    Decomposition { left: String, middle: String, right: String },
    /// No admissible decomposition exists.
    NoDecomposition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub rationally_smooth: bool,
    pub smooth: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lci: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

fn first_clan_pattern(c: &Clan, patterns: &[Clan]) -> Option<Witness> {
    patterns.iter().find_map(|p| {
        clan_includes(c, p).map(|pos| Witness::Pattern { pattern: p.to_string(), positions: pos.iter().map(|i| i + 1).collect() })
    })
}

fn avoids(c: &Clan, patterns: &[Clan]) -> bool {
    patterns.iter().all(|p| clan_includes(c, p).is_none())
}

fn check_clan(c: &Clan, f: &Family) -> Result<()> {
    if !validate_family(c, f)? {
        return Err(Error::FamilyMismatch(format!("{c} in {f}")));
    }
    Ok(())
}

pub fn classify_aiii(c: &Clan) -> Verdict {
    let witness = first_clan_pattern(c, &parse_clans(&AIII_BAD));
    let ok = witness.is_none();
    Verdict { rationally_smooth: ok, smooth: ok, lci: classify_lci_aiii(c), witness }
}

/// `None` when `c` contains `1212`; otherwise whether `c` avoids the lci
/// obstructions and their negations.
pub fn classify_lci_aiii(c: &Clan) -> Option<bool> {
    if clan_includes(c, &"1212".parse().expect("1212")).is_some() {
        return None;
    }
    let pats = parse_clans(&LCI_BAD);
    Some(pats.iter().all(|p| clan_includes(c, p).is_none() && clan_includes(c, &p.negated()).is_none()))
}

fn first_inv_pattern(w: &Involution, patterns: &[Involution]) -> Option<Witness> {
    patterns.iter().find_map(|p| {
        let mut found = None;
        involution_occurrences(w.perm(), p.perm(), |pos| {
            found = Some(pos.to_vec());
            true
        });
        found.map(|positions| Witness::Pattern { pattern: p.to_string(), positions })
    })
}

pub fn classify_aii(w: &Involution) -> Result<Verdict> {
    classify_aii_with(w, &AII_BAD)
}

/// AII verdict against an arbitrary pattern list (used to audit variants).
pub fn classify_aii_with(w: &Involution, list: &[&str]) -> Result<Verdict> {
    if !w.is_fixed_point_free() {
        return Err(Error::NotFixedPointFree(w.to_string()));
    }
    let mut pats = Vec::with_capacity(list.len());
    for text in list {
        let p: Perm = text.parse()?;
        pats.push(Involution::new(p).map_err(|_| Error::PatternNotInvolution(text.to_string()))?);
    }
    let witness = first_inv_pattern(w, &pats);
    let ok = witness.is_none();
    Ok(Verdict { rationally_smooth: ok, smooth: ok, lci: None, witness })
}

/// Fixed points of `w` strictly between positions `a` and `b`.
fn fixed_between(w: &Perm, a: usize, b: usize) -> usize {
    (a + 1..b).filter(|&k| w.at(k) == k).count()
}

/// Enumerates occurrences of a pattern, stopping when the visitor returns true.
type Occurrences = fn(&Perm, &Perm, &mut dyn FnMut(&[usize]) -> bool) -> bool;

/// First occurrence of 2143 with an even number of fixed points of `w`
/// between its second and third positions.
fn disqualifying_2143(w: &Perm, occurrences: Occurrences) -> Option<Vec<usize>> {
    let pat: Perm = AI_CONDITIONAL.parse().expect("2143");
    let mut found = None;
    occurrences(w, &pat, &mut |pos: &[usize]| {
        if fixed_between(w, pos[1], pos[2]).is_multiple_of(2) {
            found = Some(pos.to_vec());
            true
        } else {
            false
        }
    });
    found
}

fn inv_occ(w: &Perm, p: &Perm, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    involution_occurrences(w, p, visit)
}

fn sch_occ(w: &Perm, p: &Perm, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    schubert_occurrences(w, p, visit)
}

pub fn classify_ai(w: &Involution) -> Verdict {
    let mut witness = first_inv_pattern(w, &parse_invs(&AI_BAD));
    if witness.is_none() {
        witness =
            disqualifying_2143(w.perm(), inv_occ).map(|positions| Witness::Pattern { pattern: AI_CONDITIONAL.to_string(), positions });
    }
    let rs = witness.is_none();
    let extra = if rs { first_inv_pattern(w, &parse_invs(&AI_SMOOTH_EXTRA)) } else { None };
    let smooth = rs && extra.is_none();
    Verdict { rationally_smooth: rs, smooth, lci: None, witness: witness.or(extra) }
}

fn block(c: &Clan, lo: usize, hi: usize) -> Option<Clan> {
    c.restrict(&(lo..hi).collect::<Vec<_>>())
}

fn decomposition(c: &Clan, k: usize, middle: String) -> Witness {
    let n = c.len();
    let show = |lo: usize, hi: usize| c.entries()[lo..hi].iter().map(entry_text).collect::<String>();
    Witness::Decomposition { left: show(0, k), middle, right: show(n - k, n) }
}

fn entry_text(e: &Entry) -> String {
    match e {
        Entry::Plus => "+".into(),
        Entry::Minus => "-".into(),
        Entry::Pair(l) if *l < 10 => l.to_string(),
        Entry::Pair(l) => format!("({l})"),
    }
}

pub fn classify_cii(c: &Clan, f: &Family) -> Result<Verdict> {
    check_clan(c, f)?;
    let aiii = parse_clans(&AIII_BAD);
    let n = c.len();
    for k in 0..=n / 2 {
        let (Some(left), Some(mid)) = (block(c, 0, k), block(c, k, n - k)) else { continue };
        let (a, b) = mid.signature();
        if a % 2 != 0 || b % 2 != 0 {
            continue;
        }
        let open = open_orbit(&Family::CII { p: a / 2, q: b / 2 });
        if open.as_clan() == Some(&mid) && avoids(&left, &aiii) {
            let w = decomposition(c, k, mid.to_string());
            return Ok(Verdict { rationally_smooth: true, smooth: true, lci: None, witness: Some(w) });
        }
    }
    Ok(Verdict { rationally_smooth: false, smooth: false, lci: None, witness: Some(Witness::NoDecomposition) })
}

/// Splits the left part `c[0..k]` into a self-contained clan followed by a
/// run of entries whose partners lie beyond position `k`.
fn split_singles(c: &Clan, k: usize) -> Option<(Clan, usize)> {
    let partners = c.partners();
    let outward = |i: usize| partners[i].is_some_and(|t| t >= k);
    let j = (0..k).rev().take_while(|&i| outward(i)).last().unwrap_or(k);
    if (0..j).any(outward) {
        return None;
    }
    block(c, 0, j).map(|g| (g, k - j))
}

pub fn classify_ci(c: &Clan, f: &Family) -> Result<Verdict> {
    check_clan(c, f)?;
    let aiii = parse_clans(&AIII_BAD);
    let n = c.len();
    let cores: [(&str, bool); 4] = [("", true), ("1+-1", false), ("1-+1", false), ("1212", true)];
    let mut best: Option<Verdict> = None;
    for (core, smooth) in cores {
        let g = core.len();
        if g > n {
            continue;
        }
        let k = (n - g) / 2;
        let (left, singles) = if g == 0 {
            match split_singles(c, k) {
                Some(x) => x,
                None => continue,
            }
        } else {
            match (block(c, 0, k), block(c, k, n - k)) {
                (Some(l), Some(mid)) if mid.to_string() == core => (l, 0),
                _ => continue,
            }
        };
        if singles > 0 && g > 0 {
            continue;
        }
        if avoids(&left, &aiii) {
            let v = Verdict {
                rationally_smooth: true,
                smooth,
                lci: None,
                witness: Some(decomposition(c, k, if g == 0 { String::new() } else { core.to_string() })),
            };
            if smooth {
                return Ok(v);
            }
            best.get_or_insert(v);
        }
    }
    Ok(best.unwrap_or(Verdict { rationally_smooth: false, smooth: false, lci: None, witness: Some(Witness::NoDecomposition) }))
}

pub fn classify_bdi(c: &Clan, f: &Family) -> Result<Verdict> {
    check_clan(c, f)?;
    let aiii = parse_clans(&AIII_BAD);
    let n = c.len();
    let e = c.entries();
    let mut best: Option<Verdict> = None;
    let mut consider = |v: Verdict| -> Option<Verdict> {
        if v.smooth {
            return Some(v);
        }
        best.get_or_insert(v);
        None
    };
    // Central block of equal signs (possibly empty), preceded by singles.
    for g in 0..=n {
        if !(n - g).is_multiple_of(2) {
            continue;
        }
        let k = (n - g) / 2;
        if g > 0 && !(e[k].is_sign() && e[k..n - k].iter().all(|x| *x == e[k])) {
            continue;
        }
        if let Some((left, _)) = split_singles(c, k) {
            if avoids(&left, &aiii) {
                let mid: String = e[k..n - k].iter().map(entry_text).collect();
                let v = Verdict { rationally_smooth: true, smooth: true, lci: None, witness: Some(decomposition(c, k, mid)) };
                if let Some(v) = consider(v) {
                    return Ok(v);
                }
            }
        }
    }
    for (core, smooth) in [("1+-+1", false), ("1-+-1", false), ("12+12", true), ("12-12", true)] {
        if n < 5 || n.is_multiple_of(2) {
            continue;
        }
        let k = (n - 5) / 2;
        if let (Some(left), Some(mid)) = (block(c, 0, k), block(c, k, n - k)) {
            if mid.to_string() == core && avoids(&left, &aiii) {
                let v = Verdict { rationally_smooth: true, smooth, lci: None, witness: Some(decomposition(c, k, core.to_string())) };
                if let Some(v) = consider(v) {
                    return Ok(v);
                }
            }
        }
    }
    Ok(best.unwrap_or(Verdict { rationally_smooth: false, smooth: false, lci: None, witness: Some(Witness::NoDecomposition) }))
}

pub fn classify_diii(c: &Clan, f: &Family) -> Result<Verdict> {
    check_clan(c, f)?;
    let aiii = parse_clans(&AIII_BAD);
    let n = c.len();
    let e = c.entries();
    for k in 0..=n / 2 {
        let (Some(left), Some(mid)) = (block(c, 0, k), block(c, k, n - k)) else { continue };
        let half = mid.len() / 2;
        let mut candidates = vec![Clan::canonical(Vec::new())];
        if let Some(open) = open_orbit(&Family::DIII { n: half }).as_clan().filter(|_| half > 0) {
            candidates = vec![open.clone()];
            if half % 2 == 1 {
                // The other sign choice of the open shape.
                let mut flipped = open.entries().to_vec();
                flipped.swap(half - 1, half);
                candidates.push(Clan::canonical(flipped));
            }
        }
        if candidates.contains(&mid) && avoids(&left, &aiii) {
            let v = Verdict { rationally_smooth: true, smooth: true, lci: None, witness: Some(decomposition(c, k, mid.to_string())) };
            return Ok(v);
        }
    }
    // (a, γ1, b, a, γ1', b) with γ1 of length n/2 - 2.
    if n >= 4 {
        let g = n / 2 - 2;
        let partners = c.partners();
        if partners[0] == Some(g + 2) && partners[g + 1] == Some(n - 1) {
            if let Some(inner) = block(c, 1, g + 1) {
                let extra = parse_clans(&DIII_EXTRA);
                if avoids(&inner, &aiii) && avoids(&inner, &extra) {
                    let text: String = e[1..g + 1].iter().map(entry_text).collect();
                    let w = Witness::Decomposition { left: format!("a{text}b"), middle: String::new(), right: "a..b".into() };
                    return Ok(Verdict { rationally_smooth: true, smooth: true, lci: None, witness: Some(w) });
                }
            }
        }
    }
    Ok(Verdict { rationally_smooth: false, smooth: false, lci: None, witness: Some(Witness::NoDecomposition) })
}

/// Dispatches on the family.
pub fn classify(x: &Param, f: &Family) -> Result<Verdict> {
    match (x, f) {
        (Param::Clan(c), Family::AIII { .. }) => {
            check_clan(c, f)?;
            Ok(classify_aiii(c))
        }
        (Param::Clan(c), Family::CII { .. }) => classify_cii(c, f),
        (Param::Clan(c), Family::CI { .. }) => classify_ci(c, f),
        (Param::Clan(c), Family::BDI { .. }) => classify_bdi(c, f),
        (Param::Clan(c), Family::DIII { .. }) => classify_diii(c, f),
        (Param::Inv(w), Family::AI { n }) if w.len() == *n => Ok(classify_ai(w)),
        (Param::Inv(w), Family::AII { n }) if w.len() == *n => classify_aii(w),
        _ => Err(Error::FamilyMismatch(format!("{x} in {f}"))),
    }
}

/// An involution on which the two senses of avoidance disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub involution: String,
    /// Avoids the whole list with stable index sets.
    pub avoids_involution_sense: bool,
    /// Avoids the whole list as ordinary permutation patterns.
    pub avoids_schubert_sense: bool,
    /// Patterns found in one sense but not the other.
    pub patterns: Vec<String>,
}

/// Involutions of size `n` whose avoidance of the family's bad list differs
/// between the involution and Schubert senses of inclusion.
pub fn avoidance_sense_report(f: &Family) -> Result<Vec<Discrepancy>> {
    let (n, fpf, list): (usize, bool, Vec<&str>) = match *f {
        Family::AI { n } => (n, false, AI_BAD.to_vec()),
        Family::AII { n } => (n, true, AII_BAD.to_vec()),
        _ => return Err(Error::FamilyMismatch(format!("{f} is not an involution family"))),
    };
    let pats = parse_invs(&list);
    let mut out = Vec::new();
    for w in all_involutions(n, fpf) {
        let mut inv_found = Vec::new();
        let mut sch_found = Vec::new();
        for p in &pats {
            if involution_occurrences(w.perm(), p.perm(), |_| true) {
                inv_found.push(p.to_string());
            }
            if schubert_includes(w.perm(), p.perm()).is_some() {
                sch_found.push(p.to_string());
            }
        }
        if let Family::AI { .. } = f {
            if disqualifying_2143(w.perm(), inv_occ).is_some() {
                inv_found.push(AI_CONDITIONAL.into());
            }
            if disqualifying_2143(w.perm(), sch_occ).is_some() {
                sch_found.push(AI_CONDITIONAL.into());
            }
        }
        let (a, b) = (inv_found.is_empty(), sch_found.is_empty());
        if a != b {
            let mut patterns: Vec<String> = sch_found
                .iter()
                .filter(|p| !inv_found.contains(p))
                .chain(inv_found.iter().filter(|p| !sch_found.contains(p)))
                .cloned()
                .collect();
            patterns.sort();
            patterns.dedup();
            out.push(Discrepancy { involution: w.to_string(), avoids_involution_sense: a, avoids_schubert_sense: b, patterns });
        }
    }
    Ok(out)
}
