mod common;

use std::collections::BTreeSet;

use common::{brute_clans, clan_text, is_involution, mirrored, permutations, signature};
use korbit::{enumerate, Family};

fn listed(f: &Family) -> BTreeSet<String> {
    enumerate(f).iter().map(|x| x.to_string()).collect()
}

#[test]
fn aiii_matches_brute_force() {
    for n in 1..=6 {
        let all = brute_clans(n);
        for p in 0..=n {
            let q = n - p;
            let want: BTreeSet<String> = all.iter().filter(|c| signature(c) == (p, q)).map(|c| clan_text(c)).collect();
            assert_eq!(listed(&Family::AIII { p, q }), want, "AIII({p},{q})");
        }
    }
}

#[test]
fn ci_matches_brute_force() {
    for m in 1..=3 {
        let want: BTreeSet<String> = brute_clans(2 * m).iter().filter(|c| mirrored(c, true, true)).map(|c| clan_text(c)).collect();
        assert_eq!(listed(&Family::CI { m }), want, "CI({m})");
    }
}

#[test]
fn cii_matches_brute_force() {
    for half in 1..=3 {
        let all = brute_clans(2 * half);
        for p in 0..=half {
            let q = half - p;
            let want: BTreeSet<String> =
                all.iter().filter(|c| signature(c) == (2 * p, 2 * q) && mirrored(c, false, false)).map(|c| clan_text(c)).collect();
            assert_eq!(listed(&Family::CII { p, q }), want, "CII({p},{q})");
        }
    }
}

#[test]
fn involutions_match_brute_force() {
    for n in 1..=6 {
        let inv: Vec<_> = permutations(n).into_iter().filter(|w| is_involution(w)).collect();
        assert_eq!(enumerate(&Family::AI { n }).len(), inv.len(), "AI({n})");
        if n % 2 == 0 {
            let fpf = inv.iter().filter(|w| w.iter().enumerate().all(|(i, &x)| x != i + 1)).count();
            assert_eq!(enumerate(&Family::AII { n }).len(), fpf, "AII({n})");
        }
    }
}

#[test]
fn known_lists() {
    let aiii: BTreeSet<String> = ["1+1", "+11", "11+", "++-", "+-+", "-++"].map(String::from).into();
    assert_eq!(listed(&Family::AIII { p: 2, q: 1 }), aiii);
    let ci: BTreeSet<String> =
        ["++--", "+-+-", "-+-+", "--++", "1122", "1212", "1221", "1+-1", "1-+1", "+11-", "-11+"].map(String::from).into();
    assert_eq!(listed(&Family::CI { m: 2 }), ci);
    let cii: BTreeSet<String> = ["1212", "1122", "+--+", "-++-"].map(String::from).into();
    assert_eq!(listed(&Family::CII { p: 1, q: 1 }), cii);
}
