//! Helpers shared by the integration tests. The oracles here are written
//! from the definitions and share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Covers listed in a fixture file, as `(lower, upper)` text pairs.
pub fn fixture_covers(name: &str) -> BTreeSet<(String, String)> {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            (it.next().unwrap().to_string(), it.next().unwrap().to_string())
        })
        .collect()
}

pub fn fixture_vertices(covers: &BTreeSet<(String, String)>) -> BTreeSet<String> {
    covers.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect()
}

/// A clan entry for the test-side oracles.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum E {
    P,
    M,
    N(usize),
}

fn render(c: &[E]) -> String {
    let mut relabel = Vec::new();
    c.iter()
        .map(|e| match e {
            E::P => "+".to_string(),
            E::M => "-".to_string(),
            E::N(k) => {
                let pos = relabel.iter().position(|x| x == k).unwrap_or_else(|| {
                    relabel.push(*k);
                    relabel.len() - 1
                });
                (pos + 1).to_string()
            }
        })
        .collect()
}

/// All clans of length `n`: signs on the unmatched positions of every
/// partial matching.
pub fn brute_clans(n: usize) -> Vec<Vec<E>> {
    fn go(pos: usize, cur: &mut Vec<Option<E>>, next: usize, out: &mut Vec<Vec<E>>) {
        let n = cur.len();
        if pos == n {
            out.push(cur.iter().map(|e| e.unwrap()).collect());
            return;
        }
        if cur[pos].is_some() {
            go(pos + 1, cur, next, out);
            return;
        }
        for s in [E::P, E::M] {
            cur[pos] = Some(s);
            go(pos + 1, cur, next, out);
        }
        for t in pos + 1..n {
            if cur[t].is_none() {
                cur[pos] = Some(E::N(next));
                cur[t] = Some(E::N(next));
                go(pos + 1, cur, next + 1, out);
                cur[t] = None;
            }
        }
        cur[pos] = None;
    }
    let mut out = Vec::new();
    go(0, &mut vec![None; n], 0, &mut out);
    out
}

pub fn signature(c: &[E]) -> (usize, usize) {
    let plus = c.iter().filter(|e| **e == E::P).count();
    let minus = c.iter().filter(|e| **e == E::M).count();
    let pairs = (c.len() - plus - minus) / 2;
    (plus + pairs, minus + pairs)
}

fn partner(c: &[E], i: usize) -> Option<usize> {
    match c[i] {
        E::N(k) => (0..c.len()).find(|&j| j != i && c[j] == E::N(k)),
        _ => None,
    }
}

/// Mirror condition: signs mirror to the same sign (`flip = false`) or the
/// opposite sign, and pairs mirror to pairs. `self_pairs` admits a pair
/// joining `i` and `n+1-i`.
pub fn mirrored(c: &[E], flip: bool, self_pairs: bool) -> bool {
    let n = c.len();
    (0..n).all(|i| {
        let j = n - 1 - i;
        match (c[i], c[j]) {
            (E::N(_), E::N(_)) => {
                let t = partner(c, i).unwrap();
                (t != j || self_pairs) && partner(c, j) == Some(n - 1 - t)
            }
            (E::N(_), _) | (_, E::N(_)) => false,
            (a, b) => (a == b) != flip,
        }
    })
}

pub fn clan_text(c: &[E]) -> String {
    render(c)
}

/// Bruhat order in `S_n` by the rank-matrix criterion: `v <= w` iff for
/// all `i, j`, `#{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j}`.
pub fn bruhat_rank_matrix(v: &[usize], w: &[usize]) -> bool {
    let n = v.len();
    (1..=n).all(|i| {
        (1..=n).all(|j| {
            let cv = v[..i].iter().filter(|&&x| x >= j).count();
            let cw = w[..i].iter().filter(|&&x| x >= j).count();
            cv <= cw
        })
    })
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn is_involution(w: &[usize]) -> bool {
    w.iter().enumerate().all(|(i, &x)| w[x - 1] == i + 1)
}
