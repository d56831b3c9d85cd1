//! Local pattern moves on clans and the order they generate.
//!
//! A move replaces the entries on an ascending index set matching its left
//! pattern by its right pattern. In mirrored families a move is applied
//! together with its reflection `i -> N-1-i`; some moves may instead use a
//! single self-symmetric index set. Every result is re-validated for the
//! family, so illegal outcomes are discarded rather than encoded as
//! preconditions.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clan::{Clan, Entry};
use crate::error::{Error, Result};
use crate::family::{enumerate, valid_clan, validate_param, Family, Param};
use crate::graph::involution_neighbors;
use crate::poset::{BitSet, OrbitPoset};
use crate::rank::rank;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveId {
    /// The ten basic moves, `1..=10`.
    Basic(u8),
    /// The symplectic supplementary moves `S1..=S4`.
    Supplementary(u8),
    /// Moves through the middle entry of an odd orthogonal clan, `B1`, `B2`.
    Middle(u8),
    /// Involution families: conjugation or multiplication by `(a b)`.
    Transposition(usize, usize),
}

impl fmt::Display for MoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveId::Basic(k) => write!(f, "{k}"),
            MoveId::Supplementary(k) => write!(f, "S{k}"),
            MoveId::Middle(k) => write!(f, "B{k}"),
            MoveId::Transposition(a, b) => write!(f, "({a} {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub id: MoveId,
    /// Ascending 0-based positions matched by the left pattern.
    pub index_set: Vec<usize>,
    /// Applied together with the reflected index set.
    pub mirrored: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sym {
    P,
    M,
    A,
    B,
}

use Sym::{A, B, M, P};

fn pattern(id: MoveId) -> (&'static [Sym], &'static [Sym]) {
    match id {
        MoveId::Basic(1) => (&[P, M], &[A, A]),
        MoveId::Basic(2) => (&[M, P], &[A, A]),
        MoveId::Basic(3) => (&[A, A, P], &[A, P, A]),
        MoveId::Basic(4) => (&[A, A, M], &[A, M, A]),
        MoveId::Basic(5) => (&[P, A, A], &[A, P, A]),
        MoveId::Basic(6) => (&[M, A, A], &[A, M, A]),
        MoveId::Basic(7) => (&[A, A, B, B], &[A, B, A, B]),
        MoveId::Basic(8) => (&[A, A, B, B], &[A, P, M, A]),
        MoveId::Basic(9) => (&[A, A, B, B], &[A, M, P, A]),
        MoveId::Basic(10) => (&[A, B, A, B], &[A, B, B, A]),
        MoveId::Supplementary(1) => (&[P, A, A, M], &[A, B, A, B]),
        MoveId::Supplementary(2) => (&[M, A, A, P], &[A, B, A, B]),
        MoveId::Supplementary(3) => (&[P, M, P, M], &[A, B, A, B]),
        MoveId::Supplementary(4) => (&[M, P, M, P], &[A, B, A, B]),
        MoveId::Middle(1) => (&[P, M, P], &[A, P, A]),
        MoveId::Middle(2) => (&[M, P, M], &[A, M, A]),
        _ => (&[], &[]),
    }
}

/// Moves whose effect is to exchange two positions, with those positions
/// inside the index set.
fn swap_slots(id: MoveId) -> Option<(usize, usize)> {
    match id {
        MoveId::Basic(3) | MoveId::Basic(4) | MoveId::Basic(7) => Some((1, 2)),
        MoveId::Basic(5) | MoveId::Basic(6) => Some((0, 1)),
        MoveId::Basic(10) => Some((2, 3)),
        _ => None,
    }
}

/// Moves allowed on a single self-symmetric index set.
fn self_symmetric_ok(id: MoveId, f: &Family) -> bool {
    match f {
        Family::CII { .. } => id == MoveId::Basic(7),
        Family::CI { .. } => matches!(id, MoveId::Basic(1 | 2 | 7 | 8 | 9 | 10) | MoveId::Supplementary(_)),
        Family::BDI { .. } => matches!(id, MoveId::Basic(7 | 10) | MoveId::Middle(_)),
        _ => false,
    }
}

/// True iff moves of this type give Bruhat graph edges.
pub fn is_graph_move(id: MoveId, f: &Family) -> bool {
    match id {
        MoveId::Basic(k) => k <= 7,
        MoveId::Supplementary(_) => matches!(f, Family::CI { .. }),
        MoveId::Middle(_) => true,
        MoveId::Transposition(..) => !f.is_clan_family(),
    }
}

fn move_ids(f: &Family, n: usize) -> Vec<MoveId> {
    let mut ids: Vec<MoveId> = (1..=10).map(MoveId::Basic).collect();
    if let Family::CI { .. } = f {
        ids.extend((1..=4).map(MoveId::Supplementary));
    }
    if let Family::BDI { .. } = f {
        if n % 2 == 1 {
            ids.extend([MoveId::Middle(1), MoveId::Middle(2)]);
        }
    }
    ids
}

/// Label assignment if the entries at `idx` match `pat`.
fn matches(e: &[Entry], idx: &[usize], pat: &[Sym]) -> bool {
    let (mut la, mut lb) = (None, None);
    for (&i, &s) in idx.iter().zip(pat) {
        let x = e[i];
        match s {
            P => {
                if x != Entry::Plus {
                    return false;
                }
            }
            M => {
                if x != Entry::Minus {
                    return false;
                }
            }
            A | B => {
                if x.is_sign() {
                    return false;
                }
                let (slot, other) = if s == A { (&mut la, lb) } else { (&mut lb, la) };
                match *slot {
                    Some(y) if y != x => return false,
                    Some(_) => {}
                    None => {
                        if other == Some(x) {
                            return false;
                        }
                        *slot = Some(x);
                    }
                }
            }
        }
    }
    true
}

struct Fresh(u32);

impl Fresh {
    fn next(&mut self) -> Entry {
        self.0 += 1;
        Entry::Pair(self.0)
    }
}

fn apply(e: &[Entry], idx: &[usize], out: &[Sym], fresh: &mut Fresh) -> Vec<Entry> {
    let mut d = e.to_vec();
    let (a, b) = (fresh.next(), fresh.next());
    for (&i, &s) in idx.iter().zip(out) {
        d[i] = match s {
            P => Entry::Plus,
            M => Entry::Minus,
            A => a,
            B => b,
        };
    }
    d
}

/// Copies the new entries at `idx` of `d` onto their mirror positions in
/// `target`, with the family's sign rule and fresh labels for pairs.
fn mirror_into(d: &[Entry], idx: &[usize], target: &mut [Entry], same_sign: bool, fresh: &mut Fresh) {
    let n = d.len();
    let mut labels: HashMap<Entry, Entry> = HashMap::new();
    for &i in idx {
        let x = d[i];
        target[n - 1 - i] = if x.is_sign() {
            if same_sign {
                x
            } else {
                x.flipped()
            }
        } else {
            *labels.entry(x).or_insert_with(|| fresh.next())
        };
    }
}

/// Partial overlap with the mirror: the left half comes from the move, the
/// right half from its reflection, and pairs cut by the seam are closed up
/// with their mirror positions.
fn glue(e: &[Entry], idx: &[usize], out: &[Sym], same_sign: bool, fresh: &mut Fresh) -> Option<Vec<Entry>> {
    let n = e.len();
    let left = apply(e, idx, out, fresh);
    let mut right = e.to_vec();
    mirror_into(&left, idx, &mut right, same_sign, fresh);
    let mut x: Vec<Entry> = (0..n).map(|i| if 2 * i < n - 1 { left[i] } else { right[i] }).collect();
    let mut count: HashMap<Entry, usize> = HashMap::new();
    for &v in x.iter().filter(|v| !v.is_sign()) {
        *count.entry(v).or_default() += 1;
    }
    let dangling: Vec<usize> = (0..n).filter(|&i| !x[i].is_sign() && count[&x[i]] == 1).collect();
    for &i in &dangling {
        if !dangling.contains(&(n - 1 - i)) {
            return None;
        }
        if i < n - 1 - i {
            x[n - 1 - i] = x[i];
        }
    }
    Some(x)
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else { return };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

fn clan_successors(c: &Clan, f: &Family) -> Vec<(Move, Clan)> {
    let e = c.entries();
    let n = e.len();
    let mir = |i: usize| n - 1 - i;
    let middle = (n % 2 == 1).then_some(n / 2);
    let same_sign = f.mirror_same_sign();
    let mut fresh = Fresh(1_000_000);
    let mut out: Vec<(Move, Clan)> = Vec::new();
    for id in move_ids(f, n) {
        let (pin, pout) = pattern(id);
        combinations(n, pin.len(), |idx| {
            if !matches(e, idx, pin) {
                return;
            }
            let mut mv = Move { id, index_set: idx.to_vec(), mirrored: false };
            let result: Option<Vec<Entry>> = if let Family::AIII { .. } = f {
                Some(apply(e, idx, pout, &mut fresh))
            } else {
                let mut refl: Vec<usize> = idx.iter().map(|&i| mir(i)).collect();
                refl.sort_unstable();
                let overlap = refl.iter().any(|i| idx.contains(i));
                if refl == idx {
                    self_symmetric_ok(id, f).then(|| apply(e, idx, pout, &mut fresh))
                } else if !matches!(id, MoveId::Basic(_)) {
                    None
                } else if let Some((sa, sb)) = swap_slots(id) {
                    let (a, b) = (idx[sa], idx[sb]);
                    let bad = middle.is_some_and(|m| a == m || b == m) || [a, b].contains(&mir(a)) || [a, b].contains(&mir(b));
                    (!bad).then(|| {
                        mv.mirrored = true;
                        let mut d = e.to_vec();
                        d[b] = e[a];
                        d[a] = e[b];
                        d[mir(b)] = e[mir(a)];
                        d[mir(a)] = e[mir(b)];
                        d
                    })
                } else if overlap {
                    let forward = idx.iter().sum::<usize>() < refl.iter().sum::<usize>();
                    let through_middle = middle.is_some_and(|m| idx.contains(&m));
                    if forward && !through_middle {
                        mv.mirrored = true;
                        glue(e, idx, pout, same_sign, &mut fresh)
                    } else {
                        None
                    }
                } else {
                    mv.mirrored = true;
                    let mut d = apply(e, idx, pout, &mut fresh);
                    let snapshot = d.clone();
                    mirror_into(&snapshot, idx, &mut d, same_sign, &mut fresh);
                    Some(d)
                }
            };
            if let Some(d) = result {
                let d = Clan::canonical(d);
                if valid_clan(&d, f) {
                    out.push((mv, d));
                }
            }
        });
    }
    out.sort();
    out.dedup();
    out
}

/// Every legal single move from `x`. For involution families the moves are
/// the Bruhat graph edges that raise the rank.
pub fn successors(x: &Param, f: &Family) -> Result<Vec<(Move, Param)>> {
    if !validate_param(x, f)? {
        return Err(Error::FamilyMismatch(format!("{x} in {f}")));
    }
    match x {
        Param::Clan(c) => Ok(clan_successors(c, f).into_iter().map(|(m, d)| (m, Param::Clan(d))).collect()),
        Param::Inv(w) => {
            let r = rank(x, f)?;
            let mut out = Vec::new();
            for ((a, b), v) in involution_neighbors(w, f) {
                let y = Param::Inv(v);
                if rank(&y, f)? > r {
                    out.push((Move { id: MoveId::Transposition(a, b), index_set: vec![a - 1, b - 1], mirrored: false }, y));
                }
            }
            Ok(out)
        }
    }
}

/// Reflexive-transitive closure of `successors` over the whole family.
pub fn order_from_moves(f: &Family) -> Result<OrbitPoset> {
    let vertices = enumerate(f);
    let len = vertices.len();
    let index: HashMap<&Param, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let ranks = vertices.iter().map(|x| rank(x, f)).collect::<Result<Vec<_>>>()?;
    let mut succ: Vec<Vec<usize>> = Vec::with_capacity(len);
    for x in &vertices {
        let mut s: Vec<usize> = successors(x, f)?.iter().map(|(_, y)| index[y]).collect();
        s.sort_unstable();
        s.dedup();
        succ.push(s);
    }
    // up[i]: everything reachable from i.
    let mut up: Vec<BitSet> = Vec::with_capacity(len);
    for i in 0..len {
        let mut seen = BitSet::new(len);
        seen.insert(i);
        let mut stack = vec![i];
        while let Some(a) = stack.pop() {
            for &b in &succ[a] {
                if !seen.contains(b) {
                    seen.insert(b);
                    stack.push(b);
                }
            }
        }
        up.push(seen);
    }
    let mut below = vec![BitSet::new(len); len];
    for (i, u) in up.iter().enumerate() {
        for j in u.iter() {
            below[j].insert(i);
        }
    }
    Ok(OrbitPoset::from_below(*f, vertices, ranks, below))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clan(s: &str) -> Param {
        Param::Clan(s.parse().unwrap())
    }

    fn reaches(x: &str, y: &str, f: &Family, id: MoveId) -> bool {
        successors(&clan(x), f).unwrap().iter().any(|(m, d)| m.id == id && d == &clan(y))
    }

    #[test]
    fn basic_examples() {
        let f = Family::AIII { p: 2, q: 2 };
        assert!(reaches("1122", "1+-1", &f, MoveId::Basic(8)));
        assert!(reaches("1122", "1-+1", &f, MoveId::Basic(9)));
        assert!(reaches("1122", "1212", &f, MoveId::Basic(7)));
        assert!(reaches("1212", "1221", &f, MoveId::Basic(10)));
    }

    #[test]
    fn mirrored_examples() {
        assert!(reaches("1-+12+-2", "13312442", &Family::CII { p: 2, q: 2 }, MoveId::Basic(2)));
        assert!(reaches("1+-1", "1221", &Family::CI { m: 2 }, MoveId::Basic(1)));
        assert!(reaches("+11-", "1212", &Family::CI { m: 2 }, MoveId::Supplementary(1)));
    }

    #[test]
    fn graph_moves() {
        let a = Family::AIII { p: 1, q: 1 };
        assert!(!is_graph_move(MoveId::Basic(8), &a));
        assert!(is_graph_move(MoveId::Basic(7), &Family::CII { p: 1, q: 1 }));
        assert!(is_graph_move(MoveId::Supplementary(1), &Family::CI { m: 2 }));
    }
}
