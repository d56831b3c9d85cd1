//! Finite posets of orbits: order relation, covers and grading.

use std::collections::HashMap;

use crate::error::Result;
use crate::family::{enumerate, is_closed_orbit, open_orbit, Family, Param};
use crate::order::{bruhat_leq_a, counts, leq_counts};
use crate::rank::rank;

/// Fixed-size bit set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.contains(i))
    }
}

/// Vertices with their order ideals. `below[j]` contains `i` iff
/// `vertices[i] <= vertices[j]`.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    pub family: Family,
    pub vertices: Vec<Param>,
    pub ranks: Vec<usize>,
    below: Vec<BitSet>,
    index: HashMap<Param, usize>,
    covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    /// Builds from explicit down-sets (each containing its own vertex).
    pub fn from_below(family: Family, vertices: Vec<Param>, ranks: Vec<usize>, below: Vec<BitSet>) -> OrbitPoset {
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let covers = transitive_reduction(&below);
        OrbitPoset { family, vertices, ranks, below, index, covers }
    }

    /// Builds from a relation `leq(i, j)` on vertex indices.
    pub fn from_relation(family: Family, vertices: Vec<Param>, ranks: Vec<usize>, leq: impl Fn(usize, usize) -> bool) -> OrbitPoset {
        let n = vertices.len();
        let below = (0..n)
            .map(|j| {
                let mut b = BitSet::new(n);
                for i in 0..n {
                    if i == j || leq(i, j) {
                        b.insert(i);
                    }
                }
                b
            })
            .collect();
        OrbitPoset::from_below(family, vertices, ranks, below)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, x: &Param) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    pub fn below(&self, j: usize) -> &BitSet {
        &self.below[j]
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn minima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.below[j].count() == 1).collect()
    }

    pub fn maxima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| i == j || !self.leq(i, j))).collect()
    }

    /// Length of the longest chain from a minimal element, via covers.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&j| self.below[j].count());
        let mut down: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            down[b].push(a);
        }
        let mut h = vec![0; self.len()];
        for j in order {
            h[j] = down[j].iter().map(|&a| h[a] + 1).max().unwrap_or(0);
        }
        h
    }

    /// The pairs (indices into `self`) on which two posets over the same
    /// vertex set disagree, with the verdict of `self`. Vertices missing
    /// from `other` count as incomparable to everything.
    pub fn relation_diff(&self, other: &OrbitPoset) -> Vec<(usize, usize, bool)> {
        let map: Vec<Option<usize>> = self.vertices.iter().map(|x| other.index_of(x)).collect();
        let other_leq = |i: usize, j: usize| match (map[i], map[j]) {
            (Some(a), Some(b)) => other.leq(a, b),
            _ => i == j,
        };
        let mut out = Vec::new();
        for j in 0..self.len() {
            for i in 0..self.len() {
                if self.leq(i, j) != other_leq(i, j) {
                    out.push((i, j, self.leq(i, j)));
                }
            }
        }
        out
    }

    /// Sub-poset on the interval `[lo, hi]`, as vertex indices.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.below[hi].iter().filter(|&k| self.leq(lo, k)).collect()
    }
}

fn transitive_reduction(below: &[BitSet]) -> Vec<(usize, usize)> {
    let n = below.len();
    let mut covers = Vec::new();
    for j in 0..n {
        let mut strict = below[j].clone();
        strict.remove(j);
        let mut cand = strict.clone();
        for k in strict.iter() {
            let mut under = below[k].clone();
            under.remove(k);
            cand.difference_with(&under);
        }
        covers.extend(cand.iter().map(|i| (i, j)));
    }
    covers.sort_unstable();
    covers
}

/// The closure-order poset of a family from the counting criteria
/// (reverse Bruhat order for AI, AII), graded by the rank formulas.
pub fn hasse(f: &Family) -> Result<OrbitPoset> {
    let vertices = enumerate(f);
    let ranks = vertices.iter().map(|x| rank(x, f)).collect::<Result<Vec<_>>>()?;
    if f.is_clan_family() {
        let ks: Vec<_> = vertices.iter().map(|x| counts(x.as_clan().expect("clan"), f)).collect();
        let ranks2 = ranks.clone();
        Ok(OrbitPoset::from_relation(*f, vertices, ranks, |i, j| ranks2[i] < ranks2[j] && leq_counts(&ks[i], &ks[j], f)))
    } else {
        let perms: Vec<_> = vertices.iter().map(|x| x.as_inv().expect("involution").perm().clone()).collect();
        Ok(OrbitPoset::from_relation(*f, vertices, ranks, |i, j| bruhat_leq_a(&perms[j], &perms[i]).unwrap_or(false)))
    }
}

/// Structural facts about a poset, checked against the rank function and
/// the designated open and closed orbits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradingReport {
    pub rank_height_mismatches: Vec<usize>,
    pub bad_covers: Vec<(usize, usize)>,
    pub minima_not_closed: Vec<usize>,
    pub closed_not_minimal: Vec<usize>,
    pub open_is_unique_max: bool,
}

impl GradingReport {
    pub fn ok(&self) -> bool {
        self.rank_height_mismatches.is_empty()
            && self.bad_covers.is_empty()
            && self.minima_not_closed.is_empty()
            && self.closed_not_minimal.is_empty()
            && self.open_is_unique_max
    }
}

pub fn grading_report(p: &OrbitPoset) -> GradingReport {
    let h = p.heights();
    let minima = p.minima();
    let open = p.index_of(&open_orbit(&p.family));
    let maxima = p.maxima();
    GradingReport {
        rank_height_mismatches: (0..p.len()).filter(|&i| h[i] != p.ranks[i]).collect(),
        bad_covers: p.covers().iter().copied().filter(|&(a, b)| p.ranks[b] != p.ranks[a] + 1).collect(),
        minima_not_closed: minima.iter().copied().filter(|&i| !is_closed_orbit(&p.vertices[i], &p.family)).collect(),
        closed_not_minimal: (0..p.len()).filter(|&i| is_closed_orbit(&p.vertices[i], &p.family) && !minima.contains(&i)).collect(),
        open_is_unique_max: open.is_some() && maxima == vec![open.unwrap()],
    }
}
