//! Brute-force Bruhat order by the subword property. Slow, but shares no
//! code with the tableau comparators in [`crate::order`].

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::perm::{Perm, SignedPerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coxeter {
    A,
    B,
    D,
}

/// Right multiplication by a simple generator, acting on positions.
/// Generator `0` is the special one in types B and D.
fn right_mul(w: &[i64], s: usize, kind: Coxeter) -> Vec<i64> {
    let mut w = w.to_vec();
    match (s, kind) {
        (0, Coxeter::B) => w[0] = -w[0],
        (0, Coxeter::D) => {
            let (a, b) = (w[0], w[1]);
            w[0] = -b;
            w[1] = -a;
        }
        (0, Coxeter::A) => unreachable!("type A has no special generator"),
        (i, _) => w.swap(i - 1, i),
    }
    w
}

/// Right descents in window notation.
fn is_descent(w: &[i64], s: usize, kind: Coxeter) -> bool {
    match (s, kind) {
        (0, Coxeter::B) => w[0] < 0,
        (0, Coxeter::D) => w[0] + w[1] < 0,
        (0, Coxeter::A) => false,
        (i, _) => w[i - 1] > w[i],
    }
}

fn generators(n: usize, kind: Coxeter) -> Vec<usize> {
    match kind {
        Coxeter::A => (1..n).collect(),
        Coxeter::B => (0..n).collect(),
        Coxeter::D if n >= 2 => (0..n).collect(),
        Coxeter::D => Vec::new(),
    }
}

/// A reduced word for `w`, read left to right.
pub fn reduced_word(w: &[i64], kind: Coxeter) -> Vec<usize> {
    let gens = generators(w.len(), kind);
    let mut w = w.to_vec();
    let mut word = Vec::new();
    while let Some(&s) = gens.iter().find(|&&s| is_descent(&w, s, kind)) {
        w = right_mul(&w, s, kind);
        word.push(s);
    }
    word.reverse();
    word
}

/// Every product of a subword of a reduced word for `w`.
pub fn lower_set(w: &[i64], kind: Coxeter) -> HashSet<Vec<i64>> {
    let n = w.len() as i64;
    let mut set: HashSet<Vec<i64>> = HashSet::from([(1..=n).collect()]);
    for s in reduced_word(w, kind) {
        let more: Vec<Vec<i64>> = set.iter().map(|u| right_mul(u, s, kind)).collect();
        set.extend(more);
    }
    set
}

pub fn leq_subword(v: &[i64], w: &[i64], kind: Coxeter) -> Result<bool> {
    if v.len() != w.len() {
        return Err(Error::SizeMismatch(v.len(), w.len()));
    }
    if kind == Coxeter::D {
        for x in [v, w] {
            if x.iter().filter(|&&a| a < 0).count() % 2 == 1 {
                return Err(Error::OddSignCount);
            }
        }
    }
    Ok(lower_set(w, kind).contains(v))
}

pub fn leq_a(v: &Perm, w: &Perm) -> Result<bool> {
    let conv = |p: &Perm| p.images().iter().map(|&x| x as i64).collect::<Vec<_>>();
    leq_subword(&conv(v), &conv(w), Coxeter::A)
}

pub fn leq_b(v: &SignedPerm, w: &SignedPerm) -> Result<bool> {
    leq_subword(v.images(), w.images(), Coxeter::B)
}

pub fn leq_d(v: &SignedPerm, w: &SignedPerm) -> Result<bool> {
    leq_subword(v.images(), w.images(), Coxeter::D)
}

/// All elements of the group, by closure under the generators.
pub fn elements(n: usize, kind: Coxeter) -> Vec<Vec<i64>> {
    let id: Vec<i64> = (1..=n as i64).collect();
    let gens = generators(n, kind);
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(w) = stack.pop() {
        for &s in &gens {
            let u = right_mul(&w, s, kind);
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    let mut all: Vec<_> = seen.into_iter().collect();
    all.sort();
    all
}
