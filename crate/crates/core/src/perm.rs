//! Permutations, involutions and signed permutations in one-line notation.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One-line notation with 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((1..=n).collect())
    }

    /// The longest element `[n, ..., 1]`.
    pub fn longest(n: usize) -> Perm {
        Perm((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Image of the 1-based point `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Perm(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x - 1] == i + 1)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.at(i) == i).collect()
    }

    /// Positions `i` (1-based) with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn excedances(&self) -> usize {
        (1..=self.len()).filter(|&i| self.at(i) > i).count()
    }

    /// Conjugation by the transposition of the points `a` and `b`.
    pub fn conjugate_by_transposition(&self, a: usize, b: usize) -> Perm {
        let t = |x: usize| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        let mut out = vec![0; self.len()];
        for i in 1..=self.len() {
            out[t(i) - 1] = t(self.at(i));
        }
        Perm(out)
    }

    /// Left multiplication `t ∘ self` by the transposition `(a b)`.
    pub fn left_mul_transposition(&self, a: usize, b: usize) -> Perm {
        let t = |x: usize| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        Perm(self.0.iter().map(|&x| t(x)).collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(text: &str) -> Result<Perm> {
        let text = text.trim().trim_start_matches('[').trim_end_matches(']');
        let tokens: Vec<&str> = if text.contains(',') {
            text.split(',').map(str::trim).collect()
        } else if text.contains(' ') {
            text.split_whitespace().collect()
        } else {
            (0..text.len()).map(|i| &text[i..i + 1]).collect()
        };
        let mut images = Vec::with_capacity(tokens.len());
        let mut offset = 0;
        for tok in tokens {
            match tok.parse::<usize>() {
                Ok(x) => images.push(x),
                Err(_) => return Err(Error::MalformedToken { token: tok.to_string(), offset }),
            }
            offset += tok.len();
        }
        Perm::new(images)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Perm, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A self-inverse permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Perm", into = "Perm")]
pub struct Involution(Perm);

impl Involution {
    pub fn new(p: Perm) -> Result<Involution> {
        if p.is_involution() {
            Ok(Involution(p))
        } else {
            Err(Error::NotInvolution(p.to_string()))
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Involution> {
        Involution::new(Perm::new(images)?)
    }

    pub fn perm(&self) -> &Perm {
        &self.0
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.0.fixed_points().is_empty()
    }
}

impl Deref for Involution {
    type Target = Perm;
    fn deref(&self) -> &Perm {
        &self.0
    }
}

impl TryFrom<Perm> for Involution {
    type Error = Error;
    fn try_from(p: Perm) -> Result<Involution> {
        Involution::new(p)
    }
}

impl From<Involution> for Perm {
    fn from(w: Involution) -> Perm {
        w.0
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Involution {
    type Err = Error;
    fn from_str(text: &str) -> Result<Involution> {
        Involution::new(text.parse()?)
    }
}

/// All involutions of `1..=n` in lexicographic order.
pub fn all_involutions(n: usize, fixed_point_free: bool) -> Vec<Involution> {
    let mut out = Vec::new();
    let mut w = vec![0usize; n];
    fill_involution(&mut w, fixed_point_free, &mut out);
    out.sort();
    out
}

fn fill_involution(w: &mut Vec<usize>, fpf: bool, out: &mut Vec<Involution>) {
    let Some(i) = w.iter().position(|&x| x == 0) else {
        out.push(Involution(Perm(w.clone())));
        return;
    };
    if !fpf {
        w[i] = i + 1;
        fill_involution(w, fpf, out);
        w[i] = 0;
    }
    for j in i + 1..w.len() {
        if w[j] == 0 {
            w[i] = j + 1;
            w[j] = i + 1;
            fill_involution(w, fpf, out);
            w[i] = 0;
            w[j] = 0;
        }
    }
}

/// Signed permutation in window notation `[w(1), ..., w(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(Vec<i64>);

impl SignedPerm {
    pub fn new(images: Vec<i64>) -> Result<SignedPerm> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::NotPermutation(format!("{images:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm(images))
    }

    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm((1..=n as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[i64] {
        &self.0
    }

    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// Coxeter length in type B with `s0` negating the first entry.
    pub fn length_b(&self) -> usize {
        let w = &self.0;
        let inv: usize = (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum();
        inv + w.iter().filter(|&&x| x < 0).map(|&x| (-x) as usize).sum::<usize>()
    }

    /// Coxeter length in type D with the special generator acting on the
    /// first two entries.
    pub fn length_d(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count() + (i + 1..w.len()).filter(|&j| w[i] + w[j] < 0).count())
            .sum()
    }

    /// Right action of a simple generator on positions. Generator `0` is
    /// the special one (`s0` in type B, `s0'` in type D); `i >= 1` swaps
    /// positions `i` and `i + 1`.
    pub fn apply_generator(&self, g: usize, type_d: bool) -> SignedPerm {
        let mut w = self.0.clone();
        if g == 0 {
            if type_d {
                let (a, b) = (w[0], w[1]);
                w[0] = -b;
                w[1] = -a;
            } else {
                w[0] = -w[0];
            }
        } else {
            w.swap(g - 1, g);
        }
        SignedPerm(w)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignedPerm {
    type Err = Error;
    fn from_str(text: &str) -> Result<SignedPerm> {
        let text = text.trim().trim_start_matches('[').trim_end_matches(']');
        let mut images = Vec::new();
        let mut offset = 0;
        for tok in text.split(',') {
            let t = tok.trim();
            match t.parse::<i64>() {
                Ok(x) => images.push(x),
                Err(_) => return Err(Error::MalformedToken { token: t.to_string(), offset }),
            }
            offset += tok.len() + 1;
        }
        SignedPerm::new(images)
    }
}

impl Serialize for SignedPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        // Telephone numbers and double factorials.
        let all: Vec<usize> = (0..7).map(|n| all_involutions(n, false).len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 10, 26, 76]);
        assert_eq!(all_involutions(4, true).len(), 3);
        assert_eq!(all_involutions(6, true).len(), 15);
    }

    #[test]
    fn parse_and_print() {
        let w: Perm = "2143".parse().unwrap();
        assert_eq!(w.images(), &[2, 1, 4, 3]);
        assert_eq!(w.to_string(), "2143");
        let long: Perm = "2,1,4,3,6,5,8,7,10,9".parse().unwrap();
        assert_eq!(long.to_string(), "2,1,4,3,6,5,8,7,10,9");
        assert!("231".parse::<Involution>().is_err());
        let s: SignedPerm = "-4,6,3,2,5,-1".parse().unwrap();
        assert_eq!(s.to_string(), "-4,6,3,2,5,-1");
        assert!("1,1".parse::<SignedPerm>().is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let u: Perm = "356124".parse().unwrap();
        assert_eq!(u.compose(&u.inverse()), Perm::identity(6));
        assert_eq!(u.inverse().to_string(), "451623");
        let w: Perm = "231".parse().unwrap();
        assert_eq!(w.descents(), vec![2]);
        assert_eq!(w.inversions(), 2);
    }
}
