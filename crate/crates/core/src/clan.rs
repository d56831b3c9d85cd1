//! Clans: sequences of signs and paired labels.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One symbol of a clan. The derived order (`+` < `-` < labels) is the
/// enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Entry {
    Plus,
    Minus,
    Pair(u32),
}

impl Entry {
    pub fn is_sign(self) -> bool {
        !matches!(self, Entry::Pair(_))
    }

    /// Opposite sign; labels are left alone.
    pub fn flipped(self) -> Entry {
        match self {
            Entry::Plus => Entry::Minus,
            Entry::Minus => Entry::Plus,
            e => e,
        }
    }
}

/// A clan in canonical form: labels are `1, 2, ...` in order of first
/// occurrence, and every label occurs exactly twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    entries: Vec<Entry>,
}

impl Clan {
    pub fn new(entries: Vec<Entry>) -> Result<Clan> {
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for e in &entries {
            if let Entry::Pair(l) = e {
                *counts.entry(*l).or_default() += 1;
            }
        }
        let mut bad: Vec<(u32, usize)> = counts.into_iter().filter(|&(_, n)| n != 2).collect();
        bad.sort();
        if let Some(&(label, count)) = bad.first() {
            return Err(Error::LabelCountError { label, count });
        }
        Ok(Clan::canonical(entries))
    }

    /// Relabels by first occurrence. Callers guarantee that labels pair up.
    pub(crate) fn canonical(mut entries: Vec<Entry>) -> Clan {
        let mut map: HashMap<u32, u32> = HashMap::new();
        for e in entries.iter_mut() {
            if let Entry::Pair(l) = e {
                let next = map.len() as u32 + 1;
                *l = *map.entry(*l).or_insert(next);
            }
        }
        Clan { entries }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_pairs(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_sign()).count() / 2
    }

    /// (#plus + #pairs, #minus + #pairs).
    pub fn signature(&self) -> (usize, usize) {
        let plus = self.entries.iter().filter(|&&e| e == Entry::Plus).count();
        let minus = self.entries.iter().filter(|&&e| e == Entry::Minus).count();
        let k = self.num_pairs();
        (plus + k, minus + k)
    }

    /// Pairs as 0-based `(s, t)` with `s < t`, sorted by `s`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut first: Vec<Option<usize>> = vec![None; self.num_pairs() + 1];
        let mut out = Vec::with_capacity(self.num_pairs());
        for (i, e) in self.entries.iter().enumerate() {
            if let Entry::Pair(l) = *e {
                let l = l as usize;
                match first[l] {
                    None => first[l] = Some(i),
                    Some(s) => out.push((s, i)),
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `partners()[i]` is the other endpoint of the pair at `i`.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.len()];
        for (s, t) in self.pairs() {
            p[s] = Some(t);
            p[t] = Some(s);
        }
        p
    }

    pub fn is_sign_only(&self) -> bool {
        self.entries.iter().all(|e| e.is_sign())
    }

    /// The clan with every sign flipped.
    pub fn negated(&self) -> Clan {
        Clan { entries: self.entries.iter().map(|e| e.flipped()).collect() }
    }

    pub fn reversed(&self) -> Clan {
        Clan::canonical(self.entries.iter().rev().copied().collect())
    }

    /// Sub-clan on the given positions; `None` if a selected pair is cut.
    pub fn restrict(&self, positions: &[usize]) -> Option<Clan> {
        let partners = self.partners();
        let chosen: std::collections::HashSet<usize> = positions.iter().copied().collect();
        for &i in positions {
            if let Some(j) = partners[i] {
                if !chosen.contains(&j) {
                    return None;
                }
            }
        }
        Some(Clan::canonical(positions.iter().map(|&i| self.entries[i]).collect()))
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spaced = self.entries.iter().any(|e| matches!(e, Entry::Pair(l) if *l > 9));
        for (i, e) in self.entries.iter().enumerate() {
            if spaced && i > 0 {
                write!(f, " ")?;
            }
            match e {
                Entry::Plus => write!(f, "+")?,
                Entry::Minus => write!(f, "-")?,
                Entry::Pair(l) => write!(f, "{l}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Clan {
    type Err = Error;

    /// Without whitespace every digit is its own label; with whitespace,
    /// digit runs are multi-digit labels.
    fn from_str(text: &str) -> Result<Clan> {
        let spaced = text.contains(' ');
        let chars: Vec<char> = text.chars().collect();
        let mut entries = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            match ch {
                ' ' => i += 1,
                '+' => {
                    entries.push(Entry::Plus);
                    i += 1;
                }
                '-' => {
                    entries.push(Entry::Minus);
                    i += 1;
                }
                '0'..='9' => {
                    let mut j = i + 1;
                    if spaced {
                        while j < chars.len() && chars[j].is_ascii_digit() {
                            j += 1;
                        }
                    }
                    let token: String = chars[i..j].iter().collect();
                    match token.parse::<u32>() {
                        Ok(l) if l > 0 => entries.push(Entry::Pair(l)),
                        _ => return Err(Error::MalformedToken { token, offset: i }),
                    }
                    i = j;
                }
                _ => return Err(Error::MalformedToken { token: ch.to_string(), offset: i }),
            }
        }
        Clan::new(entries)
    }
}

impl Serialize for Clan {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Clan {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Clan, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All canonical clans of length `n` in enumeration order.
pub fn all_clans(n: usize) -> Vec<Clan> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut open = Vec::new();
    grow(n, &mut cur, &mut open, 1, &mut out);
    out
}

fn grow(n: usize, cur: &mut Vec<Entry>, open: &mut Vec<u32>, next: u32, out: &mut Vec<Clan>) {
    let left = n - cur.len();
    if left == 0 {
        out.push(Clan { entries: cur.clone() });
        return;
    }
    // Every open label still needs a closing slot.
    if left > open.len() {
        for e in [Entry::Plus, Entry::Minus] {
            cur.push(e);
            grow(n, cur, open, next, out);
            cur.pop();
        }
    }
    for l in 1..=next {
        if l < next {
            if let Some(k) = open.iter().position(|&x| x == l) {
                open.remove(k);
                cur.push(Entry::Pair(l));
                grow(n, cur, open, next, out);
                cur.pop();
                open.insert(k, l);
            }
        } else if left > open.len() + 1 {
            open.push(l);
            cur.push(Entry::Pair(l));
            grow(n, cur, open, next + 1, out);
            cur.pop();
            open.pop();
        }
    }
}
