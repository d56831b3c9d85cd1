//! Closure order from minimal parabolic descent.
//!
//! Each simple reflection `s` partitions the orbits into classes (orbits
//! lying in a common `P_s`-orbit). When a class has a unique top element
//! `w` and a lower member `u`, the closure of `w` is the union of the
//! `s`-classes of everything in the closure of `u`. Orbits that are the top
//! of no nontrivial class are closed. This builds the order independently
//! of any counting criterion.

use std::collections::{BTreeSet, HashMap};

use crate::clan::{Clan, Entry};
use crate::error::{Error, Result};
use crate::family::{enumerate_clans, valid_clan, Family};
use crate::poset::{BitSet, OrbitPoset};
use crate::rank::rank_aiii;

const FRESH: Entry = Entry::Pair(u32::MAX);

/// Class of `c` for the type A reflection at 0-based positions `(i, i+1)`.
fn aiii_local(c: &Clan, i: usize) -> Vec<Clan> {
    let e = c.entries();
    let (x, y) = (e[i], e[i + 1]);
    if x.is_sign() && y.is_sign() && x == y {
        return vec![c.clone()];
    }
    let paired_here = !x.is_sign() && x == y;
    if (x.is_sign() && y.is_sign()) || paired_here {
        return [(Entry::Plus, Entry::Minus), (Entry::Minus, Entry::Plus), (FRESH, FRESH)]
            .into_iter()
            .map(|(a, b)| {
                let mut d = e.to_vec();
                d[i] = a;
                d[i + 1] = b;
                Clan::canonical(d)
            })
            .collect();
    }
    let mut d = e.to_vec();
    d.swap(i, i + 1);
    vec![c.clone(), Clan::canonical(d)]
}

/// Closure of `c` under the local classes at the given positions.
fn component(c: &Clan, locs: &[usize]) -> BTreeSet<Clan> {
    let mut seen = BTreeSet::from([c.clone()]);
    let mut stack = vec![c.clone()];
    while let Some(x) = stack.pop() {
        for &i in locs {
            for y in aiii_local(&x, i) {
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
    }
    seen
}

fn swap_middle(c: &Clan) -> Clan {
    let m = c.len() / 2;
    let mut d = c.entries().to_vec();
    d.swap(m - 1, m);
    Clan::canonical(d)
}

/// The class of `c` for each simple reflection of the family, in order.
pub fn simple_classes(c: &Clan, f: &Family) -> Vec<BTreeSet<Clan>> {
    let n = c.len();
    if let Family::AIII { .. } = f {
        return (0..n.saturating_sub(1)).map(|i| component(c, &[i])).collect();
    }
    let m = n / 2;
    let keep = |s: BTreeSet<Clan>| s.into_iter().filter(|d| valid_clan(d, f)).collect::<BTreeSet<_>>();
    let mut out: Vec<BTreeSet<Clan>> = (0..m.saturating_sub(1)).map(|i| keep(component(c, &[i, n - 2 - i]))).collect();
    match f {
        Family::CI { .. } | Family::CII { .. } => {
            if m >= 1 {
                out.push(keep(component(c, &[m - 1])));
            }
        }
        Family::BDI { .. } if n % 2 == 1 => {
            if m >= 1 {
                out.push(keep(middle_triple_class(c, m)));
            }
        }
        _ => {
            if m >= 2 {
                let twisted = component(&swap_middle(c), &[m - 2, m]);
                out.push(twisted.iter().map(swap_middle).filter(|d| valid_clan(d, f)).collect());
            }
        }
    }
    out
}

/// The short root at the middle of an odd orthogonal clan acts on the
/// triple of positions `m-1, m, m+1` (0-based).
fn middle_triple_class(c: &Clan, m: usize) -> BTreeSet<Clan> {
    let e = c.entries();
    let (x, y, z) = (e[m - 1], e[m], e[m + 1]);
    let mut cl = BTreeSet::from([c.clone()]);
    let mut d = e.to_vec();
    if x.is_sign() {
        if x != y {
            d[m - 1] = FRESH;
            d[m + 1] = FRESH;
            d[m] = x;
            cl.insert(Clan::canonical(d));
        }
    } else if x == z {
        d[m - 1] = y;
        d[m + 1] = y;
        d[m] = y.flipped();
        cl.insert(Clan::canonical(d));
    } else {
        d[m - 1] = z;
        d[m + 1] = x;
        cl.insert(Clan::canonical(d));
    }
    cl
}

/// Closure order and ranks of a clan family computed by descent.
pub fn descent_poset(f: &Family) -> Result<OrbitPoset> {
    if !f.is_clan_family() {
        return Err(Error::FamilyMismatch(format!("{f} is parametrized by involutions")));
    }
    let mut clans = enumerate_clans(f);
    clans.sort_by_key(rank_aiii);
    let index: HashMap<Clan, usize> = clans.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let len = clans.len();
    let ell: Vec<usize> = clans.iter().map(rank_aiii).collect();
    let mut below: Vec<BitSet> = Vec::with_capacity(len);
    let mut ranks: Vec<usize> = Vec::with_capacity(len);
    let classes: Vec<Vec<BTreeSet<Clan>>> = clans.iter().map(|c| simple_classes(c, f)).collect();
    for w in 0..len {
        let step = classes[w].iter().enumerate().find_map(|(k, cl)| {
            let others: Vec<&Clan> = cl.iter().filter(|x| *x != &clans[w]).collect();
            let top = !others.is_empty() && others.iter().all(|x| ell[index[*x]] < ell[w]);
            top.then(|| (k, index[others[0]]))
        });
        let mut set = BitSet::new(len);
        match step {
            Some((k, u)) => {
                for v in below[u].iter() {
                    for x in &classes[v][k] {
                        set.insert(index[x]);
                    }
                }
                set.insert(w);
                ranks.push(ranks[u] + 1);
            }
            None => {
                set.insert(w);
                ranks.push(0);
            }
        }
        below.push(set);
    }
    let vertices = clans.into_iter().map(Into::into).collect();
    Ok(OrbitPoset::from_below(*f, vertices, ranks, below))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(descent_poset(&Family::AIII { p: 2, q: 2 }).unwrap().covers().len(), 38);
        assert_eq!(descent_poset(&Family::CI { m: 2 }).unwrap().covers().len(), 16);
    }
}
