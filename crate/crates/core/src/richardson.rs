//! Permutations attached to 1212-avoiding clans and the Grassmannian check
//! for the associated Richardson varieties.

use serde::{Deserialize, Serialize};

use crate::clan::{Clan, Entry};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::singularity::clan_includes;

fn check_avoids_1212(c: &Clan) -> Result<()> {
    if clan_includes(c, &"1212".parse().expect("1212")).is_some() {
        return Err(Error::Contains1212);
    }
    Ok(())
}

/// Positions (1-based) split into those that come first and the rest.
fn listing(c: &Clan, first_occurrence_leads: bool) -> Perm {
    let partners = c.partners();
    let (mut head, mut tail) = (Vec::new(), Vec::new());
    for (i, e) in c.entries().iter().enumerate() {
        let lead = match e {
            Entry::Plus => true,
            Entry::Minus => false,
            Entry::Pair(_) => {
                let first = partners[i].is_some_and(|t| t > i);
                first == first_occurrence_leads
            }
        };
        if lead {
            head.push(i + 1);
        } else {
            tail.push(i + 1);
        }
    }
    head.extend(tail);
    Perm::new(head).expect("positions form a permutation")
}

/// `+` or first occurrences ascending, then `-` or second occurrences.
/// Defined for every clan; [`v_of_clan`] adds the 1212 restriction.
pub fn v_listing(c: &Clan) -> Perm {
    listing(c, true)
}

/// `+` or second occurrences ascending, then `-` or first occurrences.
pub fn u_listing(c: &Clan) -> Perm {
    listing(c, false)
}

pub fn v_of_clan(c: &Clan) -> Result<Perm> {
    check_avoids_1212(c)?;
    Ok(v_listing(c))
}

pub fn u_of_clan(c: &Clan) -> Result<Perm> {
    check_avoids_1212(c)?;
    Ok(u_listing(c))
}

/// Longest element of `S_p × S_q`.
pub fn w0_k(p: usize, q: usize) -> Perm {
    let images = (1..=p).rev().chain((p + 1..=p + q).rev()).collect();
    Perm::new(images).expect("w0^K")
}

/// Every descent of `w` is at position `p`.
pub fn is_grassmannian(w: &Perm, p: usize) -> bool {
    w.descents().iter().all(|&d| d == p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichardsonPair {
    pub u: Perm,
    pub v: Perm,
    pub p: usize,
}

/// How `w0^K u(c)^{-1}` is read as a product of permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Composition {
    /// `(w0^K ∘ u(c)^{-1})(i) = w0^K(u(c)^{-1}(i))`.
    Functional,
    /// The opposite order, `u(c)^{-1} ∘ w0^K`.
    Reversed,
}

/// `u = w0^K u(c)^{-1}`, `v = v(c)^{-1}` without the Grassmannian check.
pub fn richardson_candidates(c: &Clan, how: Composition) -> Result<RichardsonPair> {
    let (p, q) = c.signature();
    let uc = u_of_clan(c)?.inverse();
    let w0 = w0_k(p, q);
    let u = match how {
        Composition::Functional => w0.compose(&uc),
        Composition::Reversed => uc.compose(&w0),
    };
    Ok(RichardsonPair { u, v: v_of_clan(c)?.inverse(), p })
}

/// The Richardson pair of `c`, required to be Grassmannian at `p`.
pub fn richardson_pair(c: &Clan) -> Result<RichardsonPair> {
    let pair = richardson_candidates(c, Composition::Functional)?;
    for (which, w) in [("u", &pair.u), ("v", &pair.v)] {
        if !is_grassmannian(w, pair.p) {
            return Err(Error::GrassmannianViolation { which, perm: w.to_string(), p: pair.p });
        }
    }
    Ok(pair)
}
