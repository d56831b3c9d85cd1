//! Bruhat graphs, the W-action on orbit parameters, Brion's degree
//! criterion and Poincaré polynomials of lower intervals.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::clan::Clan;
use crate::error::{Error, Result};
use crate::family::{is_closed_orbit, validate_param, Family, Param};
use crate::moves::{is_graph_move, successors};
use crate::perm::{Involution, Perm};
use crate::poset::{hasse, BitSet, OrbitPoset};

/// How AI edges from commuting transpositions are drawn.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum AiEdgeRule {
    /// `t w` is adjacent to `w` for every transposition `t = (a b)`
    /// commuting with `w`.
    Literal,
    /// As `Literal`, but only when an even number of fixed points of `w`
    /// lies strictly between `a` and `b`. Without this restriction the
    /// bottom vertex of the full flag variety has too large a degree for
    /// every odd `n`.
    #[default]
    FixedPointParity,
}

/// Neighbours of `w` in the involution Bruhat graph, tagged by the
/// transposition `(a b)` (1-based, `a < b`) producing them.
///
/// AI: `t w t` when `t` and `w` do not commute, `t w` when they do.
/// AII: `t w t` only.
pub fn involution_neighbors(w: &Involution, f: &Family) -> Vec<((usize, usize), Involution)> {
    involution_neighbors_with(w, f, AiEdgeRule::default())
}

pub fn involution_neighbors_with(w: &Involution, f: &Family, rule: AiEdgeRule) -> Vec<((usize, usize), Involution)> {
    let n = w.len();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let conj = w.conjugate_by_transposition(a, b);
            let commutes = &conj == w.perm();
            let v = match f {
                Family::AI { .. } if commutes => {
                    let between = (a + 1..b).filter(|&k| w.at(k) == k).count();
                    if rule == AiEdgeRule::FixedPointParity && between % 2 == 1 {
                        continue;
                    }
                    w.left_mul_transposition(a, b)
                }
                Family::AII { .. } if commutes => continue,
                _ => conj,
            };
            if &v != w.perm() {
                out.push(((a, b), Involution::new(v).expect("involution")));
            }
        }
    }
    out
}

/// Undirected graph on the orbits of a family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BruhatGraph {
    pub family: Family,
    pub vertices: Vec<Param>,
    pub ranks: Vec<usize>,
    /// Unordered edges `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl BruhatGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// The Bruhat graph, on the vertex order of `hasse(f)`.
pub fn edges(f: &Family) -> Result<BruhatGraph> {
    let p = hasse(f)?;
    graph_on(&p, AiEdgeRule::default())
}

fn graph_on(p: &OrbitPoset, rule: AiEdgeRule) -> Result<BruhatGraph> {
    let f = p.family;
    let mut set = BTreeSet::new();
    for (i, x) in p.vertices.iter().enumerate() {
        let targets: Vec<Param> = match x {
            Param::Clan(_) => successors(x, &f)?.into_iter().filter(|(m, _)| is_graph_move(m.id, &f)).map(|(_, y)| y).collect(),
            Param::Inv(w) => involution_neighbors_with(w, &f, rule).into_iter().map(|(_, v)| Param::Inv(v)).collect(),
        };
        for y in targets {
            let j = p.index_of(&y).ok_or_else(|| Error::InternalInvariant(format!("{y} missing from {f}")))?;
            set.insert((i.min(j), i.max(j)));
        }
    }
    Ok(BruhatGraph { family: f, vertices: p.vertices.clone(), ranks: p.ranks.clone(), edges: set.into_iter().collect() })
}

/// Simple generators of the Weyl group acting on parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// Exchanges coordinates `i` and `i + 1` (1-based); in mirrored
    /// families also their mirror images.
    Transposition(usize),
    /// The extra generator of types B, C, D: a sign change (B, C), or the
    /// type D generator acting on the two middle coordinate pairs.
    Special,
}

/// All simple generators for the family.
pub fn generators(f: &Family) -> Vec<Generator> {
    let n = f.param_len();
    if !f.is_mirrored() {
        return (1..n).map(Generator::Transposition).collect();
    }
    let m = n / 2;
    let mut g: Vec<Generator> = (1..m).map(Generator::Transposition).collect();
    if m >= if is_type_d(f) { 2 } else { 1 } {
        g.push(Generator::Special);
    }
    g
}

fn is_type_d(f: &Family) -> bool {
    match f {
        Family::BDI { p, q } => (p + q) % 2 == 0,
        Family::DIII { .. } => true,
        _ => false,
    }
}

pub fn w_action(g: Generator, v: &Param, f: &Family) -> Result<Param> {
    let n = f.param_len();
    let bad = || Error::InvalidGenerator(format!("{g:?} for {f}"));
    match (v, g) {
        (Param::Inv(w), Generator::Transposition(i)) if i >= 1 && i < n => {
            Ok(Param::Inv(Involution::new(w.conjugate_by_transposition(i, i + 1)).expect("conjugate")))
        }
        (Param::Inv(_), _) => Err(bad()),
        (Param::Clan(c), _) => {
            let mut e = c.entries().to_vec();
            let m = n / 2;
            match g {
                Generator::Transposition(i) if !f.is_mirrored() && i >= 1 && i < n => e.swap(i - 1, i),
                Generator::Transposition(i) if f.is_mirrored() && i >= 1 && i < m => {
                    e.swap(i - 1, i);
                    e.swap(n - i, n - 1 - i);
                }
                Generator::Special if f.is_mirrored() && is_type_d(f) && m >= 2 => {
                    e.swap(m - 2, m);
                    e.swap(m - 1, m + 1);
                }
                Generator::Special if f.is_mirrored() && !is_type_d(f) && m >= 1 => {
                    if e[m - 1].is_sign() && e[n - m].is_sign() {
                        e.swap(m - 1, n - m);
                    }
                }
                _ => return Err(bad()),
            }
            Ok(Param::Clan(Clan::canonical(e)))
        }
    }
}

/// Per-family data shared by degree computations.
#[derive(Clone, Debug)]
pub struct GraphContext {
    pub poset: OrbitPoset,
    pub graph: BruhatGraph,
    adjacency: Vec<Vec<usize>>,
    /// Vertices W-conjugate to a minimal vertex.
    pub conjugate_to_minimal: BitSet,
}

impl GraphContext {
    pub fn new(f: &Family) -> Result<GraphContext> {
        GraphContext::with_rule(f, AiEdgeRule::default())
    }

    pub fn with_rule(f: &Family, rule: AiEdgeRule) -> Result<GraphContext> {
        let poset = hasse(f)?;
        let graph = graph_on(&poset, rule)?;
        let adjacency = graph.adjacency();
        let len = poset.len();
        let mut seen = BitSet::new(len);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for i in poset.minima() {
            seen.insert(i);
            queue.push_back(i);
        }
        let gens = generators(f);
        while let Some(i) = queue.pop_front() {
            for &g in &gens {
                let y = w_action(g, &poset.vertices[i], f)?;
                if let Some(j) = poset.index_of(&y) {
                    if !seen.contains(j) {
                        seen.insert(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        Ok(GraphContext { poset, graph, adjacency, conjugate_to_minimal: seen })
    }

    /// Context holding only the poset; graph queries see no edges and
    /// every vertex is treated as its own conjugacy class.
    pub fn without_graph(f: &Family) -> Result<GraphContext> {
        let poset = hasse(f)?;
        let len = poset.len();
        let graph = BruhatGraph { family: *f, vertices: poset.vertices.clone(), ranks: poset.ranks.clone(), edges: Vec::new() };
        let mut seen = BitSet::new(len);
        for i in poset.minima() {
            seen.insert(i);
        }
        Ok(GraphContext { poset, graph, adjacency: vec![Vec::new(); len], conjugate_to_minimal: seen })
    }

    fn index(&self, x: &Param) -> Result<usize> {
        self.poset.index_of(x).ok_or_else(|| Error::FamilyMismatch(format!("{x} in {}", self.poset.family)))
    }

    /// Vertex indices below `d` conjugate to a minimal vertex.
    pub fn minimal_conjugates_idx(&self, d: usize) -> Vec<usize> {
        self.poset.below(d).iter().filter(|&i| self.conjugate_to_minimal.contains(i)).collect()
    }

    /// Degree of `c` in the graph induced on `[c, d]`.
    pub fn degree_idx(&self, c: usize, d: usize) -> Result<usize> {
        if !self.poset.leq(c, d) {
            return Err(Error::NotComparable);
        }
        Ok(self.adjacency[c].iter().filter(|&&k| self.poset.leq(c, k) && self.poset.leq(k, d)).count())
    }

    pub fn brion_degree(&self, c: &Param, d: &Param) -> Result<usize> {
        self.degree_idx(self.index(c)?, self.index(d)?)
    }

    /// Minimal conjugates `c` below `d` whose degree exceeds the rank
    /// difference, with that degree.
    pub fn brion_excess(&self, d: usize) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for c in self.minimal_conjugates_idx(d) {
            let deg = self.degree_idx(c, d)?;
            if deg != self.poset.ranks[d] - self.poset.ranks[c] {
                out.push((c, deg));
            }
        }
        Ok(out)
    }

    pub fn brion_check(&self, d: &Param) -> Result<bool> {
        Ok(self.brion_excess(self.index(d)?)?.is_empty())
    }

    pub fn poincare_idx(&self, d: usize) -> Vec<usize> {
        let mut coeffs = vec![0; self.poset.ranks[d] + 1];
        for x in self.poset.below(d).iter() {
            coeffs[self.poset.ranks[x]] += 1;
        }
        coeffs
    }
}

pub fn minimal_conjugates(d: &Param, f: &Family) -> Result<Vec<Param>> {
    let ctx = GraphContext::new(f)?;
    let j = ctx.index(d)?;
    Ok(ctx.minimal_conjugates_idx(j).into_iter().map(|i| ctx.poset.vertices[i].clone()).collect())
}

pub fn brion_degree(c: &Param, d: &Param, f: &Family) -> Result<usize> {
    GraphContext::new(f)?.brion_degree(c, d)
}

pub fn brion_check(d: &Param, f: &Family) -> Result<bool> {
    if !validate_param(d, f)? {
        return Err(Error::FamilyMismatch(format!("{d} in {f}")));
    }
    if is_closed_orbit(d, f) {
        return Ok(true);
    }
    GraphContext::new(f)?.brion_check(d)
}

/// Coefficients of `Σ_{x <= d} t^{rank(x)}`.
pub fn poincare(d: &Param, f: &Family) -> Result<Vec<usize>> {
    let ctx = GraphContext::new(f)?;
    Ok(ctx.poincare_idx(ctx.index(d)?))
}

pub fn is_palindromic(coeffs: &[usize]) -> bool {
    coeffs.iter().eq(coeffs.iter().rev())
}

/// Degree of the bottom vertex `w_0` in the graph on `[w_0, w]`, for the
/// involution families.
pub fn bottom_degree(ctx: &GraphContext, d: usize) -> Result<usize> {
    let n = ctx.poset.family.param_len();
    let w0 = Param::Inv(Involution::new(Perm::longest(n)).expect("w0"));
    ctx.degree_idx(ctx.index(&w0)?, d)
}

/// Involutions indexed for fast lookup.
pub fn involution_index(p: &OrbitPoset) -> HashMap<Involution, usize> {
    p.vertices.iter().enumerate().filter_map(|(i, x)| x.as_inv().map(|w| (w.clone(), i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clan(s: &str) -> Param {
        Param::Clan(s.parse().unwrap())
    }

    #[test]
    fn aiii_two_two_edges() {
        let f = Family::AIII { p: 2, q: 2 };
        let g = edges(&f).unwrap();
        let has = |a: &str, b: &str| {
            let (i, j) = (g.vertices.iter().position(|v| v == &clan(a)).unwrap(), g.vertices.iter().position(|v| v == &clan(b)).unwrap());
            g.edges.contains(&(i.min(j), i.max(j)))
        };
        assert!(has("+-+-", "1-+1"));
        assert!(!has("1122", "1+-1"));
    }

    #[test]
    fn aiii_coordinate_swap() {
        let f = Family::AIII { p: 2, q: 2 };
        assert_eq!(w_action(Generator::Transposition(1), &clan("+-11"), &f).unwrap(), clan("-+11"));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic(&[1, 2, 1]));
        assert!(!is_palindromic(&[1, 2, 2]));
        assert!(is_palindromic(&[1]));
    }
}
