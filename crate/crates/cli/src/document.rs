//! JSON and DOT forms of an orbit poset with its Bruhat graph.

use std::collections::BTreeMap;
use std::fmt::Write;

use korbit::family::is_closed_orbit;
use korbit::graph::GraphContext;
use korbit::poset::BitSet;
use korbit::singularity::{classify, Verdict};
use korbit::{Error, Family, OrbitPoset, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Hasse,
    Bruhat,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub param: String,
    pub rank: usize,
    pub dim: usize,
    pub closed: bool,
    pub open: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<Verdict>,
}

/// `src` is the lower end whenever the two ends are comparable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub src: usize,
    pub dst: usize,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub family: Family,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

/// Which edges a document carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edges {
    /// Covers only, marked `both` when they are also graph edges.
    Hasse,
    /// Covers and graph edges.
    All,
}

impl PosetDocument {
    /// Document for the vertices `keep` (indices into `ctx.poset`), with ids
    /// renumbered densely in the order given.
    pub fn build(ctx: &GraphContext, keep: &[usize], edges: Edges) -> Result<PosetDocument> {
        let p = &ctx.poset;
        let f = p.family;
        let id_of: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(id, &i)| (i, id)).collect();
        let closed_dim = f.closed_dim();
        let open = korbit::open_orbit(&f);
        let mut vertices = Vec::with_capacity(keep.len());
        for (id, &i) in keep.iter().enumerate() {
            let x = &p.vertices[i];
            vertices.push(VertexDoc {
                id,
                param: x.to_string(),
                rank: p.ranks[i],
                dim: closed_dim + p.ranks[i],
                closed: is_closed_orbit(x, &f),
                open: *x == open,
                verdict: Some(classify(x, &f)?),
            });
        }
        let mut kinds: BTreeMap<(usize, usize), EdgeKind> = BTreeMap::new();
        for &(a, b) in p.covers() {
            if let (Some(&s), Some(&t)) = (id_of.get(&a), id_of.get(&b)) {
                kinds.insert((s, t), EdgeKind::Hasse);
            }
        }
        for &(a, b) in &ctx.graph.edges {
            let (lo, hi) = if p.leq(b, a) || (!p.leq(a, b) && p.ranks[b] < p.ranks[a]) { (b, a) } else { (a, b) };
            let (Some(&s), Some(&t)) = (id_of.get(&lo), id_of.get(&hi)) else { continue };
            match kinds.get_mut(&(s, t)) {
                Some(k) => *k = EdgeKind::Both,
                None if edges == Edges::All => {
                    kinds.insert((s, t), EdgeKind::Bruhat);
                }
                None => {}
            }
        }
        let edges = kinds.into_iter().map(|((src, dst), kind)| EdgeDoc { src, dst, kind }).collect();
        Ok(PosetDocument { family: f, vertices, edges })
    }

    /// The poset generated by the `hasse` and `both` edges.
    pub fn to_poset(&self) -> Result<OrbitPoset> {
        let n = self.vertices.len();
        let params = self.vertices.iter().map(|v| self.family.parse_param(&v.param)).collect::<Result<Vec<_>>>()?;
        let ranks: Vec<usize> = self.vertices.iter().map(|v| v.rank).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| ranks[i]);
        let mut below: Vec<BitSet> = (0..n)
            .map(|i| {
                let mut b = BitSet::new(n);
                b.insert(i);
                b
            })
            .collect();
        for &j in &order {
            for e in self.edges.iter().filter(|e| e.dst == j && e.kind != EdgeKind::Bruhat) {
                if e.src >= n || ranks[e.src] >= ranks[j] {
                    return Err(Error::InternalInvariant(format!("edge {} -> {} does not raise rank", e.src, e.dst)));
                }
                let lower = below[e.src].clone();
                below[j].union_with(&lower);
            }
        }
        Ok(OrbitPoset::from_below(self.family, params, ranks, below))
    }

    /// Graphviz text, vertices grouped by rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.family);
        out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
        let mut by_rank: BTreeMap<usize, Vec<&VertexDoc>> = BTreeMap::new();
        for v in &self.vertices {
            by_rank.entry(v.rank).or_default().push(v);
        }
        for (rank, vs) in by_rank {
            let _ = writeln!(out, "  subgraph rank_{rank} {{\n    rank=same;");
            for v in vs {
                let _ = writeln!(out, "    v{} [label=\"{}\"];", v.id, v.param);
            }
            out.push_str("  }\n");
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Hasse => "dashed",
                EdgeKind::Bruhat => "dotted",
                EdgeKind::Both => "solid",
            };
            let _ = writeln!(out, "  v{} -> v{} [style={style}];", e.src, e.dst);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {} vertices, {} edges\n", self.family, self.vertices.len(), self.edges.len());
        for v in &self.vertices {
            let _ = writeln!(out, "{} {} rank={} dim={}", v.id, v.param, v.rank, v.dim);
        }
        for e in &self.edges {
            let kind = serde_json::to_string(&e.kind).unwrap_or_default();
            let _ = writeln!(out, "{} -> {} {}", e.src, e.dst, kind.trim_matches('"'));
        }
        out
    }
}
