//! The good partition `V = (V11 ∪ V12) ∪ (V21 ∪ V22)`.
//!
//! `V1` is the support of an optimal fractional matching and `V2` the
//! unweighted vertices. A maximum matching of the bipartite graph `[V1, V2]`
//! of size `s` picks `V11 ⊆ V1` and `V21 ⊆ V2`; `X` collects the full
//! neighbours of `V11`.

use serde::Serialize;

use crate::bipartite::{konig_cover, max_bipartite_matching, BipartiteGraph};
use crate::error::{Error, Result};
use crate::fm::{alpha_prime, canonicalize_fm, extract_fm, FractionalMatching};
use crate::graph::{Graph, VertexSet};
use crate::half::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodPartition {
    pub v11: VertexSet,
    pub v12: VertexSet,
    pub v21: VertexSet,
    pub v22: VertexSet,
    /// Full neighbours of the `V11` vertices.
    pub x: VertexSet,
    pub s: usize,
    pub t: HalfInt,
    pub fm: FractionalMatching,
    /// `(v11 vertex, v21 vertex)`, ascending in the first coordinate.
    pub pairing: Vec<(usize, usize)>,
}

impl GoodPartition {
    pub fn v1(&self) -> VertexSet {
        self.v11.union(self.v12)
    }

    pub fn v2(&self) -> VertexSet {
        self.v21.union(self.v22)
    }

    /// The `V21` partner of a `V11` vertex.
    pub fn paired_with(&self, v11_vertex: usize) -> Option<usize> {
        self.pairing.iter().find(|&&(a, _)| a == v11_vertex).map(|&(_, b)| b)
    }

    pub fn dump(&self) -> PartitionDump {
        let weights =
            self.fm.weighted_edges().into_iter().map(|(u, v, w)| (u, v, HalfInt::from_units(w as u32))).collect();
        PartitionDump {
            n: self.fm.host().order(),
            t: self.t,
            s: self.s,
            v11: self.v11.to_vec(),
            v12: self.v12.to_vec(),
            v21: self.v21.to_vec(),
            v22: self.v22.to_vec(),
            x: self.x.to_vec(),
            pairing: self.pairing.clone(),
            weights,
        }
    }
}

/// Serializable view of a partition, used by the `partition` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct PartitionDump {
    pub n: usize,
    pub t: HalfInt,
    pub s: usize,
    pub v11: Vec<usize>,
    pub v12: Vec<usize>,
    pub v21: Vec<usize>,
    pub v22: Vec<usize>,
    pub x: Vec<usize>,
    pub pairing: Vec<(usize, usize)>,
    /// `(u, v, f(uv))` for every weighted edge.
    pub weights: Vec<(usize, usize, HalfInt)>,
}

/// The five exchange properties of a good partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// No 1-edge has a common neighbour in `V2`.
    pub full_edges_no_common_v2_neighbour: bool,
    /// Edges inside `V11` carry weight 0.
    pub v11_edges_unweighted: bool,
    /// Every `V11` vertex is full.
    pub v11_all_full: bool,
    /// `X` is independent when `s >= 2`.
    pub x_independent: bool,
    /// No edge joins `V2` and `X`.
    pub no_v2_x_edge: bool,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.full_edges_no_common_v2_neighbour {
            out.push("1-edge with a common V2 neighbour");
        }
        if !self.v11_edges_unweighted {
            out.push("weighted edge inside V11");
        }
        if !self.v11_all_full {
            out.push("V11 vertex that is not full");
        }
        if !self.x_independent {
            out.push("edge inside X");
        }
        if !self.no_v2_x_edge {
            out.push("edge between V2 and X");
        }
        out
    }
}

/// Computes the canonical optimum and its partition.
pub fn good_partition(g: &Graph) -> Result<GoodPartition> {
    let raw = build_partition(g, extract_fm(g))?;
    repair(g, &raw)
}

/// Builds the partition induced by `fm` without normalizing it first. The
/// result satisfies the exchange properties only when `fm` is canonical.
pub fn build_partition(g: &Graph, fm: FractionalMatching) -> Result<GoodPartition> {
    if fm.host() != g {
        return Err(Error::InvalidMatching("matching belongs to a different graph".into()));
    }
    fm.validate()?;
    let v1 = fm.support();
    let v2 = fm.unweighted();
    let left = v1.to_vec();
    let adj = left.iter().map(|&v| g.row(v) & v2.bits()).collect();
    let b = BipartiteGraph::new(g.order(), adj);
    let m = max_bipartite_matching(&b);
    let pairing: Vec<(usize, usize)> = m.pairs().map(|(l, r)| (left[l], r)).collect();
    let v11: VertexSet = pairing.iter().map(|&(a, _)| a).collect();
    let v21: VertexSet = pairing.iter().map(|&(_, b)| b).collect();
    let x: VertexSet = v11.iter().filter_map(|u| fm.full_neighbour(u)).collect();
    Ok(GoodPartition {
        v11,
        v12: v1.difference(v11),
        v21,
        v22: v2.difference(v21),
        x,
        s: m.size(),
        t: fm.value(),
        fm,
        pairing,
    })
}

pub fn verify_partition(g: &Graph, p: &GoodPartition) -> PropertyReport {
    let f = &p.fm;
    let v2 = p.v2().bits();
    let full_edges_no_common_v2_neighbour = f.one_edges().iter().all(|&(u, v)| g.row(u) & g.row(v) & v2 == 0);
    let v11_edges_unweighted = p.v11.iter().all(|u| p.v11.iter().all(|v| !g.has_edge(u, v) || f.weight(u, v) == 0));
    let v11_all_full = p.v11.iter().all(|u| f.full_neighbour(u).is_some());
    let x_independent = p.s < 2 || g.is_independent(p.x);
    let no_v2_x_edge = p.x.iter().all(|v| g.row(v) & v2 == 0);
    PropertyReport {
        full_edges_no_common_v2_neighbour,
        v11_edges_unweighted,
        v11_all_full,
        x_independent,
        no_v2_x_edge,
    }
}

/// Checks the bookkeeping invariants of a partition: the parts cover `V`
/// disjointly, `V1` is the support and is fractionally perfect, the pairing
/// is a maximum `[V1, V2]` matching of size `s`, `|V1| = 2t = 2α′(G)` and
/// `X ⊆ V12` with `|X| = s`.
pub fn check_structure(g: &Graph, p: &GoodPartition) -> Result<()> {
    let fail = |msg: String| Err(Error::Precondition(msg));
    let parts = [p.v11, p.v12, p.v21, p.v22];
    let mut seen = VertexSet::EMPTY;
    for part in parts {
        if !part.is_disjoint(seen) {
            return fail("parts overlap".into());
        }
        seen = seen.union(part);
    }
    if seen != g.vertices() {
        return fail("parts do not cover the vertex set".into());
    }
    if p.fm.host() != g {
        return fail("matching belongs to a different graph".into());
    }
    if p.v1() != p.fm.support() || p.v2() != p.fm.unweighted() {
        return fail("V1 is not the support of the matching".into());
    }
    if !p.v1().iter().all(|v| p.fm.load(v) == 2) {
        return fail("matching is not fractionally perfect on V1".into());
    }
    if p.v1().len() as u32 != p.t.units() || p.fm.value() != p.t {
        return fail(format!("|V1| = {} but t = {}", p.v1().len(), p.t));
    }
    let optimum = alpha_prime(g);
    if p.t != optimum {
        return fail(format!("t = {} but the optimum is {optimum}", p.t));
    }
    if !g.is_independent(p.v2()) {
        return fail("V2 is not independent".into());
    }
    if p.v11.len() != p.s || p.v21.len() != p.s || p.pairing.len() != p.s {
        return fail("V11, V21 and the pairing must all have size s".into());
    }
    let (mut left, mut right) = (VertexSet::EMPTY, VertexSet::EMPTY);
    for &(a, b) in &p.pairing {
        if !g.has_edge(a, b) || !p.v11.contains(a) || !p.v21.contains(b) {
            return fail(format!("pairing edge {a}-{b} is not a V11-V21 edge"));
        }
        left.insert(a);
        right.insert(b);
    }
    if left != p.v11 || right != p.v21 {
        return fail("pairing edges are not independent".into());
    }
    // certify maximality of s with a König cover of [V1, V2]
    let v1 = p.v1().to_vec();
    let adj = v1.iter().map(|&v| g.row(v) & p.v2().bits()).collect();
    let b = BipartiteGraph::new(g.order(), adj);
    let m = max_bipartite_matching(&b);
    let cover = konig_cover(&b, &m);
    if !cover.covers(&b) || cover.size() != p.s {
        return fail(format!("s = {} is not the maximum [V1, V2] matching size {}", p.s, m.size()));
    }
    if !p.x.is_subset(p.v12) || p.x.len() != p.s {
        return fail("X must be an s-subset of V12".into());
    }
    Ok(())
}

/// Normalizes the underlying matching and rebuilds the partition.
///
/// Each exchange in the proofs of the partition properties strictly raises
/// the matching value, so on a certified optimum they never fire once the
/// matching is in normal form: a suboptimal input is rejected with
/// [`Error::NotOptimal`], and a property that still fails afterwards is
/// reported as [`Error::Internal`].
pub fn repair(g: &Graph, p: &GoodPartition) -> Result<GoodPartition> {
    let canonical = canonicalize_fm(g, &p.fm)?;
    let rebuilt = build_partition(g, canonical)?;
    check_structure(g, &rebuilt).map_err(|e| Error::Internal(e.to_string()))?;
    let report = verify_partition(g, &rebuilt);
    if !report.all_hold() {
        return Err(Error::Internal(format!("after repair: {}", report.failures().join(", "))));
    }
    Ok(rebuilt)
}
