//! Exact fractional matchings.
//!
//! A maximum matching of the bipartite double cover has size `2α′(G)`, and
//! folding it back onto `G` gives an optimum whose edge weights lie in
//! `{0, 1/2, 1}`. Weights are kept in half-units throughout: an edge of
//! weight 1 carries 2 units, an edge of weight 1/2 carries 1 unit.

use std::fmt;

use crate::bipartite::{konig_cover, max_bipartite_matching, BipartiteGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::half::HalfInt;

/// A half-integral fractional matching of its host graph.
///
/// 1-edges and 1/2-edges are kept as two symmetric bit matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct FractionalMatching {
    host: Graph,
    ones: Vec<u64>,
    halves: Vec<u64>,
}

impl FractionalMatching {
    pub fn empty(host: &Graph) -> Self {
        let n = host.order();
        FractionalMatching { host: host.clone(), ones: vec![0; n], halves: vec![0; n] }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Weight of `uv` in half-units (0, 1 or 2).
    pub fn weight(&self, u: usize, v: usize) -> u8 {
        if self.ones[u] >> v & 1 == 1 {
            2
        } else {
            (self.halves[u] >> v & 1) as u8
        }
    }

    /// Sets the weight of a host edge. Feasibility at the endpoints is not
    /// checked here; see [`FractionalMatching::validate`].
    pub fn set_weight(&mut self, u: usize, v: usize, units: u8) -> Result<()> {
        if !self.host.has_edge(u, v) {
            return Err(Error::InvalidMatching(format!("{u}-{v} is not an edge of the host")));
        }
        if units > 2 {
            return Err(Error::InvalidMatching(format!("weight {units} half-units on {u}-{v}")));
        }
        self.put(u, v, units);
        Ok(())
    }

    pub(crate) fn put(&mut self, u: usize, v: usize, units: u8) {
        let (bu, bv) = (1u64 << u, 1u64 << v);
        self.ones[u] &= !bv;
        self.ones[v] &= !bu;
        self.halves[u] &= !bv;
        self.halves[v] &= !bu;
        match units {
            2 => {
                self.ones[u] |= bv;
                self.ones[v] |= bu;
            }
            1 => {
                self.halves[u] |= bv;
                self.halves[v] |= bu;
            }
            _ => {}
        }
    }

    /// `f(v)` in half-units.
    pub fn load(&self, v: usize) -> u32 {
        2 * self.ones[v].count_ones() + self.halves[v].count_ones()
    }

    pub fn value(&self) -> HalfInt {
        let units: u32 = (0..self.host.order()).map(|v| self.load(v)).sum();
        HalfInt::from_units(units / 2)
    }

    pub fn one_edge_count(&self) -> usize {
        self.ones.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.halves.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Checks symmetry, host containment and `f(v) <= 1` everywhere.
    pub fn validate(&self) -> Result<()> {
        let n = self.host.order();
        for v in 0..n {
            let (o, h) = (self.ones[v], self.halves[v]);
            if o & h != 0 {
                return Err(Error::InvalidMatching(format!("vertex {v}: edge is both 1 and 1/2")));
            }
            if (o | h) & !self.host.row(v) != 0 {
                return Err(Error::InvalidMatching(format!("weight on a non-edge at vertex {v}")));
            }
            for u in VertexSet::from_bits(o) {
                if self.ones[u] >> v & 1 == 0 {
                    return Err(Error::InvalidMatching(format!("asymmetric weight on {v}-{u}")));
                }
            }
            for u in VertexSet::from_bits(h) {
                if self.halves[u] >> v & 1 == 0 {
                    return Err(Error::InvalidMatching(format!("asymmetric weight on {v}-{u}")));
                }
            }
            if self.load(v) > 2 {
                return Err(Error::InvalidMatching(format!("f({v}) = {}", HalfInt::from_units(self.load(v)))));
            }
        }
        Ok(())
    }

    /// `f(v) = 1` at every vertex.
    pub fn is_fractional_perfect(&self) -> bool {
        (0..self.host.order()).all(|v| self.load(v) == 2)
    }

    /// Vertices with `f(v) > 0`.
    pub fn support(&self) -> VertexSet {
        (0..self.host.order()).filter(|&v| self.load(v) > 0).collect()
    }

    pub fn unweighted(&self) -> VertexSet {
        self.host.vertices().difference(self.support())
    }

    /// Vertices incident to a 1-edge.
    pub fn full_vertices(&self) -> VertexSet {
        (0..self.host.order()).filter(|&v| self.ones[v] != 0).collect()
    }

    /// The other end of the 1-edge at `v`, if any.
    pub fn full_neighbour(&self, v: usize) -> Option<usize> {
        VertexSet::from_bits(self.ones[v]).first()
    }

    pub fn half_neighbours(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.halves[v])
    }

    pub fn one_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.ones)
    }

    pub fn half_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.halves)
    }

    /// `(u, v, half-units)` for every weighted edge, `u < v`, ascending.
    pub fn weighted_edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out: Vec<_> = self
            .one_edges()
            .into_iter()
            .map(|(u, v)| (u, v, 2))
            .chain(self.half_edges().into_iter().map(|(u, v)| (u, v, 1)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components of the 1/2-edge subgraph, each as a walk.
    pub fn half_components(&self) -> Vec<HalfComponent> {
        let n = self.host.order();
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        // paths first from their lower endpoint, then the remaining cycles
        for v in 0..n {
            if !seen.contains(v) && self.halves[v].count_ones() == 1 {
                let walk = self.walk(v, &mut seen);
                out.push(HalfComponent::Path(walk));
            }
        }
        for v in 0..n {
            if !seen.contains(v) && self.halves[v] != 0 {
                let walk = self.walk(v, &mut seen);
                out.push(HalfComponent::Cycle(walk));
            }
        }
        out.sort_by_key(|c| c.vertices().iter().copied().min());
        out
    }

    /// Walks a max-degree-2 component starting at `start`, stepping to the
    /// smaller unvisited neighbour first.
    fn walk(&self, start: usize, seen: &mut VertexSet) -> Vec<usize> {
        let mut walk = vec![start];
        seen.insert(start);
        let mut cur = start;
        while let Some(next) = VertexSet::from_bits(self.halves[cur] & !seen.bits()).first() {
            seen.insert(next);
            walk.push(next);
            cur = next;
        }
        walk
    }

    /// Vertex sequences of the 1/2-cycles. Only meaningful once the
    /// 1/2-support is a disjoint union of cycles.
    pub fn half_cycles(&self) -> Vec<Vec<usize>> {
        self.half_components()
            .into_iter()
            .filter_map(|c| match c {
                HalfComponent::Cycle(v) => Some(v),
                HalfComponent::Path(_) => None,
            })
            .collect()
    }
}

fn edges_of(rows: &[u64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, &r) in rows.iter().enumerate() {
        for v in VertexSet::from_bits(r) {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

impl fmt::Debug for FractionalMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FractionalMatching")
            .field("value", &self.value())
            .field("ones", &self.one_edges())
            .field("halves", &self.half_edges())
            .finish()
    }
}

/// A component of the 1/2-edge subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HalfComponent {
    /// Consecutive vertices; the last is adjacent to the first.
    Cycle(Vec<usize>),
    /// Consecutive vertices from one endpoint to the other.
    Path(Vec<usize>),
}

impl HalfComponent {
    pub fn vertices(&self) -> &[usize] {
        match self {
            HalfComponent::Cycle(v) | HalfComponent::Path(v) => v,
        }
    }
}

pub fn double_cover(g: &Graph) -> BipartiteGraph {
    BipartiteGraph::double_cover(g)
}

/// `α′(G)`, as half the maximum matching size of the double cover.
pub fn alpha_prime(g: &Graph) -> HalfInt {
    HalfInt::from_units(max_bipartite_matching(&double_cover(g)).size() as u32)
}

/// An optimal fractional matching with weights in `{0, 1/2, 1}`, obtained as
/// `f(uv) = (x(u_L v_R) + x(v_L u_R)) / 2` from a maximum matching `x` of
/// the double cover. No structural normalization is applied.
pub fn extract_fm(g: &Graph) -> FractionalMatching {
    let m = max_bipartite_matching(&double_cover(g));
    let mut f = FractionalMatching::empty(g);
    for (u, v) in m.pairs() {
        let w = f.weight(u, v) + 1;
        f.put(u, v, w);
    }
    f
}

pub fn is_fractional_perfect(f: &FractionalMatching) -> bool {
    f.is_fractional_perfect()
}

/// A vertex set `S` together with `i(G - S) - |S|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BergeWitness {
    pub set: VertexSet,
    pub deficiency: usize,
}

impl BergeWitness {
    /// `i(G - S) - |S|`, or `None` when that is negative.
    pub fn recount(g: &Graph, set: VertexSet) -> Option<usize> {
        g.isolated_after_removing(set).checked_sub(set.len())
    }

    /// `(n - deficiency) / 2`.
    pub fn alpha(&self, n: usize) -> HalfInt {
        HalfInt::from_units((n - self.deficiency) as u32)
    }
}

/// Largest order for which [`berge_deficiency`] scans all vertex subsets.
pub const EXHAUSTIVE_BERGE_LIMIT: usize = 24;

/// Maximum of `i(G - S) - |S|` with a maximizing `S`: exhaustive for
/// `n <= 24`, otherwise read off a König cover of the double cover.
pub fn berge_deficiency(g: &Graph) -> BergeWitness {
    if g.order() <= EXHAUSTIVE_BERGE_LIMIT {
        exhaustive_berge(g)
    } else {
        berge_witness_from_cover(g)
    }
}

/// Scans every `S ⊆ V` in ascending mask order; the first maximizer wins.
pub fn berge_deficiency_exhaustive(g: &Graph) -> Result<BergeWitness> {
    if g.order() > EXHAUSTIVE_BERGE_LIMIT {
        return Err(Error::Precondition(format!(
            "exhaustive deficiency scan limited to {EXHAUSTIVE_BERGE_LIMIT} vertices, got {}",
            g.order()
        )));
    }
    Ok(exhaustive_berge(g))
}

fn exhaustive_berge(g: &Graph) -> BergeWitness {
    let n = g.order();
    let rows = g.rows();
    let mut best = BergeWitness { set: VertexSet::EMPTY, deficiency: 0 };
    let mut best_score = i64::MIN;
    for mask in 0u64..1u64 << n {
        let keep = !mask;
        let mut isolated = 0i64;
        let mut rest = crate::graph::low_mask(n) & keep;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rows[v] & keep == 0 {
                isolated += 1;
            }
        }
        let score = isolated - mask.count_ones() as i64;
        if score > best_score {
            best_score = score;
            best = BergeWitness { set: VertexSet::from_bits(mask), deficiency: score as usize };
        }
    }
    best
}

/// Reads a deficiency set off a minimum vertex cover `C` of the double
/// cover: `y(v) = ([v_L ∈ C] + [v_R ∈ C]) / 2` is a half-integral
/// fractional vertex cover of `G` of value `α′(G)`, and `S = {y = 1}`
/// leaves every `y = 0` vertex isolated.
pub fn berge_witness_from_cover(g: &Graph) -> BergeWitness {
    let b = double_cover(g);
    let m = max_bipartite_matching(&b);
    let cover = konig_cover(&b, &m);
    let set = cover.left.intersection(cover.right);
    let deficiency = BergeWitness::recount(g, set).unwrap_or(0);
    debug_assert_eq!(deficiency + m.size(), g.order());
    BergeWitness { set, deficiency }
}

/// Rewrites an optimal fractional matching into normal form:
///
/// * even 1/2-cycles and 1/2-paths are re-alternated into 1-edges;
/// * two distinct 1/2-cycles joined by an alternating path (0-edge,
///   1-edge, .., 0-edge) are dissolved into 1-edges.
///
/// Each rewrite keeps the value and strictly increases the number of
/// 1-edges. The result has a 1/2-support that is a vertex-disjoint union of
/// odd cycles, an independent set of unweighted vertices whose neighbours
/// are all full, and no 1/2-cycle next to an unweighted vertex.
pub fn canonicalize_fm(g: &Graph, f: &FractionalMatching) -> Result<FractionalMatching> {
    if f.host() != g {
        return Err(Error::InvalidMatching("matching belongs to a different graph".into()));
    }
    f.validate()?;
    let optimum = alpha_prime(g);
    if f.value() != optimum {
        return Err(Error::NotOptimal { value: f.value(), optimum });
    }
    let mut f = f.clone();
    realternate(&mut f)?;
    while let Some((path, first, last)) = cycle_joining_path(&f)? {
        dissolve(&mut f, &path, &first, &last);
    }
    check_normal_form(&f)?;
    debug_assert_eq!(f.value(), optimum);
    Ok(f)
}

fn alternate_along(f: &mut FractionalMatching, walk: &[usize]) {
    for pair in walk.chunks_exact(2) {
        f.put(pair[0], pair[1], 2);
    }
}

fn clear_walk(f: &mut FractionalMatching, walk: &[usize], closed: bool) {
    for w in walk.windows(2) {
        f.put(w[0], w[1], 0);
    }
    if closed && walk.len() > 2 {
        f.put(walk[walk.len() - 1], walk[0], 0);
    }
}

fn realternate(f: &mut FractionalMatching) -> Result<()> {
    for comp in f.half_components() {
        match comp {
            HalfComponent::Path(walk) => {
                if walk.len() % 2 == 0 {
                    // odd number of edges: alternating would gain 1/2
                    return Err(Error::Internal(format!("1/2-path {walk:?} of odd length in an optimum")));
                }
                clear_walk(f, &walk, false);
                alternate_along(f, &walk[..walk.len() - 1]);
            }
            HalfComponent::Cycle(walk) => {
                if walk.len() % 2 == 0 {
                    clear_walk(f, &walk, true);
                    alternate_along(f, &walk);
                }
            }
        }
    }
    Ok(())
}

/// A joining path and the two cycles it connects.
type Joining = (Vec<usize>, Vec<usize>, Vec<usize>);

/// Finds an alternating path `c, y1, y1', .., yk, yk', d` from a vertex `c`
/// of one 1/2-cycle to a vertex `d` of another, where `c y1`, `y1' y2`, ..,
/// `yk' d` are 0-edges and `yi yi'` are 1-edges. Returns the path and the
/// two cycles.
fn cycle_joining_path(f: &FractionalMatching) -> Result<Option<Joining>> {
    let g = f.host();
    let n = g.order();
    let cycles = f.half_cycles();
    if cycles.len() < 2 {
        return Ok(None);
    }
    let mut cycle_of = vec![usize::MAX; n];
    for (i, c) in cycles.iter().enumerate() {
        for &v in c {
            cycle_of[v] = i;
        }
    }
    let unweighted = f.unweighted();
    for (ci, cycle) in cycles.iter().enumerate() {
        let mut pred = vec![usize::MAX; n];
        let mut seen: VertexSet = cycle.iter().copied().collect();
        let mut queue: std::collections::VecDeque<usize> = cycle.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for y in g.neighbours(x).difference(seen) {
                if f.weight(x, y) != 0 {
                    continue;
                }
                if cycle_of[y] != usize::MAX && cycle_of[y] != ci {
                    let mut path = vec![y, x];
                    let mut cur = x;
                    while pred[cur] != usize::MAX {
                        cur = pred[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Ok(Some((path, cycle.clone(), cycles[cycle_of[y]].clone())));
                }
                if unweighted.contains(y) {
                    return Err(Error::Internal(format!(
                        "alternating path from 1/2-cycle at {} to unweighted vertex {y} in an optimum",
                        cycle[0]
                    )));
                }
                let Some(partner) = f.full_neighbour(y) else { continue };
                if seen.contains(partner) {
                    continue;
                }
                seen.insert(y);
                seen.insert(partner);
                pred[y] = x;
                pred[partner] = y;
                queue.push_back(partner);
            }
        }
    }
    Ok(None)
}

fn dissolve(f: &mut FractionalMatching, path: &[usize], first: &[usize], last: &[usize]) {
    clear_walk(f, first, true);
    clear_walk(f, last, true);
    for (i, w) in path.windows(2).enumerate() {
        f.put(w[0], w[1], if i % 2 == 0 { 2 } else { 0 });
    }
    for (cycle, anchor) in [(first, path[0]), (last, path[path.len() - 1])] {
        let at = cycle.iter().position(|&v| v == anchor).expect("anchor on its cycle");
        let rest: Vec<usize> = (1..cycle.len()).map(|k| cycle[(at + k) % cycle.len()]).collect();
        alternate_along(f, &rest);
    }
}

fn check_normal_form(f: &FractionalMatching) -> Result<()> {
    for comp in f.half_components() {
        match comp {
            HalfComponent::Cycle(c) if c.len() % 2 == 1 => {}
            other => return Err(Error::Internal(format!("1/2-support component {other:?} is not an odd cycle"))),
        }
    }
    let full = f.full_vertices();
    for v in f.unweighted() {
        if !f.host().neighbours(v).is_subset(full) {
            return Err(Error::Internal(format!("unweighted vertex {v} has a non-full neighbour")));
        }
    }
    Ok(())
}
