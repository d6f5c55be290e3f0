//! Simple undirected graphs on at most 64 vertices, stored as bit rows.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `{0, .., 63}` as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph. Vertices are `0..n`; row `v` holds the
/// neighbourhood of `v` as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood masks, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidFamily(format!("asymmetric adjacency {v}-{u}")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; adding an existing edge is an error.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    /// Adds `uv` (idempotent).
    ///
    /// # Panics
    /// On a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range for order {}", self.n);
        assert_ne!(u, v, "self-loop at {u}");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| VertexSet::from_bits(self.rows[u] & !low_mask(u + 1)).iter().map(move |v| (u, v)))
    }

    pub fn is_empty_graph(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & mask & !(1 << v)).collect();
        Graph { n: self.n, rows }
    }

    /// The degree-0 vertices.
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.rows[v] == 0).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.contains(&0)
    }

    /// Vertices with at least one neighbour.
    pub fn non_isolated(&self) -> VertexSet {
        self.vertices().difference(self.isolated_vertices())
    }

    /// Number of isolated vertices of `G - removed`.
    pub fn isolated_after_removing(&self, removed: VertexSet) -> usize {
        let keep = !removed.bits();
        VertexSet::full(self.n).difference(removed).iter().filter(|&v| self.rows[v] & keep == 0).count()
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.rows[v] & set.bits() == 0)
    }

    /// Labeled containment `E(self) ⊆ E(other)` on the same vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        Ok(self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0))
    }

    /// Vertices of `self` followed by those of `other`, relabeled by offset.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph { n, rows })
    }

    pub fn add_isolates(&self, k: usize) -> Result<Graph> {
        self.disjoint_union(&Graph::new(k)?)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Parameterized graph families with fixed labelings.
///
/// Labelings: `star(n)` has centre 0; `cycle(n)` is `0-1-..-(n-1)-0`;
/// `k2pql(p, q, l)` has the base edge `0-1`, the `p` pendants of 0 next,
/// then the `q` pendants of 1, then the `l` common neighbours; `hgraph(n)`
/// is a `K4` on `0..4` with pendants `4..n` at vertex 0;
/// `complete_bipartite(a, b)` has parts `0..a` and `a..a+b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Star(usize),
    K2pql { p: usize, q: usize, l: usize },
    HGraph(usize),
    CompleteBipartite(usize, usize),
    DisjointUnion(Box<FamilySpec>, Box<FamilySpec>),
    AddIsolates(Box<FamilySpec>, usize),
}

/// Builds the graph named by `family`.
pub fn generate(family: &FamilySpec) -> Result<Graph> {
    let too_big = |n: usize| if n > MAX_ORDER { Err(Error::OrderTooLarge(n)) } else { Ok(()) };
    match *family {
        FamilySpec::Complete(n) => too_big(n).map(|_| complete(n)),
        FamilySpec::Empty(n) => Graph::new(n),
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidFamily(format!("cycle needs at least 3 vertices, got {n}")));
            }
            too_big(n).map(|_| cycle(n))
        }
        FamilySpec::Star(n) => {
            if n == 0 {
                return Err(Error::InvalidFamily("star needs at least 1 vertex".into()));
            }
            too_big(n).map(|_| star(n))
        }
        FamilySpec::K2pql { p, q, l } => too_big(p + q + l + 2).map(|_| k2pql(p, q, l)),
        FamilySpec::HGraph(n) => {
            if n < 4 {
                return Err(Error::InvalidFamily(format!("H graph needs at least 4 vertices, got {n}")));
            }
            too_big(n).map(|_| hgraph(n))
        }
        FamilySpec::CompleteBipartite(a, b) => too_big(a + b).map(|_| complete_bipartite(a, b)),
        FamilySpec::DisjointUnion(ref a, ref b) => generate(a)?.disjoint_union(&generate(b)?),
        FamilySpec::AddIsolates(ref a, k) => generate(a)?.add_isolates(k),
    }
}

fn checked(n: usize) -> Graph {
    Graph::new(n).unwrap_or_else(|e| panic!("{e}"))
}

pub fn empty(n: usize) -> Graph {
    checked(n)
}

pub fn complete(n: usize) -> Graph {
    checked(n).complement()
}

/// `C_n`.
///
/// # Panics
/// If `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = checked(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    g
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Graph {
    let mut g = checked(n);
    for v in 1..n {
        g.add_edge(0, v);
    }
    g
}

/// `K2(p, q; l)`; `p < q` is normalized by swapping.
pub fn k2pql(p: usize, q: usize, l: usize) -> Graph {
    let (p, q) = if p < q { (q, p) } else { (p, q) };
    let mut g = checked(p + q + l + 2);
    g.add_edge(0, 1);
    let mut next = 2;
    for _ in 0..p {
        g.add_edge(0, next);
        next += 1;
    }
    for _ in 0..q {
        g.add_edge(1, next);
        next += 1;
    }
    for _ in 0..l {
        g.add_edge(0, next);
        g.add_edge(1, next);
        next += 1;
    }
    g
}

/// `K4` with `n - 4` pendant edges at vertex 0.
pub fn hgraph(n: usize) -> Graph {
    assert!(n >= 4, "H graph needs at least 4 vertices");
    let mut g = checked(n);
    for u in 0..4 {
        for v in u + 1..4 {
            g.add_edge(u, v);
        }
    }
    for v in 4..n {
        g.add_edge(0, v);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = checked(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn complement_examples() {
        assert_eq!(empty(3).complement(), complete(3));
        assert_eq!(complete(2).complement(), empty(2));
        let c5c = cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!(c5c.degrees().iter().all(|&d| d == 2));
        // 0-2-4-1-3-0
        for (u, v) in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)] {
            assert!(c5c.has_edge(u, v));
        }
    }

    #[test]
    fn isolated_vertex_examples() {
        let g = star(4).add_isolates(2).unwrap();
        assert_eq!(g.isolated_vertices().to_vec(), vec![4, 5]);
        assert!(complete(4).isolated_vertices().is_empty());
        let g = complete(3).add_isolates(4).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.isolated_vertices().len(), 4);
    }

    #[test]
    fn family_examples() {
        let g = k2pql(0, 0, 4);
        assert_eq!(g.order(), 6);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.neighbours(0).intersection(g.neighbours(1)).len(), 4);

        assert_eq!(sorted_degrees(&hgraph(9)), vec![8, 3, 3, 3, 1, 1, 1, 1, 1]);
        assert_eq!(star(5).degrees(), vec![4, 1, 1, 1, 1]);
        assert_eq!(k2pql(1, 3, 2), k2pql(3, 1, 2));
    }

    #[test]
    fn k2pql_counts() {
        for p in 0..5 {
            for q in 0..5 {
                for l in 0..5 {
                    let g = k2pql(p, q, l);
                    assert_eq!(g.order(), p + q + l + 2);
                    assert_eq!(g.edge_count(), p + q + 2 * l + 1);
                }
            }
        }
    }

    #[test]
    fn generate_rejects_bad_parameters() {
        assert!(matches!(generate(&FamilySpec::Cycle(2)), Err(Error::InvalidFamily(_))));
        assert!(matches!(generate(&FamilySpec::Complete(65)), Err(Error::OrderTooLarge(65))));
        let spec = FamilySpec::AddIsolates(Box::new(FamilySpec::Star(5)), 3);
        assert_eq!(generate(&spec).unwrap().order(), 8);
        let g = generate(&FamilySpec::K2pql { p: 1, q: 4, l: 0 }).unwrap();
        assert_eq!(g.degree(0), 5);
    }

    #[test]
    fn labeled_containment() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.is_spanning_subgraph_of(&complete(4)).unwrap());
        let k3 = complete(3).add_isolates(1).unwrap();
        assert!(!k3.is_spanning_subgraph_of(&cycle(4)).unwrap());
        assert!(cycle(5).is_spanning_subgraph_of(&complete(5)).unwrap());
        assert_eq!(cycle(5).is_spanning_subgraph_of(&complete(4)), Err(Error::OrderMismatch(5, 4)));
    }

    #[test]
    fn edge_validation() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.try_add_edge(0, 0), Err(Error::SelfLoop(0)));
        assert!(matches!(g.try_add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
        g.try_add_edge(0, 1).unwrap();
        assert_eq!(g.try_add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert!(Graph::new(65).is_err());
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
    }

    #[test]
    fn isolated_after_removal() {
        let g = star(4);
        assert_eq!(g.isolated_after_removing(VertexSet::singleton(0)), 3);
        assert_eq!(g.isolated_after_removing(VertexSet::EMPTY), 0);
    }
}
