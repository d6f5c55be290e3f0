//! Maximum bipartite matching with a König vertex-cover certificate.
//!
//! Left vertices are `0..left`; each left vertex carries a bitmask of its
//! right neighbours in `0..64`. Augmenting paths are searched from left
//! vertices in ascending order and explore right neighbours in ascending
//! order, so the result is a deterministic function of the input.

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    right: usize,
    adj: Vec<u64>,
}

impl BipartiteGraph {
    /// # Panics
    /// If `right > 64`, `adj.len() > 64`, or a mask names a right vertex `>= right`.
    pub fn new(right: usize, adj: Vec<u64>) -> Self {
        assert!(right <= 64 && adj.len() <= 64);
        let mask = crate::graph::low_mask(right);
        assert!(adj.iter().all(|&a| a & !mask == 0), "right neighbour out of range");
        BipartiteGraph { right, adj }
    }

    /// Two copies `L`, `R` of `V(g)` with `u_L ~ v_R` iff `uv ∈ E(g)`.
    pub fn double_cover(g: &Graph) -> Self {
        BipartiteGraph { right: g.order(), adj: g.rows().to_vec() }
    }

    pub fn left_size(&self) -> usize {
        self.adj.len()
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn neighbours(&self, left: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[left])
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        self.adj[left] >> right & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate_left: Vec<Option<usize>>,
    mate_right: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mate_of_left(&self, left: usize) -> Option<usize> {
        self.mate_left[left]
    }

    pub fn mate_of_right(&self, right: usize) -> Option<usize> {
        self.mate_right[right]
    }

    /// Matched pairs `(left, right)` in ascending left order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate_left.iter().enumerate().filter_map(|(l, m)| m.map(|r| (l, r)))
    }

    pub fn matched_left(&self) -> VertexSet {
        self.pairs().map(|(l, _)| l).collect()
    }

    pub fn matched_right(&self) -> VertexSet {
        self.pairs().map(|(_, r)| r).collect()
    }
}

/// A vertex cover `(left part, right part)` of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexCover {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl VertexCover {
    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn covers(&self, b: &BipartiteGraph) -> bool {
        (0..b.left_size()).all(|l| self.left.contains(l) || b.adj[l] & !self.right.bits() == 0)
    }
}

pub fn max_bipartite_matching(b: &BipartiteGraph) -> Matching {
    let mut mate_left = vec![None; b.left_size()];
    let mut mate_right = vec![None; b.right];
    let mut size = 0;
    for l in 0..b.left_size() {
        let mut seen = 0u64;
        if augment(b, l, &mut seen, &mut mate_left, &mut mate_right) {
            size += 1;
        }
    }
    Matching { mate_left, mate_right, size }
}

fn augment(
    b: &BipartiteGraph,
    l: usize,
    seen: &mut u64,
    mate_left: &mut [Option<usize>],
    mate_right: &mut [Option<usize>],
) -> bool {
    for r in VertexSet::from_bits(b.adj[l] & !*seen) {
        if *seen >> r & 1 == 1 {
            continue;
        }
        *seen |= 1 << r;
        let free = match mate_right[r] {
            None => true,
            Some(l2) => augment(b, l2, seen, mate_left, mate_right),
        };
        if free {
            mate_left[l] = Some(r);
            mate_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// König cover from a maximum matching: with `Z` the vertices reachable
/// from unmatched left vertices by alternating paths, the cover is
/// `(L \ Z) ∪ (R ∩ Z)`. Its size equals the matching size.
pub fn konig_cover(b: &BipartiteGraph, m: &Matching) -> VertexCover {
    let mut z_left: VertexSet = (0..b.left_size()).filter(|&l| m.mate_left[l].is_none()).collect();
    let mut z_right = VertexSet::EMPTY;
    let mut frontier: Vec<usize> = z_left.to_vec();
    while let Some(l) = frontier.pop() {
        for r in VertexSet::from_bits(b.adj[l] & !z_right.bits()) {
            z_right.insert(r);
            if let Some(l2) = m.mate_right[r] {
                if !z_left.contains(l2) {
                    z_left.insert(l2);
                    frontier.push(l2);
                }
            }
        }
    }
    let all_left = VertexSet::full(b.left_size());
    VertexCover { left: all_left.difference(z_left), right: z_right }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, star};

    /// Largest matching by trying every edge subset.
    fn brute_matching(b: &BipartiteGraph) -> usize {
        let edges: Vec<(usize, usize)> =
            (0..b.left_size()).flat_map(|l| b.neighbours(l).iter().map(move |r| (l, r))).collect();
        assert!(edges.len() <= 20);
        let mut best = 0;
        for mask in 0u32..1 << edges.len() {
            let (mut lu, mut ru) = (0u64, 0u64);
            let mut ok = true;
            for (i, &(l, r)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if lu >> l & 1 == 1 || ru >> r & 1 == 1 {
                        ok = false;
                        break;
                    }
                    lu |= 1 << l;
                    ru |= 1 << r;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn double_cover_shapes() {
        let b = BipartiteGraph::double_cover(&complete(2));
        assert!(b.has_edge(0, 1) && b.has_edge(1, 0));
        assert_eq!(b.edge_count(), 2);
        assert_eq!(BipartiteGraph::double_cover(&empty(3)).edge_count(), 0);
        // C3 doubles to a 6-cycle: every vertex has degree 2 and it is connected.
        let b = BipartiteGraph::double_cover(&complete(3));
        assert_eq!(b.edge_count(), 6);
        assert!((0..3).all(|l| b.neighbours(l).len() == 2));
        let walk = [(0, 1), (2, 1), (2, 0), (1, 0), (1, 2), (0, 2)];
        assert!(walk.iter().all(|&(l, r)| b.has_edge(l, r)));
    }

    #[test]
    fn matching_sizes() {
        assert_eq!(max_bipartite_matching(&BipartiteGraph::double_cover(&complete(2))).size(), 2);
        let c5 = BipartiteGraph::double_cover(&cycle(5));
        assert_eq!(brute_matching(&c5), 5);
        assert_eq!(max_bipartite_matching(&c5).size(), 5);
        let s4 = BipartiteGraph::double_cover(&star(4));
        assert_eq!(brute_matching(&s4), 2);
        assert_eq!(max_bipartite_matching(&s4).size(), 2);
    }

    #[test]
    fn cover_certifies_matching() {
        for g in [cycle(7), star(6), complete(5), empty(4), crate::graph::k2pql(2, 1, 3)] {
            let b = BipartiteGraph::double_cover(&g);
            let m = max_bipartite_matching(&b);
            let c = konig_cover(&b, &m);
            assert!(c.covers(&b));
            assert_eq!(c.size(), m.size());
            assert_eq!(m.size(), brute_matching(&b));
        }
    }

    #[test]
    fn deterministic_choice() {
        // left 0 and 1 both see right {0, 1}; left 1 takes right 0 by
        // pushing left 0 along to right 1.
        let b = BipartiteGraph::new(2, vec![0b11, 0b11]);
        let m = max_bipartite_matching(&b);
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
    }
}
