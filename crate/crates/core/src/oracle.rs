//! Brute-force fractional matching number, independent of the matching code.
//!
//! Every edge gets a weight in `{0, 1/2, 1}`; the search runs edge by edge
//! with per-vertex remaining capacity and prunes with half the capacity
//! still reachable by later edges.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::half::HalfInt;

pub const ORACLE_EDGE_LIMIT: usize = 14;

pub fn oracle_alpha_exhaustive(g: &Graph) -> Result<HalfInt> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > ORACLE_EDGE_LIMIT {
        return Err(Error::EdgeBudget { edges: edges.len(), limit: ORACLE_EDGE_LIMIT });
    }
    // later[i]: vertices touched by edges i..
    let mut later = vec![0u64; edges.len() + 1];
    for i in (0..edges.len()).rev() {
        let (u, v) = edges[i];
        later[i] = later[i + 1] | 1 << u | 1 << v;
    }
    let mut search = Search { edges: &edges, later: &later, cap: vec![2; g.order()], best: 0 };
    search.run(0, 0);
    Ok(HalfInt::from_units(search.best))
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    later: &'a [u64],
    cap: Vec<u32>,
    best: u32,
}

impl Search<'_> {
    fn run(&mut self, i: usize, value: u32) {
        if value > self.best {
            self.best = value;
        }
        if i == self.edges.len() {
            return;
        }
        let mut reachable = 0;
        let mut rest = self.later[i];
        while rest != 0 {
            reachable += self.cap[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        if value + reachable / 2 <= self.best {
            return;
        }
        let (u, v) = self.edges[i];
        for w in (0..=self.cap[u].min(self.cap[v])).rev() {
            self.cap[u] -= w;
            self.cap[v] -= w;
            self.run(i + 1, value + w);
            self.cap[u] += w;
            self.cap[v] += w;
        }
    }
}
