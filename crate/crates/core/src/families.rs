//! Structural recognizers for the graph families with small `α′` and for
//! the extremal graphs of the complement-sum bounds.
//!
//! Every test is a covering or degree predicate; nothing here relies on
//! isomorphism testing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::Bound;
use crate::error::{Error, Result};
use crate::fm::alpha_prime;
use crate::graph::{Graph, VertexSet};
use crate::half::HalfInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum FamilyLabel {
    /// `K_{1,k}` plus isolated vertices (`α′ = 1`).
    #[serde(rename = "StarUnion")]
    StarUnion { k: usize },
    /// `C3` plus isolated vertices (`α′ = 3/2`).
    #[serde(rename = "TriangleUnion")]
    TriangleUnion,
    /// `2K2 ∪ (n-4)K1 ⊆ G ⊆ K4 ∪ (n-4)K1`.
    #[serde(rename = "Sandwich_2K2_K4")]
    Sandwich2K2K4,
    /// `2K2 ∪ (n-4)K1 ⊆ G ⊆ K2(0,0;n-2)`.
    #[serde(rename = "Sandwich_2K2_K2pq")]
    Sandwich2K2K2pq,
    /// `C5 ∪ (n-5)K1 ⊆ G ⊆ K5 ∪ (n-5)K1`.
    #[serde(rename = "C5Union_in_K5")]
    C5UnionInK5,
    /// `C3 ∪ K2 ∪ (n-5)K1 ⊆ G ⊆ K5 ∪ (n-5)K1`.
    #[serde(rename = "C3K2Union_in_K5")]
    C3K2UnionInK5,
    /// `C3 ∪ K2 ∪ (n-5)K1 ⊆ G ⊆ H` (a `K4` with pendants at one vertex).
    #[serde(rename = "C3K2Union_in_H")]
    C3K2UnionInH,
    /// `K_{1,n-1}`.
    #[serde(rename = "K1n")]
    SpanningStar { leaves: usize },
    #[serde(rename = "EmptyOrComplete")]
    EmptyOrComplete,
    /// `K2(p, q; l)`, `p >= q`.
    #[serde(rename = "K2pql")]
    K2pql { p: usize, q: usize, l: usize },
    /// `K_{1,m} ∪ K_{1,n-2-m} ⊆ G ⊆ K_{2,n-2}`.
    #[serde(rename = "BistarInK2n2")]
    BistarInK2n2 { m: usize },
    #[serde(rename = "None")]
    Unclassified,
}

impl FamilyLabel {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyLabel::StarUnion { .. } => "StarUnion",
            FamilyLabel::TriangleUnion => "TriangleUnion",
            FamilyLabel::Sandwich2K2K4 => "Sandwich_2K2_K4",
            FamilyLabel::Sandwich2K2K2pq => "Sandwich_2K2_K2pq",
            FamilyLabel::C5UnionInK5 => "C5Union_in_K5",
            FamilyLabel::C3K2UnionInK5 => "C3K2Union_in_K5",
            FamilyLabel::C3K2UnionInH => "C3K2Union_in_H",
            FamilyLabel::SpanningStar { .. } => "K1n",
            FamilyLabel::EmptyOrComplete => "EmptyOrComplete",
            FamilyLabel::K2pql { .. } => "K2pql",
            FamilyLabel::BistarInK2n2 { .. } => "BistarInK2n2",
            FamilyLabel::Unclassified => "None",
        }
    }

    pub fn is_none(&self) -> bool {
        *self == FamilyLabel::Unclassified
    }

    /// `α′` shared by every member of a small-`α′` family.
    pub fn alpha(&self) -> Option<HalfInt> {
        let units = match self {
            FamilyLabel::StarUnion { .. } => 2,
            FamilyLabel::TriangleUnion => 3,
            FamilyLabel::Sandwich2K2K4 | FamilyLabel::Sandwich2K2K2pq => 4,
            FamilyLabel::C5UnionInK5 | FamilyLabel::C3K2UnionInK5 | FamilyLabel::C3K2UnionInH => 5,
            _ => return None,
        };
        Some(HalfInt::from_units(units))
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::StarUnion { k } => write!(f, "StarUnion(k={k})"),
            FamilyLabel::SpanningStar { leaves } => write!(f, "K1n(n-1={leaves})"),
            FamilyLabel::K2pql { p, q, l } => write!(f, "K2pql(p={p},q={q},l={l})"),
            FamilyLabel::BistarInK2n2 { m } => write!(f, "BistarInK2n2(m={m})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// `G - removed` has no edges.
fn covers_all_edges(g: &Graph, removed: VertexSet) -> bool {
    let keep = !removed.bits();
    g.vertices().difference(removed).iter().all(|v| g.row(v) & keep == 0)
}

fn covering_vertex(g: &Graph) -> Option<usize> {
    g.non_isolated().iter().find(|&v| covers_all_edges(g, VertexSet::singleton(v)))
}

fn covering_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.order();
    (0..n)
        .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| covers_all_edges(g, VertexSet::from_iter([u, v])))
}

fn has_two_independent_edges(g: &Graph) -> bool {
    g.edges().any(|(u, v)| !covers_all_edges(g, VertexSet::from_iter([u, v])))
}

fn triangles(g: &Graph) -> impl Iterator<Item = [usize; 3]> + '_ {
    g.edges().flat_map(move |(u, v)| {
        VertexSet::from_bits(g.row(u) & g.row(v)).iter().filter(move |&w| w > v).map(move |w| [u, v, w])
    })
}

/// A triangle and an edge disjoint from it.
fn contains_triangle_plus_edge(g: &Graph) -> bool {
    triangles(g).any(|tri| !covers_all_edges(g, tri.into_iter().collect()))
}

/// The five vertices of `set` carry a Hamiltonian cycle.
fn five_cycle_on(g: &Graph, set: VertexSet) -> bool {
    let v = set.to_vec();
    debug_assert_eq!(v.len(), 5);
    // fix v[0] first; try every ordering of the other four
    let mut rest = [v[1], v[2], v[3], v[4]];
    let mut found = false;
    permute(&mut rest, 0, &mut |p| {
        let cyc = [v[0], p[0], p[1], p[2], p[3]];
        if (0..5).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % 5])) {
            found = true;
        }
    });
    found
}

fn permute(a: &mut [usize; 4], k: usize, visit: &mut impl FnMut(&[usize; 4])) {
    if k == a.len() {
        visit(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, visit);
        a.swap(k, i);
    }
}

/// Some vertex whose removal leaves at most three non-isolated vertices.
fn has_hub(g: &Graph) -> bool {
    let active = g.non_isolated();
    active.iter().any(|a| {
        let others = active.difference(VertexSet::singleton(a));
        others.iter().filter(|&v| g.row(v) & !(1u64 << a) != 0).count() <= 3
    })
}

/// Whether `g` lies in the family named by `label`, ignoring precedence
/// between overlapping families. For `BistarInK2n2 { m }` this asks for
/// `K_{1,m} ∪ K_{1,n-2-m} ⊆ G ⊆ K_{2,n-2}` with that exact `m`.
pub fn is_member(g: &Graph, label: FamilyLabel) -> bool {
    let n = g.order();
    match label {
        FamilyLabel::StarUnion { k } => k >= 1 && g.edge_count() == k && g.vertices().iter().any(|v| g.degree(v) == k),
        FamilyLabel::TriangleUnion => g.edge_count() == 3 && triangles(g).next().is_some(),
        FamilyLabel::Sandwich2K2K4 => has_two_independent_edges(g) && g.non_isolated().len() == 4,
        FamilyLabel::Sandwich2K2K2pq => has_two_independent_edges(g) && covering_pairs(g).next().is_some(),
        FamilyLabel::C5UnionInK5 => {
            let active = g.non_isolated();
            active.len() == 5 && five_cycle_on(g, active)
        }
        FamilyLabel::C3K2UnionInK5 => g.non_isolated().len() == 5 && contains_triangle_plus_edge(g),
        FamilyLabel::C3K2UnionInH => has_hub(g) && contains_triangle_plus_edge(g),
        FamilyLabel::BistarInK2n2 { m } => {
            n >= 4
                && (1..=n - 3).contains(&m)
                && !g.has_isolated_vertex()
                && covering_pairs(g).filter(|&(a, b)| !g.has_edge(a, b)).any(|(a, b)| {
                    [(a, b), (b, a)].into_iter().any(|(x, y)| {
                        let (nx, ny) = (g.neighbours(x), g.neighbours(y));
                        let forced = nx.difference(ny).len();
                        let either = nx.intersection(ny).len();
                        forced <= m && m <= forced + either
                    })
                })
        }
        FamilyLabel::EmptyOrComplete => g.is_empty_graph() || g.is_complete(),
        FamilyLabel::SpanningStar { leaves } => leaves + 1 == n && spanning_star(g).is_some(),
        FamilyLabel::K2pql { p, q, l } => k2pql_params(g) == Some(FamilyLabel::K2pql { p, q, l }),
        FamilyLabel::Unclassified => false,
    }
}

/// Family of a graph with `α′ ∈ {1, 3/2, 2, 5/2}`, or `Unclassified`.
///
/// * `StarUnion`: one vertex meets every edge.
/// * `TriangleUnion`: the edges form a single triangle.
/// * `Sandwich_2K2_K4`: four non-isolated vertices and two independent edges.
/// * `Sandwich_2K2_K2pq`: two vertices (adjacent or not) meet every edge,
///   and two independent edges exist.
/// * `C5Union_in_K5` / `C3K2Union_in_K5`: five non-isolated vertices
///   carrying a 5-cycle, or else a triangle plus a disjoint edge.
/// * `C3K2Union_in_H`: removing some vertex leaves at most three
///   non-isolated vertices, and a triangle plus a disjoint edge exists.
pub fn classify_small_alpha(g: &Graph) -> FamilyLabel {
    if g.edge_count() == 0 {
        return FamilyLabel::Unclassified;
    }
    if let Some(c) = covering_vertex(g) {
        return FamilyLabel::StarUnion { k: g.degree(c) };
    }
    if g.edge_count() == 3 && triangles(g).next().is_some() {
        return FamilyLabel::TriangleUnion;
    }
    let active = g.non_isolated();
    let two_independent = has_two_independent_edges(g);
    if two_independent && active.len() == 4 {
        return FamilyLabel::Sandwich2K2K4;
    }
    if two_independent && covering_pairs(g).next().is_some() {
        return FamilyLabel::Sandwich2K2K2pq;
    }
    if active.len() == 5 {
        if five_cycle_on(g, active) {
            return FamilyLabel::C5UnionInK5;
        }
        if contains_triangle_plus_edge(g) {
            return FamilyLabel::C3K2UnionInK5;
        }
    }
    if has_hub(g) && contains_triangle_plus_edge(g) {
        return FamilyLabel::C3K2UnionInH;
    }
    FamilyLabel::Unclassified
}

/// Which small-`α′` statement about `α′(G) + α′(Ḡ)` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SmallAlphaClause {
    /// `α′ = 1`, `n >= 4`: sum `>= (n+1)/2`.
    AlphaOne,
    /// `α′ = 3/2`, `n >= 6`: sum `= (n+3)/2`.
    AlphaThreeHalves,
    /// `α′ = 2`, not a triangular book, `n >= 8`: sum `>= (n+3)/2`.
    AlphaTwo,
    /// `G ≅ K2(0,0;l)`, `l >= 2`: sum `= (n+2)/2`.
    AlphaTwoBook,
    /// `α′ = 5/2`, `n >= 7`: sum `>= n/2 + 2`.
    AlphaFiveHalves,
}

impl SmallAlphaClause {
    /// Bound in half-units for order `n`.
    pub fn bound(self, n: usize) -> HalfInt {
        let n = n as u32;
        HalfInt::from_units(match self {
            SmallAlphaClause::AlphaOne => n + 1,
            SmallAlphaClause::AlphaThreeHalves | SmallAlphaClause::AlphaTwo => n + 3,
            SmallAlphaClause::AlphaTwoBook => n + 2,
            SmallAlphaClause::AlphaFiveHalves => n + 4,
        })
    }

    pub fn is_exact(self) -> bool {
        matches!(self, SmallAlphaClause::AlphaThreeHalves | SmallAlphaClause::AlphaTwoBook)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallAlphaReport {
    pub n: usize,
    pub alpha_g: HalfInt,
    pub alpha_gc: HalfInt,
    pub sum: HalfInt,
    pub clause: SmallAlphaClause,
    pub bound: HalfInt,
    /// The clause's (in)equality holds.
    pub holds: bool,
    pub equality: bool,
    /// Exactly one vertex has degree `n - 1`.
    pub single_dominating_vertex: bool,
    /// For the `>=` clauses: whether equality coincides with a single
    /// dominating vertex. `None` for the exact clauses.
    pub equality_rule_agrees: Option<bool>,
    /// For `α′ ∈ {2, 5/2}`, isolate-free complement and `n >= 10`: whether
    /// `α′(Ḡ) = n/2`.
    pub complement_perfect: Option<bool>,
}

/// `K2(0,0;l)` with `l >= 2`: an edge `uv` and every other vertex adjacent
/// to both ends, nothing else.
pub fn is_triangular_book(g: &Graph) -> bool {
    let n = g.order();
    n >= 4
        && covering_pairs(g).any(|(u, v)| {
            g.has_edge(u, v) && (0..n).filter(|&w| w != u && w != v).all(|w| g.has_edge(u, w) && g.has_edge(v, w))
        })
}

/// Exact `α′(G) + α′(Ḡ)` checked against the applicable small-`α′` clause.
pub fn small_alpha_ng(g: &Graph) -> Result<SmallAlphaReport> {
    let n = g.order();
    let alpha_g = alpha_prime(g);
    let gc = g.complement();
    let clause = match alpha_g.units() {
        2 if n >= 4 => SmallAlphaClause::AlphaOne,
        3 if n >= 6 => SmallAlphaClause::AlphaThreeHalves,
        4 if is_triangular_book(g) => SmallAlphaClause::AlphaTwoBook,
        4 if n >= 8 => SmallAlphaClause::AlphaTwo,
        5 if n >= 7 => SmallAlphaClause::AlphaFiveHalves,
        2..=5 => {
            return Err(Error::Precondition(format!("order {n} is below the threshold for α′ = {alpha_g}")));
        }
        _ => return Err(Error::Precondition(format!("α′ = {alpha_g} is not in {{1, 3/2, 2, 5/2}}"))),
    };
    let alpha_gc = alpha_prime(&gc);
    let sum = alpha_g + alpha_gc;
    let bound = clause.bound(n);
    let equality = sum == bound;
    let holds = if clause.is_exact() { equality } else { sum >= bound };
    let single_dominating_vertex = g.degrees().iter().filter(|&&d| d + 1 == n).count() == 1;
    let equality_rule_agrees = (!clause.is_exact()).then_some(equality == single_dominating_vertex);
    let complement_perfect =
        (alpha_g.units() >= 4 && !gc.has_isolated_vertex() && n >= 10).then_some(alpha_gc.units() as usize == n);
    Ok(SmallAlphaReport {
        n,
        alpha_g,
        alpha_gc,
        sum,
        clause,
        bound,
        holds,
        equality,
        single_dominating_vertex,
        equality_rule_agrees,
        complement_perfect,
    })
}

fn spanning_star(g: &Graph) -> Option<FamilyLabel> {
    let n = g.order();
    let d = g.degrees();
    (n >= 2 && d.iter().filter(|&&x| x + 1 == n).count() >= 1 && g.edge_count() == n - 1)
        .then_some(FamilyLabel::SpanningStar { leaves: n - 1 })
}

/// An edge `uv` meeting every edge, with no isolated vertex.
fn k2pql_params(g: &Graph) -> Option<FamilyLabel> {
    if g.has_isolated_vertex() {
        return None;
    }
    covering_pairs(g).find(|&(u, v)| g.has_edge(u, v)).map(|(u, v)| {
        let (nu, nv) = (g.neighbours(u), g.neighbours(v));
        let common = nu.intersection(nv).len();
        let pu = nu.len() - 1 - common;
        let pv = nv.len() - 1 - common;
        FamilyLabel::K2pql { p: pu.max(pv), q: pu.min(pv), l: common }
    })
}

/// Non-adjacent `a`, `b` meeting every edge, every other vertex adjacent
/// to one of them, and two distinct vertices `x ~ a`, `y ~ b` (so the two
/// stars `K_{1,m}`, `K_{1,n-2-m}` fit inside). `m` counts the private
/// neighbours of `a`, clamped to `1..=n-3`.
fn bistar_params(g: &Graph) -> Option<FamilyLabel> {
    let n = g.order();
    if n < 4 || g.has_isolated_vertex() {
        return None;
    }
    covering_pairs(g)
        .find(|&(a, b)| {
            let (na, nb) = (g.neighbours(a), g.neighbours(b));
            !g.has_edge(a, b) && !na.is_empty() && !nb.is_empty() && na.union(nb).len() >= 2
        })
        .map(|(a, b)| {
            let private = g.neighbours(a).difference(g.neighbours(b)).len();
            FamilyLabel::BistarInK2n2 { m: private.clamp(1, n - 3) }
        })
}

/// Extremal family for equality in `bound`, tested on `G` and then on `Ḡ`.
pub fn classify_equality_family(g: &Graph, bound: Bound) -> FamilyLabel {
    let gc = g.complement();
    for h in [g, &gc] {
        let label = match bound {
            Bound::General => (h.is_empty_graph() && h.order() > 0).then_some(FamilyLabel::EmptyOrComplete),
            Bound::NonEmpty => spanning_star(h),
            Bound::IsolateFree => k2pql_params(h).or_else(|| bistar_params(h)),
        };
        if let Some(label) = label {
            return label;
        }
    }
    FamilyLabel::Unclassified
}
