//! Explicit fractional matchings of the complement built from a good
//! partition.
//!
//! `V2` is independent in `G`, so `Ḡ[V2]` is a clique, and `V12 × V22`
//! carries no edge of `G` (it would extend the `[V1, V2]` matching), so it
//! is complete in `Ḡ`. Each construction picks a few special complement
//! edges, matches the rest of `V12` into `V2` by a maximum bipartite
//! matching, and spends the leftover `V2` vertices on a 1/2-cycle.

use serde::{Deserialize, Serialize};

use crate::bipartite::{max_bipartite_matching, BipartiteGraph};
use crate::error::{Error, Result};
use crate::fm::{extract_fm, FractionalMatching};
use crate::graph::{Graph, VertexSet};
use crate::half::HalfInt;
use crate::partition::{check_structure, verify_partition, GoodPartition};

/// Which lower bound a construction targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstructionKind {
    /// `t <= n/4`: value `(n-s)/2`.
    Basic,
    /// `t <= n/4`, `s >= 1`, `G` and `Ḡ` isolate-free: value `(n-s+1)/2`.
    IsolateFree,
    /// `t <= n/4`, `s = t >= 3`, `G` and `Ḡ` isolate-free: value `(n-s+2)/2`.
    Saturated,
    /// `t = ⌊n/4⌋ + 1/2` (`n ≡ 0, 1 mod 4`) or `⌊n/4⌋ + 3/2` (`n ≡ 2, 3`):
    /// value at least `(n-t)/2`.
    NearQuarterHalf,
    /// `t = ⌊n/4⌋ + 1`: value at least `(n-t)/2`.
    NearQuarterWhole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    V11,
    V12,
    V21,
    V22,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// Split on the leftover count `n - 2t - (2t - s)`.
    Leftover,
    /// The complement neighbour `v` of the chosen `V11` vertex lies in `V12`.
    NeighbourInV12,
    /// `v` lies in `V11` or `V2`; an edge inside `X` is used as well.
    NeighbourOutsideV12,
    /// Some `V11` vertex has a complement neighbour in `V11`.
    PairInsideV11,
    /// `v ∈ V2`, and the second `V11` vertex `w` has a complement neighbour in `V12`.
    SecondNeighbourInV12,
    /// `v ∈ V2`, and `w` has a complement neighbour in `V2`.
    SecondNeighbourInV2,
    /// `G[V11]` is a clique joined to all of `V2`; `v ∈ V12`.
    DenseV11,
    /// `s <= 1`: match all of `V22` into `V12`.
    SmallPairing,
    /// A 1/2-cycle of `G` lies in `V12 \ X`.
    HalfCycle,
    /// `s = t`.
    SaturatedPairing,
    /// Exactly one 1-edge inside `V12`.
    OneFullEdge,
    /// Two or more 1-edges inside `V12`.
    SeveralFullEdges,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseDescriptor {
    pub kind: ConstructionKind,
    pub branch: Branch,
    pub n: usize,
    pub t: HalfInt,
    pub s: usize,
    /// Leftover `V2` vertices once the special edges and the matching are
    /// placed (the proofs' `n - 2t - (2t - s)` and its shifted variants).
    pub residual: Option<usize>,
    pub neighbour_part: Option<Part>,
    /// Number of 1-edges of `G` with both ends in `V12`.
    pub full_edges_in_v12: Option<usize>,
    pub claimed: HalfInt,
    /// The expected structure was absent and `α′(Ḡ)` was computed exactly.
    pub exact_fallback: bool,
}

impl CaseDescriptor {
    /// The leftover count bucketed as in the proofs: 0, 1, 2 or 3 (for `>= 3`).
    pub fn residual_case(&self) -> Option<usize> {
        self.residual.map(|r| r.min(3))
    }
}

#[derive(Debug, Clone)]
pub struct ComplementConstruction {
    /// A fractional matching of `Ḡ`.
    pub fm: FractionalMatching,
    pub case: CaseDescriptor,
}

impl ComplementConstruction {
    pub fn value(&self) -> HalfInt {
        self.fm.value()
    }

    pub fn meets_claim(&self) -> bool {
        self.value() >= self.case.claimed
    }

    /// `value >= (n - t)/2`.
    pub fn meets_floor(&self) -> bool {
        2 * self.value().units() + self.case.t.units() >= 2 * self.case.n as u32
    }

    /// `value >= n/4 + 3`.
    pub fn meets_quarter_bound(&self) -> bool {
        2 * self.value().units() >= self.case.n as u32 + 12
    }
}

fn missing(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

/// Incrementally assembles a fractional matching of `Ḡ` on unused vertices.
#[derive(Clone)]
struct Builder<'a> {
    gc: &'a Graph,
    f: FractionalMatching,
    used: VertexSet,
}

impl<'a> Builder<'a> {
    fn new(gc: &'a Graph) -> Self {
        Builder { gc, f: FractionalMatching::empty(gc), used: VertexSet::EMPTY }
    }

    fn claim(&mut self, vs: &[usize]) -> Result<()> {
        for &v in vs {
            if self.used.contains(v) {
                return Err(missing(format!("vertex {v} used twice")));
            }
            self.used.insert(v);
        }
        Ok(())
    }

    fn edge(&self, u: usize, v: usize) -> Result<()> {
        if self.gc.has_edge(u, v) {
            Ok(())
        } else {
            Err(missing(format!("{u}-{v} is not an edge of the complement")))
        }
    }

    fn one(&mut self, u: usize, v: usize) -> Result<()> {
        self.edge(u, v)?;
        self.claim(&[u, v])?;
        self.f.put(u, v, 2);
        Ok(())
    }

    fn cycle(&mut self, vs: &[usize]) -> Result<()> {
        debug_assert!(vs.len() >= 3);
        for i in 0..vs.len() {
            self.edge(vs[i], vs[(i + 1) % vs.len()])?;
        }
        self.claim(vs)?;
        for i in 0..vs.len() {
            self.f.put(vs[i], vs[(i + 1) % vs.len()], 1);
        }
        Ok(())
    }

    fn free(&self, set: VertexSet) -> VertexSet {
        set.difference(self.used)
    }

    /// 1-edges saturating the unused part of `left` into the unused part of
    /// `right`.
    fn match_into(&mut self, left: VertexSet, right: VertexSet) -> Result<()> {
        let lv = self.free(left).to_vec();
        let r = self.free(right).bits();
        let adj = lv.iter().map(|&u| self.gc.row(u) & r).collect();
        let b = BipartiteGraph::new(self.gc.order(), adj);
        let m = max_bipartite_matching(&b);
        if m.size() < lv.len() {
            return Err(missing(format!(
                "only {} of {} vertices of {:?} can be matched into {:?} in the complement",
                m.size(),
                lv.len(),
                self.free(left),
                VertexSet::from_bits(r)
            )));
        }
        let pairs: Vec<(usize, usize)> = m.pairs().map(|(l, r)| (lv[l], r)).collect();
        for (u, v) in pairs {
            self.one(u, v)?;
        }
        Ok(())
    }

    /// Spends the unused vertices of a complement clique: a 1/2-cycle on
    /// three or more, a 1-edge on two. Returns how many were left.
    fn fill(&mut self, pool: VertexSet) -> Result<usize> {
        let rest = self.free(pool).to_vec();
        match rest.len() {
            0 | 1 => {}
            2 => self.one(rest[0], rest[1])?,
            _ => self.cycle(&rest)?,
        }
        Ok(rest.len())
    }

    /// As [`Builder::fill`], with a reserved complement edge `v1 v2` whose
    /// ends see every pool vertex: the edge alone, a triangle with a single
    /// leftover, or the edge plus the leftover's own edge or cycle.
    fn fill_with_pair(&mut self, pool: VertexSet, (v1, v2): (usize, usize)) -> Result<usize> {
        let rest = self.free(pool).to_vec();
        if rest.len() == 1 {
            self.cycle(&[v1, v2, rest[0]])?;
        } else {
            self.one(v1, v2)?;
            self.fill(pool)?;
        }
        Ok(rest.len())
    }

    fn finish(self) -> Result<FractionalMatching> {
        self.f.validate().map_err(|e| missing(e.to_string()))?;
        Ok(self.f)
    }
}

/// Tries `apply` on a copy of `base` for each candidate; the first success wins.
fn first_success<'a, C>(
    base: &Builder<'a>,
    candidates: impl IntoIterator<Item = C>,
    mut apply: impl FnMut(&mut Builder<'a>, C) -> Result<()>,
    what: &str,
) -> Result<Builder<'a>> {
    for c in candidates {
        let mut b = base.clone();
        if apply(&mut b, c).is_ok() {
            return Ok(b);
        }
    }
    Err(missing(format!("no {what} in the complement")))
}

fn pairs_in(set: VertexSet) -> Vec<(usize, usize)> {
    let v = set.to_vec();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            out.push((v[i], v[j]));
        }
    }
    out
}

fn part_of(p: &GoodPartition, v: usize) -> Part {
    if p.v11.contains(v) {
        Part::V11
    } else if p.v12.contains(v) {
        Part::V12
    } else if p.v21.contains(v) {
        Part::V21
    } else {
        Part::V22
    }
}

fn check_partition(g: &Graph, p: &GoodPartition) -> Result<()> {
    check_structure(g, p)?;
    let report = verify_partition(g, p);
    if !report.all_hold() {
        return Err(Error::Precondition(format!("partition fails: {}", report.failures().join(", "))));
    }
    Ok(())
}

fn descriptor(
    kind: ConstructionKind,
    branch: Branch,
    g: &Graph,
    p: &GoodPartition,
    claimed_units: u32,
) -> CaseDescriptor {
    CaseDescriptor {
        kind,
        branch,
        n: g.order(),
        t: p.t,
        s: p.s,
        residual: None,
        neighbour_part: None,
        full_edges_in_v12: None,
        claimed: HalfInt::from_units(claimed_units),
        exact_fallback: false,
    }
}

/// Builds a fractional matching of `Ḡ` meeting the bound of `kind`, for
/// `t <= n/4` (the three `Basic`/`IsolateFree`/`Saturated` kinds) or for `t`
/// just above `n/4` (the two near-quarter kinds).
pub fn construct_complement_fm(g: &Graph, p: &GoodPartition, kind: ConstructionKind) -> Result<ComplementConstruction> {
    match kind {
        ConstructionKind::Basic => construct_basic(g, p),
        ConstructionKind::IsolateFree => construct_isolate_free(g, p),
        ConstructionKind::Saturated => construct_saturated(g, p),
        ConstructionKind::NearQuarterHalf | ConstructionKind::NearQuarterWhole => {
            let c = construct_complement_fm_nearquarter(g, p)?;
            if c.case.kind != kind {
                return Err(Error::Precondition(format!("t = {} fits {:?}, not {kind:?}", p.t, c.case.kind)));
            }
            Ok(c)
        }
    }
}

/// Kinds whose hypotheses hold for this graph and partition, weakest first.
pub fn applicable_kinds(g: &Graph, p: &GoodPartition) -> Vec<ConstructionKind> {
    let n = g.order();
    let t_units = p.t.units() as usize;
    let mut out = Vec::new();
    if n >= crate::bounds::LARGE_ORDER {
        out.extend(near_quarter_kind(n, t_units));
    }
    if n >= 2 && 2 * t_units <= n {
        out.push(ConstructionKind::Basic);
        let both_isolate_free = !g.has_isolated_vertex() && !g.complement().has_isolated_vertex();
        if both_isolate_free && p.s >= 1 {
            out.push(ConstructionKind::IsolateFree);
        }
        if both_isolate_free && 2 * p.s == t_units && p.s >= 3 {
            out.push(ConstructionKind::Saturated);
        }
    }
    out
}

fn quarter_preconditions(g: &Graph, p: &GoodPartition) -> Result<()> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Precondition(format!("order {n} < 2")));
    }
    if 2 * p.t.units() as usize > n {
        return Err(Error::Precondition(format!("t = {} exceeds n/4 for n = {n}", p.t)));
    }
    check_partition(g, p)
}

fn isolate_free_both(g: &Graph) -> Result<()> {
    if g.has_isolated_vertex() {
        return Err(Error::Precondition("G has an isolated vertex".into()));
    }
    if g.degrees().iter().any(|&d| d + 1 == g.order()) {
        return Err(Error::Precondition("the complement has an isolated vertex".into()));
    }
    Ok(())
}

fn construct_basic(g: &Graph, p: &GoodPartition) -> Result<ComplementConstruction> {
    quarter_preconditions(g, p)?;
    let n = g.order();
    let gc = g.complement();
    let big_t = p.t.units() as usize;
    let residual = n - 2 * big_t + p.s;
    let v2 = p.v2();
    let base = Builder::new(&gc);
    let b = if residual == 1 {
        // a triangle on u ∈ V12 and two V2 vertices absorbs the odd vertex
        let candidates = p
            .v12
            .iter()
            .flat_map(|u| pairs_in(gc.neighbours(u).intersection(v2)).into_iter().map(move |(a, c)| (u, a, c)));
        first_success(
            &base,
            candidates,
            |b, (u, a, c)| {
                b.cycle(&[u, a, c])?;
                b.match_into(p.v12, v2)?;
                b.fill(v2).map(drop)
            },
            "triangle through V12 and V2",
        )?
    } else {
        let mut b = base;
        b.match_into(p.v12, p.v22)?;
        b.fill(v2)?;
        b
    };
    let mut case = descriptor(ConstructionKind::Basic, Branch::Leftover, g, p, (n - p.s) as u32);
    case.residual = Some(residual);
    Ok(ComplementConstruction { fm: b.finish()?, case })
}

fn construct_isolate_free(g: &Graph, p: &GoodPartition) -> Result<ComplementConstruction> {
    quarter_preconditions(g, p)?;
    isolate_free_both(g)?;
    if p.s == 0 {
        return Err(Error::Precondition("s = 0".into()));
    }
    let n = g.order();
    let gc = g.complement();
    let v2 = p.v2();
    let u = p.v11.first().expect("s >= 1");
    let nu = gc.neighbours(u);
    let v = [p.v12, p.v11, p.v21, p.v22]
        .iter()
        .find_map(|part| nu.intersection(*part).first())
        .ok_or_else(|| missing(format!("V11 vertex {u} is isolated in the complement")))?;
    let part = part_of(p, v);
    let mut b = Builder::new(&gc);
    let branch;
    let mut left = 0;
    if part == Part::V12 {
        branch = Branch::NeighbourInV12;
        b.one(u, v)?;
        b.match_into(p.v12, v2)?;
        left = b.fill(v2)?;
    } else {
        branch = Branch::NeighbourOutsideV12;
        let base = b;
        b = first_success(
            &base,
            pairs_in(p.x),
            |b, (x1, x2)| {
                b.one(x1, x2)?;
                b.one(u, v)?;
                b.match_into(p.v12, v2)?;
                left = b.fill(v2)?;
                Ok(())
            },
            "edge inside X",
        )?;
    }
    let mut case = descriptor(ConstructionKind::IsolateFree, branch, g, p, (n - p.s + 1) as u32);
    case.neighbour_part = Some(part);
    case.residual = Some(left);
    Ok(ComplementConstruction { fm: b.finish()?, case })
}

fn construct_saturated(g: &Graph, p: &GoodPartition) -> Result<ComplementConstruction> {
    quarter_preconditions(g, p)?;
    isolate_free_both(g)?;
    if 2 * p.s != p.t.units() as usize || p.s < 3 {
        return Err(Error::Precondition(format!("needs s = t >= 3, got s = {}, t = {}", p.s, p.t)));
    }
    let n = g.order();
    let gc = g.complement();
    let v2 = p.v2();
    let mut b = Builder::new(&gc);
    let nb = |v: usize, part: VertexSet| gc.neighbours(v).intersection(part);

    let inside = p.v11.iter().find_map(|u| nb(u, p.v11).first().map(|v| (u, v)));
    let to_v2 = p.v11.iter().find_map(|u| nb(u, v2).first().map(|v| (u, v)));
    let (branch, part) = if let Some((u, v)) = inside {
        b.one(u, v)?;
        b.match_into(p.v12, p.v22)?;
        (Branch::PairInsideV11, Part::V11)
    } else if let Some((u, v)) = to_v2 {
        // v is not isolated in G and its neighbours lie in V11
        let w = p
            .v11
            .iter()
            .find(|&w| w != u && g.has_edge(w, v))
            .ok_or_else(|| missing(format!("V2 vertex {v} has no G-neighbour in V11 besides {u}")))?;
        let w2 = [p.v12, v2]
            .iter()
            .find_map(|part| nb(w, *part).first())
            .ok_or_else(|| missing(format!("V11 vertex {w} is isolated in the complement")))?;
        b.one(u, v)?;
        b.one(w, w2)?;
        if p.v12.contains(w2) {
            b.match_into(p.v12, v2)?;
            (Branch::SecondNeighbourInV12, part_of(p, v))
        } else {
            let base = b;
            b = first_success(
                &base,
                pairs_in(p.v12),
                |b, (x1, x2)| {
                    b.one(x1, x2)?;
                    b.match_into(p.v12, v2)
                },
                "edge inside V12",
            )?;
            (Branch::SecondNeighbourInV2, part_of(p, v))
        }
    } else {
        let u = p.v11.first().expect("s >= 3");
        let v = nb(u, p.v12).first().ok_or_else(|| missing(format!("V11 vertex {u} is isolated in the complement")))?;
        let v1 = p.fm.full_neighbour(v).ok_or_else(|| missing(format!("X vertex {v} is not full")))?;
        let v2nd = nb(v1, p.v12)
            .difference(VertexSet::singleton(v))
            .first()
            .ok_or_else(|| missing(format!("V11 vertex {v1} has no complement neighbour in V12")))?;
        b.one(u, v)?;
        b.one(v1, v2nd)?;
        b.match_into(p.v12, p.v22)?;
        (Branch::DenseV11, Part::V12)
    };
    let left = b.fill(v2)?;
    let mut case = descriptor(ConstructionKind::Saturated, branch, g, p, (n - p.s + 2) as u32);
    case.neighbour_part = Some(part);
    case.residual = Some(left);
    Ok(ComplementConstruction { fm: b.finish()?, case })
}

/// The near-quarter kind matching `t` (in half-units) for order `n`.
pub fn near_quarter_kind(n: usize, t_units: usize) -> Option<ConstructionKind> {
    let q = n / 4;
    let half = if n % 4 <= 1 { 2 * q + 1 } else { 2 * q + 3 };
    if t_units == half {
        Some(ConstructionKind::NearQuarterHalf)
    } else if t_units == 2 * q + 2 {
        Some(ConstructionKind::NearQuarterWhole)
    } else {
        None
    }
}

/// Fractional matching of `Ḡ` with value at least `(n - t)/2` when `t` is
/// just above `n/4`.
///
/// The proof's counting needs `n >= 28`; below that the construction still
/// runs, and a missing structure is reported as a precondition failure.
pub fn construct_complement_fm_nearquarter(g: &Graph, p: &GoodPartition) -> Result<ComplementConstruction> {
    let n = g.order();
    let kind = near_quarter_kind(n, p.t.units() as usize)
        .ok_or_else(|| Error::Precondition(format!("t = {} is not just above n/4 for n = {n}", p.t)))?;
    check_partition(g, p)?;
    near_quarter(g, p, kind).map_err(|e| match e {
        Error::Internal(msg) if n < crate::bounds::LARGE_ORDER => {
            Error::Precondition(format!("order {n} below 28: {msg}"))
        }
        other => other,
    })
}

fn near_quarter(g: &Graph, p: &GoodPartition, kind: ConstructionKind) -> Result<ComplementConstruction> {
    let n = g.order();
    let gc = g.complement();
    let big_t = p.t.units() as usize;
    let s = p.s;
    let v2 = p.v2();
    let mut b = Builder::new(&gc);

    if s <= 1 {
        b.match_into(p.v22, p.v12)?;
        let mut case = descriptor(kind, Branch::SmallPairing, g, p, 2 * (n - big_t - s) as u32);
        case.residual = Some(0);
        return Ok(ComplementConstruction { fm: b.finish()?, case });
    }

    let (v1, v2nd) = pairs_in(p.x)
        .into_iter()
        .find(|&(a, c)| !g.has_edge(a, c))
        .ok_or_else(|| missing("X has no non-adjacent pair"))?;
    let reserved = VertexSet::from_iter([v1, v2nd]);
    let claimed = (n - s) as u32;
    let cycles = p.fm.half_cycles();
    let inner: Vec<(usize, usize)> =
        p.fm.one_edges().into_iter().filter(|&(a, c)| p.v12.contains(a) && p.v12.contains(c)).collect();

    let close = |b: &mut Builder, specials: VertexSet| -> Result<usize> {
        b.claim(&reserved.to_vec())?;
        let r = b.match_into(p.v12.difference(specials), v2);
        for v in reserved {
            b.used.remove(v);
        }
        r?;
        b.fill_with_pair(v2, (v1, v2nd))
    };

    let (branch, residual, fallback) = if let Some(cycle) = cycles.first() {
        let (c1, c2) = (cycle[0], cycle[1]);
        let xs = p.v21.to_vec();
        b.one(c1, xs[0])?;
        b.one(c2, xs[1])?;
        let r = close(&mut b, VertexSet::EMPTY)?;
        (Branch::HalfCycle, r, false)
    } else if 2 * s == big_t {
        b.claim(&[v1, v2nd])?;
        b.match_into(p.v12, p.v21)?;
        b.used.remove(v1);
        b.used.remove(v2nd);
        let r = b.fill_with_pair(v2, (v1, v2nd))?;
        (Branch::SaturatedPairing, r, false)
    } else if inner.len() == 1 {
        let (a, c) = inner[0];
        let (x, w, w1) = p
            .v21
            .iter()
            .flat_map(|x| [(x, a, c), (x, c, a)])
            .find(|&(x, w, _)| gc.has_edge(x, w))
            .ok_or_else(|| missing("no V21 vertex misses the inner 1-edge"))?;
        let y1 = gc
            .neighbours(w1)
            .intersection(p.v22)
            .first()
            .ok_or_else(|| missing(format!("{w1} has no complement neighbour in V22")))?;
        b.one(x, w)?;
        b.one(y1, w1)?;
        let r = close(&mut b, VertexSet::EMPTY)?;
        (Branch::OneFullEdge, r, false)
    } else if inner.len() >= 2 {
        let (e1, e2) = (inner[0], inner[1]);
        let candidates = p.v21.iter().flat_map(|x1| {
            p.v21.iter().filter(move |&x2| x2 != x1).flat_map(move |x2| {
                [e1.0, e1.1].into_iter().flat_map(move |w1| [e2.0, e2.1].into_iter().map(move |w3| (x1, x2, w1, w3)))
            })
        });
        let mut left = 0;
        let attempt = first_success(
            &b,
            candidates,
            |b, (x1, x2, w1, w3)| {
                b.one(x1, w1)?;
                b.one(x2, w3)?;
                left = close(b, VertexSet::EMPTY)?;
                Ok(())
            },
            "pair of V21 vertices missing the two inner 1-edges",
        );
        match attempt {
            Ok(done) => {
                b = done;
                (Branch::SeveralFullEdges, left, false)
            }
            Err(_) => {
                b = Builder { gc: &gc, f: extract_fm(&gc), used: VertexSet::EMPTY };
                (Branch::SeveralFullEdges, 0, true)
            }
        }
    } else {
        return Err(missing("s < t but V12 \\ X holds neither a 1/2-cycle nor a 1-edge"));
    };

    let claimed = if fallback { ((2 * n - big_t) as u32).div_ceil(2) } else { claimed };
    let mut case = descriptor(kind, branch, g, p, claimed);
    case.residual = (!fallback).then_some(residual);
    case.full_edges_in_v12 = Some(inner.len());
    case.exact_fallback = fallback;
    Ok(ComplementConstruction { fm: b.finish()?, case })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fm::alpha_prime;
    use crate::graph::{complete, k2pql, star};
    use crate::partition::good_partition;

    fn run(g: &Graph, kind: ConstructionKind) -> ComplementConstruction {
        let p = good_partition(g).unwrap();
        let c = construct_complement_fm(g, &p, kind).unwrap();
        assert_eq!(c.fm.host(), &g.complement());
        c.fm.validate().unwrap();
        assert!(c.value() <= alpha_prime(&g.complement()));
        c
    }

    #[test]
    fn star_leftover_cycle() {
        let c = run(&star(8), ConstructionKind::Basic);
        assert_eq!(c.value(), HalfInt::from_units(7));
        assert_eq!(c.case.residual_case(), Some(3));
        assert!(c.meets_claim());
    }

    #[test]
    fn matching_plus_isolates() {
        let g = Graph::from_edges(8, &[(0, 1), (2, 3)]).unwrap();
        let c = run(&g, ConstructionKind::Basic);
        assert_eq!(c.value(), HalfInt::from_int(4));
        assert_eq!(c.case.residual, Some(0));
    }

    #[test]
    fn double_star_isolate_free() {
        let g = k2pql(3, 3, 0);
        let c = run(&g, ConstructionKind::IsolateFree);
        assert!(c.value() >= HalfInt::from_units(7));
        assert!(c.meets_claim());
    }

    #[test]
    fn saturated_on_planted_stars() {
        // three P3's whose centres form a triangle, plus three V22 vertices
        // hanging off the centres; t = s = 3, n = 12
        let mut g = Graph::new(12).unwrap();
        for i in 0..3 {
            let c = 3 * i;
            g.add_edge(c, c + 1);
            g.add_edge(c, c + 2);
            g.add_edge(c, 9 + i);
        }
        g.add_edge(0, 3);
        let c = run(&g, ConstructionKind::Saturated);
        assert!(c.meets_claim(), "{:?}", c.case);
    }

    #[test]
    fn rejects_large_alpha() {
        let g = complete(6);
        let p = good_partition(&g).unwrap();
        assert!(matches!(construct_complement_fm(&g, &p, ConstructionKind::Basic), Err(Error::Precondition(_))));
    }

    #[test]
    fn near_quarter_guard() {
        let mut g = Graph::new(28).unwrap();
        for i in 0..7 {
            let a = 3 * i;
            g.add_edge(a, a + 1);
            g.add_edge(a + 1, a + 2);
            g.add_edge(a, a + 2);
        }
        let p = good_partition(&g).unwrap();
        assert_eq!(p.t, HalfInt::from_units(21));
        assert!(matches!(construct_complement_fm_nearquarter(&g, &p), Err(Error::Precondition(_))));
    }

    #[test]
    fn near_quarter_saturated_stars() {
        // 8 K_{1,2} plus 4 isolates, n = 28, t = s = 8
        let mut g = Graph::new(28).unwrap();
        for i in 0..8 {
            g.add_edge(3 * i, 3 * i + 1);
            g.add_edge(3 * i, 3 * i + 2);
        }
        let p = good_partition(&g).unwrap();
        assert_eq!((p.t, p.s), (HalfInt::from_int(8), 8));
        let c = construct_complement_fm_nearquarter(&g, &p).unwrap();
        assert_eq!(c.case.branch, Branch::SaturatedPairing);
        assert!(c.meets_claim() && c.meets_floor());
        assert!(c.value() >= HalfInt::from_int(10));
        assert!(c.value() <= alpha_prime(&g.complement()));
    }

    #[test]
    fn near_quarter_small_pairing() {
        // C3 ∪ 6K2 ∪ 14K1, n = 29, t = 15/2, s = 0
        let mut g = Graph::new(29).unwrap();
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        for i in 0..6 {
            g.add_edge(3 + 2 * i, 4 + 2 * i);
        }
        let p = good_partition(&g).unwrap();
        assert_eq!((p.t, p.s), (HalfInt::from_units(15), 0));
        let c = construct_complement_fm_nearquarter(&g, &p).unwrap();
        assert_eq!(c.case.branch, Branch::SmallPairing);
        assert_eq!(c.value(), HalfInt::from_int(14));
        assert!(c.meets_floor());
    }
}
