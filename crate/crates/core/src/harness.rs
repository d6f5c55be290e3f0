//! Graph sources: labeled enumeration, seeded Bernoulli sampling, and a
//! planted sampler whose fractional matching number is known by design.
//!
//! Sampling algorithm, fixed so seeds reproduce: one `xoshiro256**`
//! generator seeded with `seed_from_u64(seed)` (SplitMix64 expansion) is
//! shared by the whole stream. For each graph the pairs are visited in
//! graph6 column order `(0,1), (0,2), (1,2), (0,3), ...` and a pair becomes
//! an edge iff `(x * den) >> 64 < num` for the next output `x`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::half::HalfInt;

pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;
pub const MAX_ENUMERATION_ORDER: usize = 8;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph whose edge set is the bit pattern `mask`, bit `k` standing for the
/// `k`-th pair in graph6 column order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n).expect("enumeration order is small");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

/// Labeled graphs on `n` vertices in ascending mask order.
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    pub n: usize,
    pub mask: u64,
    end: u64,
    dedup: Option<HashSet<Signature>>,
}

impl EnumerationCursor {
    /// Skip graphs whose [`Signature`] was already produced. Heuristic:
    /// non-isomorphic graphs can share a signature, so counts are a lower
    /// bound on the number of isomorphism classes.
    pub fn dedup(mut self) -> Self {
        self.dedup = Some(HashSet::new());
        self
    }

    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for EnumerationCursor {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let g = graph_from_mask(self.n, self.mask);
            self.mask += 1;
            if let Some(seen) = &mut self.dedup {
                if !seen.insert(Signature::of(&g)) {
                    continue;
                }
            }
            return Some(g);
        }
        None
    }
}

/// All labeled graphs on `n <= 7` vertices.
pub fn enumerate(n: usize) -> Result<EnumerationCursor> {
    enumerate_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

/// As [`enumerate`] with a raised ceiling; `limit` itself is capped at 8.
pub fn enumerate_with_limit(n: usize, limit: usize) -> Result<EnumerationCursor> {
    let limit = limit.min(MAX_ENUMERATION_ORDER);
    if n > limit {
        return Err(Error::EnumerationBudget { order: n, limit });
    }
    Ok(EnumerationCursor { n, mask: 0, end: 1 << pair_count(n), dedup: None })
}

/// The masks of [`enumerate`] split into `chunks` contiguous ranges.
pub fn mask_chunks(n: usize, chunks: usize) -> Vec<Range<u64>> {
    let total = 1u64 << pair_count(n);
    let chunks = chunks.max(1) as u64;
    let step = total.div_ceil(chunks).max(1);
    (0..total).step_by(step as usize).map(|a| a..(a + step).min(total)).collect()
}

/// Sorted degree sequence plus the sorted multiset of sorted neighbour
/// degree lists. Invariant under relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<usize>, Vec<Vec<usize>>);

impl Signature {
    pub fn of(g: &Graph) -> Self {
        let deg = g.degrees();
        let mut lists: Vec<Vec<usize>> = g
            .vertices()
            .iter()
            .map(|v| {
                let mut l: Vec<usize> = g.neighbours(v).iter().map(|u| deg[u]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        lists.sort();
        let mut d = deg;
        d.sort_unstable();
        Signature(d, lists)
    }
}

/// Edge probability `num/den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probability {
    pub num: u64,
    pub den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidSample(format!("probability {num}/{den} outside [0, 1]")));
        }
        Ok(Probability { num, den })
    }

    fn draw(self, rng: &mut Xoshiro256StarStar) -> bool {
        ((rng.next_u64() as u128 * self.den as u128) >> 64) < self.num as u128
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `a/b` or a decimal such as `0.35`.
impl FromStr for Probability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSample(format!("bad probability {s:?}"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            return Probability::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = int.checked_mul(den).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
        Probability::new(num, den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub n: usize,
    pub p: Probability,
    pub count: usize,
    pub seed: u64,
}

impl SampleSpec {
    pub fn new(n: usize, p: Probability, count: usize, seed: u64) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(SampleSpec { n, p, count, seed })
    }
}

/// `n,p,count,seed`, e.g. `30,1/2,100,7`.
impl FromStr for SampleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, p, count, seed] = parts[..] else {
            return Err(Error::InvalidSample(format!("expected n,p,count,seed, got {s:?}")));
        };
        let int = |x: &str| x.parse::<u64>().map_err(|_| Error::InvalidSample(format!("bad integer {x:?}")));
        SampleSpec::new(int(n)? as usize, p.parse()?, int(count)? as usize, int(seed)?)
    }
}

impl fmt::Display for SampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.n, self.p, self.count, self.seed)
    }
}

pub struct SampleStream {
    spec: SampleSpec,
    rng: Xoshiro256StarStar,
    produced: usize,
}

impl Iterator for SampleStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.produced == self.spec.count {
            return None;
        }
        self.produced += 1;
        let n = self.spec.n;
        let mut g = Graph::new(n).expect("checked by SampleSpec");
        for j in 1..n {
            for i in 0..j {
                if self.spec.p.draw(&mut self.rng) {
                    g.add_edge(i, j);
                }
            }
        }
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.spec.count - self.produced;
        (left, Some(left))
    }
}

pub fn sample(spec: SampleSpec) -> SampleStream {
    SampleStream { spec, rng: Xoshiro256StarStar::seed_from_u64(spec.seed), produced: 0 }
}

/// Graphs built around a prescribed optimal fractional matching.
///
/// Vertices are laid out as `A` (`s` of them), `B` (`s`), `C` (`s`), then
/// `pairs` disjoint edges and `triangles` disjoint triangles (together `R`),
/// then the remaining `D`. The skeleton is the stars `A_i B_i`, `A_i C_i`
/// and the pairs and triangles. Extra edges go only between `A` and
/// anything, or inside `R`: with probability `p_a` inside `A`, `p_v1` from `A`
/// to `B ∪ R` and inside `R`, `p_v2` from `A` to `C ∪ D`. Removing `A`
/// isolates `B ∪ C ∪ D`, so `α′ = s + pairs + 3·triangles/2` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedSpec {
    pub n: usize,
    pub s: usize,
    pub pairs: usize,
    pub triangles: usize,
    pub p_a: Probability,
    pub p_v1: Probability,
    pub p_v2: Probability,
    /// Redraw until neither `G` nor `Ḡ` has an isolated vertex (needs `s >= 1`
    /// when `D` is non-empty). Gives up with an error after 1000 redraws.
    pub isolate_free: bool,
    pub count: usize,
    pub seed: u64,
}

impl PlantedSpec {
    /// One density for every kind of extra edge.
    pub fn uniform(n: usize, s: usize, pairs: usize, triangles: usize, p: Probability) -> Self {
        PlantedSpec { n, s, pairs, triangles, p_a: p, p_v1: p, p_v2: p, isolate_free: false, count: 1, seed: 0 }
    }

    pub fn alpha(&self) -> HalfInt {
        HalfInt::from_units((2 * self.s + 2 * self.pairs + 3 * self.triangles) as u32)
    }

    fn core(&self) -> usize {
        3 * self.s + 2 * self.pairs + 3 * self.triangles
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_ORDER {
            return Err(Error::OrderTooLarge(self.n));
        }
        if self.core() > self.n {
            return Err(Error::InvalidSample(format!("skeleton needs {} vertices, n = {}", self.core(), self.n)));
        }
        if self.isolate_free && self.s == 0 && self.core() < self.n {
            return Err(Error::InvalidSample("isolate-free planting with D non-empty needs s >= 1".into()));
        }
        Ok(())
    }
}

pub struct PlantedStream {
    spec: PlantedSpec,
    rng: Xoshiro256StarStar,
    produced: usize,
}

impl PlantedStream {
    fn draw(&mut self) -> Graph {
        let PlantedSpec { n, s, pairs, triangles, p_a, p_v1, p_v2, .. } = self.spec;
        let mut g = Graph::new(n).expect("validated");
        for i in 0..s {
            g.add_edge(i, s + i);
            g.add_edge(i, 2 * s + i);
        }
        let r0 = 3 * s;
        for k in 0..pairs {
            g.add_edge(r0 + 2 * k, r0 + 2 * k + 1);
        }
        let t0 = r0 + 2 * pairs;
        for k in 0..triangles {
            let a = t0 + 3 * k;
            g.add_edge(a, a + 1);
            g.add_edge(a + 1, a + 2);
            g.add_edge(a, a + 2);
        }
        let r_end = t0 + 3 * triangles;
        for j in 1..n {
            for i in 0..j {
                let p = if j < s {
                    p_a
                } else if (i < s && (j < 2 * s || (j >= r0 && j < r_end))) || (i >= r0 && j < r_end) {
                    p_v1
                } else if i < s {
                    p_v2
                } else {
                    continue;
                };
                if !g.has_edge(i, j) && p.draw(&mut self.rng) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl Iterator for PlantedStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        if self.produced == self.spec.count {
            return None;
        }
        self.produced += 1;
        for _ in 0..1000 {
            let g = self.draw();
            if !self.spec.isolate_free || (!g.has_isolated_vertex() && !g.complement().has_isolated_vertex()) {
                return Some(Ok(g));
            }
        }
        Some(Err(Error::InvalidSample(format!("no isolate-free draw for {:?}", self.spec))))
    }
}

pub fn sample_planted(spec: PlantedSpec) -> Result<PlantedStream> {
    spec.validate()?;
    Ok(PlantedStream { spec, rng: Xoshiro256StarStar::seed_from_u64(spec.seed), produced: 0 })
}

/// Worker count from `FRACMATCH_WORKERS`, else the available parallelism.
pub fn workers_from_env() -> usize {
    std::env::var("FRACMATCH_WORKERS")
        .ok()
        .and_then(|w| w.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |w| w.get()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fm::alpha_prime;
    use crate::graph::{complete, empty};
    use crate::io::emit_graph6;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(2).unwrap().collect::<Vec<_>>(), vec![empty(2), complete(2)]);
        assert_eq!(enumerate(3).unwrap().count(), 8);
        assert_eq!(enumerate(4).unwrap().count(), 64);
        assert_eq!(enumerate(5).unwrap().count(), 1024);
        assert!(matches!(enumerate(8), Err(Error::EnumerationBudget { order: 8, limit: 7 })));
        assert_eq!(enumerate_with_limit(8, 8).unwrap().total(), 1 << 28);
        assert!(enumerate_with_limit(9, 9).is_err());
    }

    #[test]
    fn dedup_counts_classes_at_small_orders() {
        // signatures separate isomorphism classes up to n = 5
        assert_eq!(enumerate(4).unwrap().dedup().count(), 11);
        assert_eq!(enumerate(5).unwrap().dedup().count(), 34);
    }

    #[test]
    fn mask_order_is_graph6_order() {
        // bit k of the mask is bit k of the graph6 payload
        assert_eq!(emit_graph6(&graph_from_mask(3, 0b001)), "B_");
        assert_eq!(emit_graph6(&graph_from_mask(3, 0b010)), "BO");
        assert_eq!(emit_graph6(&graph_from_mask(3, 0b100)), "BG");
    }

    #[test]
    fn chunks_cover_masks() {
        for k in [1, 3, 7, 64, 1000] {
            let c = mask_chunks(5, k);
            assert_eq!(c.first().unwrap().start, 0);
            assert_eq!(c.last().unwrap().end, 1024);
            assert!(c.windows(2).all(|w| w[0].end == w[1].start));
        }
    }

    #[test]
    fn probability_parsing() {
        assert_eq!("1/2".parse::<Probability>().unwrap(), Probability { num: 1, den: 2 });
        assert_eq!("0.35".parse::<Probability>().unwrap(), Probability { num: 35, den: 100 });
        assert_eq!("1".parse::<Probability>().unwrap(), Probability { num: 1, den: 1 });
        assert!("3/2".parse::<Probability>().is_err());
        assert!("x".parse::<Probability>().is_err());
        let spec: SampleSpec = "30,1/2,3,42".parse().unwrap();
        assert_eq!(spec.to_string(), "30,1/2,3,42");
        assert!("30,1/2,3".parse::<SampleSpec>().is_err());
    }

    #[test]
    fn extreme_probabilities() {
        let one = SampleSpec::new(9, Probability::new(1, 1).unwrap(), 4, 1).unwrap();
        assert!(sample(one).all(|g| g == complete(9)));
        let zero = SampleSpec::new(9, Probability::new(0, 1).unwrap(), 4, 1).unwrap();
        assert!(sample(zero).all(|g| g == empty(9)));
    }

    #[test]
    fn sampling_is_seeded() {
        let spec: SampleSpec = "12,1/3,5,9".parse().unwrap();
        let a: Vec<_> = sample(spec).collect();
        assert_eq!(a, sample(spec).collect::<Vec<_>>());
        let other = SampleSpec { seed: 10, ..spec };
        assert_ne!(a, sample(other).collect::<Vec<_>>());
    }

    #[test]
    fn planted_alpha_is_exact() {
        let spec = PlantedSpec {
            isolate_free: true,
            count: 40,
            seed: 5,
            ..PlantedSpec::uniform(30, 3, 1, 1, Probability::new(1, 2).unwrap())
        };
        assert_eq!(spec.alpha(), HalfInt::from_units(11));
        for g in sample_planted(spec).unwrap() {
            let g = g.unwrap();
            assert_eq!(alpha_prime(&g), spec.alpha());
            assert!(!g.has_isolated_vertex());
        }
        assert!(sample_planted(PlantedSpec { n: 10, ..spec }).is_err());
    }
}
