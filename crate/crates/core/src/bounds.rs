//! Lower bounds on `α′(G) + α′(Ḡ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{classify_equality_family, FamilyLabel};
use crate::fm::alpha_prime;
use crate::graph::Graph;
use crate::half::HalfInt;

/// Order from which the non-empty and isolate-free bounds are claimed.
pub const LARGE_ORDER: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    /// `n/2`, every graph with `n >= 2`; tight exactly on empty and complete graphs.
    General,
    /// `(n+1)/2` when `G` and `Ḡ` both have an edge; tight on `K_{1,n-1}`.
    NonEmpty,
    /// `(n+4)/2` when neither `G` nor `Ḡ` has an isolated vertex; tight on
    /// `K2(p,q;l)` and bistars inside `K_{2,n-2}`.
    IsolateFree,
}

impl Bound {
    pub const ALL: [Bound; 3] = [Bound::General, Bound::NonEmpty, Bound::IsolateFree];

    pub fn value(self, n: usize) -> HalfInt {
        let n = n as u32;
        HalfInt::from_units(match self {
            Bound::General => n,
            Bound::NonEmpty => n + 1,
            Bound::IsolateFree => n + 4,
        })
    }

    pub fn applies(self, h: &Hypotheses) -> bool {
        match self {
            Bound::General => h.n >= 2,
            Bound::NonEmpty => h.g_nonempty && h.gc_nonempty && h.large,
            Bound::IsolateFree => h.g_isolate_free && h.gc_isolate_free && h.large,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Bound::General => "general",
            Bound::NonEmpty => "non-empty",
            Bound::IsolateFree => "isolate-free",
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub n: usize,
    pub g_nonempty: bool,
    pub gc_nonempty: bool,
    pub g_isolate_free: bool,
    pub gc_isolate_free: bool,
    /// `n >= 28`.
    pub large: bool,
}

impl Hypotheses {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let m = g.edge_count();
        let all = n * n.saturating_sub(1) / 2;
        Hypotheses {
            n,
            g_nonempty: m > 0,
            gc_nonempty: m < all,
            g_isolate_free: !g.has_isolated_vertex(),
            gc_isolate_free: g.degrees().iter().all(|&d| d + 1 < n),
            large: n >= LARGE_ORDER,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: Bound,
    pub value: HalfInt,
    pub applies: bool,
    pub satisfied: bool,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub alpha_g: HalfInt,
    pub alpha_gc: HalfInt,
    pub sum: HalfInt,
    pub hypotheses: Hypotheses,
    pub checks: Vec<BoundCheck>,
    /// Extremal family of the strongest applicable bound when it is tight.
    pub equality_family: FamilyLabel,
}

impl BoundReport {
    /// The applicable bound with the largest value.
    pub fn strongest(&self) -> &BoundCheck {
        self.checks.iter().filter(|c| c.applies).max_by_key(|c| c.value).expect("general bound applies for n >= 2")
    }

    pub fn check(&self, bound: Bound) -> &BoundCheck {
        self.checks.iter().find(|c| c.bound == bound).expect("every bound is checked")
    }

    /// An applicable bound fails.
    pub fn violated(&self) -> bool {
        self.checks.iter().any(|c| c.applies && !c.satisfied)
    }

    /// The strongest bound is tight but the graph is in no extremal family.
    pub fn uncharacterized_equality(&self) -> bool {
        self.strongest().equality && self.equality_family.is_none()
    }
}

pub fn ng_sum(g: &Graph) -> Result<BoundReport> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Precondition(format!("order {n} < 2")));
    }
    let alpha_g = alpha_prime(g);
    let alpha_gc = alpha_prime(&g.complement());
    let sum = alpha_g + alpha_gc;
    let hypotheses = Hypotheses::of(g);
    let checks = Bound::ALL
        .iter()
        .map(|&bound| {
            let value = bound.value(n);
            BoundCheck {
                bound,
                value,
                applies: bound.applies(&hypotheses),
                satisfied: sum >= value,
                equality: sum == value,
            }
        })
        .collect();
    let mut report =
        BoundReport { n, alpha_g, alpha_gc, sum, hypotheses, checks, equality_family: FamilyLabel::Unclassified };
    let strongest = *report.strongest();
    if strongest.equality {
        report.equality_family = classify_equality_family(g, strongest.bound);
    }
    Ok(report)
}
