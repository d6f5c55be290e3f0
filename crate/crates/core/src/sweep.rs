//! Bulk verification of the sum bounds over a graph stream.
//!
//! Work fans out over a rayon pool; aggregation is commutative (counters and
//! sorted sets) and rows are sorted by graph6, so output does not depend on
//! the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{ng_sum, Bound, BoundReport, Hypotheses};
use crate::error::{Error, Result};
use crate::families::classify_equality_family;
use crate::graph::Graph;
use crate::half::HalfInt;
use crate::harness::{enumerate_with_limit, graph_from_mask, mask_chunks, sample, SampleSpec};
use crate::io::emit_graph6;

/// One CSV line; field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub graph6: String,
    pub n: usize,
    pub alpha_g: HalfInt,
    pub alpha_gc: HalfInt,
    pub sum: HalfInt,
    /// Strongest applicable bound.
    pub bound: Bound,
    pub satisfied: bool,
    pub equality: bool,
    pub family: String,
}

impl SweepRow {
    pub fn from_report(graph6: String, r: &BoundReport) -> Self {
        let c = r.strongest();
        SweepRow {
            graph6,
            n: r.n,
            alpha_g: r.alpha_g,
            alpha_gc: r.alpha_gc,
            sum: r.sum,
            bound: c.bound,
            satisfied: c.satisfied,
            equality: c.equality,
            family: r.equality_family.tag().to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundStats {
    pub applies: u64,
    pub satisfied: u64,
    pub violated: u64,
    pub equality: u64,
    /// Equalities that fall into the bound's extremal family.
    pub characterized: u64,
}

impl BoundStats {
    fn merge(&mut self, o: &BoundStats) {
        self.applies += o.applies;
        self.satisfied += o.satisfied;
        self.violated += o.violated;
        self.equality += o.equality;
        self.characterized += o.characterized;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub bound: Bound,
    pub sum: HalfInt,
    pub value: HalfInt,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub source: String,
    pub graphs: u64,
    /// Keyed by bound name.
    pub bounds: BTreeMap<String, BoundStats>,
    /// The same counts with the order threshold dropped from the hypotheses:
    /// how the bounds behave below `n = 28`.
    pub ignoring_order: BTreeMap<String, BoundStats>,
    pub violations: BTreeSet<Violation>,
    /// Graphs tight for their strongest bound but outside its family.
    pub uncharacterized: BTreeSet<String>,
    /// Equality-family tag counts over graphs tight for their strongest bound.
    pub families: BTreeMap<String, u64>,
}

impl SweepSummary {
    pub fn stats(&self, bound: Bound) -> BoundStats {
        self.bounds.get(bound.name()).copied().unwrap_or_default()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.uncharacterized.is_empty()
    }

    fn merge(mut self, o: SweepSummary) -> SweepSummary {
        self.graphs += o.graphs;
        for (map, other) in [(&mut self.bounds, o.bounds), (&mut self.ignoring_order, o.ignoring_order)] {
            for (k, v) in other {
                map.entry(k).or_default().merge(&v);
            }
        }
        self.violations.extend(o.violations);
        self.uncharacterized.extend(o.uncharacterized);
        for (k, v) in o.families {
            *self.families.entry(k).or_default() += v;
        }
        self
    }

    fn record(&mut self, g: &Graph, graph6: &str, r: &BoundReport) {
        self.graphs += 1;
        let relaxed = Hypotheses { large: true, ..r.hypotheses };
        for c in &r.checks {
            let tally = |stats: &mut BoundStats| {
                stats.applies += 1;
                if c.satisfied {
                    stats.satisfied += 1;
                } else {
                    stats.violated += 1;
                }
                if c.equality {
                    stats.equality += 1;
                    if !classify_equality_family(g, c.bound).is_none() {
                        stats.characterized += 1;
                    }
                }
            };
            if c.applies {
                tally(self.bounds.entry(c.bound.name().into()).or_default());
                if !c.satisfied {
                    self.violations.insert(Violation {
                        graph6: graph6.into(),
                        bound: c.bound,
                        sum: r.sum,
                        value: c.value,
                    });
                }
            }
            if c.bound.applies(&relaxed) {
                tally(self.ignoring_order.entry(c.bound.name().into()).or_default());
            }
        }
        if r.strongest().equality {
            *self.families.entry(r.equality_family.tag().into()).or_default() += 1;
            if r.equality_family.is_none() {
                self.uncharacterized.insert(graph6.into());
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub workers: usize,
    pub keep_rows: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { workers: crate::harness::workers_from_env(), keep_rows: true }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    /// Sorted by graph6; empty unless rows were kept.
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

#[derive(Default)]
struct Acc {
    rows: Vec<SweepRow>,
    summary: SweepSummary,
}

impl Acc {
    fn add(mut self, g: &Graph, keep: bool) -> Result<Acc> {
        let r = ng_sum(g)?;
        let g6 = emit_graph6(g);
        self.summary.record(g, &g6, &r);
        if keep {
            self.rows.push(SweepRow::from_report(g6, &r));
        }
        Ok(self)
    }

    fn merge(mut self, o: Acc) -> Acc {
        self.rows.extend(o.rows);
        self.summary = self.summary.merge(o.summary);
        self
    }

    fn finish(mut self, source: String) -> SweepOutcome {
        self.rows.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        self.summary.source = source;
        SweepOutcome { rows: self.rows, summary: self.summary }
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// Checks every bound on every graph; all graphs need order at least 2.
pub fn verify_theorem_sweep(source: &str, graphs: Vec<Graph>, opts: SweepOptions) -> Result<SweepOutcome> {
    let keep = opts.keep_rows;
    let acc = pool(opts.workers)?.install(|| {
        graphs
            .par_iter()
            .try_fold(Acc::default, |acc, g| acc.add(g, keep))
            .try_reduce(Acc::default, |a, b| Ok(a.merge(b)))
    })?;
    Ok(acc.finish(source.to_string()))
}

/// Sweep over all labeled graphs of order `n`, streamed by mask range.
pub fn sweep_enumeration(n: usize, limit: usize, opts: SweepOptions) -> Result<SweepOutcome> {
    let cursor = enumerate_with_limit(n, limit)?;
    if n < 2 {
        return Err(Error::Precondition(format!("order {n} < 2")));
    }
    let keep = opts.keep_rows;
    let chunks = mask_chunks(n, 64 * opts.workers.max(1));
    let acc = pool(opts.workers)?.install(|| {
        chunks
            .into_par_iter()
            .try_fold(Acc::default, |mut acc, range| {
                for mask in range {
                    acc = acc.add(&graph_from_mask(n, mask), keep)?;
                }
                Ok::<_, Error>(acc)
            })
            .try_reduce(Acc::default, |a, b| Ok(a.merge(b)))
    })?;
    debug_assert_eq!(acc.summary.graphs, cursor.total());
    Ok(acc.finish(format!("enumerate {n}")))
}

pub fn sweep_sample(spec: SampleSpec, opts: SweepOptions) -> Result<SweepOutcome> {
    verify_theorem_sweep(&format!("sample {spec}"), sample(spec).collect(), opts)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(["graph6", "n", "alpha_g", "alpha_gc", "sum", "bound", "satisfied", "equality", "family"])?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    csv::Reader::from_reader(input).deserialize().map(|r| r.map_err(Error::from)).collect()
}

pub fn write_summary<W: Write>(summary: &SweepSummary, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, summary).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

pub fn read_summary<R: Read>(input: R) -> Result<SweepSummary> {
    serde_json::from_reader(input).map_err(|e| Error::Internal(format!("summary json: {e}")))
}
