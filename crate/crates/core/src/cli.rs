//! The `fracmatch` command line.
//!
//! Graph arguments are a graph6 or edge-list literal, a path to a file
//! holding one, or `-` for stdin. Exit codes: 0 success, 1 a bound or check
//! failed, 2 usage or input error.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bounds::ng_sum;
use crate::construct::{applicable_kinds, construct_complement_fm, CaseDescriptor, ConstructionKind};
use crate::error::{Error, Result};
use crate::families::{classify_small_alpha, FamilyLabel};
use crate::fm::alpha_prime;
use crate::graph::Graph;
use crate::half::HalfInt;
use crate::harness::{enumerate, sample, workers_from_env, SampleSpec, DEFAULT_ENUMERATION_LIMIT};
use crate::io::{emit_graph6, parse_any, parse_graph6_lines};
use crate::partition::good_partition;
use crate::sweep::{sweep_enumeration, sweep_sample, verify_theorem_sweep, write_csv, write_summary, SweepOptions};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "fracmatch", version, about = "Fractional matching numbers of a graph and its complement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print 2α′ in half-units and α′ in decimal.
    Alpha { graph: String },
    /// Dump the good partition as JSON.
    Partition { graph: String },
    /// Small-α′ family label as JSON.
    Classify { graph: String },
    /// α′(G) + α′(Ḡ) against every bound, as JSON.
    Ngsum { graph: String },
    /// Complement fractional matchings from every applicable construction.
    Construct {
        graph: String,
        /// Only this construction.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Check the bounds over enumerated, sampled or listed graphs.
    Sweep(SweepArgs),
    /// Oracle agreement and structural invariants on small graphs.
    Selftest {
        /// Enumerate every graph up to this order.
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        /// Uniform samples at n = 30 for the partition and construction checks.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum KindArg {
    Basic,
    IsolateFree,
    Saturated,
    NearQuarterHalf,
    NearQuarterWhole,
}

impl From<KindArg> for ConstructionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Basic => ConstructionKind::Basic,
            KindArg::IsolateFree => ConstructionKind::IsolateFree,
            KindArg::Saturated => ConstructionKind::Saturated,
            KindArg::NearQuarterHalf => ConstructionKind::NearQuarterHalf,
            KindArg::NearQuarterWhole => ConstructionKind::NearQuarterWhole,
        }
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["enumerate", "sample", "input"])))]
struct SweepArgs {
    /// All labeled graphs of this order.
    #[arg(long)]
    enumerate: Option<usize>,
    /// `n,p,count,seed`, with `p` as `a/b` or a decimal.
    #[arg(long)]
    sample: Option<String>,
    /// A .g6 file (or `-`), one graph per line.
    #[arg(long)]
    input: Option<String>,
    /// Largest order `--enumerate` accepts (at most 8).
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    max_order: usize,
    /// CSV destination; `-` or absent means stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// JSON summary destination; `-` means stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads; defaults to FRACMATCH_WORKERS or the core count.
    #[arg(long)]
    workers: Option<usize>,
}

/// One entry of the `construct` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub kind: ConstructionKind,
    pub value: HalfInt,
    pub meets_claim: bool,
    pub alpha_complement: HalfInt,
    pub case: CaseDescriptor,
    /// `(u, v, f(uv))` on the complement.
    pub weights: Vec<(usize, usize, HalfInt)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub graph6: String,
    pub alpha: HalfInt,
    pub family: FamilyLabel,
}

/// Parses the `alpha` line `2a'=<units> (<decimal>)`.
pub fn parse_alpha_line(line: &str) -> Option<HalfInt> {
    let rest = line.trim().strip_prefix("2a'=")?;
    let (units, dec) = rest.split_once(' ')?;
    let h = HalfInt::from_units(units.parse().ok()?);
    (dec == format!("({})", h.decimal())).then_some(h)
}

pub fn format_alpha_line(a: HalfInt) -> String {
    format!("2a'={} ({})", a.units(), a.decimal())
}

enum Outcome {
    Ok,
    Violation,
}

fn read_source(arg: &str, stdin: &mut dyn Read) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else if Path::new(arg).is_file() {
        Ok(fs::read_to_string(arg)?)
    } else {
        Ok(arg.to_string())
    }
}

fn read_graph(arg: &str, stdin: &mut dyn Read) -> Result<Graph> {
    let text = read_source(arg, stdin)?;
    let first = text.trim_start().chars().next();
    if !matches!(first, Some(c) if c.is_ascii_digit()) && text.lines().filter(|l| !l.trim().is_empty()).count() > 1 {
        return Err(Error::Graph6("expected a single graph".into()));
    }
    parse_any(&text)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Violation) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Internal(_) => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Alpha { graph } => {
            let g = read_graph(&graph, stdin)?;
            writeln!(out, "{}", format_alpha_line(alpha_prime(&g)))?;
        }
        Command::Partition { graph } => {
            let g = read_graph(&graph, stdin)?;
            writeln!(out, "{}", to_json(&good_partition(&g)?.dump())?)?;
        }
        Command::Classify { graph } => {
            let g = read_graph(&graph, stdin)?;
            let report =
                ClassifyReport { graph6: emit_graph6(&g), alpha: alpha_prime(&g), family: classify_small_alpha(&g) };
            writeln!(out, "{}", to_json(&report)?)?;
        }
        Command::Ngsum { graph } => {
            let g = read_graph(&graph, stdin)?;
            let report = ng_sum(&g)?;
            writeln!(out, "{}", to_json(&report)?)?;
            if report.violated() {
                return Ok(Outcome::Violation);
            }
        }
        Command::Construct { graph, kind } => return construct(&read_graph(&graph, stdin)?, kind, out, err),
        Command::Sweep(args) => return sweep(args, stdin, out, err),
        Command::Selftest { max_order, samples } => return selftest(max_order, samples, out),
    }
    Ok(Outcome::Ok)
}

fn construct(g: &Graph, kind: Option<KindArg>, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let p = good_partition(g)?;
    let kinds = match kind {
        Some(k) => vec![k.into()],
        None => applicable_kinds(g, &p),
    };
    if kinds.is_empty() {
        writeln!(err, "no construction applies (t = {}, n = {})", p.t, g.order())?;
    }
    let exact = alpha_prime(&g.complement());
    let mut reports = Vec::new();
    for kind in kinds {
        let c = construct_complement_fm(g, &p, kind)?;
        reports.push(ConstructReport {
            kind,
            value: c.value(),
            meets_claim: c.meets_claim(),
            alpha_complement: exact,
            weights: c.fm.weighted_edges().into_iter().map(|(u, v, w)| (u, v, HalfInt::from_units(w as u32))).collect(),
            case: c.case,
        });
    }
    writeln!(out, "{}", to_json(&reports)?)?;
    let bad = reports.iter().any(|r| !r.meets_claim || r.value > r.alpha_complement);
    Ok(if bad { Outcome::Violation } else { Outcome::Ok })
}

fn open_dest<'a>(path: Option<&PathBuf>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(fs::File::create(p)?)),
        _ => Ok(Box::new(stdout)),
    }
}

fn sweep(args: SweepArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let opts = SweepOptions { workers: args.workers.unwrap_or_else(workers_from_env), keep_rows: true };
    let outcome = if let Some(n) = args.enumerate {
        sweep_enumeration(n, args.max_order, opts)?
    } else if let Some(spec) = &args.sample {
        sweep_sample(spec.parse::<SampleSpec>()?, opts)?
    } else {
        let src = args.input.as_deref().expect("clap enforces one source");
        let graphs = parse_graph6_lines(&read_source(src, stdin)?)?;
        verify_theorem_sweep(&format!("input {src}"), graphs, opts)?
    };
    {
        let mut dest = open_dest(args.csv.as_ref(), out)?;
        write_csv(&outcome.rows, &mut dest)?;
    }
    if let Some(path) = &args.json {
        let mut dest = open_dest(Some(path), out)?;
        write_summary(&outcome.summary, &mut dest)?;
    }
    let s = &outcome.summary;
    writeln!(
        err,
        "{}: {} graphs, {} violations, {} uncharacterized equalities",
        s.source,
        s.graphs,
        s.violations.len(),
        s.uncharacterized.len()
    )?;
    Ok(if s.violations.is_empty() { Outcome::Ok } else { Outcome::Violation })
}

fn selftest(max_order: usize, samples: usize, out: &mut dyn Write) -> Result<Outcome> {
    type Check = fn(&Graph) -> Option<String>;
    let checks: [(&str, Check); 5] = [
        ("alpha agreement", verify::alpha_agreement),
        ("normal form", verify::normal_form_failure),
        ("good partition", verify::partition_failure),
        ("small-alpha classifier", verify::classifier_failure),
        ("general bound", verify::general_bound_failure),
    ];
    let mut small = Vec::new();
    for n in 2..=max_order {
        small.extend(enumerate(n)?);
    }
    let spec = SampleSpec::new(30, "1/10".parse()?, samples, 1)?;
    let large: Vec<Graph> = sample(spec).collect();
    let mut failed = false;
    let mut report = |name: &str, pop: &str, count: usize, first: Option<(String, String)>| -> Result<()> {
        match first {
            None => writeln!(out, "PASS {name} ({count} graphs, {pop})")?,
            Some((g6, why)) => {
                failed = true;
                writeln!(out, "FAIL {name} ({pop}): {g6}: {why}")?;
            }
        }
        Ok(())
    };
    let small_pop = format!("all graphs 2 <= n <= {max_order}");
    for (name, check) in checks {
        let first = small.iter().find_map(|g| check(g).map(|why| (emit_graph6(g), why)));
        report(name, &small_pop, small.len(), first)?;
    }
    let first = large.iter().find_map(|g| verify::partition_failure(g).map(|why| (emit_graph6(g), why)));
    report("good partition", &format!("sample {spec}"), large.len(), first)?;
    let first =
        small.iter().chain(&large).find_map(|g| verify::construction_failures(g).1.map(|why| (emit_graph6(g), why)));
    report("constructions", "both populations", small.len() + large.len(), first)?;
    Ok(if failed { Outcome::Violation } else { Outcome::Ok })
}
