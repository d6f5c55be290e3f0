//! Checks every bound over all labeled graphs of one order and writes the
//! rows and the JSON summary to a directory.
//!
//!     cargo run --release --example exhaustive_sweep -- 6 /tmp/sweep

use std::fs::File;
use std::path::PathBuf;

use fracmatch::harness::DEFAULT_ENUMERATION_LIMIT;
use fracmatch::sweep::{sweep_enumeration, write_csv, write_summary, SweepOptions};

fn main() -> fracmatch::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(5, |a| a.parse().expect("order"));
    let dir = PathBuf::from(args.next().unwrap_or_else(|| std::env::temp_dir().display().to_string()));

    let out = sweep_enumeration(n, DEFAULT_ENUMERATION_LIMIT, SweepOptions::default())?;
    write_csv(&out.rows, File::create(dir.join(format!("sweep{n}.csv")))?)?;
    write_summary(&out.summary, File::create(dir.join(format!("sweep{n}.json")))?)?;

    println!("{} graphs of order {n}", out.summary.graphs);
    for (bound, st) in &out.summary.bounds {
        println!("  {bound:<12} applies {:>6}  violated {}  tight {}", st.applies, st.violated, st.equality);
    }
    for (family, count) in &out.summary.families {
        println!("  {family}: {count}");
    }
    println!("written to {}", dir.display());
    Ok(())
}
