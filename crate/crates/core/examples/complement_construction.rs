//! Runs every applicable complement construction on planted graphs of order
//! 28 to 31 and tallies which proof branch produced each matching.

use std::collections::BTreeMap;

use fracmatch::alpha_prime;
use fracmatch::construct::{applicable_kinds, construct_complement_fm};
use fracmatch::harness::{sample_planted, PlantedSpec, Probability};
use fracmatch::partition::good_partition;

fn main() -> fracmatch::Result<()> {
    let mut tally: BTreeMap<String, (u32, u32)> = BTreeMap::new();
    let mut seed = 0;
    for n in 28..=31 {
        for s in 0..=n / 3 {
            for pairs in 0..=n / 4 {
                for triangles in 0..=2 {
                    // keep t at or just above n/4
                    if 2 * s + 2 * pairs + 3 * triangles > n / 2 + 3 {
                        continue;
                    }
                    for p in ["1/10", "1/2", "9/10"] {
                        seed += 1;
                        let p: Probability = p.parse()?;
                        let spec = PlantedSpec {
                            isolate_free: s > 0,
                            count: 2,
                            seed,
                            ..PlantedSpec::uniform(n, s, pairs, triangles, p)
                        };
                        if spec.validate().is_err() {
                            continue;
                        }
                        for g in sample_planted(spec)?.flatten() {
                            let part = good_partition(&g)?;
                            let exact = alpha_prime(&g.complement());
                            for kind in applicable_kinds(&g, &part) {
                                let c = construct_complement_fm(&g, &part, kind)?;
                                let e = tally.entry(format!("{kind:?}/{:?}", c.case.branch)).or_default();
                                e.0 += 1;
                                e.1 += u32::from(c.meets_claim() && c.value() <= exact);
                            }
                        }
                    }
                }
            }
        }
    }
    println!("{:>6} {:>6}  branch", "runs", "valid");
    for (branch, (runs, valid)) in tally {
        println!("{runs:>6} {valid:>6}  {branch}");
    }
    Ok(())
}
