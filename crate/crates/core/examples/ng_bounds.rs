//! Evaluates the three lower bounds on `α′(G) + α′(Ḡ)` on their extremal
//! graphs and on one graph far from equality.

use fracmatch::bounds::ng_sum;
use fracmatch::graph::{complete, cycle, empty, k2pql, star};
use fracmatch::Graph;

fn main() -> fracmatch::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("K_{1,29}", star(30)),
        ("empty(30)", empty(30)),
        ("complete(30)", complete(30)),
        ("K2(14,13;1)", k2pql(14, 13, 1)),
        ("K_{1,5} + K_{1,23}", star(6).disjoint_union(&star(24))?),
        ("C30", cycle(30)),
    ];
    for (name, g) in graphs {
        let r = ng_sum(&g)?;
        println!("{name}: {} + {} = {}", r.alpha_g, r.alpha_gc, r.sum);
        for c in r.checks.iter().filter(|c| c.applies) {
            let mark = if c.equality {
                "tight"
            } else if c.satisfied {
                "ok"
            } else {
                "VIOLATED"
            };
            println!("  {:<12} >= {:<5} {mark}", c.bound.name(), c.value);
        }
        println!("  family: {}", r.equality_family);
    }
    Ok(())
}
