//! Labels graphs with `α′ ∈ {1, 3/2, 2, 5/2}` and evaluates the matching
//! statement about `α′(G) + α′(Ḡ)`.

use fracmatch::families::{classify_small_alpha, small_alpha_ng};
use fracmatch::graph::{complete, cycle, hgraph, k2pql, star};
use fracmatch::{alpha_prime, Graph};

fn main() -> fracmatch::Result<()> {
    let n = 12;
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)])?;
    let graphs: Vec<(&str, Graph)> = vec![
        ("star", star(n)),
        ("triangle", cycle(3).add_isolates(n - 3)?),
        ("2K2", two_k2.add_isolates(n - 4)?),
        ("book", k2pql(0, 0, n - 2)),
        ("C5", cycle(5).add_isolates(n - 5)?),
        ("K4 with pendants", hgraph(n)),
        ("K5", complete(5).add_isolates(n - 5)?),
        ("C6", cycle(6).add_isolates(n - 6)?),
    ];
    for (name, g) in graphs {
        let label = classify_small_alpha(&g);
        print!("{name:<18} alpha' {:<4} {:<18}", alpha_prime(&g).to_string(), label.to_string());
        match small_alpha_ng(&g) {
            Ok(r) => {
                println!(" {:?}: sum {} vs {} holds={} equality={}", r.clause, r.sum, r.bound, r.holds, r.equality)
            }
            Err(e) => println!(" {e}"),
        }
    }
    Ok(())
}
