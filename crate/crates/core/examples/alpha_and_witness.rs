//! Computes `α′` of a graph three ways and prints an optimal fractional
//! matching in normal form.
//!
//!     cargo run --example alpha_and_witness -- 'Dhc'

use fracmatch::bipartite::max_bipartite_matching;
use fracmatch::fm::{berge_deficiency, double_cover, HalfComponent};
use fracmatch::io::{emit_graph6, parse_any};
use fracmatch::oracle::{oracle_alpha_exhaustive, ORACLE_EDGE_LIMIT};
use fracmatch::{alpha_prime, canonicalize_fm, extract_fm};

fn main() -> fracmatch::Result<()> {
    // C5 plus a disjoint cherry by default
    let text = std::env::args().nth(1).unwrap_or_else(|| "8\n0 1\n1 2\n2 3\n3 4\n4 0\n5 6\n6 7\n".into());
    let g = parse_any(&text)?;
    let n = g.order();
    println!("graph {} on {n} vertices, {} edges", emit_graph6(&g), g.edge_count());

    let alpha = alpha_prime(&g);
    let cover = max_bipartite_matching(&double_cover(&g)).size();
    println!("alpha' = {alpha} (double cover matching {cover})");

    let w = berge_deficiency(&g);
    println!("deficiency {} at S = {:?}, giving {}", w.deficiency, w.set.to_vec(), w.alpha(n));
    if g.edge_count() <= ORACLE_EDGE_LIMIT {
        println!("oracle over {{0, 1/2, 1}}: {}", oracle_alpha_exhaustive(&g)?);
    }

    let f = canonicalize_fm(&g, &extract_fm(&g))?;
    for (u, v) in f.one_edges() {
        println!("  {u}-{v}: 1");
    }
    for comp in f.half_components() {
        if let HalfComponent::Cycle(c) = comp {
            println!("  odd cycle {c:?} at 1/2");
        }
    }
    println!("unweighted: {:?}", f.unweighted().to_vec());
    Ok(())
}
