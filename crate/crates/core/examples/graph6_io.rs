//! Converts between graph6 and edge lists, and draws a reproducible
//! sample of random graphs.

use fracmatch::graph::cycle;
use fracmatch::harness::{sample, SampleSpec};
use fracmatch::io::{emit_edgelist, emit_graph6, parse_any, parse_graph6};

fn main() -> fracmatch::Result<()> {
    let c5 = cycle(5);
    let code = emit_graph6(&c5);
    println!("C5 as graph6: {code}");
    print!("as an edge list:\n{}", emit_edgelist(&c5));
    assert_eq!(parse_graph6(&code)?, c5);
    assert_eq!(parse_any(&emit_edgelist(&c5))?, c5);

    let spec: SampleSpec = "12,1/3,4,7".parse()?;
    println!("sample {spec}:");
    for g in sample(spec) {
        println!("  {}  ({} edges)", emit_graph6(&g), g.edge_count());
    }
    Ok(())
}
