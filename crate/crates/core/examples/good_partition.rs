//! Builds the four-part partition of a graph from its optimal fractional
//! matching and checks the exchange properties.

use fracmatch::graph::{k2pql, star};
use fracmatch::io::emit_graph6;
use fracmatch::partition::{good_partition, verify_partition};
use fracmatch::Graph;

fn show(name: &str, g: &Graph) -> fracmatch::Result<()> {
    let p = good_partition(g)?;
    println!("{name} ({})", emit_graph6(g));
    println!("  t = {}, s = {}", p.t, p.s);
    println!("  V11 {:?}  V12 {:?}", p.v11.to_vec(), p.v12.to_vec());
    println!("  V21 {:?}  V22 {:?}", p.v21.to_vec(), p.v22.to_vec());
    println!("  X {:?}, pairing {:?}", p.x.to_vec(), p.pairing);
    let report = verify_partition(g, &p);
    if report.all_hold() {
        println!("  all five properties hold");
    } else {
        println!("  failing: {:?}", report.failures());
    }
    Ok(())
}

fn main() -> fracmatch::Result<()> {
    show("K_{1,7}", &star(8))?;
    show("double star K2(3,3;0)", &k2pql(3, 3, 0))?;
    let pendant = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])?;
    show("C4 with a pendant", &pendant)
}
