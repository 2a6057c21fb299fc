//! Connectivity verdicts for the built-in fixtures, or for a graph file given
//! on the command line.
//!
//! ```text
//! cargo run --example inspect_connectivity
//! cargo run --example inspect_connectivity -- graph.txt
//! ```

use twovsb::connectivity::{
    b_articulation_points, blocks, is_2v_strongly_biconnected, is_2vertex_connected,
    is_strongly_biconnected, is_strongly_connected, scc,
};
use twovsb::{fixtures, DiGraph};

fn report(name: &str, g: &DiGraph) {
    println!("{name}: n={} m={}", g.n(), g.m());
    println!("  strongly connected components: {:?}", scc(g).classes());
    println!("  blocks of the underlying graph: {:?}", blocks(&g.underlying()).blocks);
    println!("  strongly connected:            {}", is_strongly_connected(g));
    println!("  strongly biconnected:          {}", is_strongly_biconnected(g));
    println!("  2-vertex connected:            {}", is_2vertex_connected(g));
    println!("  2-vertex strongly biconnected: {}", is_2v_strongly_biconnected(g));
    match b_articulation_points(g) {
        Ok(set) => println!("  b-articulation points:         {set:?}"),
        Err(e) => println!("  b-articulation points:         n/a ({e})"),
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| {
            eprintln!("cannot read {path}: {e}");
            std::process::exit(1);
        });
        match DiGraph::parse(&text) {
            Ok(g) => report(&path, &g),
            Err(e) => {
                eprintln!("{path}: {e}");
                std::process::exit(1);
            }
        }
        return;
    }
    let named = [
        ("C4", fixtures::c4()),
        ("BK4", fixtures::bk4()),
        ("OCT8", fixtures::oct8()),
        ("BOWTIE", fixtures::bowtie()),
        ("BBOWTIE", fixtures::bbowtie()),
        ("DIAMOND", fixtures::diamond()),
        ("CHAIN4", fixtures::chain4()),
    ];
    for (name, g) in &named {
        report(name, g);
    }
}
