//! Run the three approximation algorithms on one instance and compare sizes,
//! times and algorithm-specific counters.
//!
//! ```text
//! cargo run --release --example approximate -- 100 1
//! cargo run --release --example approximate -- graph.txt
//! ```

use twovsb::connectivity::is_2v_strongly_biconnected;
use twovsb::generator::{generate, GenConfig};
use twovsb::{Algorithm, DiGraph};

fn load() -> Result<DiGraph, String> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(|a| a.parse::<usize>()) {
        Some(Ok(n)) => {
            let seed = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1);
            generate(GenConfig::new(n, seed)).map_err(|e| e.to_string())
        }
        Some(Err(_)) => {
            let text = std::fs::read_to_string(&args[0]).map_err(|e| e.to_string())?;
            DiGraph::parse(&text).map_err(|e| e.to_string())
        }
        None => generate(GenConfig::new(50, 1)).map_err(|e| e.to_string()),
    }
}

fn main() {
    let g = load().unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(1);
    });
    println!("input: n={} m={}", g.n(), g.m());
    for alg in Algorithm::ALL {
        let r = match alg.run(&g) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{alg}: {e}");
                std::process::exit(1);
            }
        };
        println!(
            "{alg}: {} edges ({:.3} per vertex) in {:?}, feasible {}",
            r.edges_out,
            r.edges_out as f64 / g.n() as f64,
            r.elapsed,
            is_2v_strongly_biconnected(&r.subgraph)
        );
        match alg {
            Algorithm::Alg1 => println!(
                "  b-articulation points after the 2-vertex connected phase: {:?}, repair edges: {}",
                r.trace.bap_set, r.trace.edges_added
            ),
            Algorithm::Alg2 => println!("  edges removed: {}", r.trace.edges_removed),
            Algorithm::Alg3 => println!(
                "  degree cover: {} edges, further edges removed: {}",
                r.trace.phase1_size, r.trace.edges_removed
            ),
        }
    }
}
