//! Generate a seeded random 2-vertex strongly biconnected instance and print
//! it in the text format.
//!
//! ```text
//! cargo run --example generate_instance -- 20 7 > g20.txt
//! ```

use twovsb::connectivity::is_2v_strongly_biconnected;
use twovsb::generator::{generate, GenConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    let g = generate(GenConfig::new(n, seed)).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(1);
    });
    eprintln!(
        "n={} m={} ({:.2} edges/vertex), 2-vertex strongly biconnected: {}",
        g.n(),
        g.m(),
        g.m() as f64 / g.n() as f64,
        is_2v_strongly_biconnected(&g)
    );
    print!("{}", g.serialize());
}
