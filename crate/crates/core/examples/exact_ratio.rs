//! Compare the approximation algorithms against exhaustively computed optima
//! on small random instances.
//!
//! ```text
//! cargo run --release --example exact_ratio -- 60 2024
//! ```

use twovsb::oracle::{exact_min_2vsb, small_instance_suite};
use twovsb::{fixtures, Algorithm};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(60);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2024);

    let bk4 = exact_min_2vsb(&fixtures::bk4()).expect("BK4 is small and feasible");
    println!(
        "BK4: optimum {} edges, witness {}",
        bk4.opt_size,
        bk4.witness.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    );

    let suite = small_instance_suite(count, seed);
    println!("{} instances with n in {{4, 5}}", suite.len());
    for alg in Algorithm::ALL {
        let ratios: Vec<f64> = suite
            .iter()
            .map(|(g, exact)| {
                let r = alg.run(g).expect("suite instances are feasible");
                r.edges_out as f64 / exact.opt_size as f64
            })
            .collect();
        let worst = ratios.iter().copied().fold(0.0, f64::max);
        let mean = ratios.iter().sum::<f64>() / ratios.len().max(1) as f64;
        let optimal = ratios.iter().filter(|&&r| r == 1.0).count();
        println!("{alg}: worst ratio {worst:.3}, mean {mean:.3}, optimal on {optimal}/{}", ratios.len());
    }
}
