//! Reproduce the shape of the results table: generate instances, time all
//! three algorithms and print a markdown table.
//!
//! ```text
//! cargo run --release --example bench_table -- 10,50,100 1,2
//! ```

use twovsb::bench::{run_bench, BenchConfig};
use twovsb::Algorithm;

fn parse_list<T: std::str::FromStr>(arg: Option<String>, default: &str) -> Vec<T> {
    arg.as_deref()
        .unwrap_or(default)
        .split(',')
        .filter_map(|s| s.trim().parse().ok())
        .collect()
}

fn main() {
    let mut args = std::env::args().skip(1);
    let sizes: Vec<usize> = parse_list(args.next(), "10,50,100");
    let seeds: Vec<u64> = parse_list(args.next(), "1");

    let config = BenchConfig::new(sizes, seeds, Algorithm::ALL.to_vec(), 1)
        .expect("non-empty sizes and seeds");
    let report = run_bench(&config, |row| {
        eprintln!(
            "n={:<4} m={:<5} seed={} {} -> {} edges ({:.2} edges/vertex) in {:?}",
            row.n,
            row.m,
            row.seed,
            row.algorithm,
            row.edges_out,
            row.edges_out as f64 / row.n as f64,
            row.elapsed
        );
    })
    .expect("generated instances are valid inputs");

    print!("{}", report.to_markdown());
    if !report.all_feasible() {
        eprintln!("some outputs failed verification");
        std::process::exit(1);
    }
}
