//! Benchmark harness: generate instances, time each algorithm, verify the
//! outputs and render the results as CSV and as a markdown table.

use std::fmt::Write as _;
use std::time::Duration;

use crate::approx::Algorithm;
use crate::connectivity::is_2v_strongly_biconnected;
use crate::error::Error;
use crate::generator::{generate, GenConfig};
use crate::graph::DiGraph;

pub const CSV_HEADER: &str = "n,m,alg,elapsed_ms,edges_out,feasible";

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("at least one size is required")]
    NoSizes,
    #[error("at least one seed is required")]
    NoSeeds,
    #[error("at least one algorithm is required")]
    NoAlgorithms,
    #[error("repetitions must be >= 1")]
    NoRepetitions,
    #[error("sizes must be >= 4, got {0}")]
    SizeTooSmall(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    sizes: Vec<usize>,
    seeds: Vec<u64>,
    algorithms: Vec<Algorithm>,
    repetitions: usize,
}

impl BenchConfig {
    pub fn new(
        sizes: Vec<usize>,
        seeds: Vec<u64>,
        algorithms: Vec<Algorithm>,
        repetitions: usize,
    ) -> Result<Self, ConfigError> {
        if sizes.is_empty() {
            return Err(ConfigError::NoSizes);
        }
        if let Some(&n) = sizes.iter().find(|&&n| n < 4) {
            return Err(ConfigError::SizeTooSmall(n));
        }
        if seeds.is_empty() {
            return Err(ConfigError::NoSeeds);
        }
        if algorithms.is_empty() {
            return Err(ConfigError::NoAlgorithms);
        }
        if repetitions == 0 {
            return Err(ConfigError::NoRepetitions);
        }
        Ok(BenchConfig {
            sizes,
            seeds,
            algorithms,
            repetitions,
        })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn seeds(&self) -> &[u64] {
        &self.seeds
    }

    pub fn algorithms(&self) -> &[Algorithm] {
        &self.algorithms
    }

    pub fn repetitions(&self) -> usize {
        self.repetitions
    }
}

/// One algorithm run on one generated instance.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    /// Minimum over repetitions.
    pub elapsed: Duration,
    pub edges_out: usize,
    pub feasible: bool,
    pub subgraph: DiGraph,
}

impl BenchRow {
    pub fn elapsed_ms(&self) -> u128 {
        self.elapsed.as_millis()
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.m,
            self.algorithm,
            self.elapsed_ms(),
            self.edges_out,
            self.feasible
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn all_feasible(&self) -> bool {
        self.rows.iter().all(|r| r.feasible)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.csv_line());
            out.push('\n');
        }
        out
    }

    /// One line per instance; Time/Edges column pairs in the order
    /// Algorithm 2, Algorithm 3, Algorithm 1, restricted to those present.
    pub fn to_markdown(&self) -> String {
        let algs: Vec<Algorithm> = Algorithm::TABLE_ORDER
            .into_iter()
            .filter(|a| self.rows.iter().any(|r| r.algorithm == *a))
            .collect();

        let mut out = String::from("| Input (V, E) |");
        for a in &algs {
            let _ = write!(out, " {} Time | {} Edges |", a.tag(), a.tag());
        }
        out.push_str("\n|---|");
        for _ in &algs {
            out.push_str("---|---|");
        }
        out.push('\n');

        let mut instances: Vec<(usize, u64, usize)> = Vec::new();
        for r in &self.rows {
            if !instances.contains(&(r.n, r.seed, r.m)) {
                instances.push((r.n, r.seed, r.m));
            }
        }
        for (n, seed, m) in instances {
            let _ = write!(out, "| ( {n} , {m} ) |");
            for a in &algs {
                match self
                    .rows
                    .iter()
                    .find(|r| r.n == n && r.seed == seed && r.algorithm == *a)
                {
                    Some(r) => {
                        let mark = if r.feasible { "" } else { " (infeasible)" };
                        let _ = write!(out, " {} | {}{} |", format_elapsed(r.elapsed), r.edges_out, mark);
                    }
                    None => out.push_str(" - | - |"),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `12 ms`, `3.456 s` or `14 m 26 s`.
pub fn format_elapsed(d: Duration) -> String {
    let ms = d.as_millis();
    if ms < 1000 {
        format!("{ms} ms")
    } else if ms < 60_000 {
        format!("{:.3} s", d.as_secs_f64())
    } else {
        let s = d.as_secs();
        format!("{} m {} s", s / 60, s % 60)
    }
}

/// Runs `alg` `repetitions` times on `g`, keeping the fastest time, then
/// verifies the output outside the timed region.
pub fn time_algorithm(
    g: &DiGraph,
    seed: u64,
    alg: Algorithm,
    repetitions: usize,
) -> Result<BenchRow, Error> {
    let mut best: Option<(Duration, DiGraph)> = None;
    for _ in 0..repetitions.max(1) {
        let result = alg.run(g)?;
        if best.as_ref().is_none_or(|(t, _)| result.elapsed < *t) {
            best = Some((result.elapsed, result.subgraph));
        }
    }
    let (elapsed, subgraph) = best.expect("at least one repetition");
    let feasible = subgraph.is_spanning_subgraph_of(g) && is_2v_strongly_biconnected(&subgraph);
    Ok(BenchRow {
        n: g.n(),
        m: g.m(),
        seed,
        algorithm: alg,
        elapsed,
        edges_out: subgraph.m(),
        feasible,
        subgraph,
    })
}

/// Every (size, seed) pair in order; `on_row` sees each row as it finishes.
pub fn run_bench(
    config: &BenchConfig,
    mut on_row: impl FnMut(&BenchRow),
) -> Result<BenchReport, Error> {
    let mut report = BenchReport::default();
    for &n in config.sizes() {
        for &seed in config.seeds() {
            let g = generate(GenConfig::new(n, seed))?;
            for &alg in config.algorithms() {
                let row = time_algorithm(&g, seed, alg, config.repetitions())?;
                on_row(&row);
                report.rows.push(row);
            }
        }
    }
    Ok(report)
}
