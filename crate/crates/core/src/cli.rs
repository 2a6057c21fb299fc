//! The `twovsb` command line: `gen`, `run`, `check` and `bench`.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use crate::approx::Algorithm;
use crate::bench::{self, BenchConfig, BenchReport, ConfigError, CSV_HEADER};
use crate::connectivity::{
    b_articulation_points, is_2v_strongly_biconnected, is_2vertex_connected,
    is_strongly_biconnected, is_strongly_connected, strong_articulation_points_bruteforce,
};
use crate::error::{Error, ParseError};
use crate::generator::{generate, GenConfig};
use crate::graph::DiGraph;
use crate::oracle::exact_min_2vsb;

#[derive(Debug, Parser)]
#[command(name = "twovsb", version, about = "Sparse 2-vertex strongly biconnected spanning subgraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random 2-vertex strongly biconnected graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one or all algorithms on a graph file.
    Run {
        #[arg(long, value_enum, default_value_t = AlgChoice::All)]
        alg: AlgChoice,
        #[arg(long = "in")]
        input: PathBuf,
        /// Subgraph output file. With `--alg all`, the algorithm tag is
        /// inserted before the extension.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Report connectivity verdicts, optionally verifying a subgraph.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        subgraph: Option<PathBuf>,
        /// Also require the subgraph to be edge-minimal.
        #[arg(long)]
        minimal: bool,
        /// Report the exact optimum (small graphs only).
        #[arg(long)]
        exact: bool,
    },
    /// Generate instances, time the algorithms and emit a results table.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "alg1,alg2,alg3")]
        algs: Vec<String>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, default_value = "bench.csv")]
        csv: PathBuf,
        #[arg(long)]
        markdown: Option<PathBuf>,
        /// Directory for the output subgraph of every row.
        #[arg(long)]
        subgraph_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgChoice {
    Alg1,
    Alg2,
    Alg3,
    All,
}

impl AlgChoice {
    fn algorithms(self) -> Vec<Algorithm> {
        match self {
            AlgChoice::Alg1 => vec![Algorithm::Alg1],
            AlgChoice::Alg2 => vec![Algorithm::Alg2],
            AlgChoice::Alg3 => vec![Algorithm::Alg3],
            AlgChoice::All => Algorithm::ALL.to_vec(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Algorithm(#[from] Error),
    #[error("{0}\n\n{1}")]
    Usage(ConfigError, String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Output(#[from] io::Error),
}

/// Parses `args`, runs the command, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen { n, seed, out: path } => cmd_gen(n, seed, path.as_deref(), out),
        Command::Run {
            alg,
            input,
            out: path,
            csv,
        } => cmd_run(alg, &input, path.as_deref(), csv, out),
        Command::Check {
            input,
            subgraph,
            minimal,
            exact,
        } => cmd_check(&input, subgraph.as_deref(), minimal, exact, out),
        Command::Bench {
            sizes,
            seeds,
            algs,
            reps,
            csv,
            markdown,
            subgraph_dir,
        } => {
            let algorithms = algs
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<Algorithm>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Failed(e.to_string()))?;
            let config = BenchConfig::new(sizes, seeds, algorithms, reps).map_err(|e| {
                let usage = Cli::command()
                    .find_subcommand_mut("bench")
                    .map(|c| c.render_usage().to_string())
                    .unwrap_or_default();
                CliError::Usage(e, usage)
            })?;
            cmd_bench(&config, &csv, markdown.as_deref(), subgraph_dir.as_deref(), out)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<DiGraph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    DiGraph::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn cmd_gen(n: usize, seed: u64, path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    let g = generate(GenConfig::new(n, seed))?;
    match path {
        Some(path) => {
            write_file(path, &g.serialize())?;
            writeln!(out, "{} {}", g.n(), g.m())?;
        }
        None => out.write_all(g.serialize().as_bytes())?,
    }
    Ok(())
}

/// `out.txt` with tag `alg1` becomes `out.alg1.txt`.
fn tagged_path(path: &Path, tag: &str) -> PathBuf {
    let stem = path.file_stem().unwrap_or_default().to_string_lossy();
    let name = match path.extension() {
        Some(ext) => format!("{stem}.{tag}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{tag}"),
    };
    path.with_file_name(name)
}

pub fn cmd_run(
    choice: AlgChoice,
    input: &Path,
    path: Option<&Path>,
    csv: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let g = read_graph(input)?;
    if !is_2v_strongly_biconnected(&g) {
        return Err(Error::Not2vStronglyBiconnected.into());
    }
    let algorithms = choice.algorithms();
    let mut report = BenchReport::default();
    for alg in &algorithms {
        let row = bench::time_algorithm(&g, 0, *alg, 1)?;
        if let Some(path) = path {
            let target = if algorithms.len() == 1 {
                path.to_path_buf()
            } else {
                tagged_path(path, alg.tag())
            };
            write_file(&target, &row.subgraph.serialize())?;
        }
        report.rows.push(row);
    }

    if csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for row in &report.rows {
        if csv {
            writeln!(out, "{}", row.csv_line())?;
        } else {
            writeln!(
                out,
                "{}: edges_out={} elapsed_ms={} feasible={}",
                row.algorithm,
                row.edges_out,
                row.elapsed_ms(),
                row.feasible
            )?;
        }
    }
    if !report.all_feasible() {
        return Err(CliError::Failed("an algorithm produced an infeasible subgraph".into()));
    }
    Ok(())
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    format!("{s:?}")
}

pub fn cmd_check(
    input: &Path,
    subgraph: Option<&Path>,
    minimal: bool,
    exact: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let g = read_graph(input)?;
    writeln!(out, "n={} m={}", g.n(), g.m())?;
    writeln!(out, "strongly_connected: {}", is_strongly_connected(&g))?;
    writeln!(out, "strongly_biconnected: {}", is_strongly_biconnected(&g))?;
    writeln!(out, "2vertex_connected: {}", is_2vertex_connected(&g))?;
    writeln!(out, "2v_strongly_biconnected: {}", is_2v_strongly_biconnected(&g))?;
    match strong_articulation_points_bruteforce(&g) {
        Ok(s) => writeln!(out, "strong_articulation_points: {}", fmt_set(&s))?,
        Err(e) => writeln!(out, "strong_articulation_points: n/a ({e})")?,
    }
    match b_articulation_points(&g) {
        Ok(s) => writeln!(out, "b_articulation_points: {}", fmt_set(&s))?,
        Err(e) => writeln!(out, "b_articulation_points: n/a ({e})")?,
    }

    let mut failures = Vec::new();
    if let Some(sub_path) = subgraph {
        let h = read_graph(sub_path)?;
        let spanning = h.n() == g.n();
        let subset = h.edges().iter().all(|&e| g.contains_edge(e));
        if !subset {
            return Err(CliError::Failed(format!(
                "{} is not a subgraph of {}",
                sub_path.display(),
                input.display()
            )));
        }
        let feasible = is_2v_strongly_biconnected(&h);
        writeln!(out, "subgraph_subset: {subset}")?;
        writeln!(out, "subgraph_spanning: {spanning}")?;
        writeln!(out, "subgraph_2v_strongly_biconnected: {feasible}")?;
        writeln!(out, "subgraph_edges: {}", h.m())?;
        if !spanning {
            failures.push("subgraph is not spanning");
        }
        if !feasible {
            failures.push("subgraph is not 2-vertex strongly biconnected");
        }
        if minimal {
            let is_minimal = feasible
                && h
                    .edges()
                    .iter()
                    .all(|&e| !is_2v_strongly_biconnected(&h.delete_edge(e).expect("edge of h")));
            writeln!(out, "subgraph_minimal: {is_minimal}")?;
            if !is_minimal {
                failures.push("subgraph is not minimal");
            }
        }
    }
    if exact {
        let r = exact_min_2vsb(&g)?;
        writeln!(out, "opt_size: {}", r.opt_size)?;
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(failures.join("; ")))
    }
}

pub fn cmd_bench(
    config: &BenchConfig,
    csv_path: &Path,
    markdown_path: Option<&Path>,
    subgraph_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let report = bench::run_bench(config, |row| {
        eprintln!(
            "n={} seed={} {} edges_out={} elapsed={} feasible={}",
            row.n,
            row.seed,
            row.algorithm,
            row.edges_out,
            bench::format_elapsed(row.elapsed),
            row.feasible
        );
    })?;
    let markdown = report.to_markdown();
    out.write_all(markdown.as_bytes())?;
    write_file(csv_path, &report.to_csv())?;
    if let Some(path) = markdown_path {
        write_file(path, &markdown)?;
    }
    if let Some(dir) = subgraph_dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        for row in &report.rows {
            let name = format!("n{}_s{}_{}.txt", row.n, row.seed, row.algorithm);
            write_file(&dir.join(name), &row.subgraph.serialize())?;
        }
    }
    if !report.all_feasible() {
        return Err(CliError::Failed("some rows are infeasible".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tagged_paths() {
        assert_eq!(tagged_path(Path::new("d/out.txt"), "alg1"), PathBuf::from("d/out.alg1.txt"));
        assert_eq!(tagged_path(Path::new("out"), "alg3"), PathBuf::from("out.alg3"));
    }

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from(["twovsb", "bench", "--sizes", "10,50", "--seeds", "1,2,3"]).unwrap();
        match cli.command {
            Command::Bench { sizes, seeds, algs, .. } => {
                assert_eq!(sizes, vec![10, 50]);
                assert_eq!(seeds, vec![1, 2, 3]);
                assert_eq!(algs, vec!["alg1", "alg2", "alg3"]);
            }
            other => panic!("{other:?}"),
        }
        assert!(Cli::try_parse_from(["twovsb", "run", "--alg", "alg4", "--in", "x"]).is_err());
    }

    #[test]
    fn gen_to_stdout() {
        let mut buf = Vec::new();
        cmd_gen(4, 7, None, &mut buf).unwrap();
        let g = DiGraph::parse(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(g.m(), 12);
        let err = cmd_gen(3, 1, None, &mut buf).unwrap_err();
        assert!(err.to_string().contains("n must be >= 4"));
    }
}
