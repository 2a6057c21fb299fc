//! Exhaustive minimum 2-vertex strongly biconnected spanning subgraphs for
//! tiny graphs, used as ground truth for approximation ratios.

use crate::connectivity::{is_2v_strongly_biconnected, two_v_strongly_biconnected_view};
use crate::error::Error;
use crate::generator::{generate, GenConfig, SplitMix64};
use crate::graph::DiGraph;
use crate::view::View;

/// Largest edge count [`exact_min_2vsb`] accepts.
pub const EXACT_EDGE_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub opt_size: usize,
    /// The lexicographically smallest optimal edge-index subset.
    pub witness: DiGraph,
}

/// Tries subsets by increasing size from `2n`, each size in lexicographic
/// order of edge indices, pruning any branch where some vertex can no longer
/// reach in- and out-degree 2.
pub fn exact_min_2vsb(g: &DiGraph) -> Result<ExactResult, Error> {
    if g.m() > EXACT_EDGE_LIMIT {
        return Err(Error::TooManyEdges {
            m: g.m(),
            limit: EXACT_EDGE_LIMIT,
        });
    }
    if !is_2v_strongly_biconnected(g) {
        return Err(Error::Not2vStronglyBiconnected);
    }
    for size in 2 * g.n()..=g.m() {
        let mut search = Search::new(g, size);
        if search.run(0) {
            return Ok(ExactResult {
                opt_size: size,
                witness: g.masked(&search.chosen),
            });
        }
    }
    unreachable!("the full edge set qualifies")
}

struct Search<'a> {
    g: &'a DiGraph,
    size: usize,
    chosen: Vec<bool>,
    picked: usize,
    out_have: Vec<usize>,
    in_have: Vec<usize>,
    // edges at index >= the current position, per endpoint
    out_left: Vec<usize>,
    in_left: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a DiGraph, size: usize) -> Self {
        Search {
            g,
            size,
            chosen: vec![false; g.m()],
            picked: 0,
            out_have: vec![0; g.n()],
            in_have: vec![0; g.n()],
            out_left: (0..g.n()).map(|v| g.out_degree(v)).collect(),
            in_left: (0..g.n()).map(|v| g.in_degree(v)).collect(),
        }
    }

    fn feasible_bound(&self, v: usize) -> bool {
        self.out_have[v] + self.out_left[v] >= 2 && self.in_have[v] + self.in_left[v] >= 2
    }

    fn run(&mut self, i: usize) -> bool {
        if self.picked == self.size {
            return (0..self.g.n()).all(|v| self.out_have[v] >= 2 && self.in_have[v] >= 2)
                && two_v_strongly_biconnected_view(View::masked(self.g, &self.chosen));
        }
        if i == self.g.m() || self.picked + (self.g.m() - i) < self.size {
            return false;
        }
        let e = self.g.edges()[i];
        self.out_left[e.tail] -= 1;
        self.in_left[e.head] -= 1;

        self.chosen[i] = true;
        self.picked += 1;
        self.out_have[e.tail] += 1;
        self.in_have[e.head] += 1;
        if self.run(i + 1) {
            return true;
        }
        self.chosen[i] = false;
        self.picked -= 1;
        self.out_have[e.tail] -= 1;
        self.in_have[e.head] -= 1;

        if self.feasible_bound(e.tail) && self.feasible_bound(e.head) && self.run(i + 1) {
            return true;
        }
        self.out_left[e.tail] += 1;
        self.in_left[e.head] += 1;
        false
    }
}

/// `count` generated instances with n drawn from {4, 5}, each solved exactly.
pub fn small_instance_suite(count: usize, seed: u64) -> Vec<(DiGraph, ExactResult)> {
    small_instance_suite_sized(count, seed, &[4, 5])
}

/// Like [`small_instance_suite`] with n drawn uniformly from `sizes`.
/// Instances over [`EXACT_EDGE_LIMIT`] are skipped and replaced.
pub fn small_instance_suite_sized(
    count: usize,
    seed: u64,
    sizes: &[usize],
) -> Vec<(DiGraph, ExactResult)> {
    assert!(!sizes.is_empty(), "sizes must be non-empty");
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let max_attempts = count.saturating_mul(20).max(20);
    for _ in 0..max_attempts {
        if out.len() == count {
            break;
        }
        let n = sizes[rng.below(sizes.len() as u64).expect("non-empty") as usize];
        let instance_seed = rng.next_u64();
        let Ok(g) = generate(GenConfig::new(n, instance_seed)) else {
            continue;
        };
        if let Ok(exact) = exact_min_2vsb(&g) {
            out.push((g, exact));
        }
    }
    out
}
