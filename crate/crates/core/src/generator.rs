//! Seeded construction of random 2-vertex strongly biconnected graphs.
//!
//! Start from `min(3n, n(n-1))` distinct random edges, then keep adding random
//! edges one at a time until the graph is 2-vertex strongly biconnected. The
//! random source is splitmix64, so a `(n, seed)` pair names the same graph on
//! every platform.

use std::collections::HashSet;

use crate::connectivity::is_2v_strongly_biconnected;
use crate::error::Error;
use crate::graph::{DiGraph, Edge};

/// splitmix64 generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `next_u64() % k`. The modulo bias is accepted; `k` is at most n(n-1).
    pub fn below(&mut self, k: u64) -> Result<u64, Error> {
        if k == 0 {
            return Err(Error::EmptyRange);
        }
        Ok(self.next_u64() % k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub n: usize,
    pub seed: u64,
}

impl GenConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        GenConfig { n, seed }
    }
}

struct EdgeDraw {
    rng: SplitMix64,
    n: u64,
    seen: HashSet<Edge>,
    edges: Vec<Edge>,
}

impl EdgeDraw {
    /// Appends one new edge, rejecting self-loops and repeats.
    fn add_one(&mut self) {
        loop {
            let u = self.rng.below(self.n).expect("n >= 4") as usize;
            let v = self.rng.below(self.n).expect("n >= 4") as usize;
            if u == v {
                continue;
            }
            let e = Edge::new(u, v);
            if self.seen.insert(e) {
                self.edges.push(e);
                return;
            }
        }
    }
}

pub fn generate(cfg: GenConfig) -> Result<DiGraph, Error> {
    let n = cfg.n;
    if n < 4 {
        return Err(Error::GeneratorSize(n));
    }
    let initial = (3 * n).min(n * (n - 1));
    let mut draw = EdgeDraw {
        rng: SplitMix64::new(cfg.seed),
        n: n as u64,
        seen: HashSet::with_capacity(initial * 2),
        edges: Vec::with_capacity(initial * 2),
    };
    while draw.edges.len() < initial {
        draw.add_one();
    }
    loop {
        let g = DiGraph::from_valid_edges(n, draw.edges.clone());
        if is_2v_strongly_biconnected(&g) {
            return Ok(g);
        }
        draw.add_one();
    }
}
