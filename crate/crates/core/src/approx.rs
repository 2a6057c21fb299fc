//! Approximation algorithms for the minimum 2-vertex strongly biconnected
//! spanning subgraph.
//!
//! * [`algorithm1`] takes a minimal 2-vertex connected spanning subgraph and
//!   then adds edges until no b-articulation point remains.
//! * [`algorithm2`] deletes edges one at a time while the graph stays
//!   2-vertex strongly biconnected, which yields a minimal solution.
//! * [`algorithm3`] fixes a greedy degree cover first and only deletes edges
//!   outside of it.
//!
//! All scans run in canonical edge order, so results are deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::connectivity::{
    b_articulation_points_view, is_2v_strongly_biconnected, is_b_articulation_point_view,
    two_vertex_connected_bruteforce_view, SbccIndex,
};
use crate::dominators::{two_v_strongly_biconnected_fast_view, two_vertex_connected_fast_view};
use crate::error::Error;
use crate::graph::{DiGraph, Edge, VertexId};
use crate::view::View;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Alg1,
    Alg2,
    Alg3,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Alg1, Algorithm::Alg2, Algorithm::Alg3];

    /// Column order of the results table: Algorithm 2, 3, then 1.
    pub const TABLE_ORDER: [Algorithm; 3] = [Algorithm::Alg2, Algorithm::Alg3, Algorithm::Alg1];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Alg1 => "alg1",
            Algorithm::Alg2 => "alg2",
            Algorithm::Alg3 => "alg3",
        }
    }

    pub fn run(self, g: &DiGraph) -> Result<AlgoResult, Error> {
        match self {
            Algorithm::Alg1 => algorithm1(g),
            Algorithm::Alg2 => algorithm2(g),
            Algorithm::Alg3 => algorithm3(g),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm {0:?}, expected alg1, alg2 or alg3")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alg1" => Ok(Algorithm::Alg1),
            "alg2" => Ok(Algorithm::Alg2),
            "alg3" => Ok(Algorithm::Alg3),
            other => Err(UnknownAlgorithm(other.to_string())),
        }
    }
}

/// Counters collected while an algorithm runs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgoTrace {
    /// Number of b-articulation points of the minimal 2-vertex connected
    /// subgraph (Algorithm 1).
    pub l_bap_count: usize,
    pub bap_set: BTreeSet<VertexId>,
    /// Edges added by the repair loop (Algorithm 1).
    pub edges_added: usize,
    /// Edges deleted by the scan (Algorithms 2 and 3).
    pub edges_removed: usize,
    /// Size of the greedy degree cover (Algorithm 3).
    pub phase1_size: usize,
}

#[derive(Clone, Debug)]
pub struct AlgoResult {
    pub subgraph: DiGraph,
    pub algorithm: Algorithm,
    /// Wall-clock time of the algorithm proper, after input validation.
    pub elapsed: Duration,
    pub edges_out: usize,
    pub trace: AlgoTrace,
}

/// Strong articulation point routine used inside [`minimal_2vcss_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SapMethod {
    #[default]
    Dominators,
    BruteForce,
}

impl SapMethod {
    fn two_vertex_connected(self, view: View<'_>) -> bool {
        match self {
            SapMethod::Dominators => two_vertex_connected_fast_view(view),
            SapMethod::BruteForce => two_vertex_connected_bruteforce_view(view),
        }
    }
}

/// Live in/out degrees under an edge mask. Deleting an edge that leaves its
/// tail with out-degree < 2 or its head with in-degree < 2 can never keep a
/// graph on >= 3 vertices 2-vertex connected, so such edges skip the full check.
struct Degrees {
    out: Vec<usize>,
    inn: Vec<usize>,
}

impl Degrees {
    fn of(g: &DiGraph) -> Self {
        Degrees {
            out: (0..g.n()).map(|v| g.out_degree(v)).collect(),
            inn: (0..g.n()).map(|v| g.in_degree(v)).collect(),
        }
    }

    fn removable(&self, e: Edge) -> bool {
        self.out[e.tail] > 2 && self.inn[e.head] > 2
    }

    fn remove(&mut self, e: Edge) {
        self.out[e.tail] -= 1;
        self.inn[e.head] -= 1;
    }
}

/// Single pass over `candidates` in order, deleting each edge whose removal
/// keeps `keep` true. Returns the number of deletions.
fn deletion_scan(
    g: &DiGraph,
    alive: &mut [bool],
    candidates: impl Iterator<Item = usize>,
    keep: impl Fn(View<'_>) -> bool,
) -> usize {
    let mut degrees = Degrees::of(g);
    let mut removed = 0;
    for i in candidates {
        let e = g.edges()[i];
        if !degrees.removable(e) {
            continue;
        }
        alive[i] = false;
        if keep(View::masked(g, alive)) {
            degrees.remove(e);
            removed += 1;
        } else {
            alive[i] = true;
        }
    }
    removed
}

/// Minimal 2-vertex connected spanning subgraph by a single deletion scan.
pub fn minimal_2vcss(g: &DiGraph) -> Result<DiGraph, Error> {
    minimal_2vcss_with(g, SapMethod::default())
}

pub fn minimal_2vcss_with(g: &DiGraph, method: SapMethod) -> Result<DiGraph, Error> {
    if !method.two_vertex_connected(View::full(g)) {
        return Err(Error::Not2VertexConnected);
    }
    let mut alive = vec![true; g.m()];
    deletion_scan(g, &mut alive, 0..g.m(), |v| method.two_vertex_connected(v));
    Ok(g.masked(&alive))
}

fn require_2vsb(g: &DiGraph) -> Result<(), Error> {
    if is_2v_strongly_biconnected(g) {
        Ok(())
    } else {
        Err(Error::Not2vStronglyBiconnected)
    }
}

fn finish(
    g: &DiGraph,
    alive: &[bool],
    algorithm: Algorithm,
    start: Instant,
    trace: AlgoTrace,
) -> AlgoResult {
    let subgraph = g.masked(alive);
    let elapsed = start.elapsed();
    AlgoResult {
        edges_out: subgraph.m(),
        subgraph,
        algorithm,
        elapsed,
        trace,
    }
}

/// Minimal 2-vertex connected subgraph, then repair of b-articulation points.
///
/// For each b-articulation point `v` (ascending), while `v` remains one, the
/// first unused edge `(w, x)` of the input (canonical order, not incident to
/// `v`) whose endpoints lie in different strongly biconnected components of
/// the current subgraph minus `v` is added.
pub fn algorithm1(g: &DiGraph) -> Result<AlgoResult, Error> {
    require_2vsb(g)?;
    let start = Instant::now();

    let mut alive = vec![true; g.m()];
    deletion_scan(g, &mut alive, 0..g.m(), two_vertex_connected_fast_view);

    let bap_set = b_articulation_points_view(View::masked(g, &alive));
    let mut trace = AlgoTrace {
        l_bap_count: bap_set.len(),
        bap_set,
        ..AlgoTrace::default()
    };

    for &v in &trace.bap_set {
        while is_b_articulation_point_view(View::masked(g, &alive), v) {
            let index = SbccIndex::new(View::masked(g, &alive).without(v));
            let pick = g.edges().iter().enumerate().position(|(i, e)| {
                !alive[i] && !e.touches(v) && !index.same(e.tail, e.head)
            });
            match pick {
                Some(i) => {
                    alive[i] = true;
                    trace.edges_added += 1;
                }
                None => return Err(Error::RepairStalled(v)),
            }
        }
    }

    Ok(finish(g, &alive, Algorithm::Alg1, start, trace))
}

/// Delete every edge whose removal keeps the graph 2-vertex strongly
/// biconnected, in one pass.
pub fn algorithm2(g: &DiGraph) -> Result<AlgoResult, Error> {
    require_2vsb(g)?;
    let start = Instant::now();
    let mut alive = vec![true; g.m()];
    let removed = deletion_scan(g, &mut alive, 0..g.m(), two_v_strongly_biconnected_fast_view);
    let trace = AlgoTrace {
        edges_removed: removed,
        ..AlgoTrace::default()
    };
    Ok(finish(g, &alive, Algorithm::Alg2, start, trace))
}

/// Edges picked by one canonical-order scan: an edge is taken when its tail
/// has no chosen out-edge yet or its head no chosen in-edge.
pub fn greedy_degree_cover(g: &DiGraph) -> Result<Vec<Edge>, Error> {
    let mask = greedy_cover_mask(g)?;
    Ok(g.edges()
        .iter()
        .zip(&mask)
        .filter(|&(_, &taken)| taken)
        .map(|(&e, _)| e)
        .collect())
}

fn greedy_cover_mask(g: &DiGraph) -> Result<Vec<bool>, Error> {
    if let Some(v) = (0..g.n()).find(|&v| g.out_degree(v) == 0 || g.in_degree(v) == 0) {
        return Err(Error::DegreeZero(v));
    }
    let mut has_out = vec![false; g.n()];
    let mut has_in = vec![false; g.n()];
    Ok(g.edges()
        .iter()
        .map(|e| {
            let take = !has_out[e.tail] || !has_in[e.head];
            if take {
                has_out[e.tail] = true;
                has_in[e.head] = true;
            }
            take
        })
        .collect())
}

/// Greedy degree cover, then a deletion scan restricted to the other edges.
pub fn algorithm3(g: &DiGraph) -> Result<AlgoResult, Error> {
    require_2vsb(g)?;
    let start = Instant::now();
    let cover = greedy_cover_mask(g)?;
    let mut alive = vec![true; g.m()];
    let candidates = (0..g.m()).filter(|&i| !cover[i]);
    let removed = deletion_scan(g, &mut alive, candidates, two_v_strongly_biconnected_fast_view);
    let trace = AlgoTrace {
        edges_removed: removed,
        phase1_size: cover.iter().filter(|&&c| c).count(),
        ..AlgoTrace::default()
    };
    Ok(finish(g, &alive, Algorithm::Alg3, start, trace))
}
