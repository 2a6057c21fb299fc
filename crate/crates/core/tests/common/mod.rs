//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library's connectivity code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use twovsb::generator::SplitMix64;
use twovsb::{DiGraph, Edge};

/// Reachability matrix by Floyd–Warshall over the vertices in `alive`.
#[allow(clippy::needless_range_loop)]
pub fn closure(n: usize, edges: &[(usize, usize)], alive: &[bool]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for v in 0..n {
        r[v][v] = alive[v];
    }
    for &(u, v) in edges {
        if alive[u] && alive[v] {
            r[u][v] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

fn edge_pairs(g: &DiGraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.tail, e.head)).collect()
}

fn strongly_connected_masked(n: usize, edges: &[(usize, usize)], alive: &[bool]) -> bool {
    let r = closure(n, edges, alive);
    (0..n)
        .filter(|&u| alive[u])
        .all(|u| (0..n).filter(|&v| alive[v]).all(|v| r[u][v]))
}

fn find(p: &mut Vec<usize>, x: usize) -> usize {
    if p[x] != x {
        let root = find(p, p[x]);
        p[x] = root;
    }
    p[x]
}

/// Connectedness of the undirected graph on `alive` vertices via union-find.
fn connected_masked(n: usize, edges: &[(usize, usize)], alive: &[bool]) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        if alive[u] && alive[v] {
            let (a, b) = (find(&mut p, u), find(&mut p, v));
            p[a] = b;
        }
    }
    let roots: BTreeSet<usize> = (0..n).filter(|&v| alive[v]).map(|v| find(&mut p, v)).collect();
    roots.len() <= 1
}

/// Biconnectivity with the crate's small-n conventions, by deleting every
/// vertex and testing connectivity.
fn biconnected_masked(n: usize, edges: &[(usize, usize)], alive: &[bool]) -> bool {
    let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    match live.len() {
        0 | 1 => true,
        2 => edges
            .iter()
            .any(|&(u, v)| alive[u] && alive[v]),
        _ => {
            connected_masked(n, edges, alive)
                && live.iter().all(|&x| {
                    let mut a = alive.to_vec();
                    a[x] = false;
                    connected_masked(n, edges, &a)
                })
        }
    }
}

fn sb_masked(n: usize, edges: &[(usize, usize)], alive: &[bool]) -> bool {
    strongly_connected_masked(n, edges, alive) && biconnected_masked(n, edges, alive)
}

pub fn ref_strongly_connected(g: &DiGraph) -> bool {
    strongly_connected_masked(g.n(), &edge_pairs(g), &vec![true; g.n()])
}

pub fn ref_biconnected(g: &DiGraph) -> bool {
    biconnected_masked(g.n(), &edge_pairs(g), &vec![true; g.n()])
}

pub fn ref_strongly_biconnected(g: &DiGraph) -> bool {
    sb_masked(g.n(), &edge_pairs(g), &vec![true; g.n()])
}

fn without(n: usize, v: usize) -> Vec<bool> {
    (0..n).map(|u| u != v).collect()
}

pub fn ref_2v_strongly_biconnected(g: &DiGraph) -> bool {
    let e = edge_pairs(g);
    g.n() >= 4
        && sb_masked(g.n(), &e, &vec![true; g.n()])
        && (0..g.n()).all(|v| sb_masked(g.n(), &e, &without(g.n(), v)))
}

pub fn ref_sap(g: &DiGraph) -> BTreeSet<usize> {
    let e = edge_pairs(g);
    (0..g.n())
        .filter(|&v| !strongly_connected_masked(g.n(), &e, &without(g.n(), v)))
        .collect()
}

pub fn ref_bap(g: &DiGraph) -> BTreeSet<usize> {
    let e = edge_pairs(g);
    (0..g.n())
        .filter(|&v| !sb_masked(g.n(), &e, &without(g.n(), v)))
        .collect()
}

/// Whether `d` dominates `v` from `root`: `v` unreachable once `d` is gone.
pub fn ref_dominates(g: &DiGraph, root: usize, d: usize, v: usize) -> bool {
    if d == v || d == root {
        return true;
    }
    let r = closure(g.n(), &edge_pairs(g), &without(g.n(), d));
    !r[root][v]
}

/// Minimum feasible subgraph size by plain enumeration of every edge mask.
pub fn brute_force_opt(g: &DiGraph) -> usize {
    let m = g.m();
    assert!(m <= 20, "brute force limited to 20 edges");
    let edges = edge_pairs(g);
    let mut best = usize::MAX;
    for mask in 0u32..(1 << m) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let sub: Vec<(usize, usize)> =
            (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let h = DiGraph::build(g.n(), sub).unwrap();
        if ref_2v_strongly_biconnected(&h) {
            best = size;
        }
    }
    best
}

/// Random simple graph with each ordered pair present with probability `p`.
pub fn random_graph(rng: &mut SplitMix64, n: usize, p: f64) -> DiGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && (rng.next_u64() as f64 / u64::MAX as f64) < p {
                edges.push(Edge::new(u, v));
            }
        }
    }
    DiGraph::build(n, edges).unwrap()
}

/// Random strongly connected graph: a random Hamiltonian cycle plus
/// `extra` random edges, in shuffled order.
pub fn random_strongly_connected(rng: &mut SplitMix64, n: usize, extra: usize) -> DiGraph {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1).unwrap() as usize;
        perm.swap(i, j);
    }
    let mut set = BTreeSet::new();
    let mut edges = Vec::new();
    for i in 0..n {
        let e = Edge::new(perm[i], perm[(i + 1) % n]);
        set.insert(e);
        edges.push(e);
    }
    let cap = n * (n - 1);
    let target = (n + extra).min(cap);
    while edges.len() < target {
        let u = rng.below(n as u64).unwrap() as usize;
        let v = rng.below(n as u64).unwrap() as usize;
        let e = Edge::new(u, v);
        if u != v && set.insert(e) {
            edges.push(e);
        }
    }
    for i in (1..edges.len()).rev() {
        let j = rng.below(i as u64 + 1).unwrap() as usize;
        edges.swap(i, j);
    }
    DiGraph::build(n, edges).unwrap()
}
