//! Small named graphs used throughout the tests and examples.

use crate::graph::DiGraph;

fn lit(n: usize, edges: &[(usize, usize)]) -> DiGraph {
    DiGraph::build(n, edges.iter().copied()).expect("fixture literal is a valid graph")
}

/// Directed 4-cycle 0→1→2→3→0.
pub fn c4() -> DiGraph {
    lit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
}

/// Complete bidirected graph on `n` vertices, edges in lexicographic order.
pub fn bidirected_complete(n: usize) -> DiGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    lit(n, &edges)
}

/// All 12 ordered pairs on 4 vertices.
pub fn bk4() -> DiGraph {
    bidirected_complete(4)
}

/// Two 2-cycles joined by a 4-cycle; 8 edges on 4 vertices, sitting on the 2n floor.
pub fn oct8() -> DiGraph {
    lit(
        4,
        &[
            (0, 1),
            (1, 0),
            (2, 3),
            (3, 2),
            (1, 2),
            (2, 0),
            (0, 3),
            (3, 1),
        ],
    )
}

/// Two directed triangles sharing vertex 0.
pub fn bowtie() -> DiGraph {
    lit(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

/// `bowtie` with every edge in both directions.
pub fn bbowtie() -> DiGraph {
    let pairs = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)];
    let edges: Vec<_> = pairs.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    lit(5, &edges)
}

pub fn diamond() -> DiGraph {
    lit(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 0)])
}

pub fn chain4() -> DiGraph {
    lit(4, &[(0, 1), (1, 2), (2, 3)])
}
