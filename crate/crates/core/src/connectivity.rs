//! Connectivity predicates for directed graphs: strong connectivity, blocks of
//! the underlying graph, strong biconnectivity and the vertex-deletion
//! variants built on them.
//!
//! Every predicate is defined directly by deleting vertices and re-testing.
//! The public functions take a [`DiGraph`]; the crate-internal `*_view`
//! kernels evaluate the same predicates over an edge-masked [`View`].

use std::collections::BTreeSet;

use crate::error::Error;
use crate::graph::{DiGraph, UGraphView, VertexId};
use crate::view::View;

const NONE: usize = usize::MAX;

/// Assignment of vertices to strongly connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    comp: Vec<usize>,
    count: usize,
}

impl Partition {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn component(&self, v: VertexId) -> usize {
        self.comp[v]
    }

    pub fn same_class(&self, u: VertexId, v: VertexId) -> bool {
        self.comp[u] == self.comp[v]
    }

    /// Classes as sorted vertex lists, ordered by smallest member.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut classes = vec![Vec::new(); self.count];
        for (v, &c) in self.comp.iter().enumerate() {
            classes[c].push(v);
        }
        classes.sort();
        classes
    }
}

/// Biconnected components (blocks) of an undirected graph and its cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block as a sorted vertex list; blocks sorted lexicographically.
    pub blocks: Vec<Vec<VertexId>>,
    pub cut_vertices: BTreeSet<VertexId>,
}

pub fn scc(g: &DiGraph) -> Partition {
    let (comp, count) = scc_view(View::full(g));
    Partition { comp, count }
}

/// Tarjan's lowlink SCC over a view, iterative. Deleted vertices get `NONE`.
pub(crate) fn scc_view(view: View<'_>) -> (Vec<usize>, usize) {
    let n = view.n();
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut stack = Vec::new();
    let mut call: Vec<(VertexId, usize)> = Vec::new();
    let mut counter = 0;
    let mut count = 0;

    for root in 0..n {
        if !view.present(root) || index[root] != NONE {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (u, ref mut next)) = call.last_mut() {
            let arcs = view.fwd_arcs(u);
            if *next < arcs.len() {
                let arc = arcs[*next];
                *next += 1;
                let Some(w) = view.live(arc) else { continue };
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[u]);
            }
            if low[u] == index[u] {
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp[w] = count;
                    if w == u {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    (comp, count)
}

/// Graphs with a single vertex are strongly connected.
pub fn is_strongly_connected(g: &DiGraph) -> bool {
    strongly_connected_view(View::full(g))
}

pub(crate) fn strongly_connected_view(view: View<'_>) -> bool {
    if view.live_count() <= 1 {
        return true;
    }
    let root = view.first_present().expect("live_count > 1");
    reach_count(view, root) == view.live_count()
        && reach_count(view.reversed(), root) == view.live_count()
}

pub(crate) fn reach_count(view: View<'_>, root: VertexId) -> usize {
    let mut seen = vec![false; view.n()];
    seen[root] = true;
    let mut stack = vec![root];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for w in view.succ(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count
}

/// Blocks by the lowpoint method with an edge stack. Isolated vertices are
/// singleton blocks.
pub fn blocks(u: &UGraphView) -> BlockDecomposition {
    let n = u.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut call: Vec<(VertexId, VertexId, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if u.neighbors(root).is_empty() {
            blocks.push(vec![root]);
            continue;
        }
        call.push((root, NONE, 0));
        while let Some(&mut (v, parent, ref mut next)) = call.last_mut() {
            let nbrs = u.neighbors(v);
            if *next < nbrs.len() {
                let w = nbrs[*next];
                *next += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == NONE {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    call.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            call.pop();
            if parent == NONE {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
    }

    blocks.sort();
    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

/// For n >= 3: connected without a cut vertex. Two vertices count as
/// biconnected when joined; a single vertex always does.
pub fn is_biconnected(u: &UGraphView) -> bool {
    match u.n() {
        0 | 1 => true,
        2 => u.has_pair(0, 1),
        n => {
            let d = blocks(u);
            d.blocks.len() == 1 && d.blocks[0].len() == n
        }
    }
}

/// Biconnectivity of the underlying graph of a view, with the same small-n
/// conventions as [`is_biconnected`].
pub(crate) fn underlying_biconnected_view(view: View<'_>) -> bool {
    let live = view.live_count();
    if live <= 1 {
        return true;
    }
    let root = view.first_present().expect("live > 1");
    if live == 2 {
        let other = (root + 1..view.n()).find(|&v| view.present(v)).unwrap();
        return view.succ(root).any(|w| w == other) || view.pred(root).any(|w| w == other);
    }

    let n = view.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut timer = 1;
    let mut root_children = 0;
    let mut visited = 1;
    disc[root] = 0;
    let mut call: Vec<(VertexId, VertexId, usize)> = vec![(root, NONE, 0)];

    while let Some(&mut (v, parent, ref mut next)) = call.last_mut() {
        if let Some(slot) = view.undirected_at(v, *next) {
            *next += 1;
            let Some(w) = slot else { continue };
            if w == parent {
                continue;
            }
            if disc[w] == NONE {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                visited += 1;
                call.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        call.pop();
        if parent == NONE {
            continue;
        }
        low[parent] = low[parent].min(low[v]);
        if parent == root {
            root_children += 1;
            if root_children > 1 {
                return false;
            }
        } else if low[v] >= disc[parent] {
            return false;
        }
    }
    visited == live
}

/// Strongly connected and the underlying graph is biconnected.
pub fn is_strongly_biconnected(g: &DiGraph) -> bool {
    strongly_biconnected_view(View::full(g))
}

pub(crate) fn strongly_biconnected_view(view: View<'_>) -> bool {
    strongly_connected_view(view) && underlying_biconnected_view(view)
}

/// Vertices whose deletion destroys strong connectivity, by trying each one.
pub fn strong_articulation_points_bruteforce(g: &DiGraph) -> Result<BTreeSet<VertexId>, Error> {
    check_sap_preconditions(g)?;
    Ok(sap_bruteforce_view(View::full(g)))
}

pub(crate) fn check_sap_preconditions(g: &DiGraph) -> Result<(), Error> {
    if g.n() < 3 {
        return Err(Error::TooSmall {
            needed: 3,
            got: g.n(),
        });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    Ok(())
}

pub(crate) fn sap_bruteforce_view(view: View<'_>) -> BTreeSet<VertexId> {
    (0..view.n())
        .filter(|&v| !strongly_connected_view(view.without(v)))
        .collect()
}

/// At least 3 vertices, strongly connected, no strong articulation point.
pub fn is_2vertex_connected(g: &DiGraph) -> bool {
    two_vertex_connected_bruteforce_view(View::full(g))
}

pub(crate) fn two_vertex_connected_bruteforce_view(view: View<'_>) -> bool {
    view.live_count() >= 3
        && strongly_connected_view(view)
        && (0..view.n()).all(|v| strongly_connected_view(view.without(v)))
}

/// At least 4 vertices, strongly biconnected, and strongly biconnected after
/// deleting any single vertex.
pub fn is_2v_strongly_biconnected(g: &DiGraph) -> bool {
    two_v_strongly_biconnected_view(View::full(g))
}

pub(crate) fn two_v_strongly_biconnected_view(view: View<'_>) -> bool {
    debug_assert!(view.skipped().is_none());
    if view.live_count() < 4 {
        return false;
    }
    // A vertex with a single out- (in-) neighbor loses all out- (in-) edges
    // when that neighbor is deleted, so degree >= 2 everywhere is necessary.
    let degrees_ok = (0..view.n()).all(|v| {
        view.succ(v).nth(1).is_some() && view.pred(v).nth(1).is_some()
    });
    degrees_ok
        && strongly_biconnected_view(view)
        && (0..view.n()).all(|v| strongly_biconnected_view(view.without(v)))
}

/// Vertices whose deletion leaves a graph that is not strongly biconnected.
pub fn b_articulation_points(g: &DiGraph) -> Result<BTreeSet<VertexId>, Error> {
    if g.n() < 2 {
        return Err(Error::TooSmall {
            needed: 2,
            got: g.n(),
        });
    }
    Ok(b_articulation_points_view(View::full(g)))
}

pub(crate) fn b_articulation_points_view(view: View<'_>) -> BTreeSet<VertexId> {
    (0..view.n())
        .filter(|&v| is_b_articulation_point_view(view, v))
        .collect()
}

pub(crate) fn is_b_articulation_point_view(view: View<'_>, v: VertexId) -> bool {
    !strongly_biconnected_view(view.without(v))
}

/// Whether `w` and `x` share a strongly biconnected component: same SCC, and
/// some block of the underlying graph of that SCC's induced subgraph holds both.
pub fn same_sbcc(g: &DiGraph, w: VertexId, x: VertexId) -> Result<bool, Error> {
    if w == x || w >= g.n() || x >= g.n() {
        return Err(Error::BadPair(w, x));
    }
    Ok(SbccIndex::new(View::full(g)).same(w, x))
}

/// Precomputed SCC and per-SCC block membership, answering `same_sbcc`
/// queries without re-decomposing.
pub(crate) struct SbccIndex {
    comp: Vec<usize>,
    // sorted block ids per vertex
    blocks_of: Vec<Vec<usize>>,
}

impl SbccIndex {
    pub fn new(view: View<'_>) -> Self {
        let (comp, _) = scc_view(view);
        let n = view.n();
        let mut pairs = Vec::new();
        for u in (0..n).filter(|&u| view.present(u)) {
            for w in view.succ(u) {
                if comp[u] == comp[w] {
                    pairs.push((u, w));
                }
            }
        }
        let decomposition = blocks(&UGraphView::from_pairs(n, pairs));
        let mut blocks_of = vec![Vec::new(); n];
        for (id, block) in decomposition.blocks.iter().enumerate() {
            for &v in block {
                blocks_of[v].push(id);
            }
        }
        SbccIndex { comp, blocks_of }
    }

    pub fn same(&self, w: VertexId, x: VertexId) -> bool {
        if self.comp[w] == NONE || self.comp[w] != self.comp[x] {
            return false;
        }
        let (a, b) = (&self.blocks_of[w], &self.blocks_of[x]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}
