//! Dominator trees and the dominator-based strong articulation point test.
//!
//! For a strongly connected graph and any root `s`, a vertex `v != s` is a
//! strong articulation point iff it is a non-trivial dominator of some vertex
//! in the flow graph rooted at `s`, or in the reverse flow graph rooted at
//! `s`. The root itself is tested directly.

use std::collections::BTreeSet;

use crate::connectivity::{
    check_sap_preconditions, strongly_connected_view, underlying_biconnected_view,
};
use crate::error::{Error, GraphError};
use crate::graph::{DiGraph, VertexId};
use crate::view::View;

const UNDEF: usize = usize::MAX;

/// Immediate dominators of the vertices reachable from `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomTree {
    root: VertexId,
    idom: Vec<Option<VertexId>>,
    reachable: Vec<bool>,
}

impl DomTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// `None` for the root and for unreachable vertices.
    pub fn idom(&self, v: VertexId) -> Option<VertexId> {
        self.idom[v]
    }

    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.reachable[v]
    }

    /// Whether `a` dominates `b` (reflexive). False if `b` is unreachable.
    pub fn dominates(&self, a: VertexId, b: VertexId) -> bool {
        if !self.reachable[b] {
            return false;
        }
        let mut cur = Some(b);
        while let Some(v) = cur {
            if v == a {
                return true;
            }
            cur = self.idom[v];
        }
        false
    }
}

pub fn dominator_tree(g: &DiGraph, root: VertexId) -> Result<DomTree, Error> {
    if root >= g.n() {
        return Err(GraphError::VertexOutOfRange { v: root, n: g.n() }.into());
    }
    Ok(dominator_tree_view(View::full(g), root))
}

/// Iterative fixed-point dominators over a reverse-postorder numbering.
pub(crate) fn dominator_tree_view(view: View<'_>, root: VertexId) -> DomTree {
    let n = view.n();

    // postorder by explicit-stack DFS
    let mut post_num = vec![UNDEF; n];
    let mut postorder = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    visited[root] = true;
    let mut call: Vec<(VertexId, usize)> = vec![(root, 0)];
    while let Some(&mut (u, ref mut next)) = call.last_mut() {
        let arcs = view.fwd_arcs(u);
        if *next < arcs.len() {
            let arc = arcs[*next];
            *next += 1;
            if let Some(w) = view.live(arc) {
                if !visited[w] {
                    visited[w] = true;
                    call.push((w, 0));
                }
            }
            continue;
        }
        call.pop();
        post_num[u] = postorder.len();
        postorder.push(u);
    }

    let mut idom = vec![UNDEF; n];
    idom[root] = root;
    let intersect = |idom: &[usize], mut a: usize, mut b: usize| {
        while a != b {
            while post_num[a] < post_num[b] {
                a = idom[a];
            }
            while post_num[b] < post_num[a] {
                b = idom[b];
            }
        }
        a
    };

    let mut changed = true;
    while changed {
        changed = false;
        for &v in postorder.iter().rev().skip(1) {
            let mut new_idom = UNDEF;
            for p in view.pred(v) {
                if idom[p] == UNDEF {
                    continue;
                }
                new_idom = if new_idom == UNDEF {
                    p
                } else {
                    intersect(&idom, p, new_idom)
                };
            }
            if idom[v] != new_idom {
                idom[v] = new_idom;
                changed = true;
            }
        }
    }

    let idom = (0..n)
        .map(|v| (v != root && idom[v] != UNDEF).then_some(idom[v]))
        .collect();
    DomTree {
        root,
        idom,
        reachable: visited,
    }
}

/// `{ v != root : v = idom(u) for some u }`; every vertex must be reachable.
pub fn nontrivial_dominators(g: &DiGraph, root: VertexId) -> Result<BTreeSet<VertexId>, Error> {
    let tree = dominator_tree(g, root)?;
    if let Some(v) = (0..g.n()).find(|&v| !tree.is_reachable(v)) {
        return Err(Error::Unreachable(v));
    }
    Ok(nontrivial_from_tree(&tree))
}

fn nontrivial_from_tree(tree: &DomTree) -> BTreeSet<VertexId> {
    tree.idom
        .iter()
        .flatten()
        .copied()
        .filter(|&d| d != tree.root)
        .collect()
}

/// Strong articulation points via dominators of the graph and its reverse.
pub fn strong_articulation_points_fast(g: &DiGraph) -> Result<BTreeSet<VertexId>, Error> {
    check_sap_preconditions(g)?;
    Ok(sap_fast_view(View::full(g)))
}

/// Caller guarantees the view is strongly connected with no deleted vertex.
pub(crate) fn sap_fast_view(view: View<'_>) -> BTreeSet<VertexId> {
    let root = 0;
    let mut out = nontrivial_from_tree(&dominator_tree_view(view, root));
    out.extend(nontrivial_from_tree(&dominator_tree_view(view.reversed(), root)));
    if !strongly_connected_view(view.without(root)) {
        out.insert(root);
    }
    out
}

/// [`crate::connectivity::is_2vertex_connected`] with the dominator-based
/// articulation test.
pub fn is_2vertex_connected_fast(g: &DiGraph) -> bool {
    two_vertex_connected_fast_view(View::full(g))
}

pub(crate) fn two_vertex_connected_fast_view(view: View<'_>) -> bool {
    view.live_count() >= 3 && strongly_connected_view(view) && sap_fast_view(view).is_empty()
}

/// [`crate::connectivity::is_2v_strongly_biconnected`] with the per-vertex
/// strong connectivity checks replaced by one dominator-based articulation
/// test. Only the underlying-graph biconnectivity is still checked per vertex.
pub fn is_2v_strongly_biconnected_fast(g: &DiGraph) -> bool {
    two_v_strongly_biconnected_fast_view(View::full(g))
}

pub(crate) fn two_v_strongly_biconnected_fast_view(view: View<'_>) -> bool {
    assert!(view.skipped().is_none(), "view must not delete a vertex");
    if view.live_count() < 4 {
        return false;
    }
    let degrees_ok = (0..view.n()).all(|v| {
        view.succ(v).nth(1).is_some() && view.pred(v).nth(1).is_some()
    });
    if !degrees_ok {
        return false;
    }
    // Compact the live edges so the n traversals below skip dead arcs.
    let live = view.materialize();
    let full = View::full(&live);
    strongly_connected_view(full)
        && sap_fast_view(full).is_empty()
        && underlying_biconnected_view(full)
        && (0..live.n()).all(|v| underlying_biconnected_view(full.without(v)))
}
