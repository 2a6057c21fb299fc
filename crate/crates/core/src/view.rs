//! Borrowed subgraph views: an edge mask, at most one deleted vertex and an
//! optional direction flip over a `DiGraph`. The algorithms make thousands of
//! speculative deletions, and evaluating them through a view avoids rebuilding
//! adjacency for each one.

use crate::graph::{DiGraph, VertexId};

#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    graph: &'a DiGraph,
    alive: Option<&'a [bool]>,
    skip: Option<VertexId>,
    reversed: bool,
}

impl<'a> View<'a> {
    pub fn full(graph: &'a DiGraph) -> Self {
        View {
            graph,
            alive: None,
            skip: None,
            reversed: false,
        }
    }

    pub fn masked(graph: &'a DiGraph, alive: &'a [bool]) -> Self {
        debug_assert_eq!(alive.len(), graph.m());
        View {
            alive: Some(alive),
            ..Self::full(graph)
        }
    }

    /// The view with `v` deleted. Views support a single deletion.
    pub fn without(self, v: VertexId) -> Self {
        assert!(self.skip.is_none(), "view already has a deleted vertex");
        View {
            skip: Some(v),
            ..self
        }
    }

    pub fn reversed(self) -> Self {
        View {
            reversed: !self.reversed,
            ..self
        }
    }

    /// The live edges as a standalone graph on the same index space.
    /// Requires a view without a deleted vertex.
    pub fn materialize(&self) -> DiGraph {
        assert!(self.skip.is_none());
        let edges = self.graph.edges();
        let kept = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.alive.is_none_or(|a| a[i]))
            .map(|(_, &e)| if self.reversed { e.reversed() } else { e })
            .collect();
        DiGraph::from_valid_edges(self.graph.n(), kept)
    }

    pub fn skipped(&self) -> Option<VertexId> {
        self.skip
    }

    /// Size of the index space, including a deleted vertex.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn live_count(&self) -> usize {
        self.graph.n() - usize::from(self.skip.is_some())
    }

    #[inline]
    pub fn present(&self, v: VertexId) -> bool {
        self.skip != Some(v)
    }

    pub fn first_present(&self) -> Option<VertexId> {
        (0..self.n()).find(|&v| self.present(v))
    }

    #[inline]
    fn arc_live(&self, (w, e): (VertexId, usize)) -> bool {
        self.present(w) && self.alive.is_none_or(|a| a[e])
    }

    /// Raw forward arcs `(neighbor, edge index)`; filter with [`View::live`].
    #[inline]
    pub fn fwd_arcs(&self, v: VertexId) -> &'a [(VertexId, usize)] {
        if self.reversed {
            self.graph.in_arcs(v)
        } else {
            self.graph.out_arcs(v)
        }
    }

    #[inline]
    pub fn bwd_arcs(&self, v: VertexId) -> &'a [(VertexId, usize)] {
        if self.reversed {
            self.graph.out_arcs(v)
        } else {
            self.graph.in_arcs(v)
        }
    }

    #[inline]
    pub fn live(&self, arc: (VertexId, usize)) -> Option<VertexId> {
        self.arc_live(arc).then_some(arc.0)
    }

    pub fn succ(&self, v: VertexId) -> impl Iterator<Item = VertexId> + 'a {
        let view = *self;
        self.fwd_arcs(v).iter().filter_map(move |&a| view.live(a))
    }

    pub fn pred(&self, v: VertexId) -> impl Iterator<Item = VertexId> + 'a {
        let view = *self;
        self.bwd_arcs(v).iter().filter_map(move |&a| view.live(a))
    }

    /// Undirected neighbor `i` in the concatenation of forward then backward
    /// raw arcs, or `None` past the end. Dead arcs yield `Some(None)`.
    #[inline]
    pub fn undirected_at(&self, v: VertexId, i: usize) -> Option<Option<VertexId>> {
        let fwd = self.fwd_arcs(v);
        let arc = if i < fwd.len() {
            fwd[i]
        } else {
            *self.bwd_arcs(v).get(i - fwd.len())?
        };
        Some(self.live(arc))
    }
}
