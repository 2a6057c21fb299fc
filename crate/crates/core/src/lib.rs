//! Sparse spanning subgraphs that keep a directed graph 2-vertex strongly
//! biconnected.
//!
//! A directed graph is *strongly biconnected* when it is strongly connected
//! and its underlying undirected graph is biconnected. It is *2-vertex
//! strongly biconnected* when, in addition, deleting any single vertex leaves
//! a strongly biconnected graph. Finding a minimum-size spanning subgraph with
//! this property is NP-hard; this crate provides three approximation
//! algorithms for it ([`approx`]), the connectivity predicates they rely on
//! ([`connectivity`], [`dominators`]), a seeded instance generator
//! ([`generator`]), an exact solver for tiny graphs ([`oracle`]) and a
//! benchmark harness ([`bench`]).
//!
//! ```
//! use twovsb::{approx, connectivity, fixtures};
//!
//! let g = fixtures::bk4();
//! let r = approx::algorithm2(&g).unwrap();
//! assert!(connectivity::is_2v_strongly_biconnected(&r.subgraph));
//! assert!(r.edges_out >= 2 * g.n());
//! ```
//!
//! Runnable walkthroughs of each capability live under `examples/`; the
//! `twovsb` binary wraps generation, running, checking and benchmarking.

pub mod approx;
pub mod bench;
pub mod cli;
pub mod connectivity;
pub mod dominators;
mod error;
pub mod fixtures;
pub mod generator;
pub mod graph;
pub mod oracle;
mod view;

pub use approx::{AlgoResult, AlgoTrace, Algorithm};
pub use error::{Error, GraphError, ParseError};
pub use graph::{DiGraph, Edge, UGraphView, VertexId};
