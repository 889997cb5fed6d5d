//! Exact solvers and constructive certificates for **maximum odd induced
//! subgraphs**.
//!
//! For a finite simple graph `G`, an *odd induced subgraph* is an induced
//! subgraph in which every vertex has odd degree (degree measured inside the
//! subgraph).  The quantity of interest is
//!
//! ```text
//! f_o(G) = max { |S| : S ⊆ V(G), every vertex of G[S] has odd degree in G[S] }
//! ```
//!
//! together with its mod-`k` generalisation `f_k(G)` (every degree ≡ 1 mod
//! `k`).  By convention `f_o(G) = 0` with an empty witness when no nonempty
//! odd induced subgraph exists (e.g. the empty graph or any union of
//! isolated vertices).
//!
//! The crate is organised in three layers:
//!
//! * [`graph`], [`generate`], [`classify`], [`color`], [`io`] — a compact
//!   graph kernel: bitmask adjacency, family generators, structure
//!   detection (bipartiteness, girth, induced stars, 5-cycles), exact
//!   chromatic number for small graphs, and an edge-list text format.
//! * [`oracle`] — exact computation: a branch-and-bound solver for
//!   `f_o`/`f_k` with a naive exhaustive reference implementation, maximum
//!   induced matchings, Gallai-style parity partitions over GF(2), and an
//!   exhaustive enumerator for small connected regular graphs.
//! * [`certify`] — polynomial-time constructions that output explicit
//!   vertex sets together with the rational lower bound they achieve:
//!   odd subgraphs of paths and cycles, bipartite-subgraph extraction for
//!   claw-free graphs, two-factors and [2,3]-factors of regular graphs,
//!   lower-bound certificates for line graphs of regular graphs, disjoint
//!   union families whose `f_o` falls below half their order, and a
//!   reduction for planar graphs of girth at least five.
//!
//! With the default `parallel` feature the solver and the batch scans use
//! [rayon]; disabling the feature yields a fully sequential build.  Both
//! builds return identical values *and identical witnesses* for identical
//! inputs, independent of thread count.
//!
//! [rayon]: https://docs.rs/rayon

pub mod certify;
pub mod classify;
pub mod color;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;

pub use error::Error;
pub use graph::{is_odd_induced, line_graph, EdgeId, Graph, LineGraphResult, VertexSet};
