//! Exact computation: solvers, reference enumeration, parity partitions,
//! induced matchings, and exhaustive regular-graph enumeration.
//!
//! Two independent routes compute the same quantities:
//!
//! * [`fo_exact`] / [`fk_exact`] — branch-and-bound over vertices with
//!   parity propagation (the production path, guarded to 64 vertices);
//! * [`fo_naive`] / [`fk_naive`] — literal enumeration of all `2^n`
//!   subsets (the reference, guarded to 24 vertices).
//!
//! The solvers are deterministic: for a fixed input they return the same
//! value, witness and node count regardless of thread count or of the
//! `parallel` feature.

mod enumerate;
mod gallai;
mod matching;
mod naive;
mod solver;

pub use enumerate::{enumerate_connected_regular, ENUMERATE_GUARD};
pub use gallai::{even_even_partition, gallai_partition, GallaiPartition};
pub use matching::max_induced_matching;
pub use naive::{fk_naive, fo_naive, NAIVE_GUARD};
pub use solver::{fk_exact, fo_exact, fo_exact_sequential, OracleResult, SOLVER_GUARD};
