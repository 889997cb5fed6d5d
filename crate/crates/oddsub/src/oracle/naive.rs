//! Reference enumeration over all vertex subsets.
//!
//! These functions are deliberately unoptimised: they scan every one of the
//! `2^n` subsets and keep the first maximiser in ascending mask order.  They
//! exist so that the branch-and-bound solver has something independent to be
//! checked against, and they are the ground truth whenever a test freezes a
//! small exact value.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Largest `n` accepted by the naive scans (`2^n` subsets are visited).
pub const NAIVE_GUARD: usize = 24;

/// Maximum order of an induced subgraph in which every degree is odd,
/// by exhaustive enumeration.  Returns the value and the lowest-mask witness.
///
/// If no non-empty vertex set induces an all-odd subgraph the result is
/// `(0, empty set)`.
pub fn fo_naive(g: &Graph) -> Result<(usize, VertexSet), Error> {
    fk_naive(g, 2)
}

/// Maximum order of an induced subgraph in which every degree is ≡ 1 (mod k),
/// by exhaustive enumeration.  `k = 2` is exactly [`fo_naive`].
pub fn fk_naive(g: &Graph, k: usize) -> Result<(usize, VertexSet), Error> {
    if k < 2 {
        return Err(Error::Precondition {
            operation: "fk_naive",
            reason: format!("modulus k must be at least 2, got {k}"),
        });
    }
    let n = g.n();
    if n > NAIVE_GUARD {
        return Err(Error::TooLarge {
            operation: "fk_naive",
            limit: NAIVE_GUARD,
            actual: n,
        });
    }

    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut best = 0usize;
    let mut best_mask = 0u64;
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut scan = mask;
        let mut good = true;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if (rows[v] & mask).count_ones() as usize % k != 1 {
                good = false;
                break;
            }
        }
        if good {
            best = size;
            best_mask = mask;
        }
    }
    Ok((best, VertexSet::from_mask64(best_mask)))
}

// ============================================================================
// tests
// ============================================================================
