//! Maximum induced matchings.
//!
//! A matching `M` is induced when no edge of the host graph joins two
//! distinct edges of `M`.  Equivalently, `M` is an independent set in the
//! conflict graph whose vertices are the host's edges, with two edges in
//! conflict when they share an endpoint or are joined by an edge.  The
//! search below runs include-first over edges in lexicographic order, so the
//! reported witness is the lexicographically least maximum matching.

use crate::error::Error;
use crate::graph::{EdgeId, Graph};

/// Largest edge count accepted (conflict sets are one machine word).
pub(crate) const MATCHING_GUARD: usize = 64;

/// Maximum induced matching of `g`: its size and the lexicographically least
/// witness, as a sorted list of edges.
pub fn max_induced_matching(g: &Graph) -> Result<(usize, Vec<EdgeId>), Error> {
    let edges = g.edges();
    let m = edges.len();
    if m > MATCHING_GUARD {
        return Err(Error::TooLarge {
            operation: "max_induced_matching",
            limit: MATCHING_GUARD,
            actual: m,
        });
    }
    let mut conflict = vec![0u64; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let a = edges[i];
            let b = edges[j];
            if a.touches(&b) || joined_by_edge(g, &a, &b) {
                conflict[i] |= 1 << j;
                conflict[j] |= 1 << i;
            }
        }
    }

    let mut search = MatchSearch {
        conflict: &conflict,
        m,
        best: 0,
        best_mask: 0,
    };
    search.dfs(0, 0, if m == 64 { !0 } else { (1u64 << m) - 1 });
    let witness: Vec<EdgeId> = (0..m)
        .filter(|&i| search.best_mask >> i & 1 == 1)
        .map(|i| edges[i])
        .collect();
    Ok((search.best, witness))
}

/// True when some host edge runs between an endpoint of `a` and one of `b`.
fn joined_by_edge(g: &Graph, a: &EdgeId, b: &EdgeId) -> bool {
    let (au, av) = a.endpoints();
    let (bu, bv) = b.endpoints();
    g.has_edge(au, bu) || g.has_edge(au, bv) || g.has_edge(av, bu) || g.has_edge(av, bv)
}

struct MatchSearch<'a> {
    conflict: &'a [u64],
    m: usize,
    best: usize,
    best_mask: u64,
}

impl MatchSearch<'_> {
    /// `alive` holds the edges with index ≥ `i` still compatible with
    /// `chosen`.  Include-first with strict improvement keeps the first —
    /// hence lexicographically least — maximum.
    fn dfs(&mut self, i: usize, chosen: u64, alive: u64) {
        let count = chosen.count_ones() as usize;
        if count + alive.count_ones() as usize <= self.best {
            return;
        }
        if i == self.m {
            if count > self.best {
                self.best = count;
                self.best_mask = chosen;
            }
            return;
        }
        let bit = 1u64 << i;
        if alive & bit != 0 {
            self.dfs(i + 1, chosen | bit, alive & !self.conflict[i] & !bit);
            self.dfs(i + 1, chosen, alive & !bit);
        } else {
            self.dfs(i + 1, chosen, alive);
        }
    }
}

// ============================================================================
// tests
// ============================================================================
