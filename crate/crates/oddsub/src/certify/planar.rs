//! Reduction from girth-5 graphs with 3-colorings to the bipartite case.
//!
//! A triangle-free planar graph is 3-colorable, so a planar graph of
//! girth at least 5 admits a 3-coloring; the bipartite stage then keeps
//! at least `2n/3` vertices.  Because the host has no 3- or 4-cycles and
//! the kept subgraph is bipartite (no odd cycles), the result has girth
//! at least 6.  Planarity itself is never tested here — the caller must
//! assert it, and a 3-coloring is computed exactly (guarded) when not
//! supplied.

use crate::certify::bipartite_subgraph_cert;
use crate::classify::{bipartition, girth};
use crate::color::{chromatic_number, Coloring};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Returns a set `H` with `G[H]` bipartite, without isolated vertices,
/// of size at least `2n/3`, and of girth at least 6.  Bipartite inputs
/// return all of `V(G)`.
///
/// # Errors
/// Rejects `planar_asserted = false`, girth below 5, isolated vertices,
/// and colorings with more than 3 colors (supplied or computed); the
/// exact coloring guard and bipartite-stage failures propagate.
pub fn planar_reduction(
    g: &Graph,
    planar_asserted: bool,
    coloring: Option<&Coloring>,
) -> Result<VertexSet, Error> {
    let fail = |reason: String| Error::Precondition {
        operation: "planar_reduction",
        reason,
    };
    if !planar_asserted {
        return Err(fail(
            "planarity is not verified internally; the caller must assert it".to_string(),
        ));
    }
    if let Some(girth) = girth(g) {
        if girth < 5 {
            return Err(fail(format!("the shortest cycle has length {girth}, need girth at least 5")));
        }
    }
    if g.n() == 0 || g.min_degree() == 0 {
        return Err(fail("the graph has an isolated vertex".to_string()));
    }

    // Bipartite inputs keep everything.
    if bipartition(g).is_some() {
        return Ok(VertexSet::full(g.n()));
    }

    let owned;
    let coloring = match coloring {
        Some(c) => {
            c.validate(g)?;
            c
        }
        None => {
            owned = chromatic_number(g)?.1;
            &owned
        }
    };
    if coloring.k > 3 {
        return Err(fail(format!(
            "the coloring uses {} colors; the reduction is stated for at most 3",
            coloring.k
        )));
    }

    let h_set = bipartite_subgraph_cert(g, coloring)?;
    let (h, _) = g.induced(&h_set).expect("h_set lies inside g");
    let h_girth = girth(&h);
    assert!(
        h_girth.is_none_or(|x| x >= 6),
        "girth ≥ 5 rules out 3- and 4-cycles and bipartiteness rules out \
         5-cycles, yet the kept subgraph has girth {h_girth:?}"
    );
    Ok(h_set)
}

// ==================================================================
// Tests
// ==================================================================
