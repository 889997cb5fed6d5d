//! Large bipartite induced subgraphs without isolated vertices.
//!
//! Given a proper coloring with `k` classes, some pair of classes spans at
//! least `2n/k` vertices, and a bipartite induced subgraph on two classes
//! can only fail by containing isolated vertices.  The builder tries every
//! class pair with a deterministic delete-then-readd repair, and falls
//! back to exact search (guarded) when no pair survives at the required
//! size — the bound itself is guaranteed to be achievable, so a final
//! failure is a reportable event, not a silent degradation.

use crate::certify::Ratio;
use crate::color::Coloring;
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Largest vertex count accepted by the exact fallback search.
const EXACT_FALLBACK_GUARD: usize = 22;

/// Finds a set `H` with `G[H]` bipartite, `δ(G[H]) ≥ 1`, and
/// `|H| ≥ 2n/k`, where `k` is the number of classes in `coloring`.
///
/// Strategy, in order:
///
/// 1. every pair of color classes, repaired: repeatedly delete the
///    lowest-id vertex isolated in the current induced subgraph, then
///    re-add deleted vertices in ascending id when they have a neighbor
///    inside;
/// 2. exact search over all bipartite induced subgraphs without isolated
///    vertices (guarded to `n ≤ 22`);
/// 3. explicit failure carrying the best set found.
///
/// # Errors
/// Rejects improper colorings, `k < 2`, and graphs with isolated
/// vertices.  Returns [`Error::TooLarge`] if the pairs fail and the graph
/// exceeds the exact-search guard, and [`Error::BoundNotAchieved`] if
/// even the exact search cannot reach `2n/k`.
pub fn bipartite_subgraph_cert(g: &Graph, coloring: &Coloring) -> Result<VertexSet, Error> {
    coloring.validate(g)?;
    if coloring.k < 2 {
        return Err(Error::Precondition {
            operation: "bipartite_subgraph_cert",
            reason: format!("need at least 2 color classes (got {})", coloring.k),
        });
    }
    if g.n() == 0 || g.min_degree() == 0 {
        return Err(Error::Precondition {
            operation: "bipartite_subgraph_cert",
            reason: "the graph has an isolated vertex".to_string(),
        });
    }

    let n = g.n();
    let k = coloring.k;
    // |H| >= 2n/k, compared exactly.
    let required = Ratio::new(2 * n as u64, k as u64);

    let mut best = VertexSet::empty();
    for a in 0..k {
        for b in (a + 1)..k {
            let mut in_set = vec![false; n];
            for v in coloring.class(a).into_iter().chain(coloring.class(b)) {
                in_set[v] = true;
            }
            let repaired = repair(g, &mut in_set);
            if required.meets(repaired.len()) {
                return Ok(repaired);
            }
            if repaired.len() > best.len() {
                best = repaired;
            }
        }
    }

    // No pair survived at 2n/k; search all bipartite induced subgraphs.
    if n > EXACT_FALLBACK_GUARD {
        return Err(Error::TooLarge {
            operation: "bipartite_subgraph_cert exact fallback",
            limit: EXACT_FALLBACK_GUARD,
            actual: n,
        });
    }
    if let Some(exact) = exact_bipartite(g) {
        if exact.len() > best.len() {
            best = exact;
        }
    }
    if required.meets(best.len()) {
        Ok(best)
    } else {
        Err(Error::BoundNotAchieved { required, best })
    }
}

/// Deletes isolated vertices (lowest id first) until none remain, then
/// re-adds deleted vertices in ascending id when a neighbor is inside.
/// The result has minimum degree ≥ 1 in the induced subgraph: re-adding
/// never strands a vertex, because adding only raises degrees.
fn repair(g: &Graph, in_set: &mut [bool]) -> VertexSet {
    let n = g.n();
    let words = n.div_ceil(64);
    let row_of = |in_set: &[bool]| {
        let mut row = vec![0u64; words];
        for (v, &inside) in in_set.iter().enumerate() {
            if inside {
                row[v / 64] |= 1u64 << (v % 64);
            }
        }
        row
    };

    let mut deleted = Vec::new();
    loop {
        let row = row_of(in_set);
        let isolated = (0..n).find(|&v| in_set[v] && g.degree_in_words(v, &row) == 0);
        match isolated {
            Some(v) => {
                in_set[v] = false;
                deleted.push(v);
            }
            None => break,
        }
    }
    deleted.sort_unstable();
    for &v in &deleted {
        let row = row_of(in_set);
        if g.degree_in_words(v, &row) > 0 {
            in_set[v] = true;
        }
    }
    (0..n).filter(|&v| in_set[v]).collect()
}

/// Largest induced subgraph that is bipartite with minimum degree ≥ 1,
/// by exhaustive scan; ties resolve to the lowest bitmask.  Returns
/// `None` only for graphs with no edge at all.
fn exact_bipartite(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    debug_assert!(n <= EXACT_FALLBACK_GUARD);
    let mut best_mask = 0u64;
    let mut best = 0usize;
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if !min_degree_positive(g, mask) || !induced_bipartite(g, mask) {
            continue;
        }
        best = size;
        best_mask = mask;
    }
    (best > 0).then(|| VertexSet::from_mask64(best_mask))
}

fn min_degree_positive(g: &Graph, mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.row64(v) & mask == 0 {
            return false;
        }
    }
    true
}

/// 2-colors the induced subgraph by depth-first search.
fn induced_bipartite(g: &Graph, mask: u64) -> bool {
    let n = g.n();
    let mut side = vec![2u8; n];
    for s in 0..n {
        if mask >> s & 1 == 0 || side[s] != 2 {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let mut nbrs = g.row64(v) & mask;
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if side[w] == 2 {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

// ==================================================================
// Tests
// ==================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::chromatic_number;
    use crate::generate::{generate, FamilySpec};
    use crate::graph::is_odd_induced;
    use rand::rngs::SmallRng;
    use rand::{Rng, SeedableRng};

    fn assert_contract(g: &Graph, set: &VertexSet, k: usize) {
        assert!(
            set.len() * k >= 2 * g.n(),
            "set of {} vertices is below 2n/k = 2*{}/{k}",
            set.len(),
            g.n()
        );
        let mask = set
            .iter()
            .fold(0u64, |acc, v| acc | 1u64 << v);
        assert!(
            induced_bipartite(g, mask),
            "returned set must induce a bipartite subgraph"
        );
        for v in set.iter() {
            assert!(
                g.degree_in_set(v, set) >= 1,
                "vertex {v} is isolated in the returned subgraph"
            );
        }
    }

    #[test]
    fn bipartite_graph_returns_everything() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let (_, coloring) = chromatic_number(&g).unwrap();
        let set = bipartite_subgraph_cert(&g, &coloring).unwrap();
        assert_eq!(set, VertexSet::full(6), "C_6 is already bipartite");
    }

    #[test]
    fn c5_with_three_colors_keeps_an_induced_path() {
        let g = generate(&FamilySpec::Cycle(5)).unwrap();
        let (k, coloring) = chromatic_number(&g).unwrap();
        assert_eq!(k, 3);
        let set = bipartite_subgraph_cert(&g, &coloring).unwrap();
        assert_contract(&g, &set, 3);
        assert_eq!(set.len(), 4, "C_5 minus one vertex is an induced P_4");
    }

    #[test]
    fn complete_graph_keeps_an_edge() {
        let g = generate(&FamilySpec::Complete(4)).unwrap();
        let (k, coloring) = chromatic_number(&g).unwrap();
        assert_eq!(k, 4);
        let set = bipartite_subgraph_cert(&g, &coloring).unwrap();
        assert_contract(&g, &set, 4);
    }

    #[test]
    fn adversarial_coloring_falls_back_to_exact_search() {
        // A perfect matching on 6 vertices, colored so that every pair of
        // classes induces one edge plus two isolated vertices.  The repair
        // loop strips each pair down to 2 < 2n/k = 4, forcing the exact
        // fallback — which recovers the whole (bipartite) graph.
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        let coloring = Coloring {
            colors: vec![0, 1, 2, 1, 2, 0],
            k: 3,
        };
        coloring.validate(&g).unwrap();
        let set = bipartite_subgraph_cert(&g, &coloring).unwrap();
        assert_eq!(set, VertexSet::full(6), "the matching itself is bipartite");
    }

    #[test]
    fn random_graphs_meet_the_contract() {
        let mut rng = SmallRng::seed_from_u64(0xB1A2_7173);
        for trial in 0..60 {
            let n = rng.random_range(2..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.n() == 0 || g.min_degree() == 0 {
                continue;
            }
            let (k, coloring) = chromatic_number(&g).unwrap();
            if k < 2 {
                continue;
            }
            let set = bipartite_subgraph_cert(&g, &coloring)
                .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
            assert_contract(&g, &set, k);
        }
    }

    #[test]
    fn rejects_isolated_vertices_and_single_class() {
        let mut g = generate(&FamilySpec::Path(3)).unwrap();
        g = g.disjoint_union(&Graph::empty(1));
        let coloring = Coloring {
            colors: vec![0, 1, 0, 1],
            k: 2,
        };
        assert!(
            bipartite_subgraph_cert(&g, &coloring).is_err(),
            "isolated vertex 3 must be rejected"
        );

        let edgeless = Graph::empty(3);
        let one_class = Coloring {
            colors: vec![0, 0, 0],
            k: 1,
        };
        assert!(bipartite_subgraph_cert(&edgeless, &one_class).is_err());
    }

    #[test]
    fn never_contains_an_even_degree_vertex_lie() {
        // Sanity link to the odd-subgraph world: the bipartite stage's
        // output is *not* itself an odd certificate in general.
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let (_, coloring) = chromatic_number(&g).unwrap();
        let set = bipartite_subgraph_cert(&g, &coloring).unwrap();
        assert!(
            !is_odd_induced(&g, &set),
            "all of C_6 has even degrees; downstream stages do the odd part"
        );
    }
}
