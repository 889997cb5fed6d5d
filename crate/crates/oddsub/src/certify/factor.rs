//! Spanning factors of regular graphs.
//!
//! [`petersen_two_factor`] splits any connected even-regular graph into
//! vertex-disjoint spanning cycles: orient an Eulerian circuit (so every
//! vertex has in-degree = out-degree = r), match each vertex's out-side
//! to an in-side by a bipartite perfect matching, and read the matched
//! arcs back as undirected edges — every vertex keeps exactly one
//! out-edge and one in-edge, and those never coincide because each
//! undirected edge is oriented only once.
//!
//! [`factor_23`] finds a spanning subgraph with all degrees in `{2, 3}`
//! and every component regular: for cubic inputs the graph itself
//! qualifies; otherwise a guarded backtracking search over the edges in
//! lexicographic order, preferring to stop vertices at degree 2 so that
//! cycle components dominate.

use crate::certify::{Factor, FactorKind};
use crate::classify::classify;
use crate::error::Error;
use crate::graph::{EdgeId, Graph, VertexSet};

/// Largest edge count accepted by the [2,3]-factor search.
const FACTOR_SEARCH_GUARD: usize = 40;

// ==================================================================
// 2-factors of even-regular graphs
// ==================================================================

/// Decomposes a connected `2r`-regular graph (`r ≥ 1`) into a spanning
/// collection of vertex-disjoint cycles.
///
/// Deterministic: the Eulerian circuit starts at vertex 0 and always
/// leaves along the lowest-numbered unused edge, and the matching stage
/// augments vertices in ascending order.
///
/// # Errors
/// Rejects graphs that are not regular of positive even degree, and
/// disconnected graphs.
pub fn petersen_two_factor(g: &Graph) -> Result<Factor, Error> {
    let fail = |reason: String| Error::Precondition {
        operation: "petersen_two_factor",
        reason,
    };
    let report = classify(g);
    match report.regular_degree {
        Some(k) if k >= 2 && k % 2 == 0 => {}
        Some(k) => {
            return Err(fail(format!(
                "the graph is {k}-regular; a 2-factor needs positive even degree"
            )));
        }
        None => return Err(fail("the graph is not regular".to_string())),
    }
    if !report.is_connected || g.n() == 0 {
        return Err(fail("the graph is not connected".to_string()));
    }

    let n = g.n();
    let edges = g.edges();
    let circuit = eulerian_circuit(g, &edges);
    debug_assert_eq!(circuit.len(), edges.len() + 1, "circuit must use every edge once");

    // Orient each edge along the circuit: in- and out-degree are both r.
    let mut out_nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for w in circuit.windows(2) {
        out_nbrs[w[0]].push(w[1]);
    }
    for row in &mut out_nbrs {
        row.sort_unstable();
    }

    // Perfect matching between out-sides and in-sides; it exists because
    // the out/in incidence graph is r-regular bipartite.
    let match_left = bipartite_perfect_matching(n, &out_nbrs);

    let mut chosen: Vec<EdgeId> = (0..n)
        .map(|u| EdgeId::new(u, match_left[u].expect("regular bipartite graphs match perfectly")))
        .collect();
    chosen.sort_unstable();
    chosen.dedup();
    debug_assert_eq!(chosen.len(), n, "each arc is matched at most once");

    let components = cycle_components(n, &chosen)
        .into_iter()
        .map(|set| (set, 2))
        .collect();
    let factor = Factor {
        edges: chosen,
        components,
        kind: FactorKind::TwoFactor,
    };
    debug_assert!(factor.validate(g).is_ok());
    Ok(factor)
}

/// Eulerian circuit as a vertex sequence (first = last), starting at
/// vertex 0 and always taking the lowest-numbered unused edge.
fn eulerian_circuit(g: &Graph, edges: &[EdgeId]) -> Vec<usize> {
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut ptr = vec![0usize; n];
    let mut used = vec![false; edges.len()];
    let mut stack = vec![0usize];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        let mut moved = false;
        while ptr[v] < nbrs[v].len() {
            let w = nbrs[v][ptr[v]];
            let ei = edges
                .binary_search(&EdgeId::new(v, w))
                .expect("neighbor lists mirror the edge list");
            if used[ei] {
                ptr[v] += 1;
                continue;
            }
            used[ei] = true;
            stack.push(w);
            moved = true;
            break;
        }
        if !moved {
            circuit.push(v);
            stack.pop();
        }
    }
    // The sequence comes out tail-first; either direction of the circuit
    // is a valid balanced orientation, so no reversal is needed.
    circuit
}

/// Kuhn's augmenting-path matching, left vertices in ascending order.
/// Returns the right partner of each left vertex.
fn bipartite_perfect_matching(n: usize, out_nbrs: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        let mut visited = vec![false; n];
        let grew = augment(u, out_nbrs, &mut visited, &mut match_left, &mut match_right);
        assert!(grew, "an r-regular bipartite graph has a perfect matching");
    }
    match_left
}

fn augment(
    u: usize,
    out_nbrs: &[Vec<usize>],
    visited: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &v in &out_nbrs[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match match_right[v] {
            None => true,
            Some(w) => augment(w, out_nbrs, visited, match_left, match_right),
        };
        if free {
            match_right[v] = Some(u);
            match_left[u] = Some(v);
            return true;
        }
    }
    false
}

/// Splits a 2-regular edge set into its cycles, lowest vertex first.
fn cycle_components(n: usize, chosen: &[EdgeId]) -> Vec<VertexSet> {
    let mut fadj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in chosen {
        let (u, v) = e.endpoints();
        fadj[u].push(v);
        fadj[v].push(u);
    }
    for row in &mut fadj {
        row.sort_unstable();
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut cycle = vec![s];
        seen[s] = true;
        let mut prev = s;
        let mut cur = fadj[s][0];
        while cur != s {
            cycle.push(cur);
            seen[cur] = true;
            let next = fadj[cur]
                .iter()
                .copied()
                .find(|&w| w != prev)
                .expect("2-regular walks continue until they close");
            prev = cur;
            cur = next;
        }
        out.push(VertexSet::new(cycle));
    }
    out
}

// ==================================================================
// [2,3]-factors of odd-regular graphs
// ==================================================================

/// Finds a spanning subgraph with every degree in `{2, 3}` and every
/// component regular, for a connected `k`-regular graph with `k` odd.
///
/// Cubic graphs are their own factor.  For `k ≥ 5` a backtracking search
/// decides the edges in lexicographic order; at an edge whose endpoint
/// already holds two chosen edges the exclude branch is tried first, so
/// the search prefers to complete vertices at degree 2 and cycle
/// components dominate.  The first factor in this branch order is
/// returned, making the result deterministic.
///
/// # Errors
/// Rejects graphs that are not connected and odd-regular with `k ≥ 3`,
/// and graphs with more than 40 edges (the search is exponential).
pub fn factor_23(g: &Graph) -> Result<Factor, Error> {
    let fail = |reason: String| Error::Precondition {
        operation: "factor_23",
        reason,
    };
    let report = classify(g);
    let k = match report.regular_degree {
        Some(k) if k >= 3 && k % 2 == 1 => k,
        Some(k) => {
            return Err(fail(format!(
                "the graph is {k}-regular; this construction needs odd degree ≥ 3"
            )));
        }
        None => return Err(fail("the graph is not regular".to_string())),
    };
    if !report.is_connected {
        return Err(fail("the graph is not connected".to_string()));
    }

    if k == 3 {
        let components = g.components().into_iter().map(|set| (set, 3)).collect();
        let factor = Factor {
            edges: g.edges(),
            components,
            kind: FactorKind::TwoThreeFactor,
        };
        debug_assert!(factor.validate(g).is_ok());
        return Ok(factor);
    }

    let m = g.m();
    if m > FACTOR_SEARCH_GUARD {
        return Err(Error::TooLarge {
            operation: "factor_23",
            limit: FACTOR_SEARCH_GUARD,
            actual: m,
        });
    }

    let n = g.n();
    let edges = g.edges();
    let mut deg = vec![0usize; n];
    let mut rem: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut chosen = vec![false; m];
    if !search_factor(n, &edges, 0, &mut deg, &mut rem, &mut chosen) {
        return Err(fail(
            "no spanning subgraph with degrees in {2,3} and regular components exists \
             in the search space — unexpected for a connected odd-regular graph"
                .to_string(),
        ));
    }

    let kept: Vec<EdgeId> = (0..m).filter(|&i| chosen[i]).map(|i| edges[i]).collect();
    let mut fadj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in &kept {
        let (u, v) = e.endpoints();
        fadj[u].push(v);
        fadj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &fadj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let r = fadj[comp[0]].len();
        components.push((VertexSet::new(comp), r));
    }
    let factor = Factor {
        edges: kept,
        components,
        kind: FactorKind::TwoThreeFactor,
    };
    debug_assert!(factor.validate(g).is_ok());
    Ok(factor)
}

/// Decides edge `i`, keeping every vertex inside the degree window:
/// a vertex may never exceed 3 chosen edges, and must always be able to
/// reach 2 from its undecided ones.  Leaves additionally require every
/// component of the chosen subgraph to be regular.
fn search_factor(
    n: usize,
    edges: &[EdgeId],
    i: usize,
    deg: &mut [usize],
    rem: &mut [usize],
    chosen: &mut [bool],
) -> bool {
    if i == edges.len() {
        return components_regular(n, edges, chosen, deg);
    }
    let (u, v) = edges[i].endpoints();
    rem[u] -= 1;
    rem[v] -= 1;
    let include_ok = deg[u] < 3 && deg[v] < 3;
    let exclude_ok = deg[u] + rem[u] >= 2 && deg[v] + rem[v] >= 2;
    let exclude_first = deg[u] == 2 || deg[v] == 2;
    let order = if exclude_first {
        [false, true]
    } else {
        [true, false]
    };
    for take in order {
        if take && include_ok {
            deg[u] += 1;
            deg[v] += 1;
            chosen[i] = true;
            if search_factor(n, edges, i + 1, deg, rem, chosen) {
                return true;
            }
            chosen[i] = false;
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !take && exclude_ok && search_factor(n, edges, i + 1, deg, rem, chosen) {
            return true;
        }
    }
    rem[u] += 1;
    rem[v] += 1;
    false
}

/// True if every component of the chosen subgraph has one common degree.
fn components_regular(n: usize, edges: &[EdgeId], chosen: &[bool], deg: &[usize]) -> bool {
    let mut fadj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        if chosen[i] {
            let (u, v) = e.endpoints();
            fadj[u].push(v);
            fadj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let want = deg[s];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            if deg[v] != want {
                return false;
            }
            for &w in &fadj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
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
    use crate::generate::{generate, FamilySpec};

    #[test]
    fn cycle_is_its_own_two_factor() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let factor = petersen_two_factor(&g).unwrap();
        factor.validate(&g).unwrap();
        assert_eq!(factor.edges, g.edges(), "C_6 decomposes into itself");
        assert_eq!(factor.components.len(), 1);
        assert_eq!(factor.components[0], (VertexSet::full(6), 2));
    }

    #[test]
    fn complete_graph_k5_splits_into_cycles() {
        let g = generate(&FamilySpec::Complete(5)).unwrap();
        let factor = petersen_two_factor(&g).unwrap();
        factor.validate(&g).unwrap();
        assert_eq!(factor.kind, FactorKind::TwoFactor);
        let covered: usize = factor.components.iter().map(|(s, _)| s.len()).sum();
        assert_eq!(covered, 5, "components must span all vertices");
        let again = petersen_two_factor(&g).unwrap();
        assert_eq!(again.edges, factor.edges, "construction is deterministic");
    }

    #[test]
    fn four_regular_bipartite_has_no_odd_cycles() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in 4..8 {
                edges.push((u, v));
            }
        }
        let k44 = Graph::from_edges(8, &edges).unwrap();
        let factor = petersen_two_factor(&k44).unwrap();
        factor.validate(&k44).unwrap();
        for (set, _) in &factor.components {
            assert!(
                set.len() % 2 == 0,
                "bipartite hosts admit only even cycles, got one of length {}",
                set.len()
            );
            assert_ne!(set.len(), 5, "no component may be a 5-cycle here");
        }
    }

    #[test]
    fn two_factor_rejects_bad_inputs() {
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(
            petersen_two_factor(&k33).is_err(),
            "3-regular graphs have odd degree"
        );

        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert!(petersen_two_factor(&p4).is_err(), "paths are not regular");

        let two_triangles = generate(&FamilySpec::Cycle(3))
            .unwrap()
            .disjoint_union(&generate(&FamilySpec::Cycle(3)).unwrap());
        assert!(
            petersen_two_factor(&two_triangles).is_err(),
            "disconnected graphs have no Eulerian circuit"
        );
    }

    #[test]
    fn cubic_graphs_are_their_own_factor() {
        let g = generate(&FamilySpec::Petersen).unwrap();
        let factor = factor_23(&g).unwrap();
        factor.validate(&g).unwrap();
        assert_eq!(factor.edges, g.edges());
        assert_eq!(factor.components, vec![(VertexSet::full(10), 3)]);
    }

    #[test]
    fn k6_finds_a_factor_of_cycles() {
        let g = generate(&FamilySpec::Complete(6)).unwrap();
        let factor = factor_23(&g).unwrap();
        factor.validate(&g).unwrap();
        assert_eq!(factor.kind, FactorKind::TwoThreeFactor);
        let covered: usize = factor.components.iter().map(|(s, _)| s.len()).sum();
        assert_eq!(covered, 6);
        // The cycle-first branch order stops every vertex at two edges
        // here: the first leaf is a pair of triangles.
        assert!(
            factor.components.iter().all(|&(_, r)| r == 2),
            "K_6's first factor in branch order is all cycles"
        );
    }

    #[test]
    fn k55_heaviest_in_scope_input_completes() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in 5..10 {
                edges.push((u, v));
            }
        }
        let k55 = Graph::from_edges(10, &edges).unwrap();
        let factor = factor_23(&k55).unwrap();
        factor.validate(&k55).unwrap();
        for (set, r) in &factor.components {
            assert!(
                *r == 2 || *r == 3,
                "component degrees stay in the window, got {r}"
            );
            assert!(set.len() % 2 == 0, "bipartite components are even");
        }
    }

    #[test]
    fn factor_23_rejects_bad_inputs() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        assert!(factor_23(&c4).is_err(), "even-regular inputs are rejected");

        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert!(factor_23(&p4).is_err(), "irregular inputs are rejected");

        let k10 = generate(&FamilySpec::Complete(10)).unwrap();
        assert!(
            matches!(factor_23(&k10), Err(Error::TooLarge { .. })),
            "45 edges exceed the search guard"
        );
    }
}
