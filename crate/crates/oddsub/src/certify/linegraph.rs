//! Odd certificates in line graphs of regular graphs.
//!
//! A spanning factor with cycle and cubic components turns into an odd
//! set of `L(G)` piece by piece: the edges of a cycle component of length
//! `ℓ` induce `L(C_ℓ) ≅ C_ℓ` inside `L(G)`, so the every-third-edge rule
//! applies; a cubic component's chosen edges induce the same subgraph in
//! `L(G)` as in the component's own line graph, where the exact oracle
//! finds an odd set of at least half the component's order.  Components
//! are vertex-disjoint, so their edge sets are pairwise non-adjacent in
//! `L(G)` and the union stays odd.  Every component contributes at least
//! half its vertices — except 5-cycles, which cap at 2 and are excluded
//! by the plain pipeline and discounted by the extended one.

use crate::certify::{
    factor_23, odd_cert_cycle, petersen_two_factor, Certificate, Factor, Ratio, Target,
};
use crate::classify::classify;
use crate::error::Error;
use crate::graph::{line_graph, EdgeId, Graph, LineGraphResult, VertexSet};
use crate::oracle::fo_exact;

/// Builds an odd set of at least `n/2` vertices in `L(G)` for a
/// connected `k`-regular graph `G` (`k ≥ 2`) with no 5-cycle subgraph.
///
/// Even `k` uses a spanning 2-factor; odd `k` a spanning [2,3]-factor
/// with regular components.  The witness ids live in `L(G)` with vertices
/// numbered by lexicographic edge order (see [`line_graph`]).
///
/// # Errors
/// Rejects disconnected, irregular, degree-≤1, and 5-cycle-containing
/// inputs, and propagates the factor search guard and oracle guard.
pub fn linegraph_cert(g: &Graph) -> Result<Certificate, Error> {
    let fail = |reason: String| Error::Precondition {
        operation: "linegraph_cert",
        reason,
    };
    let report = classify(g);
    let k = match report.regular_degree {
        Some(k) if k >= 2 => k,
        Some(k) => return Err(fail(format!("the graph is {k}-regular; need degree at least 2"))),
        None => return Err(fail("the graph is not regular".to_string())),
    };
    if !report.is_connected {
        return Err(fail("the graph is not connected".to_string()));
    }
    if !report.c5_subgraph_free {
        return Err(fail(
            "the graph contains a 5-cycle subgraph; the half bound can fail there \
             (use the extended pipeline)"
                .to_string(),
        ));
    }

    let factor = if k % 2 == 0 {
        petersen_two_factor(g)?
    } else {
        factor_23(g)?
    };
    let lg = line_graph(g);
    let n = g.n();
    let mut trace = vec![format!(
        "{k}-regular graph on {n} vertices; spanning factor with {} component(s)",
        factor.components.len()
    )];
    let (ids, c5) = certify_components(g, &factor, &lg, &mut trace)?;
    assert_eq!(
        c5, 0,
        "a 5-cycle component would be a 5-cycle subgraph of a host checked to have none"
    );
    let cert = Certificate::new(
        "linegraph-factor-half",
        Target::LineGraph,
        VertexSet::new(ids),
        Ratio::new(n as u64, 2),
        trace,
    );
    debug_assert!(cert.check(&lg.graph).is_ok());
    Ok(cert)
}

/// Like [`linegraph_cert`] but for `d`-regular graphs with `d ≥ 4`,
/// where 5-cycle subgraphs are allowed: each 5-cycle component of the
/// factor contributes only 2 vertices, and the recorded bound drops to
/// `(n − c)/2` for `c` such components.  Since a factor has at most
/// `n/5` five-cycles, the result still reaches `2n/5`.
pub fn linegraph_cert_extended(g: &Graph) -> Result<Certificate, Error> {
    let fail = |reason: String| Error::Precondition {
        operation: "linegraph_cert_extended",
        reason,
    };
    let report = classify(g);
    let d = match report.regular_degree {
        Some(d) if d >= 4 => d,
        Some(d) => {
            return Err(fail(format!(
                "the graph is {d}-regular; the discounted bound is stated for degree at least 4"
            )));
        }
        None => return Err(fail("the graph is not regular".to_string())),
    };
    if !report.is_connected {
        return Err(fail("the graph is not connected".to_string()));
    }

    let factor = if d % 2 == 0 {
        petersen_two_factor(g)?
    } else {
        factor_23(g)?
    };
    let lg = line_graph(g);
    let n = g.n();
    let mut trace = vec![format!(
        "{d}-regular graph on {n} vertices; spanning factor with {} component(s)",
        factor.components.len()
    )];
    let (ids, c5) = certify_components(g, &factor, &lg, &mut trace)?;
    trace.push(format!("{c5} five-cycle component(s) discount the bound"));
    let witness = VertexSet::new(ids);
    assert!(
        5 * witness.len() >= 2 * n,
        "a factor has at most n/5 five-cycles, so the witness reaches 2n/5; \
         got {} of {n}",
        witness.len()
    );
    let cert = Certificate::new(
        "linegraph-factor-extended",
        Target::LineGraph,
        witness,
        Ratio::new((n - c5) as u64, 2),
        trace,
    );
    debug_assert!(cert.check(&lg.graph).is_ok());
    Ok(cert)
}

/// Certifies each factor component inside `L(G)`, returning line-graph
/// vertex ids and the number of 5-cycle components encountered.
fn certify_components(
    g: &Graph,
    factor: &Factor,
    lg: &LineGraphResult,
    trace: &mut Vec<String>,
) -> Result<(Vec<usize>, usize), Error> {
    let n = g.n();
    let mut comp_of = vec![usize::MAX; n];
    for (ci, (set, _)) in factor.components.iter().enumerate() {
        for v in set.iter() {
            comp_of[v] = ci;
        }
    }
    let mut comp_edges: Vec<Vec<EdgeId>> = vec![Vec::new(); factor.components.len()];
    let mut fadj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in &factor.edges {
        let (u, v) = e.endpoints();
        comp_edges[comp_of[u]].push(*e);
        fadj[u].push(v);
        fadj[v].push(u);
    }
    for row in &mut fadj {
        row.sort_unstable();
    }

    let to_lg = |e: &EdgeId| -> usize {
        lg.vertex_of_edge(e)
            .expect("factor edges are host edges, hence line-graph vertices")
    };

    let mut ids = Vec::new();
    let mut c5 = 0usize;
    for (ci, (set, r)) in factor.components.iter().enumerate() {
        match *r {
            2 => {
                let l = set.len();
                if l == 5 {
                    c5 += 1;
                }
                // Order the cycle's edges by walking it from its lowest
                // vertex; consecutive edges share a vertex, so they form
                // a cycle of the same length inside L(G).
                let order = cycle_order(&fadj, set);
                let local = odd_cert_cycle(l)?;
                let picked = local.size;
                for i in local.witness.iter() {
                    let e = EdgeId::new(order[i], order[(i + 1) % l]);
                    ids.push(to_lg(&e));
                }
                trace.push(format!(
                    "component {ci}: cycle of length {l}, kept {picked} edge(s)"
                ));
            }
            3 => {
                let verts = set.as_slice();
                let local_of = |v: usize| {
                    verts
                        .binary_search(&v)
                        .expect("component edges stay inside the component")
                };
                let mut hi = Graph::empty(verts.len());
                for e in &comp_edges[ci] {
                    hi.add_edge(local_of(e.u()), local_of(e.v()));
                }
                let lgh = line_graph(&hi);
                let found = fo_exact(&lgh.graph, None)?;
                assert!(
                    2 * found.value >= verts.len(),
                    "the line graph of a connected cubic graph always reaches half its \
                     order; the oracle returned {} for a component of {} vertices",
                    found.value,
                    verts.len()
                );
                for i in found.witness.iter() {
                    let le = lgh.edge_of_vertex[i];
                    let e = EdgeId::new(verts[le.u()], verts[le.v()]);
                    ids.push(to_lg(&e));
                }
                trace.push(format!(
                    "component {ci}: cubic on {} vertices, oracle kept {} edge(s)",
                    verts.len(),
                    found.value
                ));
            }
            _ => unreachable!("factors carry only 2- and 3-regular components"),
        }
    }
    Ok((ids, c5))
}

/// Vertices of a 2-regular component in cycle order, lowest first,
/// stepping toward its lower neighbor.
fn cycle_order(fadj: &[Vec<usize>], set: &VertexSet) -> Vec<usize> {
    let start = set.as_slice()[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = fadj[start][0];
    while cur != start {
        order.push(cur);
        let next = fadj[cur]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cycle walks continue until they close");
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), set.len());
    order
}

// ==================================================================
// Tests
// ==================================================================
