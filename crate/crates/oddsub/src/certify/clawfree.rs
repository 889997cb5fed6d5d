//! Odd certificates for claw-free graphs via the chromatic bound.
//!
//! In a claw-free graph, any induced bipartite subgraph has maximum
//! degree at most 2 — a vertex of degree 3 in a bipartite subgraph would
//! carry three pairwise non-adjacent neighbors, an induced claw.  So the
//! bipartite stage's output decomposes into paths and even cycles, each
//! of which has an odd certificate of at least half its vertices.  The
//! union therefore reaches `|H|/2 ≥ n/k` for a `k`-coloring.

use crate::certify::{
    bipartite_subgraph_cert, odd_cert_cycle, odd_cert_path, Certificate, Ratio, Target,
};
use crate::classify::classify;
use crate::color::{chromatic_number, Coloring};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Builds an odd certificate of at least `n/k` vertices for a claw-free
/// graph without isolated vertices, where `k` is the number of colors in
/// `coloring` (computed exactly when absent, guarded like
/// [`chromatic_number`]).
///
/// # Errors
/// Rejects graphs with an induced claw or an isolated vertex, improper
/// supplied colorings, and propagates failures of the bipartite stage.
pub fn clawfree_cert(g: &Graph, coloring: Option<&Coloring>) -> Result<Certificate, Error> {
    let report = classify(g);
    if !report.claw_free {
        return Err(Error::Precondition {
            operation: "clawfree_cert",
            reason: "the graph contains an induced claw (a vertex with three pairwise non-adjacent neighbors)".to_string(),
        });
    }
    if g.n() == 0 || report.min_degree == 0 {
        return Err(Error::Precondition {
            operation: "clawfree_cert",
            reason: "the graph has an isolated vertex".to_string(),
        });
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
    let n = g.n();
    let k = coloring.k;
    let mut trace = vec![format!(
        "claw-free graph on {n} vertices with a {k}-coloring; target bound n/k = {}",
        Ratio::new(n as u64, k as u64)
    )];

    let h_set = bipartite_subgraph_cert(g, coloring)?;
    trace.push(format!(
        "bipartite stage kept {} vertices (needs at least 2n/k)",
        h_set.len()
    ));
    let (h, back) = g.induced(&h_set).expect("h_set lies inside g");
    assert!(
        h.max_degree() <= 2,
        "claw-free graphs admit no bipartite induced subgraph of maximum degree 3+; \
         got {} — this is a bug, not an input error",
        h.max_degree()
    );

    let mut ids = Vec::new();
    for comp in h.components() {
        let local = certify_degree_two_component(&h, &comp, &mut trace)?;
        ids.extend(local.witness.iter().map(|i| back[i]));
    }
    let witness = VertexSet::new(ids);
    Ok(Certificate::new(
        "clawfree-chromatic-bound",
        Target::Host,
        witness,
        Ratio::new(n as u64, k as u64),
        trace,
    ))
}

/// Certifies one component of a graph with maximum degree ≤ 2 and
/// minimum degree ≥ 1: a single cycle or a path on ≥ 2 vertices.  The
/// returned witness is in the component's traversal order mapped back to
/// the host's ids.
fn certify_degree_two_component(
    h: &Graph,
    comp: &VertexSet,
    trace: &mut Vec<String>,
) -> Result<Certificate, Error> {
    let t = comp.len();
    let is_cycle = comp.iter().all(|v| h.degree(v) == 2);
    let order = if is_cycle {
        // Lowest vertex first, stepping toward its lower neighbor.
        let start = comp.as_slice()[0];
        let second = h.neighbors(start)[0];
        walk(h, t, start, second)
    } else {
        // Lowest endpoint first.
        let start = comp
            .iter()
            .find(|&v| h.degree(v) == 1)
            .expect("a non-cycle component of a degree-≤2 graph has an endpoint");
        let second = h.neighbors(start)[0];
        walk(h, t, start, second)
    };
    debug_assert_eq!(order.len(), t, "traversal must cover the component");

    let local = if is_cycle {
        debug_assert!(t % 2 == 0, "cycles inside a bipartite subgraph are even");
        odd_cert_cycle(t)?
    } else {
        odd_cert_path(t)?
    };
    trace.push(format!(
        "component of {t} vertices is a {}; kept {} vertices",
        if is_cycle { "cycle" } else { "path" },
        local.size
    ));
    let mapped: Vec<usize> = local.witness.iter().map(|i| order[i]).collect();
    Ok(Certificate::new(
        &local.theorem_tag,
        local.target,
        VertexSet::new(mapped),
        local.bound,
        Vec::new(),
    ))
}

/// Walks a path or cycle component from `start` through `second`,
/// returning the `t` vertices in traversal order.
fn walk(h: &Graph, t: usize, start: usize, second: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(t);
    order.push(start);
    let mut prev = start;
    let mut cur = second;
    while order.len() < t {
        order.push(cur);
        match h.neighbors(cur).into_iter().find(|&w| w != prev) {
            Some(next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    order
}

// ==================================================================
// Tests
// ==================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::graph::line_graph;
    use crate::oracle::fo_exact;
    use rand::rngs::SmallRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn odd_cycle_meets_a_third() {
        let g = generate(&FamilySpec::Cycle(7)).unwrap();
        let cert = clawfree_cert(&g, None).unwrap();
        cert.check(&g).unwrap();
        assert_eq!(cert.bound, Ratio::new(7, 3), "C_7 is 3-chromatic");
        assert_eq!(cert.size, 4, "the surviving P_6 yields two disjoint edges");
    }

    #[test]
    fn even_cycle_stays_whole_and_uses_the_cycle_rule() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let cert = clawfree_cert(&g, None).unwrap();
        cert.check(&g).unwrap();
        assert_eq!(cert.bound, Ratio::new(6, 2));
        assert_eq!(cert.witness, VertexSet::new(vec![0, 1, 3, 4]));
    }

    #[test]
    fn triangle_keeps_an_edge() {
        let g = generate(&FamilySpec::Complete(3)).unwrap();
        let cert = clawfree_cert(&g, None).unwrap();
        cert.check(&g).unwrap();
        assert_eq!(cert.bound, Ratio::new(3, 3));
        assert_eq!(cert.size, 2);
    }

    #[test]
    fn supplied_coloring_sets_the_recorded_bound() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let loose = Coloring {
            colors: vec![0, 1, 0, 1, 0, 2],
            k: 3,
        };
        let cert = clawfree_cert(&g, Some(&loose)).unwrap();
        cert.check(&g).unwrap();
        assert_eq!(
            cert.bound,
            Ratio::new(6, 3),
            "a looser coloring only promises n/3"
        );
    }

    #[test]
    fn rejects_claws_and_isolated_vertices() {
        let star = generate(&FamilySpec::Star(3)).unwrap();
        assert!(
            clawfree_cert(&star, None).is_err(),
            "K_{{1,3}} is the claw itself"
        );

        let petersen = generate(&FamilySpec::Petersen).unwrap();
        assert!(
            clawfree_cert(&petersen, None).is_err(),
            "girth 5 forces claws at every vertex"
        );

        let lonely = generate(&FamilySpec::Complete(3)).unwrap().disjoint_union(&Graph::empty(1));
        assert!(
            clawfree_cert(&lonely, None).is_err(),
            "isolated vertices are excluded"
        );
    }

    #[test]
    fn random_line_graphs_meet_the_chromatic_bound() {
        let mut rng = SmallRng::seed_from_u64(0xC1AF_FEE5);
        let mut done = 0;
        while done < 20 {
            let n = rng.random_range(4..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            if edges.len() < 4 {
                continue;
            }
            let host = Graph::from_edges(n, &edges).unwrap();
            let lg = line_graph(&host).graph;
            if lg.n() == 0 || lg.min_degree() == 0 {
                continue;
            }
            let cert = match clawfree_cert(&lg, None) {
                Ok(c) => c,
                Err(e) => panic!("line graphs are claw-free, got: {e}"),
            };
            cert.check(&lg).unwrap();
            let exact = fo_exact(&lg, None).unwrap();
            assert!(
                cert.size <= exact.value,
                "certificate may not beat the optimum"
            );
            done += 1;
        }
    }
}
