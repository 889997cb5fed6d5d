//! Checkable certificates for lower bounds on odd induced subgraphs.
//!
//! A [`Certificate`] packages a witness set together with the exact
//! rational bound it claims to meet, the graph the witness lives in (the
//! host itself, or the host's line graph), and a trace of construction
//! steps.  The builders in the submodules each realize one lower bound in
//! polynomial time for a specific graph class; [`Certificate::check`]
//! re-verifies any certificate from scratch, independent of how it was
//! built.
//!
//! A [`Factor`] is the intermediate object of the line-graph pipelines: a
//! spanning subgraph whose components are each 2-regular (cycles) or
//! 3-regular on the factor's edges.  [`Factor::validate`] checks all of
//! its structural invariants against the host graph.
//!
//! Bounds are stored as exact rationals and compared by cross
//! multiplication; no bound ever passes through floating point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{is_odd_induced, EdgeId, Graph, VertexSet};

mod bipartite;
mod clawfree;
mod counterexample;
mod factor;
mod linegraph;
mod paths_cycles;
mod planar;

pub use bipartite::bipartite_subgraph_cert;
pub use clawfree::clawfree_cert;
pub use counterexample::counterexample_for_order;
pub use factor::{factor_23, petersen_two_factor};
pub use linegraph::{linegraph_cert, linegraph_cert_extended};
pub use paths_cycles::{odd_cert_cycle, odd_cert_path};
pub use planar::planar_reduction;

// ==================================================================
// Ratio
// ==================================================================

/// An exact non-negative rational `num/den`.
///
/// Used for certificate bounds such as `n/χ` or `n/2`; comparisons cross
/// multiply in 128 bits, so they are exact for every graph this crate can
/// hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    /// Builds `num/den`.
    ///
    /// # Panics
    /// Panics if `den` is zero.
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "Ratio denominator must be nonzero (num = {num})");
        Ratio { num, den }
    }

    /// True if `size >= num/den`, compared exactly.
    pub fn meets(&self, size: usize) -> bool {
        size as u128 * self.den as u128 >= self.num as u128
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

// ==================================================================
// Target
// ==================================================================

/// Which graph a certificate's witness lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    /// The witness is a set of vertices of the host graph itself.
    #[serde(rename = "G")]
    Host,
    /// The witness is a set of vertices of the host's line graph — that
    /// is, a set of host edges, numbered in lexicographic edge order.
    #[serde(rename = "L(G)")]
    LineGraph,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Host => write!(f, "G"),
            Target::LineGraph => write!(f, "L(G)"),
        }
    }
}

// ==================================================================
// Certificate
// ==================================================================

/// A checkable lower-bound witness.
///
/// Serializes as
/// `{ theorem_tag, target: "G" | "L(G)", witness: [ids], bound: {num, den}, size, trace: [strings] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Name of the pipeline that produced this certificate.
    pub theorem_tag: String,
    /// Graph the witness ids refer to.
    pub target: Target,
    /// The witness: induces a subgraph in which every degree is odd.
    pub witness: VertexSet,
    /// The claimed lower bound; the certificate promises `size >= bound`.
    pub bound: Ratio,
    /// Size of the witness, recorded redundantly for external consumers.
    pub size: usize,
    /// Human-readable construction steps, for auditing failures.
    pub trace: Vec<String>,
}

impl Certificate {
    /// Assembles a certificate, filling in `size` from the witness.
    pub(crate) fn new(
        theorem_tag: &str,
        target: Target,
        witness: VertexSet,
        bound: Ratio,
        trace: Vec<String>,
    ) -> Certificate {
        let size = witness.len();
        Certificate {
            theorem_tag: theorem_tag.to_string(),
            target,
            witness,
            bound,
            size,
            trace,
        }
    }

    /// Re-verifies the certificate against `checked`, the graph the
    /// witness ids refer to: pass the host itself for target `G`, and the
    /// host's line graph for target `L(G)`.
    ///
    /// Confirms that `size` matches the witness, that the witness induces
    /// a subgraph of `checked` with every degree odd, and that the witness
    /// is at least as large as the recorded bound.
    pub fn check(&self, checked: &Graph) -> Result<(), Error> {
        let fail = |reason: String| Error::Precondition {
            operation: "certificate check",
            reason,
        };
        if self.size != self.witness.len() {
            return Err(fail(format!(
                "recorded size {} does not match witness size {}",
                self.size,
                self.witness.len()
            )));
        }
        if !self.witness.within(checked.n()) {
            return Err(fail(format!(
                "witness {} is not within a graph on {} vertices",
                self.witness,
                checked.n()
            )));
        }
        if !is_odd_induced(checked, &self.witness) {
            return Err(fail(format!(
                "witness {} does not induce an all-degrees-odd subgraph",
                self.witness
            )));
        }
        if !self.bound.meets(self.size) {
            return Err(fail(format!(
                "witness size {} is below the recorded bound {}",
                self.size, self.bound
            )));
        }
        Ok(())
    }
}

// ==================================================================
// Factor
// ==================================================================

/// Flavor of a spanning factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// Every component is a cycle (2-regular on the factor's edges).
    TwoFactor,
    /// Components are 2-regular (cycles) or 3-regular.
    TwoThreeFactor,
}

/// A spanning subgraph whose components are each regular of degree 2 or 3
/// on the factor's edges.
#[derive(Debug, Clone)]
pub struct Factor {
    /// The factor's edges, a subset of the host's edges.
    pub edges: Vec<EdgeId>,
    /// Vertex set and factor-degree `r` of each component.
    pub components: Vec<(VertexSet, usize)>,
    /// Whether 3-regular components are permitted.
    pub kind: FactorKind,
}

impl Factor {
    /// Checks every structural invariant against `host`:
    ///
    /// - the component vertex sets partition `0..host.n()`;
    /// - every factor edge is a host edge with both endpoints in one
    ///   component, and no edge is listed twice;
    /// - each component is `r`-regular on the factor's edges with the
    ///   recorded `r ∈ {2, 3}`, and connected — so every 2-regular
    ///   component is a single cycle;
    /// - a [`FactorKind::TwoFactor`] contains no 3-regular components.
    pub fn validate(&self, host: &Graph) -> Result<(), Error> {
        let fail = |reason: String| Error::Precondition {
            operation: "factor validation",
            reason,
        };
        let n = host.n();

        // Components partition the vertex set.
        let mut comp_of = vec![usize::MAX; n];
        for (ci, (set, r)) in self.components.iter().enumerate() {
            if !set.within(n) {
                return Err(fail(format!(
                    "component {ci} mentions a vertex outside the host ({} vertices)",
                    n
                )));
            }
            match (self.kind, *r) {
                (FactorKind::TwoFactor, 2) | (FactorKind::TwoThreeFactor, 2 | 3) => {}
                _ => {
                    return Err(fail(format!(
                        "component {ci} records regularity {r}, which {:?} does not allow",
                        self.kind
                    )));
                }
            }
            if set.len() < r + 1 {
                return Err(fail(format!(
                    "component {ci} has {} vertices, too few to be {r}-regular",
                    set.len()
                )));
            }
            for v in set.iter() {
                if comp_of[v] != usize::MAX {
                    return Err(fail(format!("vertex {v} appears in two components")));
                }
                comp_of[v] = ci;
            }
        }
        if let Some(v) = (0..n).find(|&v| comp_of[v] == usize::MAX) {
            return Err(fail(format!("vertex {v} is not covered by any component")));
        }

        // Edges: host edges, no duplicates, no crossing between components.
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(fail(format!("factor edge {} is listed twice", w[0])));
        }
        let mut deg = vec![0usize; n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            let (u, v) = e.endpoints();
            if v >= n || !host.has_edge(u, v) {
                return Err(fail(format!("factor edge {e} is not a host edge")));
            }
            if comp_of[u] != comp_of[v] {
                return Err(fail(format!("factor edge {e} crosses two components")));
            }
            deg[u] += 1;
            deg[v] += 1;
            adj[u].push(v);
            adj[v].push(u);
        }

        // Per-component regularity and connectivity.
        for (ci, (set, r)) in self.components.iter().enumerate() {
            for v in set.iter() {
                if deg[v] != *r {
                    return Err(fail(format!(
                        "vertex {v} has factor degree {} in component {ci}, expected {r}",
                        deg[v]
                    )));
                }
            }
            let mut seen = vec![false; n];
            let start = set.as_slice()[0];
            seen[start] = true;
            let mut stack = vec![start];
            let mut reached = 0usize;
            while let Some(v) = stack.pop() {
                reached += 1;
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if reached != set.len() {
                return Err(fail(format!(
                    "component {ci} is not connected on the factor's edges"
                )));
            }
        }
        Ok(())
    }
}

// ==================================================================
// Tests
// ==================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};

    #[test]
    fn ratio_meets_is_exact() {
        assert!(Ratio::new(7, 2).meets(4), "4 >= 7/2 must hold");
        assert!(!Ratio::new(7, 2).meets(3), "3 < 7/2 must fail");
        assert!(Ratio::new(3, 1).meets(3), "equality counts as met");
        assert!(Ratio::new(0, 1).meets(0), "zero bound is met by size 0");
        assert_eq!(Ratio::new(7, 2).to_string(), "7/2");
        assert_eq!(Ratio::new(4, 1).to_string(), "4");
    }

    #[test]
    #[should_panic(expected = "denominator must be nonzero")]
    fn ratio_rejects_zero_denominator() {
        let _ = Ratio::new(1, 0);
    }

    #[test]
    fn certificate_json_shape_is_pinned() {
        let cert = Certificate::new(
            "cycle-every-third-edge",
            Target::Host,
            VertexSet::new(vec![0, 1, 3, 4]),
            Ratio::new(3, 1),
            vec!["picked edges 0-1 and 3-4".to_string()],
        );
        let json = serde_json::to_value(&cert).expect("certificate must serialize");
        assert_eq!(json["theorem_tag"], "cycle-every-third-edge");
        assert_eq!(json["target"], "G");
        assert_eq!(json["witness"], serde_json::json!([0, 1, 3, 4]));
        assert_eq!(json["bound"], serde_json::json!({"num": 3, "den": 1}));
        assert_eq!(json["size"], 4);
        assert_eq!(
            json["trace"],
            serde_json::json!(["picked edges 0-1 and 3-4"])
        );

        let back: Certificate =
            serde_json::from_value(json).expect("certificate must deserialize");
        assert_eq!(back, cert, "serde round trip must be lossless");

        let lg = serde_json::to_value(Target::LineGraph).unwrap();
        assert_eq!(lg, "L(G)", "line-graph target spells L(G)");
    }

    #[test]
    fn certificate_check_accepts_valid_and_rejects_invalid() {
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        let good = Certificate::new(
            "cycle-every-third-edge",
            Target::Host,
            VertexSet::new(vec![0, 1, 3, 4]),
            Ratio::new(3, 1),
            Vec::new(),
        );
        good.check(&c6).expect("valid certificate must check");

        let too_bold = Certificate {
            bound: Ratio::new(5, 1),
            ..good.clone()
        };
        assert!(
            too_bold.check(&c6).is_err(),
            "bound above the witness size must be rejected"
        );

        let not_odd = Certificate::new(
            "cycle-every-third-edge",
            Target::Host,
            VertexSet::new(vec![0, 1, 2]),
            Ratio::new(1, 1),
            Vec::new(),
        );
        assert!(
            not_odd.check(&c6).is_err(),
            "a path of three cycle vertices has an even-degree middle"
        );

        let wrong_size = Certificate {
            size: 3,
            ..good.clone()
        };
        assert!(
            wrong_size.check(&c6).is_err(),
            "recorded size must match the witness"
        );

        let out_of_range = Certificate::new(
            "cycle-every-third-edge",
            Target::Host,
            VertexSet::new(vec![0, 1, 3, 6]),
            Ratio::new(3, 1),
            Vec::new(),
        );
        assert!(
            out_of_range.check(&c6).is_err(),
            "witness ids must lie inside the graph"
        );
    }

    #[test]
    fn factor_validate_accepts_cycle_and_cubic_components() {
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        let cycle_factor = Factor {
            edges: c6.edges(),
            components: vec![(VertexSet::full(6), 2)],
            kind: FactorKind::TwoFactor,
        };
        cycle_factor
            .validate(&c6)
            .expect("the cycle is its own 2-factor");

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let cubic_factor = Factor {
            edges: k4.edges(),
            components: vec![(VertexSet::full(4), 3)],
            kind: FactorKind::TwoThreeFactor,
        };
        cubic_factor
            .validate(&k4)
            .expect("K_4 is its own 3-regular spanning factor");
    }

    #[test]
    fn factor_validate_rejects_structural_breakage() {
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();

        let crossing = Factor {
            edges: c6.edges(),
            components: vec![
                (VertexSet::new(vec![0, 1, 2]), 2),
                (VertexSet::new(vec![3, 4, 5]), 2),
            ],
            kind: FactorKind::TwoFactor,
        };
        let err = crossing.validate(&c6).unwrap_err();
        assert!(
            err.to_string().contains("crosses"),
            "the cycle has edges joining the two alleged components: {err}"
        );

        let missing_edge = Factor {
            edges: c6.edges()[1..].to_vec(),
            components: vec![(VertexSet::full(6), 2)],
            kind: FactorKind::TwoFactor,
        };
        assert!(
            missing_edge.validate(&c6).is_err(),
            "dropping an edge breaks 2-regularity"
        );

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let cubic_in_two_factor = Factor {
            edges: k4.edges(),
            components: vec![(VertexSet::full(4), 3)],
            kind: FactorKind::TwoFactor,
        };
        assert!(
            cubic_in_two_factor.validate(&k4).is_err(),
            "a 2-factor may not contain a 3-regular component"
        );

        let not_spanning = Factor {
            edges: vec![EdgeId::new(0, 1), EdgeId::new(1, 2), EdgeId::new(0, 2)],
            components: vec![(VertexSet::new(vec![0, 1, 2]), 2)],
            kind: FactorKind::TwoFactor,
        };
        let k4_err = not_spanning.validate(&k4).unwrap_err();
        assert!(
            k4_err.to_string().contains("not covered"),
            "vertex 3 is uncovered: {k4_err}"
        );
    }
}
