//! Certificates on cycles and paths: the base cases every other pipeline
//! reduces to.
//!
//! On a cycle, taking the endpoints of every third edge leaves a set of
//! pairwise non-adjacent edges, so each chosen vertex keeps exactly one
//! neighbor — an all-degrees-odd induced subgraph of `2⌊ℓ/3⌋` vertices,
//! which is the exact optimum.  On a path the same rhythm applies: take
//! an end edge, skip one vertex, recurse on the rest.

use crate::certify::{Certificate, Ratio, Target};
use crate::error::Error;
use crate::graph::VertexSet;

/// Certificate for the cycle `C_ℓ` (vertices `0..ℓ` in cycle order).
///
/// The witness is `{3i, 3i+1}` for `0 ≤ i < ⌊ℓ/3⌋`: the endpoints of
/// every third edge.  Its size `2⌊ℓ/3⌋` is exactly the largest odd
/// induced subgraph of a cycle.  The recorded bound is `ℓ/2` — except for
/// `ℓ = 5`, the one cycle that falls short of half, where it is `2`.
pub fn odd_cert_cycle(l: usize) -> Result<Certificate, Error> {
    if l < 3 {
        return Err(Error::Precondition {
            operation: "odd_cert_cycle",
            reason: format!("cycle length must be at least 3 (got {l})"),
        });
    }
    let q = l / 3;
    let mut ids = Vec::with_capacity(2 * q);
    for i in 0..q {
        ids.push(3 * i);
        ids.push(3 * i + 1);
    }
    let bound = if l == 5 {
        Ratio::new(2, 1)
    } else {
        Ratio::new(l as u64, 2)
    };
    let trace = vec![format!(
        "cycle of length {l}: kept the endpoints of every third edge, {q} edge(s), {} vertices",
        2 * q
    )];
    Ok(Certificate::new(
        "cycle-every-third-edge",
        Target::Host,
        VertexSet::from_sorted(ids),
        bound,
        trace,
    ))
}

/// Certificate for the path `P_t` (vertices `0..t` in path order).
///
/// Take the first edge `{0, 1}`, skip vertex `2`, and recurse on the
/// remaining path; a remainder of 2, 3 or 4 vertices contributes its
/// first edge and stops.  The witness is a union of pairwise non-adjacent
/// edges of size `2⌈(t−1)/3⌉ ≥ t/2`, recorded with bound `t/2`.
pub fn odd_cert_path(t: usize) -> Result<Certificate, Error> {
    if t < 2 {
        return Err(Error::Precondition {
            operation: "odd_cert_path",
            reason: format!("path order must be at least 2 (got {t}); a single vertex has no odd subgraph"),
        });
    }
    let mut ids = Vec::new();
    let mut i = 0;
    // Invariant: vertices i..t still form an untouched subpath of at
    // least 2 vertices, and nothing chosen so far is adjacent to vertex i.
    while t - i >= 5 {
        ids.push(i);
        ids.push(i + 1);
        i += 3;
    }
    ids.push(i);
    ids.push(i + 1);
    let trace = vec![format!(
        "path on {t} vertices: kept an end edge and skipped one vertex, repeatedly; {} edge(s), {} vertices",
        ids.len() / 2,
        ids.len()
    )];
    Ok(Certificate::new(
        "path-skip-every-third",
        Target::Host,
        VertexSet::from_sorted(ids),
        Ratio::new(t as u64, 2),
        trace,
    ))
}

// ==================================================================
// Tests
// ==================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::oracle::fo_exact;

    #[test]
    fn cycle_certificates_are_exactly_optimal() {
        for l in 3..=21 {
            let g = generate(&FamilySpec::Cycle(l)).unwrap();
            let cert = odd_cert_cycle(l).unwrap();
            cert.check(&g)
                .unwrap_or_else(|e| panic!("C_{l} certificate must check: {e}"));
            assert_eq!(
                cert.size,
                2 * (l / 3),
                "C_{l} witness must have 2*floor(l/3) vertices"
            );
            let exact = fo_exact(&g, None).unwrap();
            assert_eq!(
                cert.size, exact.value,
                "C_{l} certificate must match the exact optimum"
            );
        }
    }

    #[test]
    fn cycle_bound_is_half_except_for_c5() {
        assert_eq!(odd_cert_cycle(6).unwrap().bound, Ratio::new(6, 2));
        assert_eq!(odd_cert_cycle(7).unwrap().bound, Ratio::new(7, 2));
        let c5 = odd_cert_cycle(5).unwrap();
        assert_eq!(c5.bound, Ratio::new(2, 1), "C_5 only promises 2 vertices");
        assert_eq!(c5.size, 2);
        assert_eq!(c5.witness, VertexSet::new(vec![0, 1]));
    }

    #[test]
    fn cycle_rejects_too_short() {
        assert!(odd_cert_cycle(2).is_err());
        assert!(odd_cert_cycle(0).is_err());
    }

    #[test]
    fn path_certificates_meet_half_and_never_beat_the_oracle() {
        for t in 2..=30 {
            let g = generate(&FamilySpec::Path(t)).unwrap();
            let cert = odd_cert_path(t).unwrap();
            cert.check(&g)
                .unwrap_or_else(|e| panic!("P_{t} certificate must check: {e}"));
            assert!(
                cert.size >= t.div_ceil(2),
                "P_{t} witness has {} vertices, below ceil(t/2)",
                cert.size
            );
            // Every witness vertex keeps exactly one neighbor: the
            // construction is a union of non-adjacent edges.
            for v in cert.witness.iter() {
                assert_eq!(
                    g.degree_in_set(v, &cert.witness),
                    1,
                    "P_{t} witness vertex {v} must keep exactly one neighbor"
                );
            }
            let exact = fo_exact(&g, None).unwrap();
            assert!(
                cert.size <= exact.value,
                "P_{t} certificate of size {} exceeds the optimum {}",
                cert.size,
                exact.value
            );
        }
    }

    #[test]
    fn path_base_cases_pick_the_first_edge() {
        for t in 2..=4 {
            let cert = odd_cert_path(t).unwrap();
            assert_eq!(
                cert.witness,
                VertexSet::new(vec![0, 1]),
                "P_{t} base case keeps only the first edge"
            );
        }
        let p5 = odd_cert_path(5).unwrap();
        assert_eq!(p5.witness, VertexSet::new(vec![0, 1, 3, 4]));
        assert_eq!(p5.size, 4, "P_5 already fits two edges");
    }

    #[test]
    fn path_rejects_too_short() {
        assert!(odd_cert_path(1).is_err());
        assert!(odd_cert_path(0).is_err());
    }
}
