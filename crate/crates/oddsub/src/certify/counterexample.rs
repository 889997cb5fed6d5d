//! Families separating the maximum odd induced subgraph from `n/2`.
//!
//! The 9-vertex gadget `F` is bipartite (so 2-chromatic) with maximum
//! degree 3, and its largest odd induced subgraph has only 4 vertices.
//! Disjoint unions of gadget copies with 4-cycles keep every one of
//! those properties, and the odd value adds up across components: `k`
//! gadgets and `ℓ` four-cycles give `f = 4k + 2ℓ` on `n = 9k + 4ℓ`
//! vertices, and `2(4k + 2ℓ) = n − k < n`.  Every order `n ≥ 33` is
//! reachable by choosing `k ∈ {1, 2, 3, 4}` from the residue of `n`
//! modulo 4.

use crate::certify::{Certificate, Ratio, Target};
use crate::classify::classify;
use crate::error::Error;
use crate::generate::{generate, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::oracle::fo_exact;

/// Builds a bipartite `K_{1,r}`-free graph of order `n` whose maximum
/// odd induced subgraph is strictly smaller than `n/2`, together with a
/// certificate realizing that maximum exactly.
///
/// The certificate's bound is the exact value `4k + 2ℓ`, met with
/// equality; the trace records the residue row used, the chromatic and
/// star-freeness checks, and the violated half bound.
///
/// # Errors
/// Rejects `n < 33` (smaller orders are not covered by the residue
/// table) and `r < 4` (the gadget contains induced `K_{1,3}`s).
pub fn counterexample_for_order(n: usize, r: usize) -> Result<(Graph, Certificate), Error> {
    let fail = |reason: String| Error::Precondition {
        operation: "counterexample_for_order",
        reason,
    };
    if n < 33 {
        return Err(fail(format!("the construction starts at order 33 (got {n})")));
    }
    if r < 4 {
        return Err(fail(format!(
            "the gadget contains induced stars with 3 leaves, so only r >= 4 works (got {r})"
        )));
    }

    let (k, l) = match n % 4 {
        1 => (1, (n - 9) / 4),
        2 => (2, (n - 18) / 4),
        3 => (3, (n - 27) / 4),
        _ => (4, (n - 36) / 4),
    };
    debug_assert_eq!(9 * k + 4 * l, n, "residue table must tile the order exactly");

    let g = generate(&FamilySpec::Gkl(k, l))?;
    debug_assert_eq!(g.n(), n);

    let report = classify(&g);
    assert!(
        report.is_bipartite && g.m() > 0,
        "the union of bipartite blocks is bipartite and has edges, so its chromatic number is 2"
    );
    assert!(
        report.k1r_free_from <= r,
        "maximum degree 3 leaves no room for an induced star with {r} leaves"
    );

    // Per-block maxima, oracle-confirmed on every call.
    let f_block = generate(&FamilySpec::F)?;
    let c4_block = generate(&FamilySpec::Cycle(4))?;
    let f_best = fo_exact(&f_block, None)?;
    let c4_best = fo_exact(&c4_block, None)?;
    assert_eq!(f_best.value, 4, "the gadget's largest odd set has 4 vertices");
    assert_eq!(c4_best.value, 2, "a 4-cycle's largest odd set is one edge");

    // Components are independent, so block maxima add up; shift each
    // block's witness to its offset.
    let mut ids = Vec::new();
    for i in 0..k {
        ids.extend(f_best.witness.iter().map(|v| v + 9 * i));
    }
    for j in 0..l {
        ids.extend(c4_best.witness.iter().map(|v| v + 9 * k + 4 * j));
    }
    let witness = VertexSet::new(ids);
    let value = 4 * k + 2 * l;
    debug_assert_eq!(witness.len(), value);
    assert!(
        2 * value < n,
        "2(4k + 2l) = n - k, so the half bound fails whenever k >= 1"
    );

    let trace = vec![
        format!("order {n} is {} (mod 4): {k} gadget block(s) and {l} four-cycle(s)", n % 4),
        "bipartite with at least one edge: chromatic number 2".to_string(),
        format!(
            "largest induced star has {} leaves, so the graph is K_1,{r}-free",
            report.k1r_free_from - 1
        ),
        format!(
            "block maxima 4 (gadget) and 2 (four-cycle) add up across components: {value}"
        ),
        format!(
            "violation: the maximum odd induced subgraph has {value} < {n}/2 vertices"
        ),
    ];
    let cert = Certificate::new(
        "union-below-half",
        Target::Host,
        witness,
        Ratio::new(value as u64, 1),
        trace,
    );
    debug_assert!(cert.check(&g).is_ok());
    Ok((g, cert))
}

// ==================================================================
// Tests
// ==================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_rows_hit_the_documented_splits() {
        let cases = [(33, 1, 6, 16), (34, 2, 4, 16), (35, 3, 2, 16), (36, 4, 0, 16)];
        for (n, k, l, value) in cases {
            let (g, cert) = counterexample_for_order(n, 4).unwrap();
            assert_eq!(g.n(), n, "order {n} must be tiled exactly");
            assert_eq!(
                g.components().len(),
                k + l,
                "expected {k} gadgets and {l} four-cycles"
            );
            assert_eq!(cert.size, value);
            assert_eq!(cert.bound, Ratio::new(value as u64, 1));
            cert.check(&g).unwrap();
        }
    }

    #[test]
    fn every_order_in_range_violates_half() {
        for n in 33..=60 {
            let (g, cert) = counterexample_for_order(n, 5).unwrap();
            assert_eq!(g.n(), n);
            cert.check(&g)
                .unwrap_or_else(|e| panic!("order {n}: certificate must check: {e}"));
            assert!(
                2 * cert.size < n,
                "order {n}: {} is not below half",
                cert.size
            );
            let report = classify(&g);
            assert!(report.is_bipartite, "order {n}: union must stay bipartite");
            assert!(
                report.k1r_free_from <= 4,
                "order {n}: no induced star with 4 leaves may appear"
            );
        }
    }

    #[test]
    fn rejects_small_orders_and_small_stars() {
        assert!(counterexample_for_order(32, 4).is_err());
        assert!(counterexample_for_order(9, 4).is_err());
        assert!(
            counterexample_for_order(40, 3).is_err(),
            "the gadget is not claw-free"
        );
    }
}
