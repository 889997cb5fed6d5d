//! Cross-module integration: text and JSON round-trips, and agreement
//! between the solver entry points on inputs large enough to engage the
//! parallel split.

use oddsub::certify::{clawfree_cert, counterexample_for_order, linegraph_cert, Certificate};
use oddsub::generate::{generate, random_graph, FamilySpec};
use oddsub::graph::line_graph;
use oddsub::io::{parse_edge_list, write_edge_list};
use oddsub::oracle::{fo_exact, fo_exact_sequential};

#[test]
fn certificates_round_trip_through_json() {
    let g = generate(&FamilySpec::Cycle(9)).expect("cycle family");
    let cert = clawfree_cert(&g, None).expect("cycles are claw-free");
    let text = serde_json::to_string(&cert).expect("serializes");
    let back: Certificate = serde_json::from_str(&text).expect("parses");
    assert_eq!(back, cert, "JSON round trip must be lossless");
    back.check(&g).expect("the reparsed certificate still checks");

    let k4 = generate(&FamilySpec::Complete(4)).expect("complete family");
    let cert = linegraph_cert(&k4).expect("K_4 is regular without 5-cycles");
    let back: Certificate =
        serde_json::from_str(&serde_json::to_string(&cert).unwrap()).expect("parses");
    back.check(&line_graph(&k4).graph)
        .expect("line-graph certificates check against the line graph");
}

#[test]
fn edge_list_text_preserves_solver_results() {
    for spec in [
        FamilySpec::Petersen,
        FamilySpec::F,
        FamilySpec::Gkl(1, 2),
        FamilySpec::Cycle(11),
    ] {
        let g = generate(&spec).expect("family builds");
        let reparsed = parse_edge_list(&write_edge_list(&g)).expect("round trip parses");
        assert_eq!(g, reparsed);
        let a = fo_exact(&g, None).expect("solve original");
        let b = fo_exact(&reparsed, None).expect("solve reparsed");
        assert_eq!(a.value, b.value, "text round trip changed the value for {spec:?}");
        assert_eq!(a.witness, b.witness, "text round trip changed the witness for {spec:?}");
    }
}

#[test]
fn parallel_and_sequential_agree_on_large_inputs() {
    // Big enough that the parallel build genuinely splits the search.
    for seed in 0..4u64 {
        let g = random_graph(22, 0.4, 0x5EED_0000 + seed).expect("valid probability");
        let par = fo_exact(&g, None).expect("parallel run");
        let seq = fo_exact_sequential(&g, None).expect("sequential run");
        assert_eq!(par.value, seq.value, "values must agree on seed {seed}");
        assert_eq!(par.witness, seq.witness, "witnesses must agree on seed {seed}");
    }
}

#[test]
fn counterexample_certificates_survive_reserialization() {
    let (g, cert) = counterexample_for_order(47, 4).expect("order 47 builds");
    let text = serde_json::to_string_pretty(&cert).expect("serializes");
    let back: Certificate = serde_json::from_str(&text).expect("parses");
    back.check(&g).expect("reparsed certificate checks");
    assert!(2 * back.size < g.n(), "the below-half property survives the trip");
}
