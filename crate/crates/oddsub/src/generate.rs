//! Named graph families and seeded random regular graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::Graph;

/// Descriptor for a generated graph.
///
/// The text form accepted by [`FamilySpec::parse`] is
/// `name[:arg,arg,...]` with integer arguments:
///
/// * `path:t` — path on `t >= 1` vertices `0-1-..-(t-1)`
/// * `cycle:l` — cycle on `l >= 3` vertices
/// * `complete:n` (alias `kN`, e.g. `k4`) — complete graph, `n >= 1`
/// * `star:r` — star with `r >= 1` leaves; center is vertex 0
/// * `f` — the 9-vertex bipartite gadget [`FamilySpec::F`]
/// * `gkl:k,l` — disjoint union of `k >= 1` copies of F and `l >= 0`
///   copies of the 4-cycle
/// * `petersen` — the Petersen graph
/// * `random-regular:n,k[,seed]` (alias `rr`) — seeded random `k`-regular
///   graph on `n` vertices
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `t` vertices (`t - 1` edges).
    Path(usize),
    /// Cycle on `l` vertices.
    Cycle(usize),
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Star `K_{1,r}`: vertex 0 joined to `r` leaves.
    Star(usize),
    /// A 9-vertex bipartite graph with parts `{0,1,2,3}` and
    /// `{4,..,8}`, maximum degree 3, and no odd induced subgraph on more
    /// than 4 vertices.  Its disjoint unions with 4-cycles give graphs
    /// whose maximum odd induced subgraph stays below half the order.
    F,
    /// `k` copies of [`FamilySpec::F`] followed by `l` copies of `C_4`.
    Gkl(usize, usize),
    /// Disjoint union of the listed families, ids shifted in order.
    DisjointUnion(Vec<FamilySpec>),
    /// Uniform random `k`-regular graph via the pairing model.
    RandomRegular { n: usize, k: usize, seed: u64 },
    /// The Petersen graph (3-regular, girth 5) on 10 vertices.
    Petersen,
}

/// The edge list of the gadget `F`, with part `{a,b,c,d} = 0..4` and part
/// `{u,v,w,x,y} = 4..9`.
const F_EDGES: [(usize, usize); 12] = [
    (0, 4), // a-u
    (0, 7), // a-x
    (0, 8), // a-y
    (1, 5), // b-v
    (1, 6), // b-w
    (1, 7), // b-x
    (2, 4), // c-u
    (2, 5), // c-v
    (2, 8), // c-y
    (3, 4), // d-u
    (3, 6), // d-w
    (3, 7), // d-x
];

/// Builds the described graph.
pub fn generate(spec: &FamilySpec) -> Result<Graph, Error> {
    match *spec {
        FamilySpec::Path(t) => {
            if t < 1 {
                return Err(Error::BadFamily {
                    reason: "path needs at least 1 vertex".into(),
                });
            }
            let edges: Vec<(usize, usize)> = (0..t.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(t, &edges)
        }
        FamilySpec::Cycle(l) => {
            if l < 3 {
                return Err(Error::BadFamily {
                    reason: "cycle needs at least 3 vertices".into(),
                });
            }
            let edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
            Graph::from_edges(l, &edges)
        }
        FamilySpec::Complete(n) => {
            if n < 1 {
                return Err(Error::BadFamily {
                    reason: "complete graph needs at least 1 vertex".into(),
                });
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star(r) => {
            if r < 1 {
                return Err(Error::BadFamily {
                    reason: "star needs at least 1 leaf".into(),
                });
            }
            let edges: Vec<(usize, usize)> = (1..=r).map(|v| (0, v)).collect();
            Graph::from_edges(r + 1, &edges)
        }
        FamilySpec::F => Graph::from_edges(9, &F_EDGES),
        FamilySpec::Gkl(k, l) => {
            if k < 1 {
                return Err(Error::BadFamily {
                    reason: "gkl needs at least one copy of F".into(),
                });
            }
            let mut parts = vec![FamilySpec::F; k];
            parts.extend(std::iter::repeat_n(FamilySpec::Cycle(4), l));
            generate(&FamilySpec::DisjointUnion(parts))
        }
        FamilySpec::DisjointUnion(ref parts) => {
            let mut g = Graph::empty(0);
            for p in parts {
                g = g.disjoint_union(&generate(p)?);
            }
            Ok(g)
        }
        FamilySpec::RandomRegular { n, k, seed } => random_regular(n, k, seed),
        FamilySpec::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer 5-cycle
                edges.push((i, i + 5)); // spokes
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            }
            Graph::from_edges(10, &edges)
        }
    }
}

/// Samples a seeded Erdős–Rényi graph: each of the `n*(n-1)/2` vertex
/// pairs becomes an edge independently with probability `p`.
/// Deterministic for a fixed `(n, p, seed)` triple.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, Error> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadFamily {
            reason: format!("edge probability {p} is outside [0, 1]"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Samples a uniform random `k`-regular graph on `n` vertices with the
/// pairing model: `n*k` half-edges are shuffled into a perfect pairing and
/// the pairing is rejected (and redrawn) while it contains a loop or a
/// repeated edge.  Deterministic for a fixed `(n, k, seed)` triple.
fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph, Error> {
    if k >= n.max(1) || n * k % 2 != 0 {
        return Err(Error::BadFamily {
            reason: format!("no {k}-regular graph on {n} vertices (need k < n and n*k even)"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * k).collect();
    // Rejection sampling keeps the distribution uniform over simple
    // k-regular graphs. The acceptance probability drops with k, so allow
    // plenty of redraws before giving up.
    const MAX_ATTEMPTS: usize = 200_000;
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n);
        for pair in points.chunks_exact(2) {
            let (a, b) = (pair[0] / k, pair[1] / k);
            if a == b || g.has_edge(a, b) {
                continue 'attempt;
            }
            g.add_edge(a, b);
        }
        return Ok(g);
    }
    Err(Error::BadFamily {
        reason: format!("pairing model failed to produce a simple {k}-regular graph on {n} vertices after {MAX_ATTEMPTS} attempts"),
    })
}

impl FamilySpec {
    /// Parses the `name[:arg,arg,...]` text form; see the type docs for the
    /// accepted names.
    pub fn parse(text: &str) -> Result<FamilySpec, Error> {
        let bad = |reason: String| Error::BadFamily { reason };
        let text = text.trim();
        let (name, args) = match text.split_once(':') {
            Some((n, a)) => (n.trim().to_ascii_lowercase(), a.trim()),
            None => (text.to_ascii_lowercase(), ""),
        };
        let ints: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(format!("expected an integer, got {:?}", s.trim())))
                })
                .collect::<Result<_, _>>()?
        };
        let want = |count: usize| -> Result<(), Error> {
            if ints.len() == count {
                Ok(())
            } else {
                Err(bad(format!(
                    "{name} takes {count} integer argument(s), got {}",
                    ints.len()
                )))
            }
        };
        // Bare complete-graph shorthand: k4, K7, ...
        if args.is_empty() && name.len() > 1 && name.starts_with('k') {
            if let Ok(n) = name[1..].parse::<usize>() {
                return Ok(FamilySpec::Complete(n));
            }
        }
        match name.as_str() {
            "path" => {
                want(1)?;
                Ok(FamilySpec::Path(ints[0]))
            }
            "cycle" => {
                want(1)?;
                Ok(FamilySpec::Cycle(ints[0]))
            }
            "complete" => {
                want(1)?;
                Ok(FamilySpec::Complete(ints[0]))
            }
            "star" => {
                want(1)?;
                Ok(FamilySpec::Star(ints[0]))
            }
            "f" => {
                want(0)?;
                Ok(FamilySpec::F)
            }
            "gkl" => {
                want(2)?;
                Ok(FamilySpec::Gkl(ints[0], ints[1]))
            }
            "petersen" => {
                want(0)?;
                Ok(FamilySpec::Petersen)
            }
            "random-regular" | "rr" => {
                if ints.len() == 2 {
                    Ok(FamilySpec::RandomRegular {
                        n: ints[0],
                        k: ints[1],
                        seed: 0,
                    })
                } else if ints.len() == 3 {
                    Ok(FamilySpec::RandomRegular {
                        n: ints[0],
                        k: ints[1],
                        seed: ints[2] as u64,
                    })
                } else {
                    Err(bad(format!(
                        "random-regular takes n,k[,seed], got {} argument(s)",
                        ints.len()
                    )))
                }
            }
            _ => Err(bad(format!("unknown family {name:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_gadget_shape() {
        let f = generate(&FamilySpec::F).unwrap();
        assert_eq!(f.n(), 9);
        assert_eq!(f.m(), 12);
        assert_eq!(f.max_degree(), 3);
        // Left part has uniform degree 3; right part degrees are 3,2,2,3,2.
        let degs: Vec<usize> = (0..9).map(|v| f.degree(v)).collect();
        assert_eq!(degs, vec![3, 3, 3, 3, 3, 2, 2, 3, 2]);
        // Bipartite between 0..4 and 4..9: no edge inside either part.
        for u in 0..4 {
            for v in (u + 1)..4 {
                assert!(!f.has_edge(u, v));
            }
        }
        for u in 4..9 {
            for v in (u + 1)..9 {
                assert!(!f.has_edge(u, v));
            }
        }
    }

    #[test]
    fn gkl_orders_add_up() {
        let g = generate(&FamilySpec::Gkl(2, 3)).unwrap();
        assert_eq!(g.n(), 2 * 9 + 3 * 4);
        assert_eq!(g.m(), 2 * 12 + 3 * 4);
        assert_eq!(g.components().len(), 5);
    }

    #[test]
    fn petersen_shape() {
        let p = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.m(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn random_regular_is_regular_and_seeded() {
        let spec = FamilySpec::RandomRegular { n: 12, k: 4, seed: 7 };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a, b, "same seed must give the same graph");
        assert!((0..12).all(|v| a.degree(v) == 4));
        let c = generate(&FamilySpec::RandomRegular { n: 12, k: 4, seed: 8 }).unwrap();
        assert_ne!(a, c, "different seeds should give different graphs");
    }

    #[test]
    fn random_graph_is_seeded_and_validates_p() {
        let a = random_graph(10, 0.5, 3).unwrap();
        let b = random_graph(10, 0.5, 3).unwrap();
        assert_eq!(a, b, "same seed must give the same graph");
        let c = random_graph(10, 0.5, 4).unwrap();
        assert_ne!(a, c, "different seeds should give different graphs");
        assert_eq!(random_graph(6, 0.0, 0).unwrap().m(), 0);
        assert_eq!(random_graph(6, 1.0, 0).unwrap().m(), 15);
        assert!(random_graph(6, 1.5, 0).is_err());
        assert!(random_graph(6, -0.1, 0).is_err());
    }

    #[test]
    fn random_regular_rejects_infeasible() {
        assert!(generate(&FamilySpec::RandomRegular { n: 5, k: 3, seed: 0 }).is_err());
        assert!(generate(&FamilySpec::RandomRegular { n: 4, k: 4, seed: 0 }).is_err());
    }

    #[test]
    fn parse_accepts_the_documented_forms() {
        assert_eq!(FamilySpec::parse("cycle:9").unwrap(), FamilySpec::Cycle(9));
        assert_eq!(FamilySpec::parse("F").unwrap(), FamilySpec::F);
        assert_eq!(FamilySpec::parse("gkl:2,4").unwrap(), FamilySpec::Gkl(2, 4));
        assert_eq!(FamilySpec::parse("K4").unwrap(), FamilySpec::Complete(4));
        assert_eq!(FamilySpec::parse("complete:4").unwrap(), FamilySpec::Complete(4));
        assert_eq!(
            FamilySpec::parse("rr:12,4,9").unwrap(),
            FamilySpec::RandomRegular { n: 12, k: 4, seed: 9 }
        );
        assert_eq!(FamilySpec::parse(" petersen ").unwrap(), FamilySpec::Petersen);
    }

    #[test]
    fn parse_rejects_junk() {
        for junk in ["", "heptagon", "cycle", "cycle:x", "gkl:1", "path:1,2", "k"] {
            assert!(FamilySpec::parse(junk).is_err(), "{junk:?} should not parse");
        }
    }

    #[test]
    fn generators_validate_parameters() {
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::Path(0)).is_err());
        assert!(generate(&FamilySpec::Gkl(0, 3)).is_err());
        assert!(generate(&FamilySpec::Star(0)).is_err());
    }
}
