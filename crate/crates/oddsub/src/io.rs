//! Plain-text edge-list format.
//!
//! ```text
//! # comments run to end of line
//! 5 4        # header: n m
//! 0 1
//! 1 2
//! 2 3
//! 3 4
//! ```
//!
//! The header gives the vertex count and edge count; exactly `m` edge
//! lines must follow.  Written files list edges in lexicographic order
//! with the smaller endpoint first.

use crate::error::Error;
use crate::graph::Graph;

/// Parses the edge-list format. Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let fail = |line: usize, reason: String| Error::ParseEdgeList { line, reason };
    let mut data = text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    });

    let (header_line, header) = data
        .next()
        .ok_or_else(|| fail(1, "missing `n m` header".into()))?;
    let mut parts = header.split_whitespace();
    let mut next_int = |what: &str| -> Result<usize, Error> {
        parts
            .next()
            .ok_or_else(|| fail(header_line, format!("header is missing {what}")))?
            .parse::<usize>()
            .map_err(|_| fail(header_line, format!("{what} is not an integer")))
    };
    let n = next_int("the vertex count")?;
    let m = next_int("the edge count")?;
    if parts.next().is_some() {
        return Err(fail(header_line, "header must be exactly `n m`".into()));
    }

    let mut g = Graph::empty(n);
    for _ in 0..m {
        let (line, body) = data
            .next()
            .ok_or_else(|| fail(header_line, format!("expected {m} edge lines, found fewer")))?;
        let mut nums = body.split_whitespace().map(|s| s.parse::<usize>());
        let (u, v) = match (nums.next(), nums.next(), nums.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => (u, v),
            _ => return Err(fail(line, format!("expected `u v`, got {body:?}"))),
        };
        if u >= n || v >= n {
            return Err(fail(line, format!("edge {u}-{v} mentions a vertex >= {n}")));
        }
        if u == v {
            return Err(fail(line, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(fail(line, format!("duplicate edge {u}-{v}")));
        }
        g.add_edge(u, v);
    }
    if let Some((line, body)) = data.next() {
        return Err(fail(line, format!("unexpected trailing data {body:?} after {m} edges")));
    }
    Ok(g)
}

/// Renders a graph in the edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};

    #[test]
    fn round_trip() {
        for spec in [FamilySpec::Petersen, FamilySpec::F, FamilySpec::Gkl(1, 2), FamilySpec::Path(1)] {
            let g = generate(&spec).unwrap();
            let text = write_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            assert_eq!(g, back, "round trip through text must preserve {spec:?}");
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a triangle\n\n3 3   # n m\n0 1\n1 2 # last two\n\n0 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases: &[(&str, usize)] = &[
            ("", 1),
            ("2", 1),
            ("2 1 7", 1),
            ("x 1\n0 1", 1),
            ("3 2\n0 1", 1),           // missing edge line reported at header
            ("3 1\n0 9", 2),           // bad endpoint
            ("3 1\n1 1", 2),           // self-loop
            ("3 2\n0 1\n0 1", 3),      // duplicate
            ("3 1\n0 1\n2 2", 3),      // trailing data
            ("3 1\none two", 2),       // non-integer edge
        ];
        for (text, want_line) in cases {
            match parse_edge_list(text) {
                Err(Error::ParseEdgeList { line, .. }) => {
                    assert_eq!(line, *want_line, "wrong line for {text:?}")
                }
                other => panic!("expected a parse error for {text:?}, got {other:?}"),
            }
        }
    }
}
