//! Exact graph coloring for small graphs.

use crate::classify::bipartition;
use crate::error::Error;
use crate::graph::Graph;

/// Largest vertex count accepted by [`chromatic_number`].
pub const CHROMATIC_GUARD: usize = 24;

/// A proper coloring with colors `0..k`; every color class is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// `colors[v]` is the color of vertex `v`.
    pub colors: Vec<usize>,
    /// Number of colors used.
    pub k: usize,
}

impl Coloring {
    /// The vertices of color class `c`, in increasing order.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    /// Checks that the coloring is proper for `g`, uses colors `0..k`, and
    /// has no empty class.
    pub fn validate(&self, g: &Graph) -> Result<(), Error> {
        let fail = |reason: String| Error::Precondition {
            operation: "coloring",
            reason,
        };
        if self.colors.len() != g.n() {
            return Err(fail(format!(
                "coloring covers {} vertices, graph has {}",
                self.colors.len(),
                g.n()
            )));
        }
        let mut seen = vec![false; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            if c >= self.k {
                return Err(fail(format!("vertex {v} has color {c}, valid colors are 0..{}", self.k)));
            }
            seen[c] = true;
            for w in g.neighbors(v) {
                if self.colors[w] == c && w > v {
                    return Err(fail(format!("adjacent vertices {v} and {w} share color {c}")));
                }
            }
        }
        if let Some(c) = seen.iter().position(|&s| !s) {
            return Err(fail(format!("color class {c} is empty")));
        }
        Ok(())
    }
}

/// Computes the chromatic number exactly with the lexicographically least
/// witness coloring: vertices are colored in index order, trying colors in
/// increasing order, and a vertex may use at most one color beyond the
/// largest color already placed.
///
/// Guarded to `n <=` [`CHROMATIC_GUARD`] — exact coloring is exponential.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring), Error> {
    let n = g.n();
    if n > CHROMATIC_GUARD {
        return Err(Error::TooLarge {
            operation: "chromatic_number",
            limit: CHROMATIC_GUARD,
            actual: n,
        });
    }
    if n == 0 {
        return Ok((0, Coloring { colors: vec![], k: 0 }));
    }
    if g.m() == 0 {
        return Ok((1, Coloring { colors: vec![0; n], k: 1 }));
    }
    // Bipartite graphs short-circuit; the parity coloring from the lowest
    // vertex of each component is exactly the lexicographically least one.
    if let Some((a, _)) = bipartition(g) {
        let mut colors = vec![1; n];
        for v in a.iter() {
            colors[v] = 0;
        }
        return Ok((2, Coloring { colors, k: 2 }));
    }
    for k in 3..=n {
        let mut colors = vec![usize::MAX; n];
        if color_backtrack(g, &mut colors, 0, 0, k) {
            debug_assert!(colors.iter().all(|&c| c < k));
            let coloring = Coloring { colors, k };
            debug_assert!(coloring.validate(g).is_ok());
            return Ok((k, coloring));
        }
    }
    unreachable!("every graph on n vertices is n-colorable")
}

fn color_backtrack(g: &Graph, colors: &mut [usize], v: usize, used: usize, k: usize) -> bool {
    if v == colors.len() {
        // A minimal k requires all k classes nonempty; since k-1 was
        // already ruled out, `used == k` holds automatically here.
        return used == k;
    }
    // Remaining vertices must still be able to open the missing classes.
    if k - used > colors.len() - v {
        return false;
    }
    let cap = used.min(k - 1);
    'color: for c in 0..=cap {
        for w in g.neighbors(v) {
            if w < v && colors[w] == c {
                continue 'color;
            }
        }
        colors[v] = c;
        if color_backtrack(g, colors, v + 1, used.max(c + 1), k) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};

    /// Exhaustive reference: tries all k^n assignments.
    fn colorable_naive(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let mut assign = vec![0usize; n];
        loop {
            let proper = g
                .edges()
                .iter()
                .all(|e| assign[e.u()] != assign[e.v()]);
            if proper {
                return true;
            }
            // Next assignment in base-k counting order.
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                assign[i] += 1;
                if assign[i] < k {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn known_chromatic_numbers() {
        let cases = [
            (FamilySpec::Path(6), 2),
            (FamilySpec::Cycle(6), 2),
            (FamilySpec::Cycle(7), 3),
            (FamilySpec::Complete(5), 5),
            (FamilySpec::Star(4), 2),
            (FamilySpec::Petersen, 3),
            (FamilySpec::F, 2),
        ];
        for (spec, want) in cases {
            let g = generate(&spec).unwrap();
            let (k, coloring) = chromatic_number(&g).unwrap();
            assert_eq!(k, want, "chromatic number of {spec:?}");
            coloring.validate(&g).unwrap();
        }
    }

    #[test]
    fn agrees_with_exhaustive_search_on_small_graphs() {
        use rand::rngs::SmallRng;
        use rand::{Rng, SeedableRng};
        let mut rng = SmallRng::seed_from_u64(0xC010_7E57);
        for trial in 0..60 {
            let n = rng.random_range(2..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let (k, coloring) = chromatic_number(&g).unwrap();
            coloring.validate(&g).unwrap();
            assert!(colorable_naive(&g, k), "trial {trial}: {k} colors must suffice");
            if k > 1 {
                assert!(!colorable_naive(&g, k - 1), "trial {trial}: {} colors must not suffice", k - 1);
            }
        }
    }

    #[test]
    fn witness_coloring_is_lexicographically_least() {
        // C_7: the least proper 3-coloring alternates 0/1 and closes with 2.
        let g = generate(&FamilySpec::Cycle(7)).unwrap();
        let (k, coloring) = chromatic_number(&g).unwrap();
        assert_eq!(k, 3);
        assert_eq!(coloring.colors, vec![0, 1, 0, 1, 0, 1, 2]);
    }

    #[test]
    fn rejects_oversized_graphs() {
        let g = Graph::empty(CHROMATIC_GUARD + 1);
        assert!(matches!(chromatic_number(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn validate_rejects_broken_colorings() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        // Adjacent same color.
        let bad = Coloring { colors: vec![0, 0, 1], k: 2 };
        assert!(bad.validate(&g).is_err());
        // Empty class.
        let empty = Coloring { colors: vec![0, 1, 0], k: 3 };
        assert!(empty.validate(&g).is_err());
        // Proper.
        let good = Coloring { colors: vec![0, 1, 0], k: 2 };
        assert!(good.validate(&g).is_ok());
    }
}
