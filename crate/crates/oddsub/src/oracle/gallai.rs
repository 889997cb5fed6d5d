//! Parity partitions via GF(2) linear systems.
//!
//! Two classical facts hold for every graph: the vertices can be split into
//! a part inducing all-odd degrees and a part inducing all-even degrees
//! ([`gallai_partition`]), and also into two parts that both induce all-even
//! degrees ([`even_even_partition`]).  Writing `x` for the indicator vector
//! of the first part, `A` for the adjacency matrix, `D = diag(deg mod 2)`
//! and `d` for the degree-parity vector, the two statements are exactly the
//! solvability over GF(2) of
//!
//! ```text
//! (A + I + D) x = d        (odd/even)
//! (A + D) x = d            (even/even)
//! ```
//!
//! Both systems are always consistent, so an unsolvable system here is an
//! implementation bug and panics.  Free variables are fixed to zero, which
//! makes the returned partitions deterministic.

use crate::graph::{words_for, Graph, VertexSet};

/// A partition of the vertices into an all-odd part and an all-even part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiPartition {
    /// Every vertex of this part has odd degree inside the part.
    pub odd_part: VertexSet,
    /// Every vertex of this part has even degree inside the part.
    pub even_part: VertexSet,
}

impl GallaiPartition {
    /// Checks the partition against `g`: the two parts are disjoint, cover
    /// every vertex, and induce the advertised degree parities.  An empty
    /// part is valid.
    pub fn is_valid(&self, g: &Graph) -> bool {
        parts_cover(g, &self.odd_part, &self.even_part)
            && self
                .odd_part
                .iter()
                .all(|v| g.degree_in_set(v, &self.odd_part) % 2 == 1)
            && self
                .even_part
                .iter()
                .all(|v| g.degree_in_set(v, &self.even_part) % 2 == 0)
    }
}

/// True when `a` and `b` are disjoint and together cover all of `g`.
fn parts_cover(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.len() + b.len() == g.n() && a.union(b).len() == g.n()
}

/// Splits the vertices into an all-odd part and an all-even part.
///
/// Deterministic: free variables of the underlying linear system are zero,
/// so among all valid partitions this returns a canonical one (in particular
/// the odd part is empty whenever every degree of `g` is even).
pub fn gallai_partition(g: &Graph) -> GallaiPartition {
    // (A + I + D) x = d: diagonal bit is (1 + deg) mod 2.
    let x = solve_parity_system(g, |deg| (1 + deg) % 2 == 1)
        .expect("odd/even parity system is always solvable");
    let (odd_part, even_part) = split_by_indicator(g, &x);
    GallaiPartition { odd_part, even_part }
}

/// Splits the vertices into two parts that both induce all-even degrees.
///
/// Deterministic in the same way as [`gallai_partition`].  Either part may
/// be empty (for instance on a graph whose degrees are already all even).
pub fn even_even_partition(g: &Graph) -> (VertexSet, VertexSet) {
    // (A + D) x = d: diagonal bit is deg mod 2.
    let x = solve_parity_system(g, |deg| deg % 2 == 1)
        .expect("even/even parity system is always solvable");
    split_by_indicator(g, &x)
}

fn split_by_indicator(g: &Graph, x: &[bool]) -> (VertexSet, VertexSet) {
    let ones = (0..g.n()).filter(|&v| x[v]).collect::<Vec<_>>();
    let zeros = (0..g.n()).filter(|&v| !x[v]).collect::<Vec<_>>();
    (VertexSet::new(ones), VertexSet::new(zeros))
}

/// Builds `(A + diag(diagonal_bit(deg))) x = (deg mod 2)` and solves it.
fn solve_parity_system(g: &Graph, diagonal_bit: impl Fn(usize) -> bool) -> Option<Vec<bool>> {
    let n = g.n();
    let words = words_for(n);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut rhs: Vec<bool> = Vec::with_capacity(n);
    for v in 0..n {
        let mut row: Vec<u64> = g.row(v).to_vec();
        if diagonal_bit(g.degree(v)) {
            row[v / 64] ^= 1u64 << (v % 64);
        }
        debug_assert_eq!(row.len(), words);
        rows.push(row);
        rhs.push(g.degree(v) % 2 == 1);
    }
    solve_gf2(rows, rhs, n)
}

/// Gauss–Jordan elimination over GF(2) with bit-packed rows.  Returns the
/// solution with all free variables set to zero, or `None` when the system
/// is inconsistent.
fn solve_gf2(mut rows: Vec<Vec<u64>>, mut rhs: Vec<bool>, n: usize) -> Option<Vec<bool>> {
    let nr = rows.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        if rank == nr {
            break;
        }
        let w = col / 64;
        let b = col % 64;
        let Some(r) = (rank..nr).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, r);
        rhs.swap(rank, r);
        let pivot_row = rows[rank].clone();
        let pivot_rhs = rhs[rank];
        for rr in 0..nr {
            if rr != rank && rows[rr][w] >> b & 1 == 1 {
                for (dst, src) in rows[rr].iter_mut().zip(&pivot_row) {
                    *dst ^= *src;
                }
                rhs[rr] ^= pivot_rhs;
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
    }
    // Full reduction leaves rows past the rank identically zero, so a set
    // right-hand side there means 0 = 1.
    for r in rank..nr {
        debug_assert!(
            rows[r].iter().all(|&w| w == 0),
            "rows past the rank must be zero after full reduction"
        );
        if rhs[r] {
            return None;
        }
    }
    let mut x = vec![false; n];
    for (r, &col) in pivot_col_of_row.iter().enumerate() {
        x[col] = rhs[r];
    }
    Some(x)
}

// ============================================================================
// tests
// ============================================================================
