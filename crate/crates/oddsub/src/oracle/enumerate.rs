//! Exhaustive enumeration of connected regular graphs up to isomorphism.
//!
//! For each degree `k` with `n*k` even, labeled `k`-regular graphs are
//! generated by filling vertex neighbourhoods in ascending order, with the
//! first neighbourhood pinned to `{1, .., k}` (every regular graph can be
//! relabeled into that form, and the pinning cuts the stream by a factor of
//! `C(n-1, k)`).  Degrees above `(n-1)/2` are reached by generating the
//! complementary `(n-1-k)`-regular stream and complementing each candidate.
//! Candidates are filtered for connectivity, deduplicated inside buckets
//! keyed by cheap isomorphism invariants (triangle and codegree multisets),
//! and finally relabeled canonically so the output is a deterministic,
//! sorted list of pairwise non-isomorphic graphs.
//!
//! With the `parallel` feature the candidate stream is split by the first
//! few neighbourhood choices and the buckets are merged afterwards; the
//! canonical output is independent of the split.

use std::collections::HashMap;

use crate::error::Error;
use crate::graph::{EdgeId, Graph};

/// Largest vertex count accepted by [`enumerate_connected_regular`].
pub const ENUMERATE_GUARD: usize = 10;

/// Candidate completions are split into parallel tasks once this many
/// vertices have full neighbourhoods.
const SPLIT_VERTICES: usize = 3;

type Bits = [u64; ENUMERATE_GUARD];
type Buckets = HashMap<(Vec<u8>, Vec<u8>), Vec<Bits>>;

/// All connected regular graphs on `n` vertices, one representative per
/// isomorphism class, canonically labeled and sorted by degree first.
pub fn enumerate_connected_regular(n: usize) -> Result<Vec<Graph>, Error> {
    if n == 0 {
        return Err(Error::Precondition {
            operation: "enumerate_connected_regular",
            reason: "need at least one vertex".to_string(),
        });
    }
    if n > ENUMERATE_GUARD {
        return Err(Error::TooLarge {
            operation: "enumerate_connected_regular",
            limit: ENUMERATE_GUARD,
            actual: n,
        });
    }
    let mut keyed: Vec<(usize, Vec<EdgeId>, Graph)> = Vec::new();
    for k in 0..n {
        if n * k % 2 != 0 {
            continue;
        }
        if k == 0 && n > 1 {
            // 0-regular on two or more vertices is never connected.
            continue;
        }
        for bits in representatives(n, k) {
            let g = canonical_graph(&bits, n);
            keyed.push((k, g.edges(), g));
        }
    }
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|t| t.2).collect())
}

/// Deduplicated (but not yet canonically labeled) connected `k`-regular
/// graphs on `n` vertices.
fn representatives(n: usize, k: usize) -> Vec<Bits> {
    let (kk, complemented) = if k <= n - 1 - k {
        (k, false)
    } else {
        (n - 1 - k, true)
    };
    let split = SPLIT_VERTICES.min(n);
    let mut states: Vec<PartialReg> = Vec::new();
    PartialReg::pinned(n, kk).descend(1, split, &mut |s| states.push(s));
    let buckets = complete_states(states, split, n, complemented);
    buckets.into_values().flatten().collect()
}

fn complete_one(state: PartialReg, split: usize, n: usize, complemented: bool) -> Buckets {
    let mut local = Buckets::new();
    state.descend(split, n, &mut |cand| {
        let bits = if complemented {
            cand.complement_bits()
        } else {
            cand.rows
        };
        if connected(&bits, n) {
            absorb(&mut local, bits, n);
        }
    });
    local
}

#[cfg(feature = "parallel")]
fn complete_states(states: Vec<PartialReg>, split: usize, n: usize, complemented: bool) -> Buckets {
    use rayon::prelude::*;
    states
        .into_par_iter()
        .map(|s| complete_one(s, split, n, complemented))
        .reduce(Buckets::new, |a, b| merge(a, b, n))
}

#[cfg(not(feature = "parallel"))]
fn complete_states(states: Vec<PartialReg>, split: usize, n: usize, complemented: bool) -> Buckets {
    states
        .into_iter()
        .map(|s| complete_one(s, split, n, complemented))
        .fold(Buckets::new(), |a, b| merge(a, b, n))
}

fn merge(mut into: Buckets, from: Buckets, n: usize) -> Buckets {
    for bucket in from.into_values() {
        for bits in bucket {
            absorb(&mut into, bits, n);
        }
    }
    into
}

/// Inserts a candidate unless its invariant bucket already holds an
/// isomorphic representative.
fn absorb(buckets: &mut Buckets, bits: Bits, n: usize) {
    let key = invariant_key(&bits, n);
    let bucket = buckets.entry(key).or_default();
    if !bucket.iter().any(|rep| isomorphic_bits(rep, &bits, n)) {
        bucket.push(bits);
    }
}

// ============================================================================
// candidate generation
// ============================================================================

/// A partially built `k`-regular graph: all vertices below the cursor have
/// full neighbourhoods.  `Copy`, so branches of the search never need undo.
#[derive(Clone, Copy)]
struct PartialReg {
    n: usize,
    k: usize,
    rows: Bits,
    deg: [u8; ENUMERATE_GUARD],
}

impl PartialReg {
    /// The start state with `N(0)` pinned to `{1, .., k}`.
    fn pinned(n: usize, k: usize) -> PartialReg {
        let mut s = PartialReg {
            n,
            k,
            rows: [0; ENUMERATE_GUARD],
            deg: [0; ENUMERATE_GUARD],
        };
        for w in 1..=k {
            s.add(0, w);
        }
        s
    }

    fn add(&mut self, u: usize, w: usize) {
        self.rows[u] |= 1 << w;
        self.rows[w] |= 1 << u;
        self.deg[u] += 1;
        self.deg[w] += 1;
    }

    fn complement_bits(&self) -> Bits {
        let full = (1u64 << self.n) - 1;
        let mut out = [0u64; ENUMERATE_GUARD];
        for v in 0..self.n {
            out[v] = full & !self.rows[v] & !(1 << v);
        }
        out
    }

    /// Completes neighbourhoods of vertices `v, v+1, ..` and hands every
    /// state reaching `limit` to `sink`.
    fn descend<F: FnMut(PartialReg)>(self, v: usize, limit: usize, sink: &mut F) {
        if v == limit {
            sink(self);
            return;
        }
        // Residual degrees must pair up among the open vertices: their sum
        // stays even, and no vertex may need more partners than exist.
        let mut residual_sum = 0usize;
        let mut open = 0usize;
        for w in v..self.n {
            let r = self.k - self.deg[w] as usize;
            residual_sum += r;
            if r > 0 {
                open += 1;
            }
        }
        if residual_sum % 2 == 1 {
            return;
        }
        for w in v..self.n {
            if self.k - self.deg[w] as usize > open.saturating_sub(1) {
                return;
            }
        }
        let need = self.k - self.deg[v] as usize;
        if need == 0 {
            self.descend(v + 1, limit, sink);
            return;
        }
        let mut cands = [0usize; ENUMERATE_GUARD];
        let mut nc = 0;
        for w in (v + 1)..self.n {
            if (self.deg[w] as usize) < self.k {
                cands[nc] = w;
                nc += 1;
            }
        }
        self.choose(v, &cands[..nc], need, limit, sink);
    }

    /// Picks `need` partners for `v` out of `cands`, in ascending order.
    fn choose<F: FnMut(PartialReg)>(
        self,
        v: usize,
        cands: &[usize],
        need: usize,
        limit: usize,
        sink: &mut F,
    ) {
        if need == 0 {
            self.descend(v + 1, limit, sink);
            return;
        }
        if cands.len() < need {
            return;
        }
        let mut with = self;
        with.add(v, cands[0]);
        with.choose(v, &cands[1..], need - 1, limit, sink);
        self.choose(v, &cands[1..], need, limit, sink);
    }
}

// ============================================================================
// bit-row graph helpers
// ============================================================================

fn connected(bits: &Bits, n: usize) -> bool {
    let full = (1u64 << n) - 1;
    let mut seen = 1u64;
    loop {
        let mut next = seen;
        let mut scan = seen;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            next |= bits[v];
        }
        if next == seen {
            return seen == full;
        }
        seen = next;
    }
}

fn triangle_counts(bits: &Bits, n: usize) -> [u8; ENUMERATE_GUARD] {
    let mut tri = [0u8; ENUMERATE_GUARD];
    for v in 0..n {
        let mut t = 0u32;
        let mut scan = bits[v];
        while scan != 0 {
            let u = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            t += (bits[v] & bits[u]).count_ones();
        }
        tri[v] = (t / 2) as u8;
    }
    tri
}

/// Cheap label-invariant signature: sorted per-vertex triangle counts plus
/// the sorted codegree multiset.
fn invariant_key(bits: &Bits, n: usize) -> (Vec<u8>, Vec<u8>) {
    let mut tri = triangle_counts(bits, n)[..n].to_vec();
    tri.sort_unstable();
    let mut cod = Vec::with_capacity(n * (n.max(1) - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            cod.push((bits[u] & bits[v]).count_ones() as u8);
        }
    }
    cod.sort_unstable();
    (tri, cod)
}

/// Permutation backtracking with triangle-count compatibility and prefix
/// adjacency consistency.  Only called on same-order regular candidates.
fn isomorphic_bits(a: &Bits, b: &Bits, n: usize) -> bool {
    let ta = triangle_counts(a, n);
    let tb = triangle_counts(b, n);
    let mut map = [0usize; ENUMERATE_GUARD];
    fn go(
        a: &Bits,
        b: &Bits,
        ta: &[u8; ENUMERATE_GUARD],
        tb: &[u8; ENUMERATE_GUARD],
        n: usize,
        depth: usize,
        used: u64,
        map: &mut [usize; ENUMERATE_GUARD],
    ) -> bool {
        if depth == n {
            return true;
        }
        for cand in 0..n {
            if used >> cand & 1 == 1 || tb[cand] != ta[depth] {
                continue;
            }
            let ok = (0..depth)
                .all(|i| (a[depth] >> i & 1) == (b[cand] >> map[i] & 1));
            if ok {
                map[depth] = cand;
                if go(a, b, ta, tb, n, depth + 1, used | 1 << cand, map) {
                    return true;
                }
            }
        }
        false
    }
    go(a, b, &ta, &tb, n, 0, 0, &mut map)
}

// ============================================================================
// canonical labeling
// ============================================================================

/// Relabels to the permutation minimising the column tuple
/// `(c_1, .., c_{n-1})`, where `c_j` packs the adjacency bits between
/// position `j` and positions `0..j`.  Isomorphic inputs map to the same
/// output graph.
fn canonical_graph(bits: &Bits, n: usize) -> Graph {
    let mut canon = Canon {
        bits,
        n,
        best_cols: Vec::new(),
        best_perm: Vec::new(),
        have_best: false,
    };
    let mut perm = Vec::with_capacity(n);
    let mut cols = Vec::with_capacity(n);
    canon.dfs(&mut perm, &mut cols, 0);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if bits[canon.best_perm[i]] >> canon.best_perm[j] & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("relabeling a simple graph stays simple")
}

struct Canon<'a> {
    bits: &'a Bits,
    n: usize,
    best_cols: Vec<u64>,
    best_perm: Vec<usize>,
    have_best: bool,
}

impl Canon<'_> {
    fn dfs(&mut self, perm: &mut Vec<usize>, cols: &mut Vec<u64>, used: u64) {
        let j = perm.len();
        if j == self.n {
            if !self.have_best || cols.as_slice() < self.best_cols.as_slice() {
                self.best_cols = cols.clone();
                self.best_perm = perm.clone();
                self.have_best = true;
            }
            return;
        }
        // Prefix-equality is recomputed against the current best each node:
        // a completion inside an earlier sibling may have replaced it.
        let tight = self.have_best && cols.as_slice() == &self.best_cols[..j];
        for cand in 0..self.n {
            if used >> cand & 1 == 1 {
                continue;
            }
            let mut col = 0u64;
            for (i, &p) in perm.iter().enumerate() {
                col |= (self.bits[cand] >> p & 1) << i;
            }
            if tight && col > self.best_cols[j] {
                continue;
            }
            perm.push(cand);
            cols.push(col);
            self.dfs(perm, cols, used | 1 << cand);
            perm.pop();
            cols.pop();
        }
    }
}

// ============================================================================
// tests
// ============================================================================
