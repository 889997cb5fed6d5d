//! Core graph types: bitmask adjacency, vertex sets, edges, line graphs.
//!
//! Graphs are simple and undirected with vertices `0..n`.  Adjacency is
//! stored as bit rows (`ceil(n/64)` words per vertex); graphs with `n <= 64`
//! use a single machine word per row, and the solvers take that fast path.
//! Larger graphs use the same API on multi-word rows.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Number of 64-bit words needed for a row of `n` bits.
#[inline(always)]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

// ==================================================================
// EdgeId
// ==================================================================

/// An undirected edge, stored with `u < v`.
///
/// Edges order lexicographically by `(u, v)`, which is also the vertex
/// numbering scheme used by [`line_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    u: usize,
    v: usize,
}

impl EdgeId {
    /// Builds an edge id from an unordered endpoint pair.
    ///
    /// # Panics
    /// Panics if `a == b`; self-loops are rejected earlier, at graph
    /// construction.
    pub fn new(a: usize, b: usize) -> EdgeId {
        assert!(a != b, "EdgeId endpoints must differ (got {a}, {b})");
        if a < b {
            EdgeId { u: a, v: b }
        } else {
            EdgeId { u: b, v: a }
        }
    }

    /// Smaller endpoint.
    #[inline]
    pub fn u(&self) -> usize {
        self.u
    }

    /// Larger endpoint.
    #[inline]
    pub fn v(&self) -> usize {
        self.v
    }

    /// Both endpoints as a `(u, v)` pair with `u < v`.
    #[inline]
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// True if the two edges share an endpoint (and are distinct).
    #[inline]
    pub fn touches(&self, other: &EdgeId) -> bool {
        self != other
            && (self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

// ==================================================================
// VertexSet
// ==================================================================

/// A set of vertex ids, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    ids: Vec<usize>,
}

impl VertexSet {
    /// The empty set.
    pub fn empty() -> VertexSet {
        VertexSet { ids: Vec::new() }
    }

    /// Builds a set from arbitrary ids: sorts and removes duplicates.
    pub fn new(mut ids: Vec<usize>) -> VertexSet {
        ids.sort_unstable();
        ids.dedup();
        VertexSet { ids }
    }

    /// Builds a set from ids that are already strictly increasing.
    pub fn from_sorted(ids: Vec<usize>) -> VertexSet {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]), "ids must be strictly increasing");
        VertexSet { ids }
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet { ids: (0..n).collect() }
    }

    /// Number of vertices in the set.
    #[inline]
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// True if the set is empty.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Membership test (binary search).
    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    /// The ids in increasing order.
    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.ids
    }

    /// Iterates over the ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids.iter().copied()
    }

    /// Union of two sets.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut ids = self.ids.clone();
        ids.extend_from_slice(&other.ids);
        VertexSet::new(ids)
    }

    /// True if every id is below `n`.
    pub fn within(&self, n: usize) -> bool {
        self.ids.last().is_none_or(|&v| v < n)
    }

    /// Bit rows of the set, `words` words wide.
    pub(crate) fn to_words(&self, words: usize) -> Vec<u64> {
        let mut row = vec![0u64; words];
        for &v in &self.ids {
            row[v / 64] |= 1u64 << (v % 64);
        }
        row
    }

    /// Rebuilds a set from a single-word mask.
    pub(crate) fn from_mask64(mut mask: u64) -> VertexSet {
        let mut ids = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            ids.push(v);
            mask &= mask - 1;
        }
        VertexSet { ids }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.ids.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> VertexSet {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Serializes as a bare array of ids, e.g. `[0, 1, 3, 4]`.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.ids.serialize(serializer)
    }
}

/// Accepts ids in any order; the set is re-sorted and deduplicated.
impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<VertexSet, D::Error> {
        Ok(VertexSet::new(Vec::<usize>::deserialize(deserializer)?))
    }
}

// ==================================================================
// Graph
// ==================================================================

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    /// Row-major adjacency bits: row `v` is `adj[v*words .. (v+1)*words]`.
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0u64; n * words],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Endpoints must lie in `0..n`,
    /// self-loops are rejected, and a repeated edge is an error.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        Graph::build(n, edges, false)
    }

    /// Like [`Graph::from_edges`] but silently collapses repeated edges.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        Graph::build(n, edges, true)
    }

    fn build(n: usize, edges: &[(usize, usize)], dedupe: bool) -> Result<Graph, Error> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            if g.has_edge(a, b) {
                if dedupe {
                    continue;
                }
                let e = EdgeId::new(a, b);
                return Err(Error::DuplicateEdge { u: e.u(), v: e.v() });
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Inserts edge `a-b`. Internal: callers have validated the endpoints.
    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n && !self.has_edge(a, b));
        self.adj[a * self.words + b / 64] |= 1u64 << (b % 64);
        self.adj[b * self.words + a / 64] |= 1u64 << (a % 64);
        self.m += 1;
    }

    /// Number of vertices.
    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline(always)]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Adjacency bit row of `v`.
    #[inline(always)]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Single-word adjacency row; only valid when `n <= 64`.
    #[inline(always)]
    pub(crate) fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.words]
    }

    /// Edge test.
    #[inline(always)]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Largest degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (w, &bits) in self.row(v).iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Number of neighbors of `v` inside `set` (given as bit rows).
    #[inline]
    pub(crate) fn degree_in_words(&self, v: usize, set: &[u64]) -> usize {
        self.row(v)
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_in_set(&self, v: usize, set: &VertexSet) -> usize {
        self.degree_in_words(v, &set.to_words(self.words))
    }

    /// All edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for (w, &bits) in self.row(u).iter().enumerate() {
                let mut bits = bits;
                while bits != 0 {
                    let v = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if v > u {
                        out.push(EdgeId { u, v });
                    }
                }
            }
        }
        out
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `set`, plus the id map from new ids to old ids
    /// (new vertex `i` is `map[i]` in `self`; `map` is increasing).
    ///
    /// # Errors
    /// Fails if `set` mentions a vertex outside `0..n`.
    pub fn induced(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>), Error> {
        if !set.within(self.n) {
            let bad = set.as_slice().iter().copied().find(|&v| v >= self.n).unwrap();
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let map: Vec<usize> = set.as_slice().to_vec();
        let mut g = Graph::empty(map.len());
        for i in 0..map.len() {
            for j in (i + 1)..map.len() {
                if self.has_edge(map[i], map[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Connected components as sorted vertex sets, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// Disjoint union: vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for e in self.edges() {
            g.add_edge(e.u(), e.v());
        }
        for e in other.edges() {
            g.add_edge(e.u() + self.n, e.v() + self.n);
        }
        g
    }
}

// ==================================================================
// Odd induced subgraph test
// ==================================================================

/// True if `set` induces a subgraph of `g` in which every vertex has odd
/// degree. The empty set does **not** count as an odd induced subgraph.
pub fn is_odd_induced(g: &Graph, set: &VertexSet) -> bool {
    if set.is_empty() || !set.within(g.n()) {
        return false;
    }
    let row = set.to_words(words_for(g.n()));
    set.iter().all(|v| g.degree_in_words(v, &row) % 2 == 1)
}

/// Like [`is_odd_induced`] but every degree must be ≡ 1 (mod `k`).
/// With `k = 2` this is exactly [`is_odd_induced`].
pub fn is_one_mod_k_induced(g: &Graph, set: &VertexSet, k: usize) -> bool {
    assert!(k >= 2, "modulus must be at least 2");
    if set.is_empty() || !set.within(g.n()) {
        return false;
    }
    let row = set.to_words(words_for(g.n()));
    set.iter().all(|v| g.degree_in_words(v, &row) % k == 1)
}

// ==================================================================
// Line graph
// ==================================================================

/// A line graph together with the bijection between its vertices and the
/// source graph's edges.
#[derive(Debug, Clone)]
pub struct LineGraphResult {
    /// The line graph `L(G)`; vertex `i` represents `edge_of_vertex[i]`.
    pub graph: Graph,
    /// Source edge of each line-graph vertex, in lexicographic edge order.
    pub edge_of_vertex: Vec<EdgeId>,
}

impl LineGraphResult {
    /// Line-graph vertex representing `e`, if `e` is a source edge.
    pub fn vertex_of_edge(&self, e: &EdgeId) -> Option<usize> {
        self.edge_of_vertex.binary_search(e).ok()
    }
}

/// Builds the line graph `L(G)`: one vertex per edge of `G`, adjacent
/// exactly when the two edges share an endpoint.  Vertices are numbered by
/// the lexicographic order of the source edges, so `L(G)` has `G.m()`
/// vertices and every vertex `e = uv` has degree
/// `deg_G(u) + deg_G(v) - 2`.
pub fn line_graph(g: &Graph) -> LineGraphResult {
    let edges = g.edges();
    let mut lg = Graph::empty(edges.len());
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            if edges[i].touches(&edges[j]) {
                lg.add_edge(i, j);
            }
        }
    }
    LineGraphResult {
        graph: lg,
        edge_of_vertex: edges,
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
    fn edge_id_orders_endpoints() {
        let e = EdgeId::new(7, 2);
        assert_eq!(e.endpoints(), (2, 7));
        assert_eq!(e.to_string(), "2-7");
    }

    #[test]
    #[should_panic(expected = "endpoints must differ")]
    fn edge_id_rejects_loops() {
        let _ = EdgeId::new(3, 3);
    }

    #[test]
    fn vertex_set_sorts_and_dedups() {
        let s = VertexSet::new(vec![5, 1, 3, 1]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert!(s.contains(3));
        assert!(!s.contains(2));
        assert_eq!(s.to_string(), "{1, 3, 5}");
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop { vertex: 1 }));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn build_dedup_collapses() {
        let g = Graph::from_edges_dedup(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn degrees_and_edges_on_a_path() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.min_degree(), 1);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.neighbors(1), vec![0, 2]);
        let es: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
        assert_eq!(es, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn multiword_rows_work_past_64_vertices() {
        // A long path crosses the word boundary; spot-check around it.
        let edges: Vec<(usize, usize)> = (0..79).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(80, &edges).unwrap();
        assert_eq!(g.m(), 79);
        assert!(g.has_edge(63, 64));
        assert!(!g.has_edge(63, 65));
        assert_eq!(g.neighbors(64), vec![63, 65]);
        assert_eq!(g.degree(64), 2);
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 80);
    }

    #[test]
    fn induced_subgraph_remaps_ids() {
        // C_5 restricted to {0, 1, 3} keeps only the edge 0-1.
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let (h, map) = c5.induced(&VertexSet::new(vec![0, 1, 3])).unwrap();
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 1);
        assert!(h.has_edge(0, 1));
    }

    #[test]
    fn odd_induced_basics() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(is_odd_induced(&k2, &VertexSet::new(vec![0, 1])));
        assert!(!is_odd_induced(&k2, &VertexSet::empty()), "empty set is not odd");
        assert!(!is_odd_induced(&k2, &VertexSet::new(vec![0])), "isolated vertex has even degree");

        // K_3 has all degrees 2: no odd induced subgraph on all three
        // vertices, but every single edge is one.
        let k3 = generate(&FamilySpec::Complete(3)).unwrap();
        assert!(!is_odd_induced(&k3, &VertexSet::full(3)));
        assert!(is_odd_induced(&k3, &VertexSet::new(vec![0, 2])));
    }

    #[test]
    fn one_mod_k_reduces_to_odd_for_k2() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        for mask in 0u64..64 {
            let set = VertexSet::from_mask64(mask);
            assert_eq!(
                is_odd_induced(&g, &set),
                is_one_mod_k_induced(&g, &set, 2),
                "k=2 must agree with the odd test on {set}"
            );
        }
    }

    #[test]
    fn line_graph_degree_law() {
        // deg_L(e) = deg_G(u) + deg_G(v) - 2 for every edge e = uv.
        let f = generate(&FamilySpec::F).unwrap();
        let lg = line_graph(&f);
        assert_eq!(lg.graph.n(), f.m());
        for (i, e) in lg.edge_of_vertex.iter().enumerate() {
            let expect = f.degree(e.u()) + f.degree(e.v()) - 2;
            assert_eq!(lg.graph.degree(i), expect, "degree law fails at edge {e}");
        }
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        let lg = line_graph(&c6);
        assert_eq!(lg.graph.n(), 6);
        assert_eq!(lg.graph.m(), 6);
        assert!((0..6).all(|v| lg.graph.degree(v) == 2));
    }

    #[test]
    fn line_graph_vertex_lookup() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let lg = line_graph(&g);
        for (i, e) in lg.edge_of_vertex.iter().enumerate() {
            assert_eq!(lg.vertex_of_edge(e), Some(i));
        }
        assert_eq!(lg.vertex_of_edge(&EdgeId::new(1, 3)), None);
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let a = generate(&FamilySpec::Complete(3)).unwrap();
        let b = generate(&FamilySpec::Path(2)).unwrap();
        let u = a.disjoint_union(&b);
        assert_eq!(u.n(), 5);
        assert_eq!(u.m(), 4);
        assert!(u.has_edge(3, 4));
        assert!(!u.has_edge(2, 3));
        assert_eq!(u.components().len(), 2);
    }
}
