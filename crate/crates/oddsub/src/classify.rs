//! Structural facts about a graph, gathered in one report.

use crate::graph::{Graph, VertexSet};

/// Summary of the structural properties the solvers and certificate
/// pipelines condition on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// True when the graph has at most one connected component.
    pub is_connected: bool,
    /// True when the graph admits a proper 2-coloring.
    pub is_bipartite: bool,
    /// `Some(k)` when every vertex has degree exactly `k`.
    pub regular_degree: Option<usize>,
    /// Smallest degree (0 for the empty graph).
    pub min_degree: usize,
    /// Largest degree (0 for the empty graph).
    pub max_degree: usize,
    /// Length of a shortest cycle; `None` for forests.
    pub girth: Option<usize>,
    /// True when no vertex has three pairwise nonadjacent neighbors.
    pub claw_free: bool,
    /// Smallest `r >= 3` such that the graph has no induced star
    /// `K_{1,r}`.  Claw-free graphs report 3; the value never exceeds
    /// `max_degree + 1`.
    pub k1r_free_from: usize,
    /// True when the graph contains no 5-cycle as a subgraph (induced or
    /// not).
    pub c5_subgraph_free: bool,
}

/// Computes a [`StructureReport`].
pub fn classify(g: &Graph) -> StructureReport {
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    let regular_degree = if g.n() > 0 && min_degree == max_degree {
        Some(min_degree)
    } else {
        None
    };
    let star = largest_induced_star(g);
    StructureReport {
        is_connected: g.components().len() <= 1,
        is_bipartite: bipartition(g).is_some(),
        regular_degree,
        min_degree,
        max_degree,
        girth: girth(g),
        claw_free: star <= 2,
        k1r_free_from: star.max(2) + 1,
        c5_subgraph_free: !has_c5_subgraph(g),
    }
}

/// Splits the vertices into two independent parts, or `None` when the
/// graph has an odd cycle.  Each component's lowest vertex lands in the
/// first part, so the result is deterministic.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == usize::MAX {
                    side[w] = side[v] ^ 1;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let part = |p: usize| (0..n).filter(|&v| side[v] == p).collect();
    Some((part(0), part(1)))
}

/// Length of a shortest cycle, or `None` for forests.
///
/// Runs a BFS from every vertex; a non-tree edge `u-w` seen from the BFS
/// rooted at `s` witnesses a closed walk of length `dist[u] + dist[w] + 1`,
/// and the minimum over all roots and non-tree edges is exactly the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            // Vertices beyond half the current best cycle length cannot
            // improve it from this root.
            if best.is_some_and(|b| 2 * dist[v] + 1 >= b) {
                continue;
            }
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        if best == Some(3) {
            break; // cannot do better
        }
    }
    best
}

/// Size of the largest independent set contained in a single
/// neighborhood, i.e. the largest `r` with an induced star `K_{1,r}`.
fn largest_induced_star(g: &Graph) -> usize {
    let mut best = 0;
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        if nbrs.len() <= best {
            continue; // cannot beat the current record
        }
        // Independence structure of the neighborhood as local bitmasks.
        let local: Vec<u64> = nbrs
            .iter()
            .map(|&a| {
                let mut mask = 0u64;
                for (j, &b) in nbrs.iter().enumerate() {
                    if b != a && g.has_edge(a, b) {
                        mask |= 1 << j;
                    }
                }
                mask
            })
            .collect();
        assert!(
            nbrs.len() <= 64,
            "induced-star search supports degrees up to 64 (got {})",
            nbrs.len()
        );
        let full = if nbrs.len() == 64 { !0 } else { (1u64 << nbrs.len()) - 1 };
        best = best.max(max_independent(&local, full));
    }
    best
}

/// Exact maximum independent set on a small graph given as bitmask rows.
fn max_independent(adj: &[u64], alive: u64) -> usize {
    if alive == 0 {
        return 0;
    }
    // Pick the alive vertex of largest alive-degree; isolated vertices are
    // always taken, which keeps sparse instances linear.
    let mut pick = usize::MAX;
    let mut pick_deg = 0;
    let mut m = alive;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (adj[v] & alive).count_ones() as usize;
        if pick == usize::MAX || d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    if pick_deg == 0 {
        return (alive.count_ones()) as usize; // all remaining are independent
    }
    let with = 1 + max_independent(adj, alive & !(adj[pick] | (1 << pick)));
    let without = max_independent(adj, alive & !(1 << pick));
    with.max(without)
}

/// True when the graph contains a cycle of length exactly 5 as a
/// subgraph.  Enumerates simple paths `s - a - b - c - d` with every
/// internal vertex above `s` (so `s` is the cycle minimum) and checks for
/// the closing edge `d - s`.
fn has_c5_subgraph(g: &Graph) -> bool {
    let n = g.n();
    let mut path = [0usize; 5];
    for s in 0..n {
        path[0] = s;
        if dfs_c5(g, s, &mut path, 1) {
            return true;
        }
    }
    false
}

fn dfs_c5(g: &Graph, s: usize, path: &mut [usize; 5], depth: usize) -> bool {
    if depth == 5 {
        return g.has_edge(path[4], s);
    }
    let prev = path[depth - 1];
    for w in g.neighbors(prev) {
        if w <= s || path[1..depth].contains(&w) {
            continue;
        }
        path[depth] = w;
        if dfs_c5(g, s, path, depth + 1) {
            return true;
        }
    }
    false
}
