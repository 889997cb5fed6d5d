//! Branch-and-bound solver for maximum induced subgraphs with all degrees
//! ≡ 1 (mod k).
//!
//! The search branches on one vertex at a time (include first, then exclude),
//! propagates forced decisions to a fixpoint after every branch, and prunes a
//! node as soon as `|decided in| + |undecided|` cannot beat the incumbent.
//! Vertices are branched in order of decreasing degree (ties by ascending
//! id), which keeps the propagation rules busy near the root.
//!
//! # Determinism
//!
//! The sequential search records an incumbent only when it is *strictly*
//! larger than the current best, so it always reports the first maximum
//! solution in depth-first order.  The parallel path reproduces exactly that
//! answer:
//!
//! 1. a bounded sequential "priming" run explores the first
//!    [`PRIME_NODE_CAP`] nodes of the same tree and yields a bound `b0` plus
//!    the first incumbent;
//! 2. the root is expanded breadth-first, in depth-first order, into at most
//!    ~2×[`PARALLEL_TASKS`] open subtrees;
//! 3. each open subtree is solved independently, seeded with `b0` and
//!    recording only strict improvements — no bounds are shared across
//!    tasks, so every task visits a thread-independent set of nodes;
//! 4. results are reduced in depth-first order, keeping the first subtree
//!    that attains the maximum.
//!
//! Any prune uses a bound strictly below the optimum, so it can never remove
//! the depth-first-first optimal leaf before that leaf is recorded; hence the
//! parallel value and witness match the sequential run exactly.  The node
//! count is a pure function of the input as well, but it counts the work of
//! the splitting strategy, which overlaps the priming prefix, so it is not
//! comparable to the sequential figure.

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Largest `n` the branch-and-bound solvers accept (one machine word).
pub const SOLVER_GUARD: usize = 64;

/// Node budget for the sequential priming pass of the parallel path.
#[cfg(feature = "parallel")]
const PRIME_NODE_CAP: u64 = 32_768;

/// Target number of independent subtrees for the parallel phase.
#[cfg(feature = "parallel")]
const PARALLEL_TASKS: usize = 256;

/// Below this many vertices the parallel path is pure overhead.
#[cfg(feature = "parallel")]
const PARALLEL_MIN_N: usize = 21;

/// Outcome of an exact solver run.
#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Order of the best induced subgraph found (0 if none exists).
    pub value: usize,
    /// Vertices of the best induced subgraph found; empty iff `value == 0`.
    pub witness: VertexSet,
    /// Number of search-tree nodes visited.  Deterministic for a fixed input,
    /// but the splitting strategy counts different work than the sequential
    /// one, so the two figures are not comparable.
    pub nodes_explored: u64,
    /// Wall-clock time of the search.
    pub elapsed: Duration,
    /// `true` when the search ran to completion; `false` when a node budget
    /// stopped it early, in which case `value`/`witness` are only a lower
    /// bound.
    pub complete: bool,
}

/// Maximum order of an induced subgraph with all degrees odd.
///
/// With the `parallel` feature enabled and no `budget`, large instances are
/// solved by the deterministic work-splitting scheme described in the module
/// docs; the result is identical to [`fo_exact_sequential`] either way.
/// A `budget` caps the number of search nodes and always forces the
/// sequential path, so partial results are deterministic too.
pub fn fo_exact(g: &Graph, budget: Option<u64>) -> Result<OracleResult, Error> {
    solve(g, 2, budget, false)
}

/// [`fo_exact`] restricted to the single-threaded search, regardless of
/// features.  Exposed for cross-checking and benchmarking.
pub fn fo_exact_sequential(g: &Graph, budget: Option<u64>) -> Result<OracleResult, Error> {
    solve(g, 2, budget, true)
}

/// Maximum order of an induced subgraph with all degrees ≡ 1 (mod k), k ≥ 2.
///
/// `fk_exact(g, 2, budget)` runs the same search as [`fo_exact`] and returns
/// the same witness.
pub fn fk_exact(g: &Graph, k: usize, budget: Option<u64>) -> Result<OracleResult, Error> {
    solve(g, k, budget, false)
}

fn solve(g: &Graph, k: usize, budget: Option<u64>, force_sequential: bool) -> Result<OracleResult, Error> {
    if k < 2 {
        return Err(Error::Precondition {
            operation: "fk_exact",
            reason: format!("modulus k must be at least 2, got {k}"),
        });
    }
    if g.n() > SOLVER_GUARD {
        return Err(Error::TooLarge {
            operation: "fk_exact",
            limit: SOLVER_GUARD,
            actual: g.n(),
        });
    }
    let started = Instant::now();
    let sg = SearchGraph::build(g, k as u32);

    // A budget means partial results must not depend on scheduling, and tiny
    // instances are not worth splitting: both go down the sequential path.
    let run = if force_sequential || budget.is_some() || !parallel_pays_off(g.n()) {
        run_sequential(&sg, budget)
    } else {
        run_parallel(&sg)
    };

    let ids: Vec<usize> = (0..sg.n)
        .filter(|&i| run.best_mask >> i & 1 == 1)
        .map(|i| sg.order[i])
        .collect();
    Ok(OracleResult {
        value: run.best,
        witness: VertexSet::new(ids),
        nodes_explored: run.nodes,
        elapsed: started.elapsed(),
        complete: run.complete,
    })
}

#[cfg(feature = "parallel")]
fn parallel_pays_off(n: usize) -> bool {
    n >= PARALLEL_MIN_N
}

#[cfg(not(feature = "parallel"))]
fn parallel_pays_off(_n: usize) -> bool {
    false
}

// ============================================================================
// search state
// ============================================================================

/// The input graph re-indexed into branching order.
///
/// Position `i` holds the vertex `order[i]` of the original graph; `adj[i]`
/// is the neighbourhood of position `i` expressed in positions.
struct SearchGraph {
    n: usize,
    k: u32,
    adj: Vec<u64>,
    order: Vec<usize>,
    full: u64,
}

impl SearchGraph {
    fn build(g: &Graph, k: u32) -> SearchGraph {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; n];
        for (i, &v) in order.iter().enumerate() {
            let mut row = 0u64;
            for u in g.neighbors(v) {
                row |= 1 << pos[u];
            }
            adj[i] = row;
        }
        let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
        SearchGraph { n, k, adj, order, full }
    }

    /// Forced-move closure of a partial assignment.  Returns `false` when the
    /// assignment cannot extend to any valid subgraph.
    ///
    /// For a decided-in vertex with `d` chosen neighbours and `c` undecided
    /// ones, the reachable final degrees are exactly `d..=d+c`; writing
    /// `delta` for the distance from `d` up to the next value ≡ 1 (mod k):
    /// `delta > c` is infeasible, `delta == c` forces every undecided
    /// neighbour in, and `delta == 0 && c < k` forces every undecided
    /// neighbour out.  An undecided vertex whose neighbourhood is fully
    /// decided must itself be excluded unless its degree already fits.
    ///
    /// Each rule is an implication of the current assignment, so the closure
    /// is the unique least fixpoint: scan order cannot change the result.
    fn propagate(&self, inm: &mut u64, outm: &mut u64) -> bool {
        let k = self.k;
        loop {
            let mut changed = false;
            let mut scan = *inm;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let nbrs = self.adj[v];
                let und = nbrs & !(*inm | *outm);
                let d = (nbrs & *inm).count_ones();
                let c = und.count_ones();
                let delta = (1 + k - d % k) % k;
                if delta > c {
                    return false;
                }
                if c == 0 {
                    continue;
                }
                if delta == c {
                    *inm |= und;
                    changed = true;
                } else if delta == 0 && c < k {
                    *outm |= und;
                    changed = true;
                }
            }
            let open = self.full & !(*inm | *outm);
            let mut scan = open;
            while scan != 0 {
                let u = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let nbrs = self.adj[u];
                if nbrs & open == 0 && (nbrs & *inm).count_ones() % k != 1 {
                    *outm |= 1 << u;
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

/// One depth-first search over a subtree, with an optional node budget.
struct Search<'a> {
    sg: &'a SearchGraph,
    best: usize,
    best_mask: u64,
    improved: bool,
    nodes: u64,
    budget: Option<u64>,
    truncated: bool,
}

struct RunOutcome {
    best: usize,
    best_mask: u64,
    nodes: u64,
    complete: bool,
}

impl<'a> Search<'a> {
    fn new(sg: &'a SearchGraph, seed_bound: usize, budget: Option<u64>) -> Search<'a> {
        Search {
            sg,
            best: seed_bound,
            best_mask: 0,
            improved: false,
            nodes: 0,
            budget,
            truncated: false,
        }
    }

    fn dfs(&mut self, mut inm: u64, mut outm: u64) {
        if self.truncated {
            return;
        }
        self.nodes += 1;
        if let Some(cap) = self.budget {
            if self.nodes > cap {
                self.truncated = true;
                return;
            }
        }
        if !self.sg.propagate(&mut inm, &mut outm) {
            return;
        }
        let und = self.sg.full & !(inm | outm);
        let potential = (inm | und).count_ones() as usize;
        if potential <= self.best {
            return;
        }
        if und == 0 {
            // potential > best ensured size > best, and propagation only
            // closes a vertex once its residue is certain, so this leaf is a
            // valid strictly-better solution.
            self.best = inm.count_ones() as usize;
            self.best_mask = inm;
            self.improved = true;
            return;
        }
        let bit = 1u64 << und.trailing_zeros();
        self.dfs(inm | bit, outm);
        self.dfs(inm, outm | bit);
    }
}

fn run_sequential(sg: &SearchGraph, budget: Option<u64>) -> RunOutcome {
    let mut search = Search::new(sg, 0, budget);
    search.dfs(0, 0);
    RunOutcome {
        best: search.best,
        best_mask: search.best_mask,
        nodes: search.nodes,
        complete: !search.truncated,
    }
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(sg: &SearchGraph) -> RunOutcome {
    run_sequential(sg, None)
}

// ============================================================================
// deterministic work splitting
// ============================================================================

#[cfg(feature = "parallel")]
mod split {
    use super::*;
    use rayon::prelude::*;

    /// A node of the expansion frontier, in depth-first order.
    enum Seed {
        /// Propagated but not yet fully decided.
        Open { inm: u64, outm: u64 },
        /// Fully decided during expansion.
        Leaf { size: usize, mask: u64 },
    }

    pub(super) fn run_parallel(sg: &SearchGraph) -> RunOutcome {
        // Phase 1: bounded sequential prefix of the exact same search.  If it
        // finishes inside the cap the answer is already the sequential one.
        let mut prime = Search::new(sg, 0, Some(PRIME_NODE_CAP));
        prime.dfs(0, 0);
        if !prime.truncated {
            return RunOutcome {
                best: prime.best,
                best_mask: prime.best_mask,
                nodes: prime.nodes,
                complete: true,
            };
        }
        let b0 = prime.best;
        let w0 = prime.best_mask;
        let mut nodes = prime.nodes;

        // Phase 2: breadth-first expansion of the root, preserving
        // depth-first order (include-child before exclude-child).
        let mut frontier: Vec<Seed> = Vec::new();
        nodes += expand_into(sg, 0, 0, &mut frontier);
        while frontier.iter().filter(|s| matches!(s, Seed::Open { .. })).count() < PARALLEL_TASKS
            && frontier.iter().any(|s| matches!(s, Seed::Open { .. }))
        {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for seed in frontier {
                match seed {
                    Seed::Leaf { .. } => next.push(seed),
                    Seed::Open { inm, outm } => {
                        let bit = 1u64 << (sg.full & !(inm | outm)).trailing_zeros();
                        nodes += expand_into(sg, inm | bit, outm, &mut next);
                        nodes += expand_into(sg, inm, outm | bit, &mut next);
                    }
                }
            }
            frontier = next;
        }

        // Phase 3: solve every open subtree independently, seeded with the
        // priming bound.  No state is shared, so each task's node count and
        // first-improvement witness depend only on the input.
        let solved: Vec<(Option<(usize, u64)>, u64)> = frontier
            .par_iter()
            .map(|seed| match seed {
                Seed::Leaf { .. } => (None, 0),
                Seed::Open { inm, outm } => {
                    let mut task = Search::new(sg, b0, None);
                    task.dfs(*inm, *outm);
                    let improvement = task.improved.then_some((task.best, task.best_mask));
                    (improvement, task.nodes)
                }
            })
            .collect();

        // Phase 4: ordered reduction — first frontier entry attaining the
        // maximum wins, exactly as the sequential search would have found it.
        let mut best = b0;
        let mut best_mask = w0;
        for (idx, seed) in frontier.iter().enumerate() {
            let candidate = match seed {
                Seed::Leaf { size, mask } => Some((*size, *mask)),
                Seed::Open { .. } => solved[idx].0,
            };
            if let Some((size, mask)) = candidate {
                if size > best {
                    best = size;
                    best_mask = mask;
                }
            }
            nodes += solved[idx].1;
        }
        RunOutcome { best, best_mask, nodes, complete: true }
    }

    /// Propagates one assignment and appends it to the frontier (or drops it
    /// when infeasible / empty).  Returns the node count charged for it.
    fn expand_into(sg: &SearchGraph, mut inm: u64, mut outm: u64, frontier: &mut Vec<Seed>) -> u64 {
        if !sg.propagate(&mut inm, &mut outm) {
            return 1;
        }
        let und = sg.full & !(inm | outm);
        if und == 0 {
            let size = inm.count_ones() as usize;
            if size > 0 {
                frontier.push(Seed::Leaf { size, mask: inm });
            }
        } else {
            frontier.push(Seed::Open { inm, outm });
        }
        1
    }
}

#[cfg(feature = "parallel")]
use split::run_parallel;

// ============================================================================
// tests
// ============================================================================
