//! Exact strong chromatic index for small graphs.
//!
//! Branch and bound over edges in descending conflict-degree order. Edge `j`
//! in that order may only open color `max_so_far + 1`, which removes color
//! permutation symmetry. The search budget is counted in nodes.

use serde::Serialize;

use crate::coloring::{color_graph, verify_strong_coloring, StrongColoring};
use crate::error::Result;
use crate::graph::{EdgeId, MultiGraph};
use crate::ordering::degeneracy;

/// Edge count above which exact search is not recommended.
pub const SOFT_EDGE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    /// Exact value, or the best upper bound found when `timed_out`.
    pub chi_s: usize,
    pub lower_bound: usize,
    pub witness: StrongColoring,
    pub nodes_explored: u64,
    pub timed_out: bool,
}

/// Size of a set of pairwise conflicting edges grown greedily from each
/// start edge; a lower bound on the strong chromatic index.
pub fn conflict_clique_lower_bound(g: &MultiGraph) -> usize {
    let conflicts = conflict_lists(g);
    let m = g.m();
    let mut adj = vec![vec![false; m]; m];
    for (e, cs) in conflicts.iter().enumerate() {
        for &f in cs {
            adj[e][f] = true;
        }
    }
    let mut by_degree: Vec<EdgeId> = (0..m).collect();
    by_degree.sort_by_key(|&e| (std::cmp::Reverse(conflicts[e].len()), e));
    let mut best = 0;
    for start in 0..m {
        let mut clique = vec![start];
        for &f in &by_degree {
            if f != start && clique.iter().all(|&c| adj[c][f]) {
                clique.push(f);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn conflict_lists(g: &MultiGraph) -> Vec<Vec<EdgeId>> {
    (0..g.m()).map(|e| g.conflict_set(e).unwrap()).collect()
}

struct Search {
    order: Vec<EdgeId>,
    /// for the edge at each depth, conflicting edges that come earlier
    earlier: Vec<Vec<EdgeId>>,
    color: Vec<usize>,
    best: usize,
    witness: Vec<usize>,
    nodes: u64,
    budget: u64,
    lower: usize,
}

impl Search {
    /// Returns false when the budget ran out.
    fn dfs(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            self.best = used;
            self.witness = self.color.clone();
            return true;
        }
        let e = self.order[depth];
        // opening a new color is allowed only while it stays below `best`
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.best <= self.lower {
                return true;
            }
            if self.earlier[depth].iter().any(|&f| self.color[f] == c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            self.color[e] = c;
            let ok = self.dfs(depth + 1, used.max(c + 1));
            self.color[e] = usize::MAX;
            if !ok {
                return false;
            }
            // a better coloring may have shrunk the admissible range
            if c + 1 >= self.best - 1 {
                break;
            }
        }
        true
    }
}

pub fn exact_chi_s(g: &MultiGraph, budget: u64) -> ExactResult {
    let m = g.m();
    if m == 0 {
        return ExactResult {
            chi_s: 0,
            lower_bound: 0,
            witness: StrongColoring::new(Vec::new()),
            nodes_explored: 0,
            timed_out: false,
        };
    }
    let conflicts = conflict_lists(g);
    let mut order: Vec<EdgeId> = (0..m).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(conflicts[e].len()), e));
    let mut rank = vec![0; m];
    for (i, &e) in order.iter().enumerate() {
        rank[e] = i;
    }
    let earlier: Vec<Vec<EdgeId>> = order
        .iter()
        .map(|&e| {
            conflicts[e]
                .iter()
                .copied()
                .filter(|&f| rank[f] < rank[e])
                .collect()
        })
        .collect();

    // first fit in branching order gives the starting incumbent
    let mut first_fit = vec![usize::MAX; m];
    for (d, &e) in order.iter().enumerate() {
        let earlier_e: &Vec<EdgeId> = &earlier[d];
        let c = (0..)
            .find(|&c| earlier_e.iter().all(|&f| first_fit[f] != c))
            .unwrap();
        first_fit[e] = c;
    }
    let upper = first_fit.iter().max().unwrap() + 1;
    let lower = conflict_clique_lower_bound(g);

    let mut s = Search {
        order,
        earlier,
        color: vec![usize::MAX; m],
        best: upper,
        witness: first_fit,
        nodes: 0,
        budget: budget.max(1),
        lower,
    };
    let finished = s.best <= lower || s.dfs(0, 0);
    let witness = StrongColoring::new(s.witness);
    debug_assert_eq!(witness.colors_used, s.best);
    ExactResult {
        chi_s: s.best,
        lower_bound: if finished { s.best } else { lower },
        witness,
        nodes_explored: s.nodes,
        timed_out: !finished,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SandwichStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    pub exact: usize,
    pub greedy: usize,
    pub bound: Option<i64>,
    pub status: SandwichStatus,
}

/// Checks `exact <= greedy <= bound(degeneracy, max degree)`.
pub fn sandwich_check(g: &MultiGraph, budget: u64) -> Result<Sandwich> {
    let ex = exact_chi_s(g, budget);
    let (_, _, report) = color_graph(g, Some(degeneracy(g).k))?;
    let witness_ok = verify_strong_coloring(g, &ex.witness)?.is_pass();
    let bound = report.bound;
    let status = if !witness_ok || ex.lower_bound > report.colors_used || !report.within_bound() {
        SandwichStatus::Fail
    } else if ex.timed_out {
        SandwichStatus::Inconclusive
    } else if ex.chi_s <= report.colors_used {
        SandwichStatus::Pass
    } else {
        SandwichStatus::Fail
    };
    Ok(Sandwich {
        exact: ex.chi_s,
        greedy: report.colors_used,
        bound,
        status,
    })
}
