//! First-fit strong edge-coloring along a special-edge ordering.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};
use crate::ordering::{build_ordering, degeneracy, EdgeOrdering};

/// Color budget guaranteed for a `k`-degenerate graph of maximum degree
/// `delta`: `(4k-2)·delta - k(2k-1) + 1`.
///
/// Meaningful for `k >= 1` and `delta >= 1`; other inputs return the raw
/// formula value, which may be negative.
pub fn bound(k: usize, delta: usize) -> i64 {
    let (k, d) = (k as i64, delta as i64);
    (4 * k - 2) * d - k * (2 * k - 1) + 1
}

/// Largest number of already-colored conflicts an edge can see.
pub fn conflict_limit(k: usize, delta: usize) -> i64 {
    bound(k, delta) - 1
}

/// Limit on blue conflicts counted from the special endpoint's side.
pub fn u_side_limit(k: usize, delta: usize) -> i64 {
    let (k, d) = (k as i64, delta as i64);
    2 * k * d - k * k
}

/// Limit on blue conflicts counted from the other endpoint's side.
pub fn v_side_limit(k: usize, delta: usize) -> i64 {
    let (k, d) = (k as i64, delta as i64);
    (2 * k - 2) * d - k * (k - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongColoring {
    /// `assignment[e]` is the 0-based color of edge `e`.
    pub assignment: Vec<usize>,
    pub colors_used: usize,
}

impl StrongColoring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let colors_used = assignment.iter().max().map_or(0, |c| c + 1);
        StrongColoring {
            assignment,
            colors_used,
        }
    }

    /// Builds a total coloring of `m` edges from `(edge, color)` pairs.
    pub fn from_pairs<I>(m: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EdgeId, usize)>,
    {
        let mut slots: Vec<Option<usize>> = vec![None; m];
        for (e, c) in pairs {
            let slot = slots
                .get_mut(e)
                .ok_or(Error::EdgeOutOfRange { edge: e, m })?;
            if slot.replace(c).is_some() {
                return Err(Error::Invalid(format!("edge {e} colored twice")));
            }
        }
        let assignment = slots
            .into_iter()
            .enumerate()
            .map(|(e, c)| c.ok_or(Error::PartialColoring(e)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(assignment))
    }
}

/// Colors edges in ordering position order, each with the smallest color not
/// used by an already-colored edge of its conflict set.
pub fn greedy_color(g: &MultiGraph, ord: &EdgeOrdering) -> StrongColoring {
    const NONE: usize = usize::MAX;
    let m = g.m();
    let mut color = vec![NONE; m];
    let mut seen = vec![false; m];
    // taken[c] == stamp marks color c as blocked for the current edge
    let mut taken: Vec<usize> = Vec::new();
    for (stamp, s) in ord.sequence.iter().enumerate() {
        g.for_each_conflict(s.edge, &mut seen, |f| {
            let c = color[f];
            if c != NONE {
                if c >= taken.len() {
                    taken.resize(c + 1, NONE);
                }
                taken[c] = stamp;
            }
        });
        let c = (0..).find(|&c| taken.get(c) != Some(&stamp)).unwrap();
        color[s.edge] = c;
    }
    debug_assert!(color.iter().all(|&c| c != NONE));
    StrongColoring::new(color)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum ColoringVerdict {
    Pass,
    Fail {
        edge: EdgeId,
        other: EdgeId,
        color: usize,
    },
}

impl ColoringVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, ColoringVerdict::Pass)
    }
}

/// Checks that no two edges within distance one share a color. Reports the
/// lexicographically smallest offending pair.
pub fn verify_strong_coloring(g: &MultiGraph, c: &StrongColoring) -> Result<ColoringVerdict> {
    if c.assignment.len() < g.m() {
        return Err(Error::PartialColoring(c.assignment.len()));
    }
    if c.assignment.len() > g.m() {
        return Err(Error::Invalid(format!(
            "{} colors for {} edges",
            c.assignment.len(),
            g.m()
        )));
    }
    for e in 0..g.m() {
        for f in g.conflict_set(e)? {
            if f > e && c.assignment[e] == c.assignment[f] {
                return Ok(ColoringVerdict::Fail {
                    edge: e,
                    other: f,
                    color: c.assignment[e],
                });
            }
        }
    }
    Ok(ColoringVerdict::Pass)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentEntry {
    pub id: EdgeId,
    pub edge: [u64; 2],
    pub color: usize,
}

/// Result of the full pipeline; serializes to the coloring JSON contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub max_degree: usize,
    /// Absent for edgeless graphs and `k = 0`.
    pub bound: Option<i64>,
    pub colors_used: usize,
    pub valid: bool,
    pub assignment: Vec<AssignmentEntry>,
}

impl ColorReport {
    pub fn within_bound(&self) -> bool {
        self.bound.is_none_or(|b| self.colors_used as i64 <= b)
    }
}

pub fn assignment_entries(g: &MultiGraph, c: &StrongColoring) -> Vec<AssignmentEntry> {
    c.assignment
        .iter()
        .enumerate()
        .map(|(id, &color)| AssignmentEntry {
            id,
            edge: g.labelled_endpoints(id),
            color,
        })
        .collect()
}

/// `k` capped at the maximum degree. Every graph is `delta`-degenerate and
/// the formula decreases in `k` past `delta`, so larger values are replaced.
pub fn effective_k(k: usize, delta: usize) -> usize {
    k.min(delta)
}

/// Reported bound for a graph: none for edgeless graphs or `k = 0`.
pub fn reported_bound(m: usize, k: usize, delta: usize) -> Option<i64> {
    (m > 0 && k >= 1).then(|| bound(effective_k(k, delta), delta))
}

/// Degeneracy (unless `k` is given), ordering, greedy coloring, verification.
pub fn color_graph(g: &MultiGraph, k: Option<usize>) -> Result<(StrongColoring, EdgeOrdering, ColorReport)> {
    let k = k.unwrap_or_else(|| degeneracy(g).k);
    let ord = build_ordering(g, k)?;
    let coloring = greedy_color(g, &ord);
    let valid = verify_strong_coloring(g, &coloring)?.is_pass();
    let delta = g.max_degree();
    let report = ColorReport {
        n: g.n(),
        m: g.m(),
        k,
        max_degree: delta,
        bound: reported_bound(g.m(), k, delta),
        colors_used: coloring.colors_used,
        valid,
        assignment: assignment_entries(g, &coloring),
    };
    Ok((coloring, ord, report))
}
