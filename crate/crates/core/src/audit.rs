//! Per-position audit of the conflict counting behind the color bound.
//!
//! At position `i` the prefix `G_i` (positions `1..=i`) holds the *blue*
//! edges; the rest of the graph is *yellow*. With `e_i = u_i v_i` and `u_i`
//! special, the neighbors of `u_i` split into
//!
//! * `X1`: joined to `u_i` by a blue edge, `G_i`-degree above `k`,
//! * `X2`: joined by a blue edge, `G_i`-degree at most `k` (contains `v_i`),
//! * `X3`: joined only by yellow edges,
//!
//! and the neighbors of `v_i` into `Y1` (blue) and `Y2` (yellow only).
//! Blue conflicts of `e_i` are edges at earlier positions within distance one
//! of `e_i` in the whole graph. The u-side tally takes those incident to `u_i`
//! or a neighbor of `u_i` but not to `v_i`; the v-side tally is everything
//! else, so the two sides always add up to the total.

use serde::Serialize;

use crate::coloring::{conflict_limit, effective_k, u_side_limit, v_side_limit};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Vertex};
use crate::ordering::{verify_ordering, EdgeOrdering, OrderingVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditChecks {
    pub total: bool,
    pub u_side: bool,
    pub v_side: bool,
    pub x1_at_most_k: bool,
    pub y1_at_most_k: bool,
    pub x3_future: bool,
    pub y2_future: bool,
}

impl AuditChecks {
    pub fn all(&self) -> bool {
        self.total
            && self.u_side
            && self.v_side
            && self.x1_at_most_k
            && self.y1_at_most_k
            && self.x3_future
            && self.y2_future
    }

    pub fn named(&self) -> [(&'static str, bool); 7] {
        [
            ("total", self.total),
            ("u_side", self.u_side),
            ("v_side", self.v_side),
            ("x1_at_most_k", self.x1_at_most_k),
            ("y1_at_most_k", self.y1_at_most_k),
            ("x3_future", self.x3_future),
            ("y2_future", self.y2_future),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRecord {
    /// 1-based.
    pub position: usize,
    pub edge: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
    pub x1: Vec<Vertex>,
    pub x2: Vec<Vertex>,
    pub x3: Vec<Vertex>,
    pub y1: Vec<Vertex>,
    pub y2: Vec<Vertex>,
    pub total_conflicts: usize,
    pub u_side_count: usize,
    pub v_side_count: usize,
    /// Vertices of `X3` with `G_i`-degree above `k`, and the allowance
    /// `max(0, k - |X1| - |X2|)`.
    pub x3_high: usize,
    pub x3_allowance: i64,
    /// Vertices of `Y2` with `G_i`-degree above `k`, and `k - |Y1|`.
    pub y2_high: usize,
    pub y2_allowance: i64,
    pub checks: AuditChecks,
}

/// Summary over a whole audit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub records: usize,
    pub failed_records: usize,
    pub max_total_conflicts: usize,
    pub max_u_side: usize,
    pub max_v_side: usize,
    /// Per named check, how many records failed it.
    pub failures: Vec<(String, usize)>,
}

impl AuditSummary {
    pub fn from_records(records: &[AuditRecord]) -> Self {
        let mut failures: Vec<(String, usize)> = AuditChecks {
            total: true,
            u_side: true,
            v_side: true,
            x1_at_most_k: true,
            y1_at_most_k: true,
            x3_future: true,
            y2_future: true,
        }
        .named()
        .iter()
        .map(|(n, _)| (n.to_string(), 0))
        .collect();
        let mut s = AuditSummary {
            records: records.len(),
            ..Default::default()
        };
        for r in records {
            if !r.checks.all() {
                s.failed_records += 1;
            }
            for (slot, (_, ok)) in failures.iter_mut().zip(r.checks.named()) {
                if !ok {
                    slot.1 += 1;
                }
            }
            s.max_total_conflicts = s.max_total_conflicts.max(r.total_conflicts);
            s.max_u_side = s.max_u_side.max(r.u_side_count);
            s.max_v_side = s.max_v_side.max(r.v_side_count);
        }
        s.failures = failures;
        s
    }

    pub fn passed(&self) -> bool {
        self.failed_records == 0
    }
}

/// Audits every position of a valid ordering against the limits for `k` and
/// the graph's maximum degree. A `k` above the maximum degree is audited as
/// `k = Δ`: every vertex is low-degree either way.
pub fn audit(g: &MultiGraph, k: usize, ord: &EdgeOrdering) -> Result<Vec<AuditRecord>> {
    if let OrderingVerdict::Fail {
        position, reason, ..
    } = verify_ordering(g, k, ord)?
    {
        return Err(Error::MalformedOrdering(format!(
            "not a special-edge ordering at position {position}: {reason}"
        )));
    }
    let pos = ord.positions(g)?;
    let delta = g.max_degree();
    let k = effective_k(k, delta);
    let ki = k as i64;
    let mut deg = vec![0usize; g.n()];
    let mut seen = vec![false; g.m()];
    let mut near_u = vec![false; g.n()];
    let mut out = Vec::with_capacity(ord.len());

    for (i, s) in ord.sequence.iter().enumerate() {
        let (u, v) = ord.ends(g, i);
        deg[u] += 1;
        deg[v] += 1;

        let blue_split = |x: Vertex| -> (Vec<Vertex>, Vec<Vertex>) {
            let mut blue: Vec<Vertex> = Vec::new();
            let mut all: Vec<Vertex> = Vec::new();
            for &(f, w) in g.incident(x) {
                all.push(w);
                if pos[f] <= i {
                    blue.push(w);
                }
            }
            blue.sort_unstable();
            blue.dedup();
            all.sort_unstable();
            all.dedup();
            let yellow = all.into_iter().filter(|w| blue.binary_search(w).is_err()).collect();
            (blue, yellow)
        };

        let (u_blue, x3) = blue_split(u);
        let (x1, x2): (Vec<Vertex>, Vec<Vertex>) = u_blue.into_iter().partition(|&w| deg[w] > k);
        let (y1, y2) = blue_split(v);

        near_u[u] = true;
        for &(_, w) in g.incident(u) {
            near_u[w] = true;
        }
        let (mut total, mut u_side) = (0usize, 0usize);
        g.for_each_conflict(s.edge, &mut seen, |f| {
            if pos[f] < i {
                total += 1;
                let [a, b] = g.endpoints(f);
                if a != v && b != v && (near_u[a] || near_u[b]) {
                    u_side += 1;
                }
            }
        });
        near_u[u] = false;
        for &(_, w) in g.incident(u) {
            near_u[w] = false;
        }
        let v_side = total - u_side;

        let x3_high = x3.iter().filter(|&&w| deg[w] > k).count();
        let x3_allowance = (ki - x1.len() as i64 - x2.len() as i64).max(0);
        let y2_high = y2.iter().filter(|&&w| deg[w] > k).count();
        let y2_allowance = ki - y1.len() as i64;

        let checks = AuditChecks {
            total: total as i64 <= conflict_limit(k, delta),
            u_side: u_side as i64 <= u_side_limit(k, delta),
            v_side: v_side as i64 <= v_side_limit(k, delta),
            x1_at_most_k: x1.len() <= k,
            y1_at_most_k: y1.len() <= k,
            x3_future: x3_high as i64 <= x3_allowance,
            y2_future: y2_high as i64 <= y2_allowance,
        };
        out.push(AuditRecord {
            position: i + 1,
            edge: s.edge,
            u,
            v,
            x1,
            x2,
            x3,
            y1,
            y2,
            total_conflicts: total,
            u_side_count: u_side,
            v_side_count: v_side,
            x3_high,
            x3_allowance,
            y2_high,
            y2_allowance,
            checks,
        });
    }
    Ok(out)
}
