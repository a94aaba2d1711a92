//! Degeneracy, special vertices and edges, and the special-edge ordering.
//!
//! For a parameter `k` and a live edge set, a vertex is *special* when at most
//! `k` of its distinct live neighbors have live degree greater than `k`. A
//! *special edge* joins a special vertex to a vertex of live degree at most
//! `k`. The ordering repeatedly removes a special edge from the live graph and
//! prepends it, so the first edge removed ends up last.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSubset, MultiGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyCertificate {
    pub k: usize,
    /// Vertices in removal order.
    pub peel_order: Vec<Vertex>,
    /// `back_degrees[v]` is the degree of `v` when it was removed.
    pub back_degrees: Vec<usize>,
}

/// Min-degree peeling with a bucket queue. Degrees count parallel edges.
pub fn degeneracy(g: &MultiGraph) -> DegeneracyCertificate {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.incident(v).len()).collect();
    let max = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); max + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut peel_order = Vec::with_capacity(n);
    let mut back_degrees = vec![0; n];
    let mut k = 0;
    let mut cur = 0;
    while peel_order.len() < n {
        // entries are stale when the vertex is gone or its degree dropped
        let v = loop {
            while buckets[cur].is_empty() {
                cur += 1;
            }
            let v = buckets[cur].pop().unwrap();
            if !removed[v] && deg[v] == cur {
                break v;
            }
        };
        removed[v] = true;
        back_degrees[v] = cur;
        k = k.max(cur);
        peel_order.push(v);
        for &(_, w) in g.incident(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
                cur = cur.min(deg[w]);
            }
        }
    }
    DegeneracyCertificate {
        k,
        peel_order,
        back_degrees,
    }
}

/// Whether `v` is special in the subgraph formed by `live`.
pub fn is_special_vertex(g: &MultiGraph, live: &EdgeSubset, v: Vertex, k: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let mut high: Vec<Vertex> = Vec::new();
    for &(e, w) in g.incident(v) {
        if live.contains(e) && g.restricted_degree(live, w)? > k {
            high.push(w);
        }
    }
    high.sort_unstable();
    high.dedup();
    Ok(high.len() <= k)
}

/// An edge together with the endpoint designated as its special vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpecialEdge {
    pub edge: EdgeId,
    pub special: Vertex,
}

/// How to choose among qualifying special edges at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionPolicy {
    /// Prefer a special endpoint of live degree above `k`, then the smallest
    /// special endpoint id, then the smallest edge id.
    #[default]
    PreferHighDegree,
    /// Smallest special endpoint id, then smallest edge id, ignoring degree.
    LowestId,
}

/// Scans the live subgraph for a special edge, choosing by `SelectionPolicy::default()`.
/// Returns `None` when the live set is empty or no edge qualifies.
pub fn find_special_edge(g: &MultiGraph, live: &EdgeSubset, k: usize) -> Option<SpecialEdge> {
    find_special_edge_with(g, live, k, SelectionPolicy::default())
}

pub fn find_special_edge_with(
    g: &MultiGraph,
    live: &EdgeSubset,
    k: usize,
    policy: SelectionPolicy,
) -> Option<SpecialEdge> {
    let deg: Vec<usize> = (0..g.n())
        .map(|v| g.incident(v).iter().filter(|(e, _)| live.contains(*e)).count())
        .collect();
    let mut best: Option<(bool, Vertex, EdgeId)> = None;
    for u in 0..g.n() {
        if deg[u] == 0 {
            continue;
        }
        let mut high: Vec<Vertex> = g
            .incident(u)
            .iter()
            .filter(|&&(e, w)| live.contains(e) && deg[w] > k)
            .map(|&(_, w)| w)
            .collect();
        high.sort_unstable();
        high.dedup();
        if high.len() > k {
            continue;
        }
        let rank = match policy {
            SelectionPolicy::PreferHighDegree => deg[u] <= k,
            SelectionPolicy::LowestId => false,
        };
        for &(e, w) in g.incident(u) {
            if live.contains(e) && deg[w] <= k {
                let key = (rank, u, e);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
    }
    best.map(|(_, special, edge)| SpecialEdge { edge, special })
}

/// The edge list `e_1 … e_m` with the special endpoint `u_i` recorded at
/// each position. Positions are stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeOrdering {
    pub sequence: Vec<SpecialEdge>,
}

impl EdgeOrdering {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// `position[e]` for every edge. Errors unless the sequence is a
    /// permutation of `0..m` with each special vertex an endpoint.
    pub fn positions(&self, g: &MultiGraph) -> Result<Vec<usize>> {
        if self.sequence.len() != g.m() {
            return Err(Error::MalformedOrdering(format!(
                "{} entries for {} edges",
                self.sequence.len(),
                g.m()
            )));
        }
        let mut pos = vec![usize::MAX; g.m()];
        for (i, s) in self.sequence.iter().enumerate() {
            if s.edge >= g.m() {
                return Err(Error::MalformedOrdering(format!(
                    "edge id {} out of range",
                    s.edge
                )));
            }
            if pos[s.edge] != usize::MAX {
                return Err(Error::MalformedOrdering(format!(
                    "edge {} listed twice",
                    s.edge
                )));
            }
            if !g.endpoints(s.edge).contains(&s.special) {
                return Err(Error::MalformedOrdering(format!(
                    "vertex {} is not an endpoint of edge {}",
                    s.special, s.edge
                )));
            }
            pos[s.edge] = i;
        }
        Ok(pos)
    }

    /// `(u_i, v_i)` at 0-based position `i`.
    pub fn ends(&self, g: &MultiGraph, i: usize) -> (Vertex, Vertex) {
        let s = self.sequence[i];
        let [a, b] = g.endpoints(s.edge);
        if a == s.special {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// Per-run observations about the selection rule.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuildTrace {
    /// Steps at which the live graph still had a vertex of degree above `k`.
    pub high_degree_steps: usize,
    /// Steps (counted from the first removal) where such a vertex existed but
    /// no special edge had a special endpoint of degree above `k`.
    pub moreover_failures: Vec<usize>,
    /// Steps where the chosen special endpoint had degree above `k`.
    pub high_special_chosen: usize,
}

pub fn build_ordering(g: &MultiGraph, k: usize) -> Result<EdgeOrdering> {
    build_ordering_with(g, k, SelectionPolicy::default()).map(|(o, _)| o)
}

/// Builds the ordering with incremental bookkeeping, `O(m·Δ·log n)` overall.
pub fn build_ordering_with(
    g: &MultiGraph,
    k: usize,
    policy: SelectionPolicy,
) -> Result<(EdgeOrdering, BuildTrace)> {
    let mut st = Peeler::new(g, k);
    let mut removed = Vec::with_capacity(g.m());
    let mut trace = BuildTrace::default();
    for step in 0..g.m() {
        let have_high = st.high_vertices > 0;
        if have_high {
            trace.high_degree_steps += 1;
            if st.qual_high.is_empty() {
                trace.moreover_failures.push(step);
            }
        }
        let u = match policy {
            SelectionPolicy::PreferHighDegree => {
                st.qual_high.first().or(st.qual_low.first()).copied()
            }
            SelectionPolicy::LowestId => match (st.qual_high.first(), st.qual_low.first()) {
                (Some(&a), Some(&b)) => Some(a.min(b)),
                (a, b) => a.or(b).copied(),
            },
        };
        let Some(u) = u else {
            return Err(Error::NotDegenerate {
                k,
                remaining: g.m() - step,
            });
        };
        if st.deg[u] > k {
            trace.high_special_chosen += 1;
        }
        let e = g
            .incident(u)
            .iter()
            .find(|&&(e, w)| st.live.contains(e) && st.deg[w] <= k)
            .map(|&(e, _)| e)
            .expect("qualifying vertex has a live edge to a low-degree vertex");
        st.remove(e);
        removed.push(SpecialEdge { edge: e, special: u });
    }
    removed.reverse();
    Ok((EdgeOrdering { sequence: removed }, trace))
}

/// Live-graph state for the builder, maintained under edge deletion.
struct Peeler<'g> {
    g: &'g MultiGraph,
    k: usize,
    live: EdgeSubset,
    deg: Vec<usize>,
    /// distinct neighbors as `(neighbor, pair id)`
    nbrs: Vec<Vec<(Vertex, usize)>>,
    edge_pair: Vec<usize>,
    pair_mult: Vec<usize>,
    /// distinct live neighbors with degree > k
    hi_nbrs: Vec<usize>,
    /// live incident edges whose other end has degree <= k
    low_edges: Vec<usize>,
    high_vertices: usize,
    qual_high: BTreeSet<Vertex>,
    qual_low: BTreeSet<Vertex>,
    dirty: Vec<Vertex>,
}

impl<'g> Peeler<'g> {
    fn new(g: &'g MultiGraph, k: usize) -> Self {
        let n = g.n();
        let deg: Vec<usize> = (0..n).map(|v| g.incident(v).len()).collect();

        let mut nbrs: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n];
        let mut edge_pair = vec![0; g.m()];
        let mut pair_mult = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for u in 0..n {
            for &(e, w) in g.incident(u) {
                if u > w {
                    continue;
                }
                if slot[w] == usize::MAX {
                    slot[w] = pair_mult.len();
                    pair_mult.push(0);
                    nbrs[u].push((w, slot[w]));
                    nbrs[w].push((u, slot[w]));
                }
                edge_pair[e] = slot[w];
                pair_mult[slot[w]] += 1;
            }
            for &(w, _) in &nbrs[u] {
                if u < w {
                    slot[w] = usize::MAX;
                }
            }
        }

        let hi_nbrs = (0..n)
            .map(|v| nbrs[v].iter().filter(|&&(w, _)| deg[w] > k).count())
            .collect();
        let low_edges = (0..n)
            .map(|v| g.incident(v).iter().filter(|&&(_, w)| deg[w] <= k).count())
            .collect();
        let high_vertices = deg.iter().filter(|&&d| d > k).count();

        let mut st = Peeler {
            g,
            k,
            live: EdgeSubset::full(g),
            deg,
            nbrs,
            edge_pair,
            pair_mult,
            hi_nbrs,
            low_edges,
            high_vertices,
            qual_high: BTreeSet::new(),
            qual_low: BTreeSet::new(),
            dirty: Vec::new(),
        };
        for v in 0..n {
            st.refresh(v);
        }
        st
    }

    fn refresh(&mut self, v: Vertex) {
        self.qual_high.remove(&v);
        self.qual_low.remove(&v);
        if self.deg[v] > 0 && self.hi_nbrs[v] <= self.k && self.low_edges[v] > 0 {
            if self.deg[v] > self.k {
                self.qual_high.insert(v);
            } else {
                self.qual_low.insert(v);
            }
        }
    }

    fn remove(&mut self, e: EdgeId) {
        let k = self.k;
        let [a, b] = self.g.endpoints(e);
        self.live.remove(e);
        // counts below refer to degrees before this removal
        if self.deg[b] <= k {
            self.low_edges[a] -= 1;
        }
        if self.deg[a] <= k {
            self.low_edges[b] -= 1;
        }
        let p = self.edge_pair[e];
        self.pair_mult[p] -= 1;
        if self.pair_mult[p] == 0 {
            if self.deg[b] > k {
                self.hi_nbrs[a] -= 1;
            }
            if self.deg[a] > k {
                self.hi_nbrs[b] -= 1;
            }
        }
        for x in [a, b] {
            self.deg[x] -= 1;
            if self.deg[x] == k {
                self.high_vertices -= 1;
                for i in 0..self.nbrs[x].len() {
                    let (w, p) = self.nbrs[x][i];
                    if self.pair_mult[p] > 0 {
                        self.hi_nbrs[w] -= 1;
                        self.dirty.push(w);
                    }
                }
                for &(f, w) in self.g.incident(x) {
                    if self.live.contains(f) {
                        self.low_edges[w] += 1;
                    }
                }
            }
        }
        self.refresh(a);
        self.refresh(b);
        while let Some(w) = self.dirty.pop() {
            self.refresh(w);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum OrderingVerdict {
    Pass,
    Fail {
        /// 1-based position of the first violation.
        position: usize,
        edge: EdgeId,
        reason: String,
    },
}

impl OrderingVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, OrderingVerdict::Pass)
    }
}

/// Re-checks every prefix from scratch: `u_i` special in `G_i` and `v_i` of
/// degree at most `k` in `G_i`. Shares nothing with the builder's state.
pub fn verify_ordering(g: &MultiGraph, k: usize, ord: &EdgeOrdering) -> Result<OrderingVerdict> {
    let pos = ord.positions(g)?;
    let mut deg = vec![0usize; g.n()];
    for (i, s) in ord.sequence.iter().enumerate() {
        let (u, v) = ord.ends(g, i);
        deg[u] += 1;
        deg[v] += 1;
        if deg[v] > k {
            return Ok(OrderingVerdict::Fail {
                position: i + 1,
                edge: s.edge,
                reason: format!("other endpoint {v} has degree {} > {k} in prefix", deg[v]),
            });
        }
        let mut high: Vec<Vertex> = g
            .incident(u)
            .iter()
            .filter(|&&(f, w)| pos[f] <= i && deg[w] > k)
            .map(|&(_, w)| w)
            .collect();
        high.sort_unstable();
        high.dedup();
        if high.len() > k {
            return Ok(OrderingVerdict::Fail {
                position: i + 1,
                edge: s.edge,
                reason: format!(
                    "vertex {u} has {} neighbors of degree > {k} in prefix",
                    high.len()
                ),
            });
        }
    }
    Ok(OrderingVerdict::Pass)
}

/// One entry of the ordering JSON array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingEntry {
    pub pos: usize,
    pub edge: [u64; 2],
    pub id: EdgeId,
    pub special: u64,
}

pub fn ordering_entries(g: &MultiGraph, ord: &EdgeOrdering) -> Vec<OrderingEntry> {
    ord.sequence
        .iter()
        .enumerate()
        .map(|(i, s)| OrderingEntry {
            pos: i + 1,
            edge: g.labelled_endpoints(s.edge),
            id: s.edge,
            special: g.label(s.special),
        })
        .collect()
}

/// Rebuilds an ordering from its JSON entries, sorted by `pos`.
pub fn ordering_from_entries(g: &MultiGraph, entries: &[OrderingEntry]) -> Result<EdgeOrdering> {
    let mut sorted: Vec<&OrderingEntry> = entries.iter().collect();
    sorted.sort_by_key(|e| e.pos);
    let mut sequence = Vec::with_capacity(sorted.len());
    for (i, e) in sorted.into_iter().enumerate() {
        if e.pos != i + 1 {
            return Err(Error::MalformedOrdering(format!(
                "positions must be 1..=m, found {}",
                e.pos
            )));
        }
        g.check_edge(e.id)
            .map_err(|err| Error::MalformedOrdering(err.to_string()))?;
        let [a, b] = g.endpoints(e.id);
        let special = if g.label(a) == e.special {
            a
        } else if g.label(b) == e.special {
            b
        } else {
            return Err(Error::MalformedOrdering(format!(
                "special vertex {} is not an endpoint of edge {}",
                e.special, e.id
            )));
        };
        sequence.push(SpecialEdge { edge: e.id, special });
    }
    Ok(EdgeOrdering { sequence })
}
