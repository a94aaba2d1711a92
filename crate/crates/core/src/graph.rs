//! Undirected loopless multigraphs with dense vertex and edge ids.
//!
//! A [`MultiGraph`] is immutable once built. Prefix subgraphs used during
//! ordering and auditing are expressed as an [`EdgeSubset`] over a fixed
//! graph rather than as new graphs.

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    adj: Vec<Vec<(EdgeId, Vertex)>>,
    labels: Option<Vec<u64>>,
}

impl MultiGraph {
    /// Builds a graph on vertices `0..n`. Edge ids follow iteration order.
    /// Repeated pairs become parallel edges; loops are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let id = list.len();
            list.push([u, v]);
            adj[u].push((id, v));
            adj[v].push((id, u));
        }
        Ok(MultiGraph {
            n,
            edges: list,
            adj,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        MultiGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Attaches external labels (one per vertex) used when printing edges.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Invalid(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> [Vertex; 2] {
        self.edges[e]
    }

    pub fn edges(&self) -> &[[Vertex; 2]] {
        &self.edges
    }

    /// `(edge, other endpoint)` pairs at `v`, in edge-id order.
    #[inline]
    pub fn incident(&self, v: Vertex) -> &[(EdgeId, Vertex)] {
        &self.adj[v]
    }

    pub fn label(&self, v: Vertex) -> u64 {
        match &self.labels {
            Some(l) => l[v],
            None => v as u64,
        }
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// Endpoints of `e` translated to external labels.
    pub fn labelled_endpoints(&self, e: EdgeId) -> [u64; 2] {
        let [u, v] = self.edges[e];
        [self.label(u), self.label(v)]
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge: e, m: self.m() })
        }
    }

    /// Degree with parallel edges counted by multiplicity.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of edges of `live` incident to `v`.
    pub fn restricted_degree(&self, live: &EdgeSubset, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].iter().filter(|(e, _)| live.contains(*e)).count())
    }

    /// Distinct neighbors of `v`, ascending.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.adj[v].iter().map(|&(_, w)| w).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Every edge within distance one of `e` in the whole graph, ascending,
    /// excluding `e` itself. Parallel copies of `e` are included.
    pub fn conflict_set(&self, e: EdgeId) -> Result<Vec<EdgeId>> {
        self.check_edge(e)?;
        let mut seen = vec![false; self.m()];
        let mut out = Vec::new();
        self.for_each_conflict(e, &mut seen, |f| out.push(f));
        out.sort_unstable();
        Ok(out)
    }

    /// Calls `f` once per conflicting edge. `seen` must have length `m` and be
    /// all-false on entry; it is restored to all-false on return.
    pub(crate) fn for_each_conflict<F: FnMut(EdgeId)>(
        &self,
        e: EdgeId,
        seen: &mut [bool],
        mut f: F,
    ) {
        let mut touched = Vec::new();
        seen[e] = true;
        touched.push(e);
        for end in self.edges[e] {
            for &(via, w) in &self.adj[end] {
                if !seen[via] {
                    seen[via] = true;
                    touched.push(via);
                    f(via);
                }
                // edges at w are reached through `via`
                for &(g, _) in &self.adj[w] {
                    if !seen[g] {
                        seen[g] = true;
                        touched.push(g);
                        f(g);
                    }
                }
            }
        }
        for t in touched {
            seen[t] = false;
        }
    }
}

/// A set of edge ids of one fixed graph, such as the prefix subgraph `G_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSubset {
    member: Vec<bool>,
    len: usize,
}

impl EdgeSubset {
    pub fn empty(g: &MultiGraph) -> Self {
        EdgeSubset {
            member: vec![false; g.m()],
            len: 0,
        }
    }

    pub fn full(g: &MultiGraph) -> Self {
        EdgeSubset {
            member: vec![true; g.m()],
            len: g.m(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(g: &MultiGraph, edges: I) -> Result<Self> {
        let mut s = Self::empty(g);
        for e in edges {
            g.check_edge(e)?;
            s.insert(e);
        }
        Ok(s)
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.member.get(e).copied().unwrap_or(false)
    }

    /// Returns whether `e` was newly added. Panics if `e` is out of range.
    pub fn insert(&mut self, e: EdgeId) -> bool {
        let was = std::mem::replace(&mut self.member[e], true);
        if !was {
            self.len += 1;
        }
        !was
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        let was = std::mem::replace(&mut self.member[e], false);
        if was {
            self.len -= 1;
        }
        was
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(e, &b)| b.then_some(e))
    }
}

/// Small named graphs used across tests and examples.
pub mod named {
    use super::MultiGraph;

    pub fn path(n: usize) -> MultiGraph {
        MultiGraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> MultiGraph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> MultiGraph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        MultiGraph::new(n, edges).unwrap()
    }

    /// Center 0 joined to leaves `1..=leaves`.
    pub fn star(leaves: usize) -> MultiGraph {
        MultiGraph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn petersen() -> MultiGraph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        MultiGraph::new(10, edges).unwrap()
    }
}
