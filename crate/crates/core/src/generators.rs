//! Seeded graph families for test corpora.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a given
//! spec always yields the same edge list with this crate's dependency
//! versions. Random families are built by attaching each vertex `i` to some
//! earlier vertices, which witnesses degeneracy at most the attachment count.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{named, MultiGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    RandomKDegenerate,
    Path,
    Cycle,
    Complete,
    Star,
    RandomTree,
    MultiKDegenerate,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::RandomKDegenerate,
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::RandomTree,
        Family::MultiKDegenerate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::RandomKDegenerate => "random-k-degenerate",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::RandomTree => "random-tree",
            Family::MultiKDegenerate => "multi-k-degenerate",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    /// Chance of adding one parallel copy of each edge (multigraph families).
    pub parallel_prob: f64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize) -> Self {
        GenSpec {
            family,
            n,
            k: 1,
            seed: 0,
            parallel_prob: 0.0,
        }
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn parallel_prob(mut self, p: f64) -> Self {
        self.parallel_prob = p;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.parallel_prob) {
            return Err(Error::InvalidSpec(format!(
                "parallel probability {} outside [0, 1]",
                self.parallel_prob
            )));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn generate(spec: &GenSpec) -> Result<MultiGraph> {
    spec.validate()?;
    let n = spec.n;
    let g = match spec.family {
        Family::Path => named::path(n),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidSpec("cycle needs n >= 3".into()));
            }
            named::cycle(n)
        }
        Family::Complete => named::complete(n),
        Family::Star => named::star(n - 1),
        Family::RandomTree => {
            let mut rng = spec.rng();
            let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
            MultiGraph::new(n, edges)?
        }
        Family::RandomKDegenerate => {
            let mut rng = spec.rng();
            MultiGraph::new(n, attach_edges(&mut rng, n, spec.k, false))?
        }
        Family::MultiKDegenerate => {
            let mut rng = spec.rng();
            let edges = attach_edges(&mut rng, n, spec.k, false);
            MultiGraph::new(n, duplicate(&mut rng, edges, spec.parallel_prob))?
        }
    };
    Ok(g)
}

/// Every vertex `i` joins exactly `min(k, i)` earlier vertices, giving
/// degeneracy exactly `k` (the first `k + 1` vertices form a clique).
/// A positive `parallel_prob` adds parallel copies afterwards.
pub fn saturate_k(spec: &GenSpec) -> Result<MultiGraph> {
    spec.validate()?;
    if spec.n <= spec.k {
        return Err(Error::InvalidSpec(format!(
            "saturated construction needs n > k (n = {}, k = {})",
            spec.n, spec.k
        )));
    }
    let mut rng = spec.rng();
    let edges = attach_edges(&mut rng, spec.n, spec.k, true);
    let edges = if spec.parallel_prob > 0.0 {
        duplicate(&mut rng, edges, spec.parallel_prob)
    } else {
        edges
    };
    MultiGraph::new(spec.n, edges)
}

fn attach_edges(rng: &mut ChaCha8Rng, n: usize, k: usize, exact: bool) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for i in 1..n {
        let cap = k.min(i);
        if cap == 0 {
            continue;
        }
        let count = if exact { cap } else { rng.gen_range(1..=cap) };
        let mut picks = sample(rng, i, count).into_vec();
        picks.sort_unstable();
        edges.extend(picks.into_iter().map(|j| (j, i)));
    }
    edges
}

fn duplicate(rng: &mut ChaCha8Rng, edges: Vec<(Vertex, Vertex)>, p: f64) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::with_capacity(edges.len());
    for e in edges {
        out.push(e);
        if p > 0.0 && rng.gen_bool(p) {
            out.push(e);
        }
    }
    out
}
