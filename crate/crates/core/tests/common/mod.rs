//! Brute-force oracles and corpus builders shared by the integration tests.
//! Nothing here calls into the library's algorithms except to build graphs.

#![allow(dead_code, clippy::needless_range_loop)]

use strongedge::generators::{generate, saturate_k, Family, GenSpec};
use strongedge::MultiGraph;

/// Conflict relation via an explicit line graph and its square.
pub fn line_graph_square(g: &MultiGraph) -> Vec<Vec<bool>> {
    let m = g.m();
    let e = g.edges();
    let share = |a: usize, b: usize| e[a].iter().any(|x| e[b].contains(x));
    let mut line = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            line[a][b] = a != b && share(a, b);
        }
    }
    let mut sq = line.clone();
    for a in 0..m {
        for b in 0..m {
            if a != b && !sq[a][b] {
                sq[a][b] = (0..m).any(|c| line[a][c] && line[c][b]);
            }
        }
    }
    sq
}

/// Max over nonempty vertex subsets of the minimum induced degree.
pub fn brute_degeneracy(g: &MultiGraph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let min_deg = (0..n)
            .filter(|&v| inside(v))
            .map(|v| {
                g.edges()
                    .iter()
                    .filter(|[a, b]| (*a == v && inside(*b)) || (*b == v && inside(*a)))
                    .count()
            })
            .min()
            .unwrap();
        best = best.max(min_deg);
    }
    best
}

/// Whether every nonempty induced subgraph has a vertex of degree at most k.
pub fn every_subgraph_has_min_degree_at_most(g: &MultiGraph, k: usize) -> bool {
    brute_degeneracy(g) <= k
}

fn is_induced_matching(sq: &[Vec<bool>], block: &[usize]) -> bool {
    block
        .iter()
        .enumerate()
        .all(|(i, &a)| block[i + 1..].iter().all(|&b| !sq[a][b]))
}

/// Strong chromatic index by enumerating every set partition of the edges
/// (restricted growth strings) and keeping the smallest one whose blocks are
/// all induced matchings. Exponential; intended for m <= 10.
pub fn partition_chi(g: &MultiGraph) -> usize {
    let m = g.m();
    assert!(m <= 11, "partition enumeration is for tiny graphs");
    if m == 0 {
        return 0;
    }
    let sq = line_graph_square(g);
    let mut rgs = vec![0usize; m];
    let mut best = usize::MAX;
    loop {
        let blocks = rgs.iter().max().unwrap() + 1;
        if blocks < best {
            let mut groups = vec![Vec::new(); blocks];
            for (e, &b) in rgs.iter().enumerate() {
                groups[b].push(e);
            }
            if groups.iter().all(|grp| is_induced_matching(&sq, grp)) {
                best = blocks;
            }
        }
        // next restricted growth string
        let mut i = m - 1;
        loop {
            if i == 0 {
                return best;
            }
            let cap = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Whether some coloring with `colors` colors is strong, by trying all
/// `colors^m` assignments.
pub fn exists_coloring_with(g: &MultiGraph, colors: usize) -> bool {
    let m = g.m();
    if m == 0 {
        return true;
    }
    if colors == 0 {
        return false;
    }
    let sq = line_graph_square(g);
    let total = (colors as u64).pow(m as u32);
    (0..total).any(|mut code| {
        let mut a = vec![0; m];
        for slot in a.iter_mut() {
            *slot = (code % colors as u64) as usize;
            code /= colors as u64;
        }
        (0..m).all(|x| (x + 1..m).all(|y| !(sq[x][y] && a[x] == a[y])))
    })
}

/// Largest induced matching, by subset enumeration (m <= 20).
pub fn max_induced_matching(g: &MultiGraph) -> usize {
    let m = g.m();
    assert!(m <= 20);
    let sq = line_graph_square(g);
    (0u32..(1 << m))
        .filter(|mask| {
            let set: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            is_induced_matching(&sq, &set)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Deterministic vertex counts spread over `lo..=hi`.
pub fn spread(i: usize, lo: usize, hi: usize) -> usize {
    lo + (i * 7919 + 13) % (hi - lo + 1)
}

pub struct CorpusItem {
    pub name: String,
    pub target_k: usize,
    pub graph: MultiGraph,
}

/// 1000 graphs: for each k in 1..=5, 100 saturated and 100 random
/// k-degenerate graphs with n <= 100. A positive `parallel_prob` turns every
/// graph into a multigraph.
pub fn bound_corpus(parallel_prob: f64) -> Vec<CorpusItem> {
    let mut out = Vec::with_capacity(1000);
    for k in 1..=5 {
        for i in 0..100 {
            let seed = (k * 1000 + i) as u64;
            let n = spread(i, k + 2, 100);
            let sat = saturate_k(
                &GenSpec::new(Family::RandomKDegenerate, n)
                    .k(k)
                    .seed(seed)
                    .parallel_prob(parallel_prob),
            )
            .unwrap();
            out.push(CorpusItem {
                name: format!("saturate k={k} n={n} seed={seed}"),
                target_k: k,
                graph: sat,
            });
            let family = if parallel_prob > 0.0 {
                Family::MultiKDegenerate
            } else {
                Family::RandomKDegenerate
            };
            let rnd = generate(
                &GenSpec::new(family, n)
                    .k(k)
                    .seed(seed + 500)
                    .parallel_prob(parallel_prob),
            )
            .unwrap();
            out.push(CorpusItem {
                name: format!("{family} k={k} n={n} seed={}", seed + 500),
                target_k: k,
                graph: rnd,
            });
        }
    }
    out
}

/// Small random multigraph from a seed: `n` vertices, up to `max_m` edges.
pub fn small_random_graph(seed: u64, n: usize, max_m: usize) -> MultiGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(0..=max_m);
    let mut edges = Vec::new();
    while edges.len() < m && n >= 2 {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a, b));
        }
    }
    MultiGraph::new(n, edges).unwrap()
}
