//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use common::{bound_corpus, CorpusItem};
use strongedge::bench::{run_bench, BenchConfig, Source};
use strongedge::exact::SandwichStatus;
use strongedge::generators::{generate, saturate_k, Family, GenSpec};
use strongedge::{
    audit, bound, build_ordering, color_graph, degeneracy, exact_chi_s, greedy_color, named,
    sandwich_check, verify_ordering, verify_strong_coloring, AuditSummary, MultiGraph,
};

const EXACT_BUDGET: u64 = 50_000_000;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: &[String], detail: String) -> Self {
        match failures.first() {
            None => Outcome { ok: true, detail },
            Some(first) => Outcome {
                ok: false,
                detail: format!("{} failures, first: {first}", failures.len()),
            },
        }
    }
}

fn parallel_groups_distinct(g: &MultiGraph, colors: &[usize]) -> Result<usize, String> {
    let mut by_pair: std::collections::BTreeMap<[usize; 2], Vec<usize>> = Default::default();
    for (e, &[a, b]) in g.edges().iter().enumerate() {
        by_pair.entry([a.min(b), a.max(b)]).or_default().push(e);
    }
    let mut pairs = 0;
    for (p, es) in by_pair {
        for (i, &a) in es.iter().enumerate() {
            for &b in &es[i + 1..] {
                pairs += 1;
                if colors[a] == colors[b] {
                    return Err(format!("parallel edges {a},{b} on {p:?} share color {}", colors[a]));
                }
            }
        }
    }
    Ok(pairs)
}

#[derive(Default)]
struct SweepStats {
    graphs: usize,
    ordering_fail: Vec<String>,
    bound_fail: Vec<String>,
    audit_fail: Vec<String>,
    parallel_fail: Vec<String>,
    parallel_pairs: usize,
    audit_records: usize,
    min_slack: i64,
}

/// Runs the whole pipeline on every corpus graph, checking colorings,
/// orderings, audits, and parallel-edge colors. Duplicated edges raise the
/// degeneracy, so the generator's `k` is only an upper bound for simple graphs.
fn sweep(corpus: &[CorpusItem], simple_graphs: bool) -> SweepStats {
    let mut s = SweepStats { min_slack: i64::MAX, ..Default::default() };
    for item in corpus {
        let g = &item.graph;
        s.graphs += 1;
        let k = degeneracy(g).k;
        if simple_graphs && k > item.target_k {
            s.bound_fail.push(format!("{}: degeneracy {k} above target", item.name));
        }
        let ord = match build_ordering(g, k) {
            Ok(o) => o,
            Err(e) => {
                s.ordering_fail.push(format!("{}: {e}", item.name));
                continue;
            }
        };
        match verify_ordering(g, k, &ord) {
            Ok(v) if v.is_pass() => {}
            other => s.ordering_fail.push(format!("{}: {other:?}", item.name)),
        }
        let c = greedy_color(g, &ord);
        let valid = verify_strong_coloring(g, &c).map(|v| v.is_pass()).unwrap_or(false);
        let b = bound(k, g.max_degree());
        if !valid || (g.m() > 0 && c.colors_used as i64 > b) {
            s.bound_fail.push(format!("{}: valid={valid} colors={} bound={b}", item.name, c.colors_used));
        }
        if g.m() > 0 {
            s.min_slack = s.min_slack.min(b - c.colors_used as i64);
        }
        match audit(g, k, &ord) {
            Ok(recs) => {
                s.audit_records += recs.len();
                let sum = AuditSummary::from_records(&recs);
                if !sum.passed() {
                    let failed: Vec<_> = sum.failures.iter().filter(|f| f.1 > 0).collect();
                    s.audit_fail.push(format!("{}: {failed:?}", item.name));
                }
            }
            Err(e) => s.audit_fail.push(format!("{}: {e}", item.name)),
        }
        match parallel_groups_distinct(g, &c.assignment) {
            Ok(p) => s.parallel_pairs += p,
            Err(e) => s.parallel_fail.push(format!("{}: {e}", item.name)),
        }
    }
    s
}

fn bound_sweep(simple: &SweepStats, secs: f64) -> Outcome {
    let mut failures = simple.bound_fail.clone();
    if simple.graphs != 1000 {
        failures.push(format!("corpus has {} graphs", simple.graphs));
    }
    if secs >= 60.0 {
        failures.push(format!("took {secs:.1}s"));
    }
    Outcome::from_failures(
        &failures,
        format!("{} graphs, min slack {}, {secs:.2}s", simple.graphs, simple.min_slack),
    )
}

fn degeneracy_two() -> Outcome {
    let mut failures = Vec::new();
    let mut graphs = 0;
    let mut seed = 20_000u64;
    while graphs < 300 {
        let n = common::spread(graphs, 4, 100);
        let g = saturate_k(&GenSpec::new(Family::RandomKDegenerate, n).k(2).seed(seed)).unwrap();
        seed += 1;
        if degeneracy(&g).k != 2 {
            continue;
        }
        graphs += 1;
        let (c, _, r) = color_graph(&g, None).unwrap();
        let cap = 6 * g.max_degree() as i64 - 5;
        if !r.valid || c.colors_used as i64 > cap {
            failures.push(format!("seed {}: colors {} > 6Δ-5 = {cap}", seed - 1, c.colors_used));
        }
    }
    Outcome::from_failures(&failures, format!("{graphs} graphs of degeneracy 2"))
}

fn trees() -> Outcome {
    let mut failures = Vec::new();
    for i in 0..100u64 {
        let n = common::spread(i as usize, 2, 100);
        let g = generate(&GenSpec::new(Family::RandomTree, n).seed(30_000 + i)).unwrap();
        if g.m() != n - 1 || degeneracy(&g).k != 1 {
            failures.push(format!("tree seed {i} is not a tree"));
            continue;
        }
        let (c, _, r) = color_graph(&g, None).unwrap();
        if !r.valid || c.colors_used > 2 * g.max_degree() {
            failures.push(format!("tree seed {i}: colors {} > 2Δ", c.colors_used));
        }
    }
    Outcome::from_failures(&failures, "100 random trees".into())
}

fn oracle_sandwich() -> Outcome {
    let mut failures = Vec::new();
    let mut cases: Vec<(String, MultiGraph)> = (0..100u64)
        .map(|s| (format!("random seed {s}"), common::small_random_graph(7_000 + s, 3 + s as usize % 7, 14)))
        .collect();
    let anchors = [
        ("P3", named::path(3), 2),
        ("P4", named::path(4), 3),
        ("C5", named::cycle(5), 5),
        ("K4", named::complete(4), 6),
        ("Petersen", named::petersen(), 5),
    ];
    for (name, g, _) in &anchors {
        cases.push((name.to_string(), g.clone()));
    }
    cases.push(("star5".into(), named::star(5)));
    cases.push(("C7".into(), named::cycle(7)));

    let mut enumerated = 0;
    for (name, g) in &cases {
        let s = match sandwich_check(g, EXACT_BUDGET) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        if s.status != SandwichStatus::Pass {
            failures.push(format!("{name}: {:?}", s));
        }
        if g.m() <= 10 {
            enumerated += 1;
            let brute = common::partition_chi(g);
            if brute != s.exact {
                failures.push(format!("{name}: exact {} but enumeration {brute}", s.exact));
            }
        }
    }
    for (name, g, expect) in &anchors {
        let r = exact_chi_s(g, EXACT_BUDGET);
        if r.timed_out || r.chi_s != *expect {
            failures.push(format!("{name}: exact {} expected {expect}", r.chi_s));
        }
        let witnessed = verify_strong_coloring(g, &r.witness).map(|v| v.is_pass()).unwrap_or(false)
            && r.witness.colors_used == *expect;
        // the lower side: no coloring with one fewer color
        let optimal = if g.m() <= 10 {
            common::partition_chi(g) == *expect && !common::exists_coloring_with(g, expect - 1)
        } else {
            // each color class is an induced matching
            common::max_induced_matching(g) * (expect - 1) < g.m()
        };
        if !witnessed || !optimal {
            failures.push(format!("{name}: brute-force cross-check failed"));
        }
    }
    Outcome::from_failures(
        &failures,
        format!("{} graphs, {enumerated} enumerated, anchors P3=2 P4=3 C5=5 K4=6 Petersen=5", cases.len()),
    )
}

fn multigraphs(multi: &SweepStats) -> Outcome {
    let mut failures: Vec<String> = [
        &multi.ordering_fail,
        &multi.bound_fail,
        &multi.audit_fail,
        &multi.parallel_fail,
    ]
    .into_iter()
    .flatten()
    .cloned()
    .collect();
    if multi.parallel_pairs == 0 {
        failures.push("corpus has no parallel edges".into());
    }
    Outcome::from_failures(
        &failures,
        format!(
            "{} multigraphs, {} parallel pairs, {} audit records",
            multi.graphs, multi.parallel_pairs, multi.audit_records
        ),
    )
}

fn determinism() -> Outcome {
    let mut failures = Vec::new();
    let cfg = |jobs| BenchConfig {
        source: Source::Saturated,
        n: 50,
        k: 3,
        count: 40,
        seed: 9,
        parallel_prob: 0.2,
        jobs,
        exact_budget: None,
        timing: false,
    };
    let a = serde_json::to_string(&run_bench(&cfg(1)).unwrap()).unwrap();
    let b = serde_json::to_string(&run_bench(&cfg(4)).unwrap()).unwrap();
    if a != b {
        failures.push("bench JSON differs between runs".into());
    }
    let g = generate(&GenSpec::new(Family::MultiKDegenerate, 70).k(3).seed(5).parallel_prob(0.3)).unwrap();
    let r1 = serde_json::to_string(&color_graph(&g, None).unwrap().2).unwrap();
    let r2 = serde_json::to_string(&color_graph(&g, None).unwrap().2).unwrap();
    if r1 != r2 {
        failures.push("color report JSON differs".into());
    }
    let cli = || {
        Command::new(env!("CARGO_BIN_EXE_strongedge"))
            .args(["bench", "--family", "multi-k-degenerate", "--n", "40", "--k", "2"])
            .args(["--seed", "3", "--count", "25", "--parallel-prob", "0.2", "--jobs", "3"])
            .output()
            .map(|o| o.stdout)
    };
    match (cli(), cli()) {
        (Ok(x), Ok(y)) if x == y && !x.is_empty() => {}
        (Ok(_), Ok(_)) => failures.push("CLI bench output differs".into()),
        (Err(e), _) | (_, Err(e)) => failures.push(format!("CLI failed to run: {e}")),
    }
    Outcome::from_failures(&failures, "bench, color report, and CLI output byte-identical".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let simple_corpus = bound_corpus(0.0);
    let simple = sweep(&simple_corpus, true);
    let secs = start.elapsed().as_secs_f64();
    let multi = sweep(&bound_corpus(0.2), false);

    let ordering = Outcome::from_failures(
        &simple.ordering_fail,
        format!("{} orderings verified", simple.graphs),
    );
    let audits = Outcome::from_failures(
        &simple.audit_fail,
        format!("{} records, all seven checks", simple.audit_records),
    );

    let results = [
        ("1", "bound sweep", bound_sweep(&simple, secs)),
        ("2", "degeneracy-2 bound 6Δ-5", degeneracy_two()),
        ("3", "trees within 2Δ", trees()),
        ("4", "ordering validity", ordering),
        ("5", "audit suite", audits),
        ("6", "oracle sandwich and anchors", oracle_sandwich()),
        ("7", "multigraph support", multigraphs(&multi)),
        ("8", "determinism", determinism()),
    ];
    let mut all = true;
    for (id, name, o) in &results {
        all &= o.ok;
        println!("[{}] criterion {id}: {name} ({})", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
