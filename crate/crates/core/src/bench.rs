//! Batch evaluation of seeded corpora.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::audit::{audit, AuditSummary};
use crate::coloring::color_graph;
use crate::error::{Error, Result};
use crate::exact::exact_chi_s;
use crate::generators::{generate, saturate_k, Family, GenSpec};
use crate::graph::MultiGraph;
use crate::ordering::{degeneracy, verify_ordering};

/// A corpus source: one of the generator families, or the saturated
/// construction with exact degeneracy `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Family(Family),
    Saturated,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Family(f) => f.name(),
            Source::Saturated => "saturate-k",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "saturate-k" {
            Ok(Source::Saturated)
        } else {
            s.parse().map(Source::Family)
        }
    }

    pub fn build(self, spec: &GenSpec) -> Result<MultiGraph> {
        match self {
            Source::Family(_) => generate(spec),
            Source::Saturated => saturate_k(spec),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub source: Source,
    pub n: usize,
    pub k: usize,
    pub count: usize,
    pub seed: u64,
    pub parallel_prob: f64,
    pub jobs: usize,
    /// Node budget for the exact oracle; `None` skips it.
    pub exact_budget: Option<u64>,
    /// Record wall time per row. Off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            source: Source::Family(Family::RandomKDegenerate),
            n: 60,
            k: 2,
            count: 10,
            seed: 1,
            parallel_prob: 0.0,
            jobs: 1,
            exact_budget: None,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRow {
    pub name: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub max_degree: usize,
    pub colors_used: usize,
    pub bound: Option<i64>,
    pub slack: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_timed_out: Option<bool>,
    pub valid: bool,
    pub ordering_valid: bool,
    pub audit_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl RunRow {
    /// Every per-row invariant: valid coloring, valid ordering, clean audit,
    /// nonnegative slack, and greedy no better than exact.
    pub fn ok(&self) -> bool {
        self.valid
            && self.ordering_valid
            && self.audit_pass
            && self.slack.is_none_or(|s| s >= 0)
            && self.exact.is_none_or(|x| self.colors_used >= x)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub rows: usize,
    pub failures: usize,
    pub min_slack: Option<i64>,
    pub max_colors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub source: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub rows: Vec<RunRow>,
    pub summary: RunSummary,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "{:<24} {:>6} {:>6} {:>3} {:>5} {:>7} {:>6} {:>6} {:>6} {:>6}",
            "name", "n", "m", "k", "Δ", "colors", "bound", "slack", "exact", "audit"
        )
        .unwrap();
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        for r in &self.rows {
            write!(
                s,
                "{:<24} {:>6} {:>6} {:>3} {:>5} {:>7} {:>6} {:>6} {:>6} {:>6}",
                r.name,
                r.n,
                r.m,
                r.k,
                r.max_degree,
                r.colors_used,
                opt(r.bound),
                opt(r.slack),
                opt(r.exact.map(|x| x as i64)),
                if r.audit_pass { "pass" } else { "FAIL" }
            )
            .unwrap();
            if let Some(ms) = r.wall_ms {
                write!(s, " {ms:>9.3}ms").unwrap();
            }
            s.push('\n');
        }
        writeln!(
            s,
            "rows={} failures={} min_slack={} max_colors={}",
            self.summary.rows,
            self.summary.failures,
            opt(self.summary.min_slack),
            self.summary.max_colors
        )
        .unwrap();
        s
    }
}

/// Full analysis of one graph at its computed degeneracy.
pub fn evaluate(name: String, seed: u64, g: &MultiGraph, exact_budget: Option<u64>) -> Result<RunRow> {
    let start = Instant::now();
    let k = degeneracy(g).k;
    let (_, ord, report) = color_graph(g, Some(k))?;
    let ordering_valid = verify_ordering(g, k, &ord)?.is_pass();
    let audit_pass = AuditSummary::from_records(&audit(g, k, &ord)?).passed();
    let ex = exact_budget.map(|b| exact_chi_s(g, b));
    let wall = start.elapsed();
    Ok(RunRow {
        name,
        seed,
        n: g.n(),
        m: g.m(),
        k,
        max_degree: report.max_degree,
        colors_used: report.colors_used,
        bound: report.bound,
        slack: report.bound.map(|b| b - report.colors_used as i64),
        exact: ex.as_ref().filter(|e| !e.timed_out).map(|e| e.chi_s),
        exact_timed_out: ex.as_ref().map(|e| e.timed_out),
        valid: report.valid,
        ordering_valid,
        audit_pass,
        wall_ms: Some(wall.as_secs_f64() * 1e3),
    })
}

pub fn run_bench(cfg: &BenchConfig) -> Result<RunReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Invalid(e.to_string()))?;
    let family = match cfg.source {
        Source::Family(f) => f,
        Source::Saturated => Family::RandomKDegenerate,
    };
    let rows: Vec<RunRow> = pool.install(|| {
        (0..cfg.count)
            .into_par_iter()
            .map(|i| {
                let seed = cfg.seed.wrapping_add(i as u64);
                let spec = GenSpec::new(family, cfg.n)
                    .k(cfg.k)
                    .seed(seed)
                    .parallel_prob(cfg.parallel_prob);
                let g = cfg.source.build(&spec)?;
                let mut row = evaluate(format!("{}-{i}", cfg.source.name()), seed, &g, cfg.exact_budget)?;
                if !cfg.timing {
                    row.wall_ms = None;
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let summary = RunSummary {
        rows: rows.len(),
        failures: rows.iter().filter(|r| !r.ok()).count(),
        min_slack: rows.iter().filter_map(|r| r.slack).min(),
        max_colors: rows.iter().map(|r| r.colors_used).max().unwrap_or(0),
    };
    Ok(RunReport {
        source: cfg.source.name().to_string(),
        n: cfg.n,
        k: cfg.k,
        seed: cfg.seed,
        rows,
        summary,
    })
}
