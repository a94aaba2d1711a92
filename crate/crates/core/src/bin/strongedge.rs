use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use strongedge::audit::{audit, AuditSummary};
use strongedge::bench::{run_bench, BenchConfig, Source};
use strongedge::coloring::{assignment_entries, color_graph, verify_strong_coloring, AssignmentEntry};
use strongedge::exact::exact_chi_s;
use strongedge::generators::GenSpec;
use strongedge::io::{parse_graph, write_canonical};
use strongedge::ordering::{
    build_ordering_with, degeneracy, ordering_entries, ordering_from_entries, verify_ordering,
    EdgeOrdering, OrderingEntry, SelectionPolicy,
};
use strongedge::{ColoringVerdict, MultiGraph, OrderingVerdict, StrongColoring};

/// Strong edge-coloring of k-degenerate multigraphs.
#[derive(Parser)]
#[command(name = "strongedge", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degeneracy and a peeling order witnessing it.
    Degeneracy(Common),
    /// Special-edge ordering as a JSON array.
    Order {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Policy::PreferHigh)]
        policy: Policy,
    },
    /// Full pipeline: ordering, first-fit coloring, verification.
    Color {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check a coloring and/or an ordering against a graph.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Coloring JSON (the `color` output, or any object with `assignment`).
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Ordering JSON (the `order` output).
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Per-position conflict audit of the ordering.
    Audit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: Option<usize>,
        /// Audit this ordering instead of building one.
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Policy::PreferHigh)]
        policy: Policy,
    },
    /// Exact strong chromatic index by branch and bound (small graphs).
    Exact {
        #[command(flatten)]
        common: Common,
        /// Search node budget.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Generate a graph in canonical edge-list format.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a seeded corpus.
    Bench {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also run the exact oracle with this node budget.
        #[arg(long)]
        budget: Option<u64>,
        /// Include per-row wall time (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct Common {
    /// Graph file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    /// random-k-degenerate, path, cycle, complete, star, random-tree,
    /// multi-k-degenerate, or saturate-k
    #[arg(long, default_value = "random-k-degenerate")]
    family: String,
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.0)]
    parallel_prob: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    PreferHigh,
    LowestId,
}

impl From<Policy> for SelectionPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::PreferHigh => SelectionPolicy::PreferHighDegree,
            Policy::LowestId => SelectionPolicy::LowestId,
        }
    }
}

/// Input problems exit with 2, failed checks with 1.
enum Failure {
    Input(String),
    Check(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read_graph(path: Option<&Path>) -> Result<MultiGraph, Failure> {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_graph(&text)?)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str) -> CmdResult {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn emit_json<T: Serialize>(v: &T) -> CmdResult {
    emit(&serde_json::to_string_pretty(v)?)
}

fn resolve_k(g: &MultiGraph, k: Option<usize>) -> usize {
    k.unwrap_or_else(|| degeneracy(g).k)
}

#[derive(Deserialize)]
struct ColoringFile {
    assignment: Vec<ColorEntryIn>,
}

#[derive(Deserialize)]
struct ColorEntryIn {
    id: usize,
    color: usize,
}

fn cmd_degeneracy(c: Common) -> CmdResult {
    let g = read_graph(c.input.as_deref())?;
    let cert = degeneracy(&g);
    match c.format {
        Format::Json => emit_json(&cert),
        Format::Text => emit(&format!(
            "degeneracy {}\npeel order {:?}\n",
            cert.k, cert.peel_order
        )),
    }
}

fn cmd_order(c: Common, k: Option<usize>, policy: Policy) -> CmdResult {
    let g = read_graph(c.input.as_deref())?;
    let k = resolve_k(&g, k);
    let (ord, _) = build_ordering_with(&g, k, policy.into())?;
    let entries = ordering_entries(&g, &ord);
    match c.format {
        Format::Json => emit_json(&entries),
        Format::Text => {
            let mut s = format!("k = {k}\n{:>6} {:>6} {:>14} {:>8}\n", "pos", "id", "edge", "special");
            for e in entries {
                s += &format!(
                    "{:>6} {:>6} {:>14} {:>8}\n",
                    e.pos,
                    e.id,
                    format!("{}-{}", e.edge[0], e.edge[1]),
                    e.special
                );
            }
            emit(&s)
        }
    }
}

fn cmd_color(c: Common, k: Option<usize>) -> CmdResult {
    let g = read_graph(c.input.as_deref())?;
    let (_, _, report) = color_graph(&g, k)?;
    match c.format {
        Format::Json => emit_json(&report)?,
        Format::Text => emit(&format!(
            "n {}  m {}  k {}  max degree {}\ncolors used {}  bound {}  valid {}\n",
            report.n,
            report.m,
            report.k,
            report.max_degree,
            report.colors_used,
            report.bound.map_or("-".into(), |b| b.to_string()),
            report.valid
        ))?,
    }
    if !report.valid {
        return Err(Failure::Check("coloring failed verification".into()));
    }
    if !report.within_bound() {
        return Err(Failure::Check("colors used exceed the bound".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<ColoringVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordering: Option<OrderingVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violating_edges: Option<[[u64; 2]; 2]>,
}

fn cmd_verify(c: Common, coloring: Option<PathBuf>, ordering: Option<PathBuf>, k: Option<usize>) -> CmdResult {
    if coloring.is_none() && ordering.is_none() {
        return Err(Failure::Input("give --coloring and/or --ordering".into()));
    }
    let g = read_graph(c.input.as_deref())?;
    let mut out = VerifyOutput {
        coloring: None,
        ordering: None,
        violating_edges: None,
    };
    if let Some(path) = coloring {
        let file: ColoringFile = read_json(&path)?;
        let col = StrongColoring::from_pairs(g.m(), file.assignment.iter().map(|a| (a.id, a.color)))?;
        let verdict = verify_strong_coloring(&g, &col)?;
        if let ColoringVerdict::Fail { edge, other, .. } = verdict {
            out.violating_edges = Some([g.labelled_endpoints(edge), g.labelled_endpoints(other)]);
        }
        out.coloring = Some(verdict);
    }
    if let Some(path) = ordering {
        let entries: Vec<OrderingEntry> = read_json(&path)?;
        let ord = ordering_from_entries(&g, &entries)?;
        out.ordering = Some(verify_ordering(&g, resolve_k(&g, k), &ord)?);
    }
    match c.format {
        Format::Json => emit_json(&out)?,
        Format::Text => {
            let mut s = String::new();
            if let Some(v) = &out.coloring {
                s += &format!("coloring: {v:?}\n");
            }
            if let Some(v) = &out.ordering {
                s += &format!("ordering: {v:?}\n");
            }
            emit(&s)?
        }
    }
    let failed = out.coloring.as_ref().is_some_and(|v| !v.is_pass())
        || out.ordering.as_ref().is_some_and(|v| !v.is_pass());
    if failed {
        return Err(Failure::Check("verification failed".into()));
    }
    Ok(())
}

fn cmd_audit(c: Common, k: Option<usize>, ordering: Option<PathBuf>, policy: Policy) -> CmdResult {
    let g = read_graph(c.input.as_deref())?;
    let k = resolve_k(&g, k);
    let ord: EdgeOrdering = match ordering {
        Some(p) => ordering_from_entries(&g, &read_json::<Vec<OrderingEntry>>(&p)?)?,
        None => build_ordering_with(&g, k, policy.into())?.0,
    };
    let records = audit(&g, k, &ord)?;
    let summary = AuditSummary::from_records(&records);
    match c.format {
        Format::Json => emit_json(&records)?,
        Format::Text => {
            let mut s = format!(
                "k {k}  max degree {}  positions {}\nmax total {}  max u-side {}  max v-side {}\n",
                g.max_degree(),
                summary.records,
                summary.max_total_conflicts,
                summary.max_u_side,
                summary.max_v_side
            );
            for (name, fails) in &summary.failures {
                s += &format!("  {name:<14} {}\n", if *fails == 0 { "pass".to_string() } else { format!("FAIL x{fails}") });
            }
            emit(&s)?
        }
    }
    if !summary.passed() {
        return Err(Failure::Check(format!("{} audit records failed", summary.failed_records)));
    }
    Ok(())
}

#[derive(Serialize)]
struct ExactOutput {
    chi_s: usize,
    lower_bound: usize,
    timed_out: bool,
    nodes: u64,
    witness: Vec<AssignmentEntry>,
}

fn cmd_exact(c: Common, budget: u64) -> CmdResult {
    let g = read_graph(c.input.as_deref())?;
    if budget == 0 {
        return Err(Failure::Input("--budget must be positive".into()));
    }
    let r = exact_chi_s(&g, budget);
    let out = ExactOutput {
        chi_s: r.chi_s,
        lower_bound: r.lower_bound,
        timed_out: r.timed_out,
        nodes: r.nodes_explored,
        witness: assignment_entries(&g, &r.witness),
    };
    match c.format {
        Format::Json => emit_json(&out),
        Format::Text => emit(&format!(
            "chi_s {}{}  nodes {}\n",
            out.chi_s,
            if out.timed_out {
                format!(" (timed out, lower bound {})", out.lower_bound)
            } else {
                String::new()
            },
            out.nodes
        )),
    }
}

fn gen_spec(a: &GenArgs) -> Result<(Source, GenSpec), Failure> {
    let source = Source::parse(&a.family)?;
    let family = match source {
        Source::Family(f) => f,
        Source::Saturated => strongedge::Family::RandomKDegenerate,
    };
    let spec = GenSpec::new(family, a.n)
        .k(a.k)
        .seed(a.seed)
        .parallel_prob(a.parallel_prob);
    Ok((source, spec))
}

fn cmd_gen(a: GenArgs, output: Option<PathBuf>) -> CmdResult {
    let (source, spec) = gen_spec(&a)?;
    let g = source.build(&spec)?;
    let text = write_canonical(&g);
    match output {
        Some(p) => fs::write(&p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => emit(&text)?,
    }
    Ok(())
}

fn cmd_bench(a: GenArgs, count: usize, jobs: usize, budget: Option<u64>, timing: bool, format: Format) -> CmdResult {
    let (source, spec) = gen_spec(&a)?;
    let cfg = BenchConfig {
        source,
        n: spec.n,
        k: spec.k,
        count,
        seed: spec.seed,
        parallel_prob: spec.parallel_prob,
        jobs,
        exact_budget: budget,
        timing,
    };
    let report = run_bench(&cfg)?;
    match format {
        Format::Json => emit_json(&report)?,
        Format::Text => emit(&report.to_text())?,
    }
    if !report.passed() {
        return Err(Failure::Check(format!("{} rows failed", report.summary.failures)));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Command::Degeneracy(c) => cmd_degeneracy(c),
        Command::Order { common, k, policy } => cmd_order(common, k, policy),
        Command::Color { common, k } => cmd_color(common, k),
        Command::Verify {
            common,
            coloring,
            ordering,
            k,
        } => cmd_verify(common, coloring, ordering, k),
        Command::Audit {
            common,
            k,
            ordering,
            policy,
        } => cmd_audit(common, k, ordering, policy),
        Command::Exact { common, budget } => cmd_exact(common, budget),
        Command::Gen { gen, output } => cmd_gen(gen, output),
        Command::Bench {
            gen,
            count,
            jobs,
            budget,
            timing,
            format,
        } => cmd_bench(gen, count, jobs, budget, timing, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("strongedge: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("strongedge: {msg}");
            ExitCode::from(2)
        }
    }
}
