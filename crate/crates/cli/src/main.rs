use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use excessive_core::analysis::{Analyzer, CoherenceReport, CompatibilityReport};
use excessive_core::excessive::{check_covering, unbounded_m, ResultChecks};
use excessive_core::graph::{parse_edge_list, parse_graph6};
use excessive_core::oracle::{self, SweepConfig};
use excessive_core::{
    Budget, Covering, Error, IndexResult, IndexSolver, IndexValue, Rule, SimpleGraph,
};

mod render;

const FORMAT_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "excessive",
    version,
    about = "Excessive [l,m]-factorizations of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the excessive [l,m]-index of a graph.
    Index(IndexArgs),
    /// Compatibility and coherence reports.
    Analyze(AnalyzeArgs),
    /// Compare every route against the brute-force oracle on small graphs.
    Sweep(SweepArgs),
    /// Draw a graph and a covering as Graphviz DOT.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Exc,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Exc => "exc",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Args)]
struct IndexArgs {
    /// Edge list (.el) or graph6 (.g6) file.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    l: usize,
    /// Upper matching size, or `inf`.
    #[arg(long, value_parser = parse_upper)]
    m: Upper,
    #[arg(long, value_enum, default_value = "formula")]
    method: Method,
    /// Time budget for each exact search, in milliseconds.
    #[arg(long, default_value_t = 10_000)]
    budget_ms: u64,
    /// Include the covering in the output.
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Report com(G) and the compatibility function.
    #[arg(long)]
    compat: bool,
    #[arg(long, default_value_t = 6)]
    max_m: usize,
    /// Print the compatibility function as `m,f` CSV instead of JSON.
    #[arg(long, requires = "compat")]
    csv: bool,
    /// Report [l,m]-coherence; needs --l and --m.
    #[arg(long, requires_all = ["l", "m"])]
    coherence: bool,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    budget_ms: u64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 5)]
    max_vertices: usize,
    #[arg(long, default_value_t = 5)]
    max_m: usize,
    #[arg(long, default_value_t = SweepConfig::default().seed)]
    seed: u64,
    /// Random graphs per vertex count beyond the exhaustive range.
    #[arg(long, default_value_t = SweepConfig::default().samples_per_size)]
    samples: usize,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    graph: PathBuf,
    /// JSON covering, either bare or as printed by `index --witness`.
    #[arg(long)]
    witness: PathBuf,
}

#[derive(Clone, Copy)]
enum Upper {
    Finite(usize),
    Unbounded,
}

fn parse_upper(s: &str) -> Result<Upper, String> {
    match s {
        "inf" | "infinity" => Ok(Upper::Unbounded),
        _ => s
            .parse()
            .map(Upper::Finite)
            .map_err(|_| format!("expected a natural number or `inf`, got `{s}`")),
    }
}

/// Failure modes, each with its own exit status.
enum Failure {
    Input(String),
    Budget {
        during: &'static str,
        bracket: Option<(usize, usize)>,
    },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(during) => Failure::Budget {
                during,
                bracket: None,
            },
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Index(a) => cmd_index(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Render(a) => cmd_render(a),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget { during, bracket }) => {
            eprintln!("error: time budget exceeded during {during}");
            let mut report = serde_json::json!({
                "format_version": FORMAT_VERSION,
                "status": "budget_exceeded",
                "during": during,
            });
            if let Some((lo, hi)) = bracket {
                eprintln!("chromatic index lies in [{lo}, {hi}]");
                report["chromatic_index_bracket"] = serde_json::json!([lo, hi]);
            }
            emit(&format!("{report}\n"));
            ExitCode::from(3)
        }
    }
}

fn emit(text: &str) {
    let mut out = io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn emit_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("output types serialize");
    emit(&format!("{text}\n"));
}

fn load_graph(path: &Path) -> Result<SimpleGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let parsed = match path.extension().and_then(|x| x.to_str()) {
        Some("g6") | Some("graph6") => parse_graph6(&text),
        _ => parse_edge_list(&text),
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Turns a budget failure into one that carries the Vizing bracket `[Δ, Δ+1]`.
fn with_bracket(g: &SimpleGraph) -> impl Fn(Error) -> Failure + '_ {
    move |e| match e {
        Error::BudgetExceeded(during) => {
            let d = g.max_degree();
            Failure::Budget {
                during,
                bracket: Some((d, d + 1)),
            }
        }
        other => other.into(),
    }
}

#[derive(Serialize)]
struct IndexOutput<'a> {
    format_version: u32,
    method: &'static str,
    l: usize,
    m: usize,
    chromatic_index: usize,
    value: IndexValue,
    rule: Rule,
    witness: Option<&'a Covering>,
    checks: ResultChecks,
}

fn cmd_index(a: IndexArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let m = match a.m {
        Upper::Finite(m) => m,
        Upper::Unbounded => unbounded_m(&g, a.l),
    };
    let budget = Budget::from_millis(a.budget_ms);
    let solver = IndexSolver::new(&g, &budget).map_err(with_bracket(&g))?;
    let result: IndexResult = match a.method {
        Method::Formula => solver.lm_index(a.l, m),
        Method::Exc => solver.exc(a.l, m),
        Method::Oracle => {
            if a.l == 0 || a.l > m {
                Err(Error::Parameter(format!(
                    "need 1 <= l <= m, got l = {}, m = {m}",
                    a.l
                )))
            } else {
                oracle::min_cover_bruteforce(&g, a.l, m)
            }
        }
    }
    .map_err(with_bracket(&g))?;

    let checks = solver.checks(&result, a.l, m);
    if !checks.verified {
        return Err(Failure::Input(format!(
            "computed witness failed verification (l = {}, m = {m})",
            a.l
        )));
    }
    emit_json(&IndexOutput {
        format_version: FORMAT_VERSION,
        method: a.method.name(),
        l: a.l,
        m,
        chromatic_index: solver.chromatic_index(),
        value: result.value(),
        rule: result.rule(),
        witness: if a.witness { result.witness() } else { None },
        checks,
    });
    Ok(match result.value() {
        IndexValue::Finite(_) => ExitCode::SUCCESS,
        IndexValue::Infinite => ExitCode::from(2),
    })
}

#[derive(Serialize)]
struct AnalyzeOutput {
    format_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    compatibility: Option<CompatibilityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coherence: Option<CoherenceReport>,
}

fn cmd_analyze(a: AnalyzeArgs) -> CmdResult {
    if !a.compat && !a.coherence {
        return Err(Failure::Input(
            "nothing to do: pass --compat and/or --coherence".into(),
        ));
    }
    let g = load_graph(&a.graph)?;
    let budget = Budget::from_millis(a.budget_ms);
    let analyzer = Analyzer::new(&g, &budget).map_err(with_bracket(&g))?;

    let compatibility = if a.compat {
        Some(
            analyzer
                .compatibility_report(a.max_m)
                .map_err(with_bracket(&g))?,
        )
    } else {
        None
    };
    if a.csv {
        emit(&compatibility.expect("--csv requires --compat").to_csv());
        return Ok(ExitCode::SUCCESS);
    }
    let coherence = match (a.coherence, a.l, a.m) {
        (true, Some(l), Some(m)) => {
            Some(analyzer.coherence_report(l, m).map_err(with_bracket(&g))?)
        }
        _ => None,
    };
    emit_json(&AnalyzeOutput {
        format_version: FORMAT_VERSION,
        compatibility,
        coherence,
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(a: SweepArgs) -> CmdResult {
    let cfg = SweepConfig {
        max_vertices: a.max_vertices,
        max_m: a.max_m,
        seed: a.seed,
        samples_per_size: a.samples,
    };
    let found = oracle::small_graph_sweep(&cfg)?;
    let mut text = String::new();
    for d in &found {
        let mut record = serde_json::to_value(d).expect("discrepancies serialize");
        record["format_version"] = FORMAT_VERSION.into();
        text.push_str(&record.to_string());
        text.push('\n');
    }
    emit(&text);
    Ok(if found.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_render(a: RenderArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let text = fs::read_to_string(&a.witness)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", a.witness.display())))?;
    let mut json: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", a.witness.display())))?;
    if let Some(inner) = json.get_mut("witness") {
        json = inner.take();
    }
    let cover: Covering = serde_json::from_value(json)
        .map_err(|e| Failure::Input(format!("{}: not a covering: {e}", a.witness.display())))?;
    check_covering(&g, &cover, 0, g.edge_count().max(1))
        .map_err(|d| Failure::Input(format!("witness rejected: {d}")))?;
    emit(&render::to_dot(&g, &cover));
    Ok(ExitCode::SUCCESS)
}
