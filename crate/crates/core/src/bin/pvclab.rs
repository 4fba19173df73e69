use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pvclab::colorverify::{first_pvck_failure, first_spvc_failure};
use pvclab::graph6::{emit_graph6, parse_graph6};
use pvclab::io::{to_dot, ColoringDocument, ColoringMeta, ProductSidecar};
use pvclab::oracle::{brute, generate, Family, OracleConfig};
use pvclab::products::product;
use pvclab::suite::{run_suite, SuiteOptions, CRITERIA, DEFAULT_MAX_N, DEFAULT_SEED};
use pvclab::theorems::{evaluate_graph, evaluate_product, Prediction, TheoremReport};
use pvclab::{Error, Graph, Parameter, ProductKind, SearchBudget, VertexColoring};

const BUDGET_VAR: &str = "PVCLAB_BUDGET";

#[derive(Parser)]
#[command(name = "pvclab", version, about = "Proper vertex connection numbers of graph joins and products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a join or product of two graph6 graphs.
    Product {
        #[arg(long)]
        kind: ProductKind,
        left: PathBuf,
        right: PathBuf,
        /// Output graph6 file; a sidecar index is written to `<out>.json`.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compute pvc, pvc2 or spvc by closed form, by exhaustive search, or both.
    Compute {
        #[arg(long)]
        param: Parameter,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        input: PathBuf,
        /// Product sidecar; defaults to `<input>.json` when that file exists.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        /// Raise the oracle's order cap.
        #[arg(long)]
        max_order: Option<usize>,
        /// Write the theorem coloring (or the oracle's) as a coloring document.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a coloring document against a graph.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        k: usize,
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the consistency battery and print its JSON report.
    Suite {
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Comma-separated criteria to run.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write a named graph as graph6, e.g. `cycle:5`, `complete_bipartite:2,3`.
    Generate {
        family: Family,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Theorem,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Pvck,
    Spvc,
}

/// A failure with its exit code: 1 verification, 2 input, 3 resource cap.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded(_) | Error::PaletteExhausted(_) => 3,
            Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Product { kind, left, right, out, dot } => {
            cmd_product(kind, &left, &right, out.as_deref(), dot.as_deref())
        }
        Command::Compute { param, method, input, sidecar, max_order, coloring_out, dot } => {
            let outputs = Outputs { coloring: coloring_out, dot };
            cmd_compute(param, method, &input, sidecar, max_order, &outputs)
        }
        Command::Verify { mode, k, graph, coloring, dot } => cmd_verify(mode, k, &graph, &coloring, dot.as_deref()),
        Command::Suite { max_n, seed, only, out } => cmd_suite(max_n, seed, only, out.as_deref()),
        Command::Generate { family, out, dot } => {
            let g = generate(family)?;
            write_graph(&g, out.as_deref())?;
            write_dot(dot.as_deref(), &g, None)
        }
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = read_text(path)?;
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    parse_graph6(line).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write_graph(g: &Graph, out: Option<&Path>) -> CliResult<()> {
    let text = emit_graph6(g);
    match out {
        Some(path) => write_text(path, &format!("{text}\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn write_dot(path: Option<&Path>, g: &Graph, coloring: Option<&VertexColoring>) -> CliResult<()> {
    match path {
        Some(path) => write_text(path, &to_dot(g, coloring)),
        None => Ok(()),
    }
}

fn sidecar_path(graph: &Path) -> PathBuf {
    let mut name = graph.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn search_budget() -> CliResult<SearchBudget> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(SearchBudget::nodes)
            .map_err(|_| Failure::input(format!("{BUDGET_VAR} must be a node count, got `{v}`"))),
        Err(_) => Ok(SearchBudget::default()),
    }
}

fn cmd_product(kind: ProductKind, left: &Path, right: &Path, out: Option<&Path>, dot: Option<&Path>) -> CliResult<()> {
    let (g, h) = (read_graph(left)?, read_graph(right)?);
    let p = product(kind, &g, &h);
    if kind == ProductKind::Direct && g.is_bipartite() && h.is_bipartite() {
        eprintln!("warning: both factors are bipartite, so the direct product is disconnected");
    } else if !p.graph.is_connected() {
        eprintln!("warning: the product is disconnected");
    }
    eprintln!("{kind}: {} vertices, {} edges", p.graph.order(), p.graph.edge_count());
    write_graph(&p.graph, out)?;
    if let Some(out) = out {
        write_text(&sidecar_path(out), &to_json(&ProductSidecar::new(&p, &g, &h)))?;
    }
    write_dot(dot, &p.graph, None)
}

/// Product structure recorded for a graph file, checked against the graph.
fn load_structure(
    input: &Path,
    g: &Graph,
    explicit: Option<PathBuf>,
) -> CliResult<Option<(ProductSidecar, Graph, Graph)>> {
    let path = match explicit {
        Some(path) => path,
        None => {
            let guess = sidecar_path(input);
            if !guess.exists() {
                return Ok(None);
            }
            guess
        }
    };
    let sidecar: ProductSidecar =
        serde_json::from_str(&read_text(&path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let left = parse_graph6(&sidecar.left)?;
    let right = parse_graph6(&sidecar.right)?;
    if !product(sidecar.kind, &left, &right).graph.same_edges(g) {
        return Err(Failure::input(format!("{} does not describe {}", path.display(), input.display())));
    }
    Ok(Some((sidecar, left, right)))
}

fn prediction_json(p: Prediction) -> Value {
    match p {
        Prediction::Exact(v) => json!(v),
        Prediction::Interval { lo, hi } => json!({ "lo": lo, "hi": hi }),
        Prediction::Unknown => json!("unknown"),
    }
}

struct Outputs {
    coloring: Option<PathBuf>,
    dot: Option<PathBuf>,
}

fn cmd_compute(
    param: Parameter,
    method: Method,
    input: &Path,
    sidecar: Option<PathBuf>,
    max_order: Option<usize>,
    outputs: &Outputs,
) -> CliResult<()> {
    let g = read_graph(input)?;
    let mut cfg = OracleConfig { budget: search_budget()?, ..OracleConfig::default() };
    if let Some(n) = max_order {
        cfg = cfg.with_max_order(n);
    }
    let mut output = json!({ "param": param.to_string(), "instance": emit_graph6(&g) });
    let mut report: Option<TheoremReport> = None;
    let mut kind = None;
    if method != Method::Oracle {
        let r = match load_structure(input, &g, sidecar)? {
            Some((s, left, right)) => {
                kind = Some(s.kind);
                output["structure"] = json!({ "kind": s.kind, "left": s.left, "right": s.right });
                evaluate_product(s.kind, &left, &right, param, &cfg)?
            }
            None if param == Parameter::PVC2 => {
                return Err(Failure::input("unknown structure: pvc2 by theorem needs a product sidecar"))
            }
            None => evaluate_graph(&g, param)?,
        };
        output["theorem"] = prediction_json(r.predicted);
        output["theorem_report"] = serde_json::to_value(&r).expect("report serializes");
        report = Some(r);
    }
    let mut oracle_coloring = None;
    if method != Method::Theorem {
        let found = brute(&g, param, &cfg)?;
        output["oracle"] = json!(found.value);
        output["oracle_coloring"] = json!(found.optimal_coloring.as_ref().map(|c| c.colors().to_vec()));
        output["colorings_examined"] = json!(found.colorings_examined);
        oracle_coloring = Some((found.value, found.optimal_coloring));
    }
    let matched = match (&report, &oracle_coloring) {
        (Some(r), Some((value, _))) => Some(r.predicted.contains(*value)),
        _ => None,
    };
    output["match"] = json!(matched);
    println!("{}", to_json(&output));

    let shown = report.as_ref().and_then(|r| r.coloring.clone()).or_else(|| oracle_coloring.clone().and_then(|o| o.1));
    write_dot(outputs.dot.as_deref(), &g, shown.as_ref())?;
    if let (Some(path), Some(c)) = (&outputs.coloring, &shown) {
        let meta = match &report {
            Some(r) => ColoringMeta { theorem_id: Some(r.theorem_id.to_string()), factors: r.inputs.clone(), kind },
            None => ColoringMeta::default(),
        };
        write_text(path, &to_json(&ColoringDocument::new(c, Some(meta))))?;
    }
    if let Some(r) = &report {
        if !r.verified {
            return Err(Failure::verification(format!("{} did not verify: {}", r.theorem_id, r.notes.join("; "))));
        }
    }
    if matched == Some(false) {
        return Err(Failure::verification("theorem and oracle disagree"));
    }
    Ok(())
}

fn cmd_verify(mode: Mode, k: usize, graph: &Path, coloring: &Path, dot: Option<&Path>) -> CliResult<()> {
    let g = read_graph(graph)?;
    let doc: ColoringDocument = serde_json::from_str(&read_text(coloring)?)
        .map_err(|e| Failure::input(format!("{}: {e}", coloring.display())))?;
    let c = doc.to_coloring()?;
    c.check_against(&g)?;
    let failure = match mode {
        Mode::Pvck => first_pvck_failure(&g, &c, k, search_budget()?)?,
        Mode::Spvc => first_spvc_failure(&g, &c)?,
    };
    let mut output = json!({ "mode": if mode == Mode::Pvck { "pvck" } else { "spvc" }, "ok": failure.is_none() });
    if mode == Mode::Pvck {
        output["k"] = json!(k);
    }
    if let Some((u, v)) = failure {
        output["first_failure"] = json!([u, v]);
    }
    println!("{}", to_json(&output));
    write_dot(dot, &g, Some(&c))?;
    match failure {
        None => Ok(()),
        Some((u, v)) => Err(Failure::verification(format!("pair ({u}, {v}) is not properly connected"))),
    }
}

fn cmd_suite(max_n: usize, seed: u64, only: Option<Vec<String>>, out: Option<&Path>) -> CliResult<()> {
    if let Some(bad) = only.iter().flatten().find(|id| !CRITERIA.contains(&id.as_str())) {
        return Err(Failure::input(format!("unknown criterion `{bad}`; known: {}", CRITERIA.join(", "))));
    }
    let report = run_suite(&SuiteOptions { max_n, seed, only })?;
    for id in CRITERIA {
        let prefix = |c: &&pvclab::suite::Check| c.id == id || c.id.starts_with(&format!("{id}/"));
        let total = report.checks.iter().filter(prefix).count();
        if total > 0 {
            let failed = report.checks.iter().filter(prefix).filter(|c| !c.pass).count();
            eprintln!("{id}: {} ({total} checks, {failed} failed)", if failed == 0 { "PASS" } else { "FAIL" });
        }
    }
    let text = to_json(&report);
    match out {
        Some(path) => write_text(path, &text)?,
        None => println!("{text}"),
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::verification(format!("{} of {} checks failed", report.totals.failed, report.totals.checks)))
    }
}
