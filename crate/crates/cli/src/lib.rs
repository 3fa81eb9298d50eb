//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the process exit code, so the binary and the tests share one path.

mod experiment;
mod reproduce;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edge_drs::closed_form::{verify_instance, ClosedFamily, VerifyReport};
use edge_drs::io::{line_graph_dot, to_dot, to_graph_json};
use edge_drs::metric::{
    edge_metric_dimension, metric_dimension, psi, psi_edge, Mode, SearchOptions, SearchResult,
    DEFAULT_BUDGET,
};
use edge_drs::{
    ClosedFormError, DistanceMatrix, GraphError, GraphSpec, LabeledFamilyGraph, MetricError,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEVIATIONS: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "edge-drs",
    version,
    about = "Edge metric dimension and edge doubly resolving sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph as JSON or DOT.
    Generate(GenerateArgs),
    /// Print the vertex or edge distance matrix.
    Distances(GraphArgs),
    /// Metric dimension (vertex) or edge metric dimension.
    Dim(SearchArgs),
    /// Smallest doubly resolving set (vertex or edge version).
    Psi(SearchArgs),
    /// Compare closed-form edge distances with BFS on the line graph.
    Verify(VerifyArgs),
    /// Run the full check battery and write a Markdown report.
    Reproduce(ReproduceArgs),
    /// Tabulate edge dim and psi of generalized Petersen graphs.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Vertex,
    Edge,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Vertex => Mode::Vertex,
            ModeArg::Edge => Mode::EdgeViaLineGraph,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Sunlet,
    Prism,
}

impl From<FamilyArg> for ClosedFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sunlet => ClosedFamily::Sunlet,
            FamilyArg::Prism => ClosedFamily::Prism,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    LineDot,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Leave timing out of the output.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Worker threads for the subset search.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1024))]
    threads: Option<u64>,
    /// Maximum number of subsets tested per search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl LimitArgs {
    fn options(&self, all_optima: bool) -> SearchOptions {
        SearchOptions {
            budget: self.budget,
            all_optima,
            threads: self.threads.map(|t| t as usize),
            ..SearchOptions::default()
        }
    }
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Family specifier (`sunlet:8`, `prism:7`, `cycle:5`, `path:4`, `gp:5:2`) or `file:<path>`.
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Vertex)]
    mode: ModeArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[command(flatten)]
    target: GraphArgs,
    /// Also list every optimal set.
    #[arg(long)]
    all_optima: bool,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Inclusive range `a..b`, or a single value.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    /// Markdown report path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    /// Inclusive range of `n`.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// `all` for every `1 <= k < n/2`, or a fixed `k`.
    #[arg(long, default_value = "all", value_parser = parse_k_rule)]
    k: KRule,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum KRule {
    All,
    Fixed(usize),
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a number: {t:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

fn parse_k_rule(s: &str) -> Result<KRule, String> {
    if s == "all" {
        return Ok(KRule::All);
    }
    match s.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(KRule::Fixed(k)),
        _ => Err(format!("expected `all` or a positive integer, got {s:?}")),
    }
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Compute(_) => EXIT_COMPUTE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => m,
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::InvalidSpec(_)
            | GraphError::ParameterTooSmall { .. }
            | GraphError::ParameterOutOfRange(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<MetricError> for Failure {
    fn from(e: MetricError) -> Self {
        match e {
            MetricError::Graph(g) => g.into(),
            other => Failure::Compute(other.to_string()),
        }
    }
}

impl From<ClosedFormError> for Failure {
    fn from(e: ClosedFormError) -> Self {
        match e {
            ClosedFormError::UnsupportedParameter { .. } => Failure::Usage(e.to_string()),
            ClosedFormError::Graph(g) => g.into(),
            other => Failure::Compute(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(&a, out, err),
        Command::Distances(a) => distances(&a, out),
        Command::Dim(a) => search(&a, false, out),
        Command::Psi(a) => search(&a, true, out),
        Command::Verify(a) => verify(&a, out),
        Command::Reproduce(a) => reproduce::run(&a, out, err),
        Command::Experiment(a) => experiment::run(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn load(spec: &str) -> Result<LabeledFamilyGraph, Failure> {
    let spec: GraphSpec = spec.parse()?;
    Ok(spec.load()?)
}

fn check_mode(g: &LabeledFamilyGraph, mode: Mode) -> Result<(), Failure> {
    if mode == Mode::EdgeViaLineGraph && g.graph.size() < 2 {
        return Err(Failure::Compute(format!(
            "edge mode needs at least 2 edges, graph has {}",
            g.graph.size()
        )));
    }
    Ok(())
}

fn matrix(g: &LabeledFamilyGraph, mode: Mode) -> Result<&DistanceMatrix, Failure> {
    Ok(match mode {
        Mode::Vertex => g.graph.vertex_distances()?,
        Mode::EdgeViaLineGraph => g.graph.line_distances()?,
    })
}

fn element_name(g: &LabeledFamilyGraph, mode: Mode, i: usize) -> String {
    match mode {
        Mode::Vertex => i.to_string(),
        Mode::EdgeViaLineGraph => g.edge_name(i),
    }
}

#[derive(Debug, Serialize)]
struct GraphSummary {
    family: String,
    order: usize,
    size: usize,
}

impl GraphSummary {
    fn of(g: &LabeledFamilyGraph) -> Self {
        GraphSummary {
            family: g.tag.to_string(),
            order: g.graph.order(),
            size: g.graph.size(),
        }
    }
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn generate(a: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = load(&a.graph)?;
    let mut text = match a.format {
        Format::Json => to_graph_json(&g),
        Format::Dot => to_dot(&g),
        Format::LineDot => line_graph_dot(&g)?,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &a.out {
        Some(path) => {
            std::fs::write(path, text)?;
            writeln!(
                err,
                "wrote {} (order {}, size {})",
                path.display(),
                g.graph.order(),
                g.graph.size()
            )?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DistancesReport {
    command: &'static str,
    graph: GraphSummary,
    mode: Mode,
    labels: Vec<String>,
    distances: Vec<Vec<u32>>,
}

fn distances(a: &GraphArgs, out: &mut dyn Write) -> Outcome {
    let g = load(&a.graph)?;
    let mode = a.mode.into();
    check_mode(&g, mode)?;
    let dm = matrix(&g, mode)?;
    let labels: Vec<String> = (0..dm.dim()).map(|i| element_name(&g, mode, i)).collect();
    if a.output.json {
        let report = DistancesReport {
            command: "distances",
            graph: GraphSummary::of(&g),
            mode,
            labels,
            distances: dm.rows().map(<[u32]>::to_vec).collect(),
        };
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
        return Ok(EXIT_OK);
    }
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(2);
    let mut text = format!("{:>width$}", "");
    for l in &labels {
        write!(text, " {l:>width$}").unwrap();
    }
    text.push('\n');
    for (l, row) in labels.iter().zip(dm.rows()) {
        write!(text, "{l:>width$}").unwrap();
        for d in row {
            write!(text, " {d:>width$}").unwrap();
        }
        text.push('\n');
    }
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SearchReport {
    command: &'static str,
    graph: GraphSummary,
    mode: Mode,
    cardinality: usize,
    set: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_optima: Option<Vec<Vec<String>>>,
    subsets_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

fn search(a: &SearchArgs, doubly: bool, out: &mut dyn Write) -> Outcome {
    let t = &a.target;
    let g = load(&t.graph)?;
    let mode: Mode = t.mode.into();
    check_mode(&g, mode)?;
    let opts = a.limits.options(a.all_optima);
    let result: SearchResult = match (doubly, mode) {
        (false, Mode::Vertex) => metric_dimension(&g.graph, &opts)?,
        (false, Mode::EdgeViaLineGraph) => edge_metric_dimension(&g.graph, &opts)?,
        (true, Mode::Vertex) => psi(&g.graph, &opts)?,
        (true, Mode::EdgeViaLineGraph) => psi_edge(&g.graph, &opts)?,
    };
    let names =
        |set: &[usize]| -> Vec<String> { set.iter().map(|&i| element_name(&g, mode, i)).collect() };
    let report = SearchReport {
        command: if doubly { "psi" } else { "dim" },
        graph: GraphSummary::of(&g),
        mode,
        cardinality: result.cardinality,
        set: names(result.best_set.elements()),
        all_optima: result
            .all_optima
            .as_ref()
            .map(|all| all.iter().map(|s| names(s)).collect()),
        subsets_examined: result.subsets_examined,
        elapsed_ms: (!t.output.no_timing).then(|| millis(result.elapsed)),
    };
    if t.output.json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
        return Ok(EXIT_OK);
    }
    let what = match (doubly, mode) {
        (false, Mode::Vertex) => "dim",
        (false, Mode::EdgeViaLineGraph) => "edge dim",
        (true, Mode::Vertex) => "psi",
        (true, Mode::EdgeViaLineGraph) => "edge psi",
    };
    let mut text = String::new();
    writeln!(
        text,
        "graph     {} (order {}, size {})",
        report.graph.family, report.graph.order, report.graph.size
    )
    .unwrap();
    writeln!(text, "{what:<9} {}", report.cardinality).unwrap();
    writeln!(text, "set       {{{}}}", report.set.join(", ")).unwrap();
    if let Some(all) = &report.all_optima {
        writeln!(text, "optima    {}", all.len()).unwrap();
        for s in all {
            writeln!(text, "          {{{}}}", s.join(", ")).unwrap();
        }
    }
    writeln!(text, "examined  {}", report.subsets_examined).unwrap();
    if let Some(ms) = report.elapsed_ms {
        writeln!(text, "elapsed   {ms} ms").unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let family: ClosedFamily = a.family.into();
    let reports =
        a.n.clone()
            .map(|n| verify_instance(family, n))
            .collect::<Result<Vec<VerifyReport>, _>>()?;
    let mut text = String::new();
    for r in &reports {
        if a.output.json {
            writeln!(text, "{}", serde_json::to_string(r)?).unwrap();
            continue;
        }
        writeln!(
            text,
            "{} n={}: {} pairs, {} deviations",
            r.family,
            r.n,
            r.pairs_checked,
            r.deviations.len()
        )
        .unwrap();
        for d in &r.deviations {
            let formula = d
                .formula_value
                .map_or_else(|| "undefined".to_string(), |v| v.to_string());
            writeln!(
                text,
                "  d({}, {}): formula {formula}, BFS {}",
                d.a, d.b, d.bfs_value
            )
            .unwrap();
        }
    }
    out.write_all(text.as_bytes())?;
    if reports.iter().any(|r| !r.deviations.is_empty()) {
        Ok(EXIT_DEVIATIONS)
    } else {
        Ok(EXIT_OK)
    }
}
