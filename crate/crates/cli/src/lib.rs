//! Command-line surface over the forecasting engine.
//!
//! Every command is a thin adapter: parse flags, call into
//! `morphocast-core`, format the result. Exit status 0 means success, 1 a
//! domain error (an invariant named in the message failed), 2 a usage
//! error. Outputs are deterministic for identical inputs.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use morphocast_core::aggregate::{
    builtin_addition_candidates, builtin_deletion_candidates, compress_superstructure,
    extend_kernel, kernel, load_candidates_csv, superstructure, AggregatedForecast, Candidate,
    KernelPolicy,
};
use morphocast_core::catalog::{
    builtin_catalog, display_op, display_op_set, load_catalog, Catalog,
};
use morphocast_core::cluster::{
    agglomerate, merges_to_csv, partition_after, partition_to_csv, Linkage, Metric,
};
use morphocast_core::diff::{diff_generations, records_to_csv};
use morphocast_core::forecast::{
    apply_operations, compute_forecast, expert_forecast, pareto_front, scatter_csv, scatter_svg,
    totals_dominate, ApplyStyle, Forecast, ForecastMethod,
};
use morphocast_core::model::{builtin_generations, parse_system, render_tree, SystemModel};
use morphocast_core::reference::{build_ledger, ledger_to_csv, reported_partition, reported_trio};
use morphocast_core::solve::{
    knapsack_solve, load_cover, load_knapsack, load_mckp, mckp_solve, mincover_solve, seeded_cover,
    seeded_knapsack, seeded_mckp, Selection, SelectionStatus, SolveMode,
};
use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Entry point for the binary: real argv, stdout, stderr.
pub fn run_with_stdio() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_from(&argv, &mut out, &mut err)
}

/// Runs the CLI on an explicit argument list and output streams; returns
/// the process exit status (0 success, 1 domain error, 2 usage error).
pub fn run_from(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(parse_error) => {
            let rendered = parse_error.render().to_string();
            return match parse_error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(CliError::Usage(message)) => {
            let _ = writeln!(err, "usage error: {message}");
            2
        }
        Err(CliError::Domain(error)) => {
            let _ = writeln!(err, "error: {error:#}");
            1
        }
    }
}

enum CliError {
    Usage(String),
    Domain(anyhow::Error),
}

impl<E: std::error::Error + Send + Sync + 'static> From<E> for CliError {
    fn from(error: E) -> Self {
        CliError::Domain(anyhow::Error::new(error))
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

type CliResult = Result<(), CliError>;

#[derive(Parser)]
#[command(
    name = "morphocast",
    version,
    about = "Forecasting engine for the evolution of hierarchical modular systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the bundled system generations and the operation catalog
    Fixtures(FixturesArgs),
    /// Show the change records between two bundled generations
    Diff(DiffArgs),
    /// Layer the catalog's operations by priority
    Rank(RankArgs),
    /// Agglomerate the catalog's operations into a dendrogram or partition
    Cluster(ClusterArgs),
    /// Solve a selection instance from a file, or a seeded random demo
    Solve(SolveArgs),
    /// Build a forecast; optionally apply it to a base generation
    Forecast(ForecastArgs),
    /// Compare forecasts by totals: efficient front, CSV, or SVG scatter
    Compare(CompareArgs),
    /// Aggregate forecasts by kernel extension or superstructure compression
    Aggregate(AggregateArgs),
    /// Render a generation or a system document as text or a graph description
    Render(RenderArgs),
    /// Show the discrepancy ledger pairing reported and computed results
    Ledger(LedgerArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    GraphDescription,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Greedy,
    Exact,
    Bruteforce,
}

impl From<ModeArg> for SolveMode {
    fn from(mode: ModeArg) -> SolveMode {
        match mode {
            ModeArg::Greedy => SolveMode::Greedy,
            ModeArg::Exact => SolveMode::Exact,
            ModeArg::Bruteforce => SolveMode::Bruteforce,
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Fixtures(args) => cmd_fixtures(args, out),
        Command::Diff(args) => cmd_diff(args, out),
        Command::Rank(args) => cmd_rank(args, out),
        Command::Cluster(args) => cmd_cluster(args, out),
        Command::Solve(args) => cmd_solve(args, out),
        Command::Forecast(args) => cmd_forecast(args, out),
        Command::Compare(args) => cmd_compare(args, out),
        Command::Aggregate(args) => cmd_aggregate(args, out),
        Command::Render(args) => cmd_render(args, out),
        Command::Ledger(args) => cmd_ledger(args, out),
    }
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(anyhow::anyhow!("reading {}: {e}", path.display())))
}

/// Resolves a bundled generation by name; the draft fourth generation
/// answers to `S4`, `S~4`, and `S̃4`.
fn find_generation(name: &str) -> Result<SystemModel, CliError> {
    let normalized = name.trim().to_uppercase().replace("S̃", "S~");
    let id = match normalized.as_str() {
        "S~4" => "S4",
        other => other,
    };
    builtin_generations()
        .into_iter()
        .find(|generation| generation.id == id)
        .ok_or_else(|| {
            usage(format!(
                "unknown generation {name:?}; expected S1, S2, S3, or S̃4"
            ))
        })
}

fn display_generation_id(id: &str) -> &str {
    if id == "S4" {
        "S̃4"
    } else {
        id
    }
}

fn parse_ops(text: &str) -> Result<BTreeSet<u32>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.parse::<u32>()
                .map_err(|_| usage(format!("operation list entry {part:?} is not a number")))
        })
        .collect()
}

fn status_label(status: SelectionStatus) -> &'static str {
    match status {
        SelectionStatus::Optimal => "optimal",
        SelectionStatus::Greedy => "greedy",
        SelectionStatus::Infeasible => "infeasible",
    }
}

fn ids_cell(ids: &[u32]) -> String {
    ids.iter()
        .map(|id| id.to_string())
        .collect::<Vec<String>>()
        .join(" ")
}

fn plain_ids(ids: &[u32]) -> String {
    let parts: Vec<String> = ids.iter().map(|id| id.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn write_selection_text(selection: &Selection, out: &mut dyn Write) -> CliResult {
    writeln!(out, "status {}", status_label(selection.status))?;
    writeln!(
        out,
        "value {}, load {}",
        selection.total_value, selection.total_load
    )?;
    writeln!(out, "chosen: {}", plain_ids(&selection.chosen))?;
    Ok(())
}

fn write_selection_csv(selection: &Selection, out: &mut dyn Write) -> CliResult {
    writeln!(out, "status,value,load,chosen")?;
    writeln!(
        out,
        "{},{},{},{}",
        status_label(selection.status),
        selection.total_value,
        selection.total_load,
        ids_cell(&selection.chosen)
    )?;
    Ok(())
}

fn reject_formats(format: Format, allowed: &[Format], command: &str) -> CliResult {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<String> = allowed
            .iter()
            .map(|f| {
                f.to_possible_value()
                    .expect("all formats are named")
                    .get_name()
                    .to_string()
            })
            .collect();
        Err(usage(format!(
            "{command} supports --format {}",
            names.join("|")
        )))
    }
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

#[derive(Args)]
struct FixturesArgs {
    /// List the generations and catalog summary (the default behavior)
    #[arg(long)]
    list: bool,
}

fn cmd_fixtures(args: FixturesArgs, out: &mut dyn Write) -> CliResult {
    // Listing is the only behavior; the flag exists for explicitness.
    let _ = args.list;
    for generation in builtin_generations() {
        writeln!(
            out,
            "{:<4} {:<26} {} nodes",
            display_generation_id(&generation.id),
            generation.name,
            generation.node_count()
        )?;
    }
    let catalog = builtin_catalog();
    writeln!(
        out,
        "catalog: {} operations on {} criteria, profit transform c = {} − r",
        catalog.operations.len(),
        catalog.schema.criteria.len(),
        catalog.transform.base
    )?;
    for op in &catalog.operations {
        let prefix = format!("{}: ", display_op(op.id));
        let summary = op.summary.strip_prefix(&prefix).unwrap_or(&op.summary);
        writeln!(
            out,
            "{:<4} priority {}  resource {}  {}",
            display_op(op.id),
            op.priority,
            op.resource,
            summary
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// diff
// ---------------------------------------------------------------------------

#[derive(Args)]
struct DiffArgs {
    /// Earlier generation (S1, S2, S3, or S̃4)
    #[arg(long)]
    from: String,
    /// Later generation
    #[arg(long)]
    to: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_diff(args: DiffArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(args.format, &[Format::Text, Format::Csv], "diff")?;
    let from = find_generation(&args.from)?;
    let to = find_generation(&args.to)?;
    let records = diff_generations(&from, &to);
    match args.format {
        Format::Csv => write!(out, "{}", records_to_csv(&records))?,
        _ => {
            for record in &records {
                writeln!(out, "{record}")?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// rank
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, ValueEnum)]
enum RankMethodArg {
    /// Repeated non-dominated peeling of the estimate vectors
    Peel,
    /// The catalog's stored priority ranks
    Fixture,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long, value_enum, default_value = "peel")]
    method: RankMethodArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_rank(args: RankArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(args.format, &[Format::Text, Format::Csv], "rank")?;
    let catalog = builtin_catalog();
    let method = match args.method {
        RankMethodArg::Peel => morphocast_core::rank::RankMethod::DominancePeeling,
        RankMethodArg::Fixture => morphocast_core::rank::RankMethod::Fixture,
    };
    let layers = morphocast_core::rank::rank_operations(&catalog, method);
    match args.format {
        Format::Csv => write!(out, "{}", morphocast_core::rank::layers_to_csv(&layers))?,
        _ => {
            for (index, layer) in layers.layers.iter().enumerate() {
                writeln!(out, "layer {}: {}", index + 1, display_op_set(layer))?;
            }
            let violations = morphocast_core::rank::consistency_violations(&catalog, &layers);
            if violations.is_empty() {
                writeln!(out, "no dominance inversions")?;
            } else {
                for (better, worse) in violations {
                    writeln!(
                        out,
                        "inversion: {} dominates {} but is ranked below it",
                        display_op(better),
                        display_op(worse)
                    )?;
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// cluster
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    L1,
    L2,
    Linf,
}

#[derive(Clone, Copy, ValueEnum)]
enum LinkageArg {
    Single,
    Complete,
    Average,
}

#[derive(Args)]
struct ClusterArgs {
    #[arg(long, value_enum, default_value = "l1")]
    metric: MetricArg,
    #[arg(long, value_enum, default_value = "single")]
    linkage: LinkageArg,
    /// Show the partition after this many merge steps instead of the
    /// full merge history
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_cluster(args: ClusterArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(args.format, &[Format::Text, Format::Csv], "cluster")?;
    let metric = match args.metric {
        MetricArg::L1 => Metric::L1,
        MetricArg::L2 => Metric::L2,
        MetricArg::Linf => Metric::Linf,
    };
    let linkage = match args.linkage {
        LinkageArg::Single => Linkage::Single,
        LinkageArg::Complete => Linkage::Complete,
        LinkageArg::Average => Linkage::Average,
    };
    let dendrogram = agglomerate(&builtin_catalog(), metric, linkage);
    match args.steps {
        Some(steps) => {
            let partition = partition_after(&dendrogram, steps)?;
            match args.format {
                Format::Csv => write!(out, "{}", partition_to_csv(&partition))?,
                _ => {
                    for (index, cluster) in partition.clusters.iter().enumerate() {
                        writeln!(out, "cluster {}: {}", index + 1, display_op_set(cluster))?;
                    }
                }
            }
        }
        None => match args.format {
            Format::Csv => write!(out, "{}", merges_to_csv(&dendrogram))?,
            _ => {
                for (index, merge) in dendrogram.merges.iter().enumerate() {
                    writeln!(
                        out,
                        "step {}: {} + {} at distance {}",
                        index + 1,
                        display_op_set(&merge.left),
                        display_op_set(&merge.right),
                        merge.distance
                    )?;
                }
            }
        },
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Knapsack,
    Mckp,
    Cover,
}

#[derive(Args)]
struct SolveArgs {
    /// Which selection problem the instance encodes
    #[arg(value_enum)]
    problem: ProblemArg,
    /// JSON instance file
    #[arg(long, conflicts_with = "seed")]
    instance: Option<PathBuf>,
    /// Run a seeded random demo instead: generate an instance, solve it
    /// with every route, and report whether they agree
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_solve(args: SolveArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(args.format, &[Format::Text, Format::Csv], "solve")?;
    match (&args.instance, args.seed) {
        (Some(path), None) => {
            let document = read_file(path)?;
            let selection = match args.problem {
                ProblemArg::Knapsack => {
                    knapsack_solve(&load_knapsack(&document)?, args.mode.into())
                }
                ProblemArg::Mckp => mckp_solve(&load_mckp(&document)?, args.mode.into()),
                ProblemArg::Cover => mincover_solve(&load_cover(&document)?, args.mode.into()),
            }?;
            match args.format {
                Format::Csv => write_selection_csv(&selection, out),
                _ => write_selection_text(&selection, out),
            }
        }
        (None, Some(seed)) => solve_demo(args.problem, seed, args.format, out),
        _ => Err(usage("solve needs exactly one of --instance or --seed")),
    }
}

fn solve_demo(problem: ProblemArg, seed: u64, format: Format, out: &mut dyn Write) -> CliResult {
    let routes = [SolveMode::Greedy, SolveMode::Exact, SolveMode::Bruteforce];
    let route_names = ["greedy", "exact", "bruteforce"];
    let (instance_json, selections) = match problem {
        ProblemArg::Knapsack => {
            let instance = seeded_knapsack(seed, 15);
            let selections: Result<Vec<Selection>, _> = routes
                .iter()
                .map(|mode| knapsack_solve(&instance, *mode))
                .collect();
            (serde_json::to_string(&instance)?, selections?)
        }
        ProblemArg::Mckp => {
            let instance = seeded_mckp(seed, 5);
            let selections: Result<Vec<Selection>, _> = routes
                .iter()
                .map(|mode| mckp_solve(&instance, *mode))
                .collect();
            (serde_json::to_string(&instance)?, selections?)
        }
        ProblemArg::Cover => {
            let instance = seeded_cover(seed, 15);
            let selections: Result<Vec<Selection>, _> = routes
                .iter()
                .map(|mode| mincover_solve(&instance, *mode))
                .collect();
            (serde_json::to_string(&instance)?, selections?)
        }
    };
    let agree = selections[1] == selections[2];
    match format {
        Format::Csv => {
            writeln!(out, "route,status,value,load,chosen")?;
            for (name, selection) in route_names.iter().zip(&selections) {
                writeln!(
                    out,
                    "{name},{},{},{},{}",
                    status_label(selection.status),
                    selection.total_value,
                    selection.total_load,
                    ids_cell(&selection.chosen)
                )?;
            }
        }
        _ => {
            writeln!(out, "instance (seed {seed}): {instance_json}")?;
            for (name, selection) in route_names.iter().zip(&selections) {
                writeln!(
                    out,
                    "{name:<10} status {:<10} value {:<3} load {:<3} chosen {}",
                    status_label(selection.status),
                    selection.total_value,
                    selection.total_load,
                    plain_ids(&selection.chosen)
                )?;
            }
            writeln!(
                out,
                "exact matches brute force: {}",
                if agree { "yes" } else { "NO" }
            )?;
        }
    }
    if agree {
        Ok(())
    } else {
        Err(CliError::Domain(anyhow::anyhow!(
            "exact and brute-force selections disagree on seed {seed}"
        )))
    }
}

// ---------------------------------------------------------------------------
// forecast
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, ValueEnum)]
enum ForecastKindArg {
    Expert,
    Knapsack,
    Mckp,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApplyArg {
    Contributions,
    Overlay,
}

#[derive(Args)]
struct ForecastArgs {
    /// How the operation set is chosen
    #[arg(value_enum)]
    kind: ForecastKindArg,
    /// Resource budget (knapsack and mckp)
    #[arg(long)]
    budget: Option<u64>,
    /// Comma-separated operation ids (expert)
    #[arg(long)]
    ops: Option<String>,
    /// Label for an expert forecast
    #[arg(long, default_value = "expert")]
    label: String,
    /// JSON file with an array of operation-id groups (mckp); defaults
    /// to the bundled partition
    #[arg(long)]
    partition: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Apply the forecast to a base generation and print the resulting
    /// structure instead of the operation set
    #[arg(long, value_enum)]
    apply: Option<ApplyArg>,
    /// Base generation for --apply
    #[arg(long, default_value = "S3")]
    base: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_forecast(args: ForecastArgs, out: &mut dyn Write) -> CliResult {
    let catalog = builtin_catalog();
    let forecast = match args.kind {
        ForecastKindArg::Expert => {
            let ops_text = args
                .ops
                .as_deref()
                .ok_or_else(|| usage("forecast expert needs --ops"))?;
            expert_forecast(&catalog, &args.label, parse_ops(ops_text)?)?
        }
        ForecastKindArg::Knapsack => {
            let budget = args
                .budget
                .ok_or_else(|| usage("forecast knapsack needs --budget"))?;
            compute_forecast(
                &catalog,
                &ForecastMethod::Knapsack { budget },
                args.mode.into(),
            )?
        }
        ForecastKindArg::Mckp => {
            let budget = args
                .budget
                .ok_or_else(|| usage("forecast mckp needs --budget"))?;
            let partition = match &args.partition {
                Some(path) => serde_json::from_str::<Vec<BTreeSet<u32>>>(&read_file(path)?)?,
                None => reported_partition().clusters,
            };
            compute_forecast(
                &catalog,
                &ForecastMethod::Mckp { partition, budget },
                args.mode.into(),
            )?
        }
    };
    match args.apply {
        Some(style) => {
            reject_formats(
                args.format,
                &[Format::Text, Format::GraphDescription],
                "forecast --apply",
            )?;
            let base = find_generation(&args.base)?;
            let style = match style {
                ApplyArg::Contributions => ApplyStyle::Contributions,
                ApplyArg::Overlay => ApplyStyle::Overlay,
            };
            let result = apply_operations(&base, &forecast, &catalog, style)?;
            let format_name = match args.format {
                Format::GraphDescription => "graph-description",
                _ => "text",
            };
            write!(out, "{}", render_tree(&result, format_name)?)?;
        }
        None => {
            reject_formats(args.format, &[Format::Text, Format::Csv], "forecast")?;
            match args.format {
                Format::Csv => {
                    writeln!(out, "id,profit,resource")?;
                    for id in &forecast.operations {
                        let op = catalog.get(*id)?;
                        writeln!(out, "{id},{},{}", catalog.profit_of(*id)?, op.resource)?;
                    }
                }
                _ => {
                    writeln!(
                        out,
                        "{} = {} {}",
                        forecast.label,
                        display_op_set(&forecast.operations),
                        forecast.totals
                    )?;
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

#[derive(Args)]
struct CompareArgs {
    /// Extra or replacement forecasts as LABEL=1,2,3; repeatable.
    /// Without any, the three bundled reference forecasts are compared
    #[arg(long = "set")]
    sets: Vec<String>,
    /// Keep only the efficient front
    #[arg(long)]
    front_only: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_compare(args: CompareArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(
        args.format,
        &[Format::Text, Format::Csv, Format::Svg],
        "compare",
    )?;
    let catalog = builtin_catalog();
    let forecasts: Vec<Forecast> = if args.sets.is_empty() {
        reported_trio(&catalog)?
    } else {
        args.sets
            .iter()
            .map(|spec| {
                let (label, ops_text) = spec
                    .split_once('=')
                    .ok_or_else(|| usage(format!("--set {spec:?} is not LABEL=1,2,3")))?;
                Ok(expert_forecast(&catalog, label, parse_ops(ops_text)?)?)
            })
            .collect::<Result<Vec<Forecast>, CliError>>()?
    };
    let shown: Vec<Forecast> = if args.front_only {
        pareto_front(&forecasts)
    } else {
        forecasts.clone()
    };
    match args.format {
        Format::Svg => write!(out, "{}", scatter_svg(&shown))?,
        Format::Csv => write!(out, "{}", scatter_csv(&shown))?,
        _ => {
            for forecast in &shown {
                let dominated = forecasts
                    .iter()
                    .any(|other| totals_dominate(other.totals, forecast.totals));
                writeln!(
                    out,
                    "{:<4} profit {:<3} resource {:<3} {}",
                    forecast.label,
                    forecast.totals.profit,
                    forecast.totals.resource,
                    if dominated { "dominated" } else { "efficient" }
                )?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// aggregate
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    /// Strategy I: extend a kernel with budgeted additions
    Extend,
    /// Strategy II: compress the superstructure with covering deletions
    Compress,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Intersection,
    Majority,
}

#[derive(Args)]
struct AggregateArgs {
    #[arg(value_enum)]
    strategy: StrategyArg,
    /// Budget (extend) or deletion threshold (compress)
    #[arg(long)]
    budget: u64,
    /// Explicit kernel as comma-separated operation ids (extend)
    #[arg(long, conflicts_with = "policy")]
    kernel: Option<String>,
    /// Kernel policy over the bundled reference forecasts (extend)
    #[arg(long, value_enum, default_value = "intersection")]
    policy: PolicyArg,
    /// Candidate table CSV (id,priority,weight); defaults to the bundled
    /// table for the chosen strategy
    #[arg(long)]
    candidates: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_aggregate(args: AggregateArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(args.format, &[Format::Text, Format::Csv], "aggregate")?;
    let catalog = builtin_catalog();
    let trio = reported_trio(&catalog)?;
    let candidates: Vec<Candidate> = match &args.candidates {
        Some(path) => load_candidates_csv(&read_file(path)?)?,
        None => match args.strategy {
            StrategyArg::Extend => builtin_addition_candidates(),
            StrategyArg::Compress => builtin_deletion_candidates(),
        },
    };
    let (result, start_name, start_set) = match args.strategy {
        StrategyArg::Extend => {
            let kernel_set = match &args.kernel {
                Some(text) => parse_ops(text)?,
                None => {
                    let policy = match args.policy {
                        PolicyArg::Intersection => KernelPolicy::Intersection,
                        PolicyArg::Majority => KernelPolicy::Majority,
                    };
                    kernel(&trio, &policy)?
                }
            };
            let result = extend_kernel(
                &catalog,
                &kernel_set,
                &candidates,
                args.budget,
                args.mode.into(),
            )?;
            (result, "kernel", kernel_set)
        }
        StrategyArg::Compress => {
            let superstructure_set = superstructure(&trio)?;
            let result = compress_superstructure(
                &catalog,
                &superstructure_set,
                &candidates,
                args.budget,
                args.mode.into(),
            )?;
            (result, "superstructure", superstructure_set)
        }
    };
    match args.format {
        Format::Csv => write_aggregate_csv(&candidates, &result, out),
        _ => write_aggregate_text(&candidates, &result, start_name, &start_set, out),
    }
}

fn write_aggregate_text(
    candidates: &[Candidate],
    result: &AggregatedForecast,
    start_name: &str,
    start_set: &BTreeSet<u32>,
    out: &mut dyn Write,
) -> CliResult {
    writeln!(out, "strategy {}", result.strategy)?;
    writeln!(out, "{start_name}: {}", display_op_set(start_set))?;
    let decisions: Vec<String> = candidates
        .iter()
        .zip(&result.decision_vector)
        .map(|(candidate, chosen)| format!("{}={}", display_op(candidate.id), u8::from(*chosen)))
        .collect();
    writeln!(out, "decision: {}", decisions.join(" "))?;
    writeln!(
        out,
        "selection value {}, load {}",
        result.selection.total_value, result.selection.total_load
    )?;
    writeln!(
        out,
        "{} = {} {}",
        result.forecast.label,
        display_op_set(&result.forecast.operations),
        result.forecast.totals
    )?;
    Ok(())
}

fn write_aggregate_csv(
    candidates: &[Candidate],
    result: &AggregatedForecast,
    out: &mut dyn Write,
) -> CliResult {
    writeln!(out, "id,priority,weight,chosen")?;
    for (candidate, chosen) in candidates.iter().zip(&result.decision_vector) {
        writeln!(
            out,
            "{},{},{},{}",
            candidate.id,
            candidate.priority,
            candidate.weight,
            u8::from(*chosen)
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

#[derive(Args)]
struct RenderArgs {
    /// Bundled generation to render
    #[arg(long, conflicts_with = "input")]
    generation: Option<String>,
    /// JSON system document to render instead
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_render(args: RenderArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(
        args.format,
        &[Format::Text, Format::GraphDescription],
        "render",
    )?;
    let system = match (&args.generation, &args.input) {
        (Some(name), None) => find_generation(name)?,
        (None, Some(path)) => parse_system(&read_file(path)?)?,
        _ => return Err(usage("render needs exactly one of --generation or --input")),
    };
    let format_name = match args.format {
        Format::GraphDescription => "graph-description",
        _ => "text",
    };
    write!(out, "{}", render_tree(&system, format_name)?)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// ledger
// ---------------------------------------------------------------------------

#[derive(Args)]
struct LedgerArgs {
    /// Catalog document to build the ledger for; defaults to the bundled
    /// corpus (other corpora carry no reported fixtures, so their ledger
    /// is empty)
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn cmd_ledger(args: LedgerArgs, out: &mut dyn Write) -> CliResult {
    reject_formats(args.format, &[Format::Text, Format::Csv], "ledger")?;
    let catalog: Catalog = match &args.catalog {
        Some(path) => load_catalog(&read_file(path)?)?,
        None => builtin_catalog(),
    };
    let entries = build_ledger(&catalog)?;
    match args.format {
        Format::Csv => write!(out, "{}", ledger_to_csv(&entries))?,
        _ => {
            for entry in &entries {
                writeln!(out, "== {}", entry.topic)?;
                writeln!(out, "reported: {}", entry.reported)?;
                writeln!(out, "computed: {}", entry.computed)?;
                writeln!(out, "note: {}", entry.note)?;
            }
        }
    }
    Ok(())
}
