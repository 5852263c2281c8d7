//! `cliquerich` command-line interface.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cliquerich::experiment::{run_recipe, Recipe};
use cliquerich::fixtures::{self, FIXTURES};
use cliquerich::parallel::with_workers;
use cliquerich::pipeline::{run_pipeline_with, DEFAULT_K};
use cliquerich::{
    compare_clubs, compare_clubs_at, edge_club, exact_census, pseudo_census, report, rich_club,
    super_rich_club, ClubReport, Family, GenSpec, Graph, ParticipationTable, PercentileSchedule,
    PipelineOptions,
};
use serde::Serialize;

const DEFAULT_CENSUS_K: usize = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cliquerich",
    version,
    about = "Clique participation and rich-club analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for the census kernels
    #[arg(long, global = true, env = "CLIQUERICH_WORKERS",
          value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output_format: OutputFormat,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Edge density of a graph
    Density(GraphArgs),
    /// Vertex and edge participation in complete (or pseudo-complete) k-subgraphs
    Census(CensusArgs),
    /// Rich-club of vertices with degree > j
    RichClub(RichClubArgs),
    /// Super rich-club of vertices with participation > j
    SuperRichClub(SuperRichClubArgs),
    /// Rich edge-club of edges with participation > j
    EdgeClub(EdgeClubArgs),
    /// Iterative pseudo-census thresholding down to SUpernodes
    Supernodes(SupernodeArgs),
    /// Generate a seeded Erdős–Rényi or Watts–Strogatz graph
    Gen(GenArgs),
    /// Compare degree and participation rankings and clubs
    Compare(CompareArgs),
    /// Run a batch experiment from a JSON recipe
    Experiment(ExperimentArgs),
    /// List the bundled fixtures, or print one
    Fixtures(FixtureArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Pseudo,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Graph file (`-` for stdin)
    #[arg(long, required_unless_present = "fixture", conflicts_with = "fixture")]
    input: Option<PathBuf>,

    /// Input file format
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,

    /// Bundled fixture name
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Subgraph order
    #[arg(short, long, default_value_t = DEFAULT_CENSUS_K)]
    k: usize,

    /// Complete subgraphs, or pseudo-complete ones at weight threshold -w
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,

    /// Pseudo-census weight threshold
    #[arg(short, required_if_eq("mode", "pseudo"))]
    w: Option<f64>,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    table: TableArgs,
}

#[derive(Args, Debug)]
struct RichClubArgs {
    #[command(flatten)]
    graph: GraphArgs,

    /// Degree threshold
    #[arg(short, allow_negative_numbers = true)]
    j: i64,

    /// Weight threshold for the weighted participation coefficient
    #[arg(short, default_value_t = 0.0)]
    t: f64,
}

#[derive(Args, Debug)]
struct SuperRichClubArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    table: TableArgs,

    /// Participation threshold
    #[arg(short, allow_negative_numbers = true)]
    j: i64,

    /// Weight threshold for the weighted participation coefficient
    #[arg(short, default_value_t = 0.0)]
    t: f64,
}

#[derive(Args, Debug)]
struct EdgeClubArgs {
    #[command(flatten)]
    graph: GraphArgs,

    /// Subgraph order
    #[arg(short, long, default_value_t = DEFAULT_CENSUS_K)]
    k: usize,

    /// Edge participation threshold
    #[arg(short, allow_negative_numbers = true)]
    j: i64,
}

#[derive(Args, Debug)]
struct SupernodeArgs {
    #[command(flatten)]
    graph: GraphArgs,

    /// Subgraph order
    #[arg(short, long, default_value_t = DEFAULT_K)]
    k: usize,

    /// File with the percentile schedule (JSON array or list)
    #[arg(long)]
    schedule: Option<PathBuf>,

    /// Also drop rebuilt edges below the iteration's percentile of participation
    #[arg(long)]
    hard_percentile_cut: bool,

    /// Write the per-vertex participation trace CSV here
    #[arg(long)]
    trace_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,

    /// Number of vertices
    #[arg(short, long)]
    n: usize,

    /// Target edge density
    #[arg(long)]
    density: f64,

    /// Watts–Strogatz rewiring probability
    #[arg(long, default_value_t = cliquerich::netgen::DEFAULT_REWIRING_BETA)]
    beta: f64,

    #[arg(long)]
    seed: u64,

    /// Emitted graph format
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Er,
    Ws,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[command(flatten)]
    graph: GraphArgs,

    /// Subgraph order
    #[arg(short, long, default_value_t = DEFAULT_CENSUS_K)]
    k: usize,

    /// Target rich-club size; defaults to a quarter of the vertices
    #[arg(long, conflicts_with_all = ["j", "j_prime"])]
    club_size: Option<usize>,

    /// Degree threshold for the rich-club
    #[arg(short, allow_negative_numbers = true, requires = "j_prime")]
    j: Option<i64>,

    /// Participation threshold for the Super rich-club
    #[arg(long, allow_negative_numbers = true, requires = "j")]
    j_prime: Option<i64>,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// JSON recipe file
    #[arg(long)]
    recipe: PathBuf,

    /// Replaces the recipe's seed
    #[arg(long)]
    seed: Option<u64>,

    /// Write the per-sample CSV here
    #[arg(long)]
    samples_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FixtureArgs {
    /// Print this fixture instead of listing them
    name: Option<String>,

    /// Printed graph format
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

/// Problems with the command line itself, as opposed to the data.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.workers {
        Some(w) => with_workers(w as usize, || run(&cli)),
        None => run(&cli),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let format = cli.output_format;
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Density(args) => {
            let g = load_graph(args)?;
            let density = g.density()?;
            #[derive(Serialize)]
            struct DensityReport {
                n: usize,
                edges: usize,
                density: f64,
            }
            let r = DensityReport {
                n: g.n(),
                edges: g.edge_count(),
                density,
            };
            emit(out, format, &r, || {
                csv_table(
                    &["n", "edges", "density"],
                    [[r.n.to_string(), r.edges.to_string(), r.density.to_string()]],
                )
            })
        }
        Command::Census(args) => {
            let g = load_graph(&args.graph)?;
            let table = census(&g, &args.table)?;
            emit(out, format, &table, || {
                Ok(report::participation_csv(&table)?)
            })
        }
        Command::RichClub(args) => {
            let g = load_graph(&args.graph)?;
            let club = rich_club(&g, args.j).with_weighted_coefficient(&g, args.t)?;
            emit_club(out, format, &club)
        }
        Command::SuperRichClub(args) => {
            let g = load_graph(&args.graph)?;
            let table = census(&g, &args.table)?;
            let club = super_rich_club(&g, args.table.k, args.j, &table)?
                .with_weighted_coefficient(&g, args.t)?;
            emit_club(out, format, &club)
        }
        Command::EdgeClub(args) => {
            let g = load_graph(&args.graph)?;
            check_k(args.k)?;
            let table = exact_census(&g, args.k)?;
            emit_club(out, format, &edge_club(&g, args.k, args.j, &table)?)
        }
        Command::Supernodes(args) => supernodes(args, out, format),
        Command::Gen(args) => generate(args, out),
        Command::Compare(args) => {
            let g = load_graph(&args.graph)?;
            check_k(args.k)?;
            let table = exact_census(&g, args.k)?;
            let cmp = match (args.j, args.j_prime) {
                (Some(j), Some(jp)) => compare_clubs_at(&g, &table, j, jp)?,
                _ => {
                    let target = args
                        .club_size
                        .unwrap_or_else(|| (g.n() as f64 / 4.0).round().max(1.0) as usize);
                    compare_clubs(&g, &table, target)?
                }
            };
            emit(out, format, &cmp, || Ok(report::comparison_csv(&cmp)?))
        }
        Command::Experiment(args) => {
            let text = read_input(&args.recipe)?;
            let mut recipe = Recipe::parse(&text)
                .with_context(|| format!("invalid recipe {}", args.recipe.display()))?;
            if let Some(seed) = args.seed {
                recipe.seed = seed;
            }
            let output = run_recipe(&recipe)?;
            if let Some(path) = &args.samples_out {
                write_file(path, &report::samples_csv(&output.samples)?)?;
            }
            emit(out, format, &output, || {
                Ok(report::summary_csv(&output.cells)?)
            })
        }
        Command::Fixtures(args) => match &args.name {
            Some(name) => {
                let g = fixtures::fixture(name).map_err(|e| usage(e.to_string()))?;
                write_output(out, &graph_text(&g, args.format))
            }
            None => {
                #[derive(Serialize)]
                struct Entry {
                    name: &'static str,
                    description: &'static str,
                }
                let list: Vec<Entry> = FIXTURES
                    .iter()
                    .map(|&(name, description)| Entry { name, description })
                    .collect();
                emit(out, format, &list, || {
                    csv_table(
                        &["name", "description"],
                        list.iter().map(|e| [e.name, e.description]),
                    )
                })
            }
        },
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(usage(format!("-k must be at least 2, got {k}")));
    }
    Ok(())
}

fn census(g: &Graph, args: &TableArgs) -> Result<ParticipationTable> {
    check_k(args.k)?;
    Ok(match (args.mode, args.w) {
        (Mode::Exact, None) => exact_census(g, args.k)?,
        (Mode::Exact, Some(_)) => return Err(usage("-w is only used with --mode pseudo")),
        (Mode::Pseudo, Some(w)) => pseudo_census(g, args.k, w)?,
        (Mode::Pseudo, None) => return Err(usage("--mode pseudo needs -w")),
    })
}

fn supernodes(args: &SupernodeArgs, out: Option<&Path>, format: OutputFormat) -> Result<()> {
    let g = load_graph(&args.graph)?;
    check_k(args.k)?;
    let schedule = match &args.schedule {
        Some(path) => PercentileSchedule::parse(&read_input(path)?)
            .with_context(|| format!("invalid schedule {}", path.display()))?,
        None => PercentileSchedule::default(),
    };
    let options = PipelineOptions {
        hard_percentile_cut: args.hard_percentile_cut,
    };
    let trace = run_pipeline_with(&g, args.k, &schedule, options)?;
    let trace_csv = report::trace_csv(&trace)?;
    if let Some(path) = &args.trace_out {
        write_file(path, &trace_csv)?;
    }
    emit(out, format, &trace, || Ok(trace_csv.clone()))
}

fn generate(args: &GenArgs, out: Option<&Path>) -> Result<()> {
    let spec = GenSpec {
        family: match args.family {
            FamilyArg::Er => Family::Er,
            FamilyArg::Ws => Family::Ws,
        },
        n: args.n,
        target_density: args.density,
        rewiring_beta: args.beta,
        seed: args.seed,
    };
    let g = spec.generate()?;
    let header = format!("# {}\n", serde_json::to_string(&spec)?);
    write_output(out, &(header + &graph_text(&g, args.format)))
}

fn graph_text(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => g.to_edge_list(),
        GraphFormat::Matrix => g.to_dense_matrix(),
    }
}

fn load_graph(args: &GraphArgs) -> Result<Graph> {
    if let Some(name) = &args.fixture {
        return fixtures::fixture(name).map_err(|e| usage(e.to_string()));
    }
    let path = args.input.as_deref().expect("clap enforces a graph source");
    let text = read_input(path)?;
    let parsed = match args.format {
        GraphFormat::Edgelist => Graph::from_edge_list(&text),
        GraphFormat::Matrix => Graph::from_dense_matrix(&text),
    };
    parsed.with_context(|| format!("cannot parse {}", path.display()))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("cannot read stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn emit<T, F>(out: Option<&Path>, format: OutputFormat, value: &T, csv: F) -> Result<()>
where
    T: Serialize,
    F: FnOnce() -> Result<String>,
{
    let text = match format {
        OutputFormat::Json => report::to_json(value)? + "\n",
        OutputFormat::Csv => csv()?,
    };
    write_output(out, &text)
}

fn csv_table<R, I>(header: &[&str], rows: I) -> Result<String>
where
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn emit_club(out: Option<&Path>, format: OutputFormat, club: &ClubReport) -> Result<()> {
    emit(out, format, club, || Ok(report::club_csv(club)?))
}
