//! `percbound` command-line interface.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use percbound::spectral::{DEFAULT_MAX_ITER, DEFAULT_TOL};

/// Site-percolation thresholds and spectral lower bounds.
///
/// Exit status: 0 success, 2 bad input, 3 numerical non-convergence (the
/// report is still written), 4 pattern without an infinite tree.
/// Simulation threads default to the number of cores; set RAYON_NUM_THREADS
/// to override. Results do not depend on the thread count.
#[derive(Debug, Parser)]
#[command(name = "percbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report every threshold estimate and bound for an edge-list graph.
    Analyze(AnalyzeArgs),
    /// Write a graph from one of the built-in families as an edge list.
    Generate(GenerateArgs),
    /// Exact threshold of the infinite tree described by a quotient pattern.
    Pattern(PatternArgs),
    /// Monte Carlo site percolation sweep.
    Simulate(SimulateArgs),
    /// Finite series-composition unrolling of a graph along one edge.
    Scu(ScuArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct Common {
    /// Output file (standard output if omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Output format.
    #[arg(short, long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Edge-list file: one `u v` pair per line, `#` comments.
    input: PathBuf,
    /// Relative tolerance of the spectral radii.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Iteration cap of the power iterations.
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    RegularTree,
    ChainTree,
    Cycle,
    Complete,
    Path,
    RandomRegular,
    BinomialRandom,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    family: Family,
    /// Degree (regular_tree, chain_tree backbone, random_regular).
    #[arg(long)]
    d: Option<usize>,
    /// Chains per backbone vertex (chain_tree).
    #[arg(long)]
    r: Option<usize>,
    /// Chain length (chain_tree).
    #[arg(long)]
    len: Option<usize>,
    /// Truncation depth (tree families).
    #[arg(long)]
    depth: Option<usize>,
    /// Vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability (binomial_random).
    #[arg(long, conflicts_with = "mean_degree")]
    p: Option<f64>,
    /// Mean degree, sets p = mean_degree / (n - 1) (binomial_random).
    #[arg(long)]
    mean_degree: Option<f64>,
    /// Seed of the random families.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file (standard output if omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PatternArgs {
    /// Pattern file `{"classes": c, "counts": [[...]]}`.
    #[arg(required_unless_present_any = ["regular_tree", "chain_tree"])]
    input: Option<PathBuf>,
    /// Built-in pattern of the d-regular tree.
    #[arg(long, value_name = "D", conflicts_with_all = ["input", "chain_tree"])]
    regular_tree: Option<u32>,
    /// Built-in pattern T_{d;r,L}, given as `d,r,L`.
    #[arg(long, value_name = "D,R,L", value_parser = triple, conflicts_with = "input")]
    chain_tree: Option<(usize, usize, usize)>,
    /// Also run the finite-tree recursion at these depths (built-in patterns only).
    #[arg(long, value_delimiter = ',')]
    depths: Option<Vec<usize>>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Edge-list file.
    input: PathBuf,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Master seed; trial seeds are derived from it.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Points of the canonical p-grid.
    #[arg(long, default_value_t = percbound::sim::DEFAULT_GRID_POINTS)]
    grid: usize,
    /// Emit one CSV row per occupied count instead of the p-grid.
    #[arg(long)]
    microcanonical: bool,
    /// Largest-cluster fraction used by the crossing estimate.
    #[arg(long, default_value_t = percbound::sim::DEFAULT_CROSSING_LEVEL)]
    level: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct ScuArgs {
    /// Edge-list file of a connected graph.
    input: PathBuf,
    /// Edge `u,v` to unroll along (default: first edge that is not a bridge).
    #[arg(long, value_name = "U,V", value_parser = pair)]
    edge: Option<(usize, usize)>,
    #[arg(long, default_value_t = 4)]
    copies: usize,
    /// Write the largest truncation as an edge list here.
    #[arg(long)]
    graph_output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    common: Common,
}

fn integers(s: &str, count: usize) -> Result<Vec<usize>, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<_, _>>()?;
    if parts.len() != count {
        return Err(format!("expected {count} comma-separated integers"));
    }
    Ok(parts)
}

fn pair(s: &str) -> Result<(usize, usize), String> {
    let v = integers(s, 2)?;
    Ok((v[0], v[1]))
}

fn triple(s: &str) -> Result<(usize, usize, usize), String> {
    let v = integers(s, 3)?;
    Ok((v[0], v[1], v[2]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => commands::analyze(a),
        Command::Generate(a) => commands::generate(a),
        Command::Pattern(a) => commands::pattern(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Scu(a) => commands::scu(a),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comma_lists() {
        assert_eq!(pair("3, 7"), Ok((3, 7)));
        assert_eq!(triple("3,2,2"), Ok((3, 2, 2)));
        assert!(pair("1,2,3").is_err());
        assert!(triple("a,b,c").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
