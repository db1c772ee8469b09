use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "lapctl",
    version,
    about = "Generalized paths of antiregular blocks: spectra, theorem checks, controllability and minimum-energy steering",
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a generalized path and write its graph JSON and a summary.
    Build(BuildArgs),
    /// Laplacian spectrum with anchoring, distinctness and majorization reports.
    Spectrum(SpectrumArgs),
    /// PBH controllability verdict; exit 0 iff controllable.
    Check(CheckArgs),
    /// Run the theorem checks over a (k, n) grid; exit 0 iff all pass.
    Verify(VerifyArgs),
    /// Minimum-energy steering (or autonomous consensus) trajectories.
    Simulate(SimulateArgs),
    /// Design table over a (k, n) grid.
    Sweep(SweepArgs),
}

/// Where the graph comes from: builder parameters or a file.
#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Vertices per antiregular block.
    #[arg(long)]
    pub k: Option<usize>,
    /// Number of chained blocks.
    #[arg(long)]
    pub n: Option<usize>,
    /// Append one vertex to the first block's input vertex and move the input there.
    #[arg(long)]
    pub extra: bool,
    /// Graph file (JSON or `# vertices N` edge list) instead of --k/--n.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["k", "n", "extra"])]
    pub graph: Option<PathBuf>,
    /// Override the input vertex (1-based).
    #[arg(long)]
    pub input_vertex: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output directory for artifacts.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// key=value file whose entries act as flags given before the command line ones.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub extra: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Absolute tolerance for eigenvalue (in)equalities.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// PBH threshold on |v_i^T b| and relative eigenvalue gaps.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sabotage {
    /// Build the blocks without the edges that chain them.
    DropCrossEdge,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Block sizes, `a..b` (inclusive) or a single value.
    #[arg(long, default_value = "2..6")]
    pub k: String,
    /// Block counts, `a..b` (inclusive) or a single value.
    #[arg(long, default_value = "1..4")]
    pub n: String,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Also compare PBH with the Krylov rank oracle on this many random
    /// connected graphs (at most 10 vertices).
    #[arg(long, default_value_t = 0)]
    pub random_graphs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, hide = true)]
    pub sabotage: Option<Sabotage>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Compare {
    /// path8, interconnect(4,2) and antiregular8 from -20 to 20.
    Fig2,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Horizon.
    #[arg(long, default_value_t = 2.0)]
    pub t1: f64,
    /// Grid intervals.
    #[arg(long, default_value_t = 2000)]
    pub steps: usize,
    /// Initial state: one value for every vertex or a comma-separated list.
    #[arg(long, default_value = "-20", allow_hyphen_values = true)]
    pub x0: String,
    /// Target state, same syntax as --x0.
    #[arg(long, default_value = "20", allow_hyphen_values = true)]
    pub xf: String,
    /// Run the uncontrolled consensus dynamics instead of steering.
    #[arg(long)]
    pub autonomous: bool,
    #[arg(long, value_enum)]
    pub compare: Option<Compare>,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Largest accepted condition number of the equilibrated modal Gramian.
    #[arg(long, default_value_t = 1e14)]
    pub max_condition: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "3..5")]
    pub k: String,
    #[arg(long, default_value = "1..3")]
    pub n: String,
    #[arg(long)]
    pub extra: bool,
    /// Horizon for the energy column (steering -20 to 20 on every vertex).
    #[arg(long, default_value_t = 2.0)]
    pub t1: f64,
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, default_value_t = 1e14)]
    pub max_condition: f64,
    #[command(flatten)]
    pub common: Common,
}
