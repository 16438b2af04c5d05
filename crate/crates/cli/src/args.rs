use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use splitpass::{Graph, LouvainParams, Result, SplitConfig, SplitTechnique};

#[derive(Debug, Parser)]
#[command(
    name = "splitpass",
    version,
    about = "Parallel Louvain community detection with disconnected-community splitting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Detect communities and write the membership and a JSON report.
    Detect(DetectArgs),
    /// Report internally-disconnected communities of a membership file.
    Check(CheckArgs),
    /// Time detection at several worker counts and emit CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Mtx,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file (MatrixMarket or whitespace-separated edge list).
    #[arg(short, long)]
    pub input: PathBuf,
    /// Input format; inferred from the extension when omitted (`.mtx` or edge list).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Ignore the third column of an edge list and use unit weights.
    #[arg(long)]
    pub unweighted: bool,
}

impl InputArgs {
    pub fn load(&self) -> Result<Graph> {
        match self.format.unwrap_or_else(|| infer_format(&self.input)) {
            Format::Mtx => splitpass::load_matrix_market(&self.input),
            Format::Edgelist => splitpass::load_edge_list(&self.input, !self.unweighted),
        }
    }
}

fn infer_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("mtx") => Format::Mtx,
        _ => Format::Edgelist,
    }
}

#[derive(Debug, Args)]
pub struct TuningArgs {
    /// none, last-lp, last-lpp, last-bfs, pass-lp, pass-lpp or pass-bfs.
    #[arg(long, default_value = "pass-bfs")]
    pub split: SplitConfig,
    #[arg(long, default_value_t = 1e-2)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 10.0)]
    pub tolerance_drop: f64,
    #[arg(long, default_value_t = 0.8)]
    pub agg_tolerance: f64,
    #[arg(long, default_value_t = 10)]
    pub max_passes: usize,
    #[arg(long, default_value_t = 20)]
    pub max_iterations: usize,
}

impl TuningArgs {
    pub fn params(&self, workers: usize) -> LouvainParams {
        LouvainParams {
            tolerance: self.tolerance,
            tolerance_drop: self.tolerance_drop,
            aggregation_tolerance: self.agg_tolerance,
            max_passes: self.max_passes,
            max_iterations: self.max_iterations,
            split: self.split,
            workers,
        }
    }
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub tuning: TuningArgs,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    /// Membership output, one label per line.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// JSON report output.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Membership file to check.
    #[arg(short, long)]
    pub membership: PathBuf,
    /// Also split disconnected communities with this technique.
    #[arg(long)]
    pub split: Option<SplitTechnique>,
    /// Where to write the split membership (requires `--split`).
    #[arg(short, long, requires = "split")]
    pub output: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub tuning: TuningArgs,
    /// Comma-separated worker counts.
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Vec<u64>,
    /// Runs averaged into each row.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub repeat: u64,
    /// CSV output; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

pub fn workers(threads: Option<u64>) -> usize {
    threads.map_or_else(splitpass::parallel::default_workers, |t| t as usize)
}
