use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "maxent",
    version,
    about = "Maximum-entropy occupancy laws and their empirical checks"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Seed for randomized subcommands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a theoretical distribution.
    Dist {
        #[command(subcommand)]
        kind: DistKind,
    },
    /// Enumerate all microstates of P particles in N boxes.
    Enumerate(EnumerateArgs),
    /// Sample microstates uniformly and tally box occupancies.
    Sample(SampleArgs),
    /// Test numeric data against the first-digit law.
    Benford(BenfordArgs),
    /// Rank-frequency analysis of whitespace-separated tokens.
    Zipf(ZipfArgs),
    /// Log-log least-squares slope of an (x, y) table.
    Fit(FitArgs),
    /// Write synthetic test data.
    #[command(hide = true)]
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum DistKind {
    /// Cluster-rank frequencies ln(1 + 1/r) / ln(R + 1).
    Rank {
        #[arg(long)]
        max_rank: u64,
    },
    /// First-digit frequencies log10(1 + 1/d).
    Benford,
    /// Low-occupancy weights phi * exp(-beta phi) on a uniform grid.
    Bell {
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        phi_max: f64,
        #[arg(long, default_value_t = 500)]
        steps: u64,
        /// Scale to the unit-area density beta^2 phi exp(-beta phi).
        #[arg(long)]
        normalize: bool,
    },
    /// ln phi(n) against ln n on a log-spaced grid.
    Loglog {
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 1e-3)]
        n_min: f64,
        #[arg(long, default_value_t = 1e6)]
        n_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Census,
    States,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub particles: u64,
    pub boxes: u64,
    #[arg(long, value_enum, default_value_t = Emit::Census)]
    pub emit: Emit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Compare {
    None,
    /// Closed-form uniform-ensemble probabilities.
    Exact,
    /// The occupancy law normalized over n = 1..=P.
    Eq10,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    pub particles: u64,
    pub boxes: u64,
    #[arg(long)]
    pub draws: u64,
    #[arg(long, value_enum, default_value_t = Compare::None)]
    pub compare: Compare,
    /// Draws per random substream.
    #[arg(long, default_value_t = maxent_core::oracle::SamplerConfig::DEFAULT_CHUNK_SIZE)]
    pub chunk_size: u64,
    /// Worker threads (0 = one per core). Does not affect results.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Statistic {
    ChiSquare,
    Mad,
}

#[derive(Debug, Args)]
pub struct BenfordArgs {
    /// Input files (`-` for standard input).
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Read CSV and take this column (header name or 0-based index).
    #[arg(long, value_name = "NAME_OR_INDEX")]
    pub column: Option<String>,
    /// The CSV input has no header row.
    #[arg(long)]
    pub no_header: bool,
    #[arg(long, value_enum, default_value_t = Statistic::ChiSquare)]
    pub statistic: Statistic,
    /// MAD conformance cut-off.
    #[arg(long, default_value_t = maxent_core::statfit::BenfordCriterion::DEFAULT_MAD_THRESHOLD)]
    pub threshold: f64,
    /// Chi-square significance level.
    #[arg(long, default_value_t = maxent_core::statfit::BenfordCriterion::DEFAULT_SIGNIFICANCE)]
    pub significance: f64,
    /// Refuse data whose usable values span fewer orders of magnitude.
    #[arg(long, default_value_t = 0.0)]
    pub min_decades: f64,
}

#[derive(Debug, Args)]
pub struct ZipfArgs {
    /// Text file (`-` for standard input).
    pub input: PathBuf,
    /// Lowercase tokens before counting.
    #[arg(long)]
    pub lowercase: bool,
    #[arg(long)]
    pub fit_min: Option<u64>,
    #[arg(long)]
    pub fit_max: Option<u64>,
    /// Only list this many ranks in the rank table.
    #[arg(long)]
    pub top: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// CSV table (`-` for standard input); only the first table is read.
    pub input: PathBuf,
    /// x column (header name or 0-based index), default the first.
    #[arg(long)]
    pub x_column: Option<String>,
    /// y column (header name or 0-based index), default the second.
    #[arg(long)]
    pub y_column: Option<String>,
    #[arg(long)]
    pub min: Option<f64>,
    #[arg(long)]
    pub max: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorpusLaw {
    /// ln(1 + 1/r) / ln(R + 1).
    RankLaw,
    /// Exact 1/r.
    InverseRank,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Values 10^U with U uniform on [0, decades).
    LogUniform {
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 6)]
        decades: u32,
    },
    /// Values whose leading digits cycle evenly through 1..=9.
    UniformDigits {
        #[arg(long)]
        count: u64,
    },
    /// One token per line drawn from a rank law.
    RankCorpus {
        #[arg(long)]
        max_rank: u64,
        #[arg(long)]
        draws: u64,
        #[arg(long, value_enum, default_value_t = CorpusLaw::RankLaw)]
        law: CorpusLaw,
    },
}
