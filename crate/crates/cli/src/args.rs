use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "syzcurve", version, about = "Unexpected curves from Jacobian syzygies of line arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Splitting types, gap decompositions and unexpected types for every k in range
    Table(TableArgs),
    /// Splitting type of the restricted syzygy bundle for one k
    Splitting(KArgs),
    /// Generic fat-point dimensions D(j) = dim [I_{Z + jP}]_{j+k}
    Dimtable(DimtableArgs),
    /// A basis of degree-d syzygy classes
    Syzygies(SyzygyArgs),
    /// Build the curve of one syzygy class
    Construct(ConstructArgs),
    /// Multiplicities of a stored curve at Z and at a point
    Verify(VerifyArgs),
    /// Decide unexpectedness of type (d+k, d) by all three routes
    Unexpected(UnexpectedArgs),
    /// Run the golden checks and property suites
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConfigName {
    B3,
    Dfn,
    File,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Line-independent tuples of ternary forms
    Global,
    /// Tuples of binary forms on the chosen line
    Restricted,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Built-in configuration, or `file` with --points-file
    #[arg(long, value_enum)]
    pub config: Option<ConfigName>,
    /// n for the Fermat-dual configuration
    #[arg(long)]
    pub n: Option<u32>,
    /// JSON points file (implies --config file)
    #[arg(long)]
    pub points_file: Option<PathBuf>,
    #[arg(long, env = "SYZCURVE_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Generic points sampled per dimension
    #[arg(long, default_value_t = 2)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct KArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub k: u32,
}

#[derive(Args, Debug)]
pub struct DimtableArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub k: u32,
    /// Compute j = 0..=max_j instead of stopping at convergence
    #[arg(long)]
    pub max_j: Option<u32>,
}

#[derive(Args, Debug)]
pub struct SyzygyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub d: u32,
    /// Coefficients of the line, "a,b,c"; drawn from the seed if absent
    #[arg(long, allow_hyphen_values = true)]
    pub line: Option<String>,
    #[arg(long, value_enum, default_value = "global")]
    pub basis: Basis,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub syzygy: SyzygyArgs,
    /// 1-based position in the basis
    #[arg(long, default_value_t = 1)]
    pub syzygy_index: usize,
    /// Explicit tuple of ternary forms separated by ';', in multi-index order
    #[arg(long, conflicts_with = "syzygy_index")]
    pub tuple: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Curve in x, y, z; a, b, c are replaced by the point's coordinates
    #[arg(long)]
    pub curve_file: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    /// Required multiplicity at the point
    #[arg(long)]
    pub d: Option<u32>,
}

#[derive(Args, Debug)]
pub struct UnexpectedArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub k: u32,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    #[arg(long, env = "SYZCURVE_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub samples: usize,
    /// Only checks whose key (e.g. c4-b3) contains this text
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
