//! Command-line surface. The parsed arguments double as the run
//! configuration: [`RunConfig`] serializes to JSON and back unchanged.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[command(name = "merit", version, about = "Littlewood sequences from difference sets: construction, merit factors, diagnostics")]
pub struct RunConfig {
    /// Worker threads (default: all cores).
    #[arg(long, env = "MERIT_THREADS", global = true)]
    pub threads: Option<usize>,

    /// Also write this run's configuration as JSON to the given path.
    #[arg(long, global = true, value_name = "PATH")]
    #[serde(skip)]
    pub dump_config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
pub enum Command {
    /// Build a set and write one period (or a rotated truncation) as a +/- line.
    Construct(ConstructArgs),
    /// Exact merit factor of a sequence file or a constructed sequence.
    Mf(MfArgs),
    /// Merit factors over an (R, T) grid against the predicted limit.
    Sweep(SweepArgs),
    /// Limiting merit factor: global optimum and values at given (R, T).
    Predict(PredictArgs),
    /// Difference-set, spectral and periodic-profile diagnostics for a set.
    Diagnose(DiagnoseArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Paley,
    Hall,
    Cyclotomic,
    Singer,
    Gmw,
    Sidelnikov,
}

#[derive(Debug, Clone, PartialEq, Default, Args, Serialize, Deserialize)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Prime for paley, hall and cyclotomic sets.
    #[arg(long)]
    pub p: Option<u64>,
    /// Field order for singer, gmw and sidelnikov sets.
    #[arg(long)]
    pub q: Option<u64>,
    /// Order of the cyclotomic classes.
    #[arg(long)]
    pub m: Option<u32>,
    /// Class indices for cyclotomic unions, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<u32>,
    /// Subfield order for gmw sets.
    #[arg(long)]
    pub s: Option<u64>,
    /// Inner set for gmw: singer, trivial, paley, hall, or gmw:<s>:<inner>.
    #[arg(long)]
    pub inner: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Rotation: the sequence starts at coordinate r.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub r: i64,
    /// Length (default: one period).
    #[arg(long)]
    pub t: Option<usize>,
    /// Output file; a provenance sidecar is written next to it with `.json`
    /// appended. Prints the line to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct MfArgs {
    /// Sequence file with a single +/- line; otherwise the set flags are used.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub r: i64,
    #[arg(long)]
    pub t: Option<usize>,
    /// Include the autocorrelation profile in the report.
    #[arg(long)]
    pub acf: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Rotation fractions, comma separated.
    #[arg(long = "R", value_delimiter = ',', allow_hyphen_values = true)]
    pub R: Vec<f64>,
    /// Truncation fractions, comma separated.
    #[arg(long = "T", value_delimiter = ',')]
    pub T: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct PredictArgs {
    /// Family parameter; taken from the set flags when absent.
    #[arg(long)]
    pub nu: Option<f64>,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long = "R", value_delimiter = ',', allow_hyphen_values = true)]
    pub R: Vec<f64>,
    #[arg(long = "T", value_delimiter = ',')]
    pub T: Vec<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct DiagnoseArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Leave the triple (0,0,0) out of the spectral maximum (default: per family).
    #[arg(long)]
    pub exclude_origin: Option<bool>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Charsums,
    Sets,
    Tables,
    Spectral,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Largest field order for the charsums suite.
    #[arg(long, default_value_t = 256)]
    pub qmax: u64,
    /// Primes for the tables suite, comma separated (default: five per table).
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Set flags select the instance for the sets and spectral suites;
    /// without them a default panel runs. For the tables suite `--m`
    /// selects order 4 or 6.
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub exclude_origin: Option<bool>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
