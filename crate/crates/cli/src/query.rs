//! Command-line query types. The same types are echoed in every JSON response.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_core::ThetaSource;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "cubic",
    version,
    about = "Zero counts of diagonal cubic forms over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub query: Query,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Query {
    /// Print c, d, the r-pair, theta and G^3/q for a field.
    Constants(ConstantsArgs),
    /// N_s(z), or T_s(y) when --y is given.
    Count(CountArgs),
    /// Leading coefficients of a generating function.
    Series(SeriesArgs),
    /// Run the full verification suite.
    Verify(VerifyArgs),
    /// Reproduce the worked example over F_31 with g = 3.
    ReproduceExample(ExampleArgs),
}

impl Query {
    pub fn format(&self) -> Format {
        match self {
            Query::Constants(a) => a.format,
            Query::Count(a) => a.format,
            Query::Series(a) => a.format,
            Query::Verify(a) => a.format,
            Query::ReproduceExample(a) => a.format,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: u64,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Monic modulus `m0,m1,...,mk`, constant term first.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    /// Generator `c0,c1,...,c{k-1}`.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct ConstantsArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_enum, default_value_t)]
    pub theta_source: ThetaArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct CountArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub field: FieldArgs,
    /// Number of variables.
    #[arg(long)]
    pub s: u32,
    /// Right-hand side: an element `c0,c1,...` or one of zero|c0|c1|c2.
    #[arg(long, required_unless_present = "y", conflicts_with = "y")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    /// Non-cubic coefficient of the last variable in `x1^3 + ... + y*xs^3 = 0`.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub theta_source: ThetaArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct SeriesArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub field: FieldArgs,
    #[arg(long, required_unless_present = "y", conflicts_with = "y")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub n_terms: usize,
    #[arg(long, value_enum, default_value_t)]
    pub theta_source: ThetaArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct ExampleArgs {
    #[arg(long, value_enum, default_value_t)]
    pub theta_source: ThetaArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaArg {
    #[default]
    Exact,
    Paper,
}

impl From<ThetaArg> for ThetaSource {
    fn from(t: ThetaArg) -> Self {
        match t {
            ThetaArg::Exact => ThetaSource::Exact,
            ThetaArg::Paper => ThetaSource::Paper,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Tsv,
}
