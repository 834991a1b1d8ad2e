use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "quadisc", version, about = "Exact discriminants of sparse polynomials over Q(i)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact discriminant of one polynomial or family member.
    Disc(InputArgs),
    /// Run the closed form and the oracle on one input; exit 0 iff equal.
    Compare(InputArgs),
    /// Compare formula and oracle on seeded random members of every family.
    Fuzz(FuzzArgs),
    /// Time formula against oracle along a doubling ladder of n, as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// binomial, trinomial, k2, k3, knm1, recip2, recip3, two_n or os
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Polynomial text such as "x^7 + (2-3i)*x^2 - 1/2".
    #[arg(allow_hyphen_values = true)]
    pub poly: Option<String>,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct FuzzArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub trials: u64,
    /// Restrict to one family; all families in rotation otherwise.
    #[arg(long)]
    pub family: Option<String>,
    /// Largest polynomial degree generated.
    #[arg(long, default_value_t = 40)]
    pub max_degree: i64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub seed: u64,
    /// Timing repetitions per point; the fastest is reported.
    #[arg(long)]
    pub trials: u64,
    #[arg(long, default_value = "k2")]
    pub family: String,
    /// Last rung of the ladder 8, 16, 32, ...; included even if not a power of two.
    #[arg(long = "n", default_value_t = 256)]
    pub max_n: i64,
    /// Degrees above this are timed for the formula only.
    #[arg(long, default_value_t = 400)]
    pub oracle_cutoff: i64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}
