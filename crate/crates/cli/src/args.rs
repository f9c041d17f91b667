//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exactmath::{parse_rational, rational_to_f64, Rational};

#[derive(Debug, Parser)]
#[command(name = "bdk", version, about = "Liouvillian integrability and simulation of birth-death processes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run Kovacic's algorithm on `ζ'' = r ζ`.
    Kovacic(KovacicArgs),
    /// Certify a birth-death family over sampled Laplace parameters.
    Analyze(AnalyzeArgs),
    /// Gillespie ensemble.
    Simulate(SimulateArgs),
    /// Taylor coefficients and moments of the linear generating function.
    ClosedForm(ClosedFormArgs),
    /// Full cross-check report for a family; exit 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "11")]
    Linear,
    #[value(name = "12")]
    Quadratic,
}

impl FamilyArg {
    pub fn label(self) -> &'static str {
        match self {
            FamilyArg::Linear => "11",
            FamilyArg::Quadratic => "12",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Record {
    Terminal,
    Events,
}

pub fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn positive_rational_arg(s: &str) -> Result<Rational, String> {
    let q = rational_arg(s)?;
    if q <= Rational::from_integer(0.into()) {
        return Err(format!("must be positive, got {q}"));
    }
    Ok(q)
}

/// A decimal literal or an exact rational such as `5/2`.
pub fn real_arg(s: &str) -> Result<f64, String> {
    let v = match s.parse::<f64>() {
        Ok(v) => v,
        Err(_) => rational_to_f64(&rational_arg(s)?),
    };
    if !v.is_finite() || v < 0.0 {
        return Err(format!("expected a finite nonnegative number, got {s}"));
    }
    Ok(v)
}

#[derive(Debug, Args)]
pub struct KovacicArgs {
    /// Potential `r` as a rational expression.
    #[arg(long)]
    pub r: String,
    #[arg(long, default_value_t = 'x')]
    pub var: char,
    /// Output file (stdout if absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Rates {
    #[arg(long, value_parser = positive_rational_arg, allow_hyphen_values = true)]
    pub beta: Rational,
    #[arg(long, value_parser = positive_rational_arg, allow_hyphen_values = true)]
    pub delta: Rational,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[command(flatten)]
    pub rates: Rates,
    #[arg(long)]
    pub n0: u32,
    /// Explicit sample of `s`; repeatable. Overrides `--samples`.
    #[arg(long = "s", value_parser = rational_arg, allow_hyphen_values = true)]
    pub s: Vec<Rational>,
    #[arg(long, default_value_t = galois_pipeline::DEFAULT_SAMPLE_COUNT)]
    pub samples: usize,
    #[arg(long, default_value_t = galois_pipeline::DEFAULT_SAMPLE_SEED)]
    pub sample_seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub rates: Rates,
    #[arg(long, default_value_t = 1)]
    pub b: u32,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    #[arg(long)]
    pub n0: u64,
    #[arg(long, value_parser = real_arg)]
    pub t: f64,
    #[arg(long)]
    pub paths: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub out: Format,
    #[arg(long, value_enum, default_value_t = Record::Terminal)]
    pub record: Record,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClosedFormArgs {
    #[command(flatten)]
    pub rates: Rates,
    #[arg(long)]
    pub n0: u64,
    #[arg(long, value_parser = real_arg)]
    pub t: f64,
    #[arg(long, default_value_t = 200)]
    pub nmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub out: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[command(flatten)]
    pub rates: Rates,
    #[arg(long)]
    pub n0: u32,
    #[arg(long, default_value_t = galois_pipeline::DEFAULT_SAMPLE_COUNT)]
    pub samples: usize,
    #[arg(long, default_value_t = galois_pipeline::DEFAULT_SAMPLE_SEED)]
    pub sample_seed: u64,
    #[arg(long, value_parser = real_arg, default_value = "1")]
    pub t: f64,
    #[arg(long, default_value_t = 200)]
    pub nmax: usize,
    #[arg(long, value_parser = real_arg, default_value = "0.001")]
    pub dt: f64,
    #[arg(long, default_value_t = 20_000)]
    pub paths: usize,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_and_rationals() {
        assert_eq!(real_arg("2.5").unwrap(), 2.5);
        assert_eq!(real_arg("5/2").unwrap(), 2.5);
        assert!(real_arg("-1").is_err());
        assert!(real_arg("inf").is_err());
        assert!(positive_rational_arg("0").is_err());
        assert_eq!(positive_rational_arg("6/4").unwrap(), exactmath::q(3, 2));
    }

    #[test]
    fn seed_is_mandatory_for_simulate() {
        let base = ["bdk", "simulate", "--beta", "1", "--delta", "1", "--n0", "2", "--t", "1", "--paths", "3"];
        assert!(Cli::try_parse_from(base).is_err());
        let mut argv = base.to_vec();
        argv.extend(["--seed", "9"]);
        let Command::Simulate(a) = Cli::try_parse_from(argv).unwrap().command else { panic!() };
        assert_eq!((a.seed, a.b, a.d, a.out, a.record), (9, 1, 1, Format::Csv, Record::Terminal));
    }
}
