use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fracorder::estimators::Theorem;
use fracorder::experiments::{
    run_estimate, run_solve, run_table, EstimateParams, ExperimentConfig, OutputFormat, TableId, TraceFile,
};
use fracorder::forward_solver::{Derivative, ProblemSpec};
use fracorder::quadrature::{Regime, TimeGrid};
use fracorder::special_functions::{mittag_leffler, prabhakar_ml2, MLOrder, TruncationPolicy};
use fracorder::Error;

#[derive(Parser)]
#[command(name = "fracorder", version, about = "Order identification for fractional evolution equations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Deriv {
    Caputo,
    Rl,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Sub,
    Super,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Text,
}

impl From<Deriv> for Derivative {
    fn from(d: Deriv) -> Self {
        match d {
            Deriv::Caputo => Derivative::Caputo,
            Deriv::Rl => Derivative::RiemannLiouville,
        }
    }
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Self {
        match r {
            RegimeArg::Sub => Regime::Sub,
            RegimeArg::Super => Regime::Super,
        }
    }
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected lo,hi")?;
    let lo = a.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let hi = b.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok((lo, hi))
}

#[derive(Subcommand)]
enum Cmd {
    /// Reproduce one of the reference tables, or a sweep from a config file.
    Table {
        #[arg(long)]
        id: Option<TableId>,
        /// key=value experiment config
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Write the closed-form trace of a single mode as CSV.
    Solve {
        #[arg(long, value_enum)]
        deriv: Deriv,
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        u0: f64,
        #[arg(long, allow_negative_numbers = true)]
        u1: Option<f64>,
        #[arg(long = "T")]
        horizon: f64,
        #[arg(long)]
        n: usize,
        /// Grading exponent r of the nodes T (j/n)^r; 1 is uniform.
        #[arg(long, default_value_t = 1.0)]
        grading: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate alpha from a CSV trace.
    Estimate {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        bracket: Option<(f64, f64)>,
        #[arg(long, allow_negative_numbers = true)]
        u0: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        u1: Option<f64>,
        /// With several roots in the bracket, refine the one nearest this.
        #[arg(long)]
        prefer: Option<f64>,
        /// Problem class for small-time estimates.
        #[arg(long, value_enum)]
        deriv: Option<Deriv>,
        #[arg(long, value_enum)]
        regime: Option<RegimeArg>,
    },
    /// Evaluate E_{alpha,beta}(z) or E^2_{alpha,beta}(z).
    Ml {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        #[arg(long)]
        gamma2: bool,
        /// Fixed partial sum k = 0..=N instead of a converged value.
        #[arg(long)]
        terms: Option<usize>,
    },
}

const EXIT_TOLERANCE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;
const EXIT_NO_ROOT: u8 = 4;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DegenerateDenominator { .. } | Error::Bracket(_) => EXIT_DEGENERATE,
        Error::NoSignChange { .. } => EXIT_NO_ROOT,
        _ => EXIT_INPUT,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Table { id, config, out, format } => {
            let mut cfg = match &config {
                Some(p) => {
                    let text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                    ExperimentConfig::parse(&text)?
                }
                None => ExperimentConfig::default(),
            };
            if id.is_some() {
                cfg.table_id = id;
            }
            if cfg.table_id.is_none() && config.is_none() {
                return Err(Error::MissingDatum("--id or --config".into()));
            }
            if let Some(f) = format {
                cfg.output_format = match f {
                    Format::Csv => OutputFormat::Csv,
                    Format::Text => OutputFormat::Text,
                };
            }
            let report = run_table(&cfg)?;
            emit(&report.render(cfg.output_format), out.as_ref())?;
            if report.all_pass() {
                Ok(0)
            } else {
                for r in report.failures() {
                    eprintln!(
                        "FAIL alpha={} T={} lambda={}: alpha_n={:.10} |err|={:.2e}{}",
                        r.alpha,
                        r.horizon,
                        r.lambda,
                        r.alpha_n,
                        r.abs_error,
                        r.print_deviation().map_or_else(String::new, |d| format!(" |dev|={d:.2e}"))
                    );
                }
                Ok(EXIT_TOLERANCE)
            }
        }
        Cmd::Solve { deriv, regime, alpha, lambda, u0, u1, horizon, n, grading, out } => {
            let problem = ProblemSpec::single(deriv.into(), regime.into(), alpha, lambda, u0, u1)?;
            let grid = TimeGrid::graded(horizon, n, grading)?;
            let trace = run_solve(&problem, &grid, &TruncationPolicy::default())?;
            emit(&trace.to_csv_string()?, out.as_ref())?;
            Ok(0)
        }
        Cmd::Estimate { theorem, trace, lambda, bracket, u0, u1, prefer, deriv, regime } => {
            let tf = TraceFile::read(&trace)?;
            let params = EstimateParams {
                theorem,
                lambda,
                bracket,
                u0,
                u1,
                prefer,
                derivative: deriv.map(Into::into),
                regime: regime.map(Into::into),
            };
            let report = run_estimate(&tf, &params)?;
            print!("{}", report.to_text());
            Ok(0)
        }
        Cmd::Ml { alpha, beta, z, gamma2, terms } => {
            let order = MLOrder::new(alpha, beta)?;
            let policy = terms.map_or_else(TruncationPolicy::default, TruncationPolicy::fixed);
            let v = if gamma2 { prabhakar_ml2(order, z, &policy)? } else { mittag_leffler(order, z, &policy)? };
            println!("{:.17e}", v.value);
            eprintln!(
                "method={:?} terms={} rel_error~{:.1e}{}{}",
                v.method,
                v.terms_used,
                v.rel_error_estimate,
                if v.truncation_warning { " truncated" } else { "" },
                if v.outside_safe_range { " outside-safe-range" } else { "" }
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
