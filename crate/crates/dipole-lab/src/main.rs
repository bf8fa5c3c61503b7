//! Command-line front end: `estimate`, `exact`, `simulate`, `compare`,
//! `pattern`, plus `--check` to revalidate a previously emitted JSON report.
//! Output is deterministic: identical arguments produce byte-identical
//! output.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use dipole_lab::analytic::exact_average_power;
use dipole_lab::error::{Error, Result};
use dipole_lab::kinematics::DipoleConfig;
use dipole_lab::radiometry::total_power_numeric;
use dipole_lab::report::{check_report, emit_pattern, run_compare, NumericParams, PatternRow};
use dipole_lab::units::{UnitSystem, ALPHA_CODATA};
use dipole_lab::ww::{Normalization, WWEstimate};
use dipole_lab::ComparisonReport;

#[derive(Parser)]
#[command(
    name = "dipole-lab",
    about = "Radiation of an oscillating point charge: photon-counting estimate, \
             exact dipole formulas, and a Lienard-Wiechert simulation",
    version,
    arg_required_else_help = true
)]
struct Cli {
    /// Revalidate the internal ratios of a JSON report file and exit.
    #[arg(long, value_name = "FILE", global = true)]
    check: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Photon-counting estimate only.
    Estimate(RunArgs),
    /// Exact analytic dipole results only.
    Exact(RunArgs),
    /// Lienard-Wiechert numeric simulation only.
    Simulate(RunArgs),
    /// All three paths plus the comparison report.
    Compare(RunArgs),
    /// Angular-pattern table across all paths and normalizations.
    Pattern(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Oscillation amplitude (length units of the chosen system).
    #[arg(long, conflicts_with = "beta")]
    z0: Option<f64>,

    /// Peak speed relative to c; z0 is derived as beta*c/omega.
    #[arg(long)]
    beta: Option<f64>,

    /// Angular frequency (rad/time).
    #[arg(long)]
    omega: f64,

    /// Charge of the oscillator.
    #[arg(long, default_value_t = 1.0)]
    charge: f64,

    /// Dimensionless units (c = 1); the default.
    #[arg(long, conflicts_with = "gaussian")]
    dimensionless: bool,

    /// Gaussian CGS units (cm, s, erg, esu).
    #[arg(long)]
    gaussian: bool,

    /// Coupling constant for dimensionless mode (default: fine-structure
    /// constant). Rejected in gaussian mode, where it is derived.
    #[arg(long)]
    alpha: Option<f64>,

    /// Measurement sphere radius in wavelengths.
    #[arg(long, default_value_t = 200.0)]
    radius_lambdas: f64,

    /// Polar quadrature order / pattern grid intervals.
    #[arg(long, default_value_t = 32)]
    ntheta: usize,

    /// Time samples per period.
    #[arg(long, default_value_t = 64)]
    ntime: usize,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[arg(long, value_enum, default_value_t = NormalizationArg::SelfConsistent)]
    normalization: NormalizationArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NormalizationArg {
    Literal,
    #[value(name = "self-consistent")]
    SelfConsistent,
}

impl From<NormalizationArg> for Normalization {
    fn from(arg: NormalizationArg) -> Self {
        match arg {
            NormalizationArg::Literal => Normalization::Literal,
            NormalizationArg::SelfConsistent => Normalization::SelfConsistent,
        }
    }
}

struct Run {
    config: DipoleConfig,
    units: UnitSystem,
    params: NumericParams,
    format: Format,
    #[allow(dead_code)]
    normalization: Normalization,
}

impl RunArgs {
    fn resolve(&self) -> Result<Run> {
        let units = if self.gaussian {
            if self.alpha.is_some() {
                return Err(Error::invalid(
                    "--alpha is only valid in dimensionless mode (derived in gaussian mode)",
                ));
            }
            UnitSystem::gaussian()
        } else {
            UnitSystem::dimensionless(self.alpha.unwrap_or(ALPHA_CODATA), self.charge)?
        };

        let z0 = match (self.z0, self.beta) {
            (Some(z0), None) => z0,
            (None, Some(beta)) => {
                if !(beta > 0.0 && beta < 1.0) {
                    return Err(Error::invalid(format!(
                        "--beta must lie in (0, 1), got {beta}"
                    )));
                }
                beta * units.c / self.omega
            }
            (None, None) => {
                return Err(Error::invalid("one of --z0 or --beta is required"));
            }
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        };

        let config = DipoleConfig::new(self.charge, z0, self.omega, &units)?;
        Ok(Run {
            config,
            units,
            params: NumericParams {
                radius_lambdas: self.radius_lambdas,
                n_theta: self.ntheta,
                n_time: self.ntime,
            },
            format: self.format,
            normalization: self.normalization.into(),
        })
    }
}

#[derive(Serialize)]
struct ExactReport {
    q: f64,
    z0: f64,
    omega: f64,
    beta: f64,
    p0: f64,
    p_exact: f64,
}

#[derive(Serialize)]
struct SimulateReport {
    q: f64,
    z0: f64,
    omega: f64,
    beta: f64,
    p0: f64,
    p_numeric: f64,
    numeric_params: NumericParams,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(path) = &cli.check {
        return run_check(path);
    }
    let command = cli
        .command
        .ok_or_else(|| Error::invalid("a subcommand or --check <FILE> is required"))?;
    match command {
        Command::Estimate(args) => {
            let run = args.resolve()?;
            let estimate = WWEstimate::evaluate(&run.config, &run.units);
            print_flat(&estimate, run.format)
        }
        Command::Exact(args) => {
            let run = args.resolve()?;
            let report = ExactReport {
                q: run.config.q(),
                z0: run.config.z0(),
                omega: run.config.omega(),
                beta: run.config.beta_max(&run.units),
                p0: run.config.dipole_moment(),
                p_exact: exact_average_power(&run.config, &run.units),
            };
            print_flat(&report, run.format)
        }
        Command::Simulate(args) => {
            let run = args.resolve()?;
            let p = total_power_numeric(
                &run.config,
                &run.units,
                run.params.radius_lambdas,
                run.params.n_theta,
                run.params.n_time,
            )?;
            let report = SimulateReport {
                q: run.config.q(),
                z0: run.config.z0(),
                omega: run.config.omega(),
                beta: run.config.beta_max(&run.units),
                p0: run.config.dipole_moment(),
                p_numeric: p,
                numeric_params: run.params,
            };
            print_flat(&report, run.format)
        }
        Command::Compare(args) => {
            let run = args.resolve()?;
            let report = run_compare(&run.config, &run.units, &run.params)?;
            print_flat(&report, run.format)
        }
        Command::Pattern(args) => {
            let run = args.resolve()?;
            let rows = emit_pattern(&run.config, &run.units, &run.params)?;
            print_pattern(&rows, run.format)
        }
    }
}

fn run_check(path: &str) -> Result<()> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
    let report: ComparisonReport = serde_json::from_str(&text)
        .map_err(|e| Error::invalid(format!("{path} is not a valid comparison report: {e}")))?;
    check_report(&report)?;
    println!("{path}: report OK");
    Ok(())
}

fn format_number(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_u64() || n.is_i64() => n.to_string(),
        Value::Number(n) => format!("{:.16e}", n.as_f64().unwrap()),
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(format_number)
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    }
}

/// Flattens a serialized report into (key, rendered value) pairs, dotting
/// nested objects.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        other => out.push((prefix.to_string(), format_number(other))),
    }
}

fn print_flat<T: Serialize>(report: &T, format: Format) -> Result<()> {
    let value = serde_json::to_value(report)
        .map_err(|e| Error::invalid(format!("serialization failed: {e}")))?;
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&value)
                .map_err(|e| Error::invalid(format!("serialization failed: {e}")))?;
            println!("{text}");
        }
        Format::Csv | Format::Table => {
            let mut pairs = Vec::new();
            flatten("", &value, &mut pairs);
            if format == Format::Csv {
                let mut wtr = csv::Writer::from_writer(std::io::stdout());
                wtr.write_record(pairs.iter().map(|(k, _)| k.as_str()))
                    .and_then(|_| wtr.write_record(pairs.iter().map(|(_, v)| v.as_str())))
                    .and_then(|_| wtr.flush().map_err(Into::into))
                    .map_err(|e| Error::invalid(format!("csv write failed: {e}")))?;
            } else {
                let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &pairs {
                    println!("{k:<width$}  {v}");
                }
            }
        }
    }
    Ok(())
}

const PATTERN_COLUMNS: [&str; 6] = [
    "theta_rad",
    "ww_literal",
    "ww_selfcons",
    "exact_literal",
    "exact_selfcons",
    "numeric",
];

fn print_pattern(rows: &[PatternRow], format: Format) -> Result<()> {
    match format {
        Format::Json => {
            let columns: Vec<Vec<f64>> = vec![
                rows.iter().map(|r| r.theta_rad).collect(),
                rows.iter().map(|r| r.ww_literal).collect(),
                rows.iter().map(|r| r.ww_selfcons).collect(),
                rows.iter().map(|r| r.exact_literal).collect(),
                rows.iter().map(|r| r.exact_selfcons).collect(),
                rows.iter().map(|r| r.numeric).collect(),
            ];
            let mut map = serde_json::Map::new();
            for (name, col) in PATTERN_COLUMNS.iter().zip(columns) {
                map.insert(name.to_string(), serde_json::to_value(col).unwrap());
            }
            let text = serde_json::to_string_pretty(&Value::Object(map))
                .map_err(|e| Error::invalid(format!("serialization failed: {e}")))?;
            println!("{text}");
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(std::io::stdout());
            wtr.write_record(PATTERN_COLUMNS)
                .map_err(|e| Error::invalid(format!("csv write failed: {e}")))?;
            for r in rows {
                wtr.write_record([
                    format!("{:.16e}", r.theta_rad),
                    format!("{:.16e}", r.ww_literal),
                    format!("{:.16e}", r.ww_selfcons),
                    format!("{:.16e}", r.exact_literal),
                    format!("{:.16e}", r.exact_selfcons),
                    format!("{:.16e}", r.numeric),
                ])
                .map_err(|e| Error::invalid(format!("csv write failed: {e}")))?;
            }
            wtr.flush()
                .map_err(|e| Error::invalid(format!("csv write failed: {e}")))?;
        }
        Format::Table => {
            println!(
                "{:<12} {:>24} {:>24} {:>24} {:>24} {:>24}",
                PATTERN_COLUMNS[0],
                PATTERN_COLUMNS[1],
                PATTERN_COLUMNS[2],
                PATTERN_COLUMNS[3],
                PATTERN_COLUMNS[4],
                PATTERN_COLUMNS[5],
            );
            for r in rows {
                println!(
                    "{:<12.6} {:>24.16e} {:>24.16e} {:>24.16e} {:>24.16e} {:>24.16e}",
                    r.theta_rad,
                    r.ww_literal,
                    r.ww_selfcons,
                    r.exact_literal,
                    r.exact_selfcons,
                    r.numeric,
                );
            }
        }
    }
    Ok(())
}
