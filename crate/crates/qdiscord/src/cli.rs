//! Argument parsing and command dispatch.

use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use qdiscord_core::StateFamily;

use crate::config::FileConfig;
use crate::error::CliError;
use crate::format::{render, Format, Record};
use crate::sweep::{self, linspace, SweepConfig};
use crate::verify;

#[derive(Debug, Parser)]
#[command(
    name = "qdiscord",
    version,
    about = "Discord and entanglement sweeps for Werner and quasi-Werner cat states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discord of the Zurek state over (a, theta)
    ZurekSurface(SweepArgs),
    /// Quasi-Werner discord over (|alpha|^2, a, theta), closed form and pipeline
    QuasiSurface(SweepArgs),
    /// E, minimum discord and their difference for perfect Werner states
    WernerCurves(SweepArgs),
    /// E, minimum discord and their difference over (|alpha|^2, a)
    QuasiCurves(SweepArgs),
    /// Run every closed-form vs numerical check and print the deviations
    Verify,
}

#[derive(Debug, Default, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub a_min: Option<f64>,
    #[arg(long)]
    pub a_max: Option<f64>,
    /// Number of a samples, endpoints included
    #[arg(long)]
    pub a_steps: Option<usize>,
    /// Number of theta samples, endpoints included
    #[arg(long)]
    pub theta_steps: Option<usize>,
    /// Mean photon number |alpha|^2; repeat or comma-separate for several
    #[arg(long = "alpha2", value_delimiter = ',')]
    pub alpha2: Vec<f64>,
    /// psi+, psi-, phi+ or phi-
    #[arg(long, value_parser = parse_family)]
    pub family: Option<StateFamily>,
    /// Output file; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
    /// Flat TOML file with defaults for the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<StateFamily, String> {
    s.parse()
        .map_err(|_| format!("unknown family `{s}` (expected psi+, psi-, phi+ or phi-)"))
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepKind {
    Zurek,
    QuasiSurface,
    WernerCurves,
    QuasiCurves,
}

impl SweepKind {
    fn theta_range(self) -> (f64, f64, usize) {
        match self {
            SweepKind::Zurek => (-PI, PI, sweep::DEFAULT_ZUREK_THETA_STEPS),
            _ => (0.0, PI, sweep::DEFAULT_THETA_STEPS),
        }
    }
}

/// Merges flags, config file and defaults, in that order of precedence.
pub fn resolve(args: &SweepArgs, kind: SweepKind) -> Result<SweepConfig, CliError> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let a_min = args.a_min.or(file.a_min).unwrap_or(0.0);
    let a_max = args.a_max.or(file.a_max).unwrap_or(1.0);
    let a_steps = args.a_steps.or(file.a_steps).unwrap_or(sweep::DEFAULT_A_STEPS);
    let (theta_lo, theta_hi, theta_default) = kind.theta_range();
    let theta_steps = args.theta_steps.or(file.theta_steps).unwrap_or(theta_default);
    let mut mean_photon_list = if !args.alpha2.is_empty() {
        args.alpha2.clone()
    } else {
        file.alpha2
            .unwrap_or_else(|| sweep::DEFAULT_MEAN_PHOTONS.to_vec())
    };
    mean_photon_list.sort_by(f64::total_cmp);
    mean_photon_list.dedup();
    let family = match (args.family, file.family) {
        (Some(f), _) => f,
        (None, Some(name)) => parse_family(&name).map_err(|message| CliError::Config {
            path: args.config.clone().unwrap_or_default(),
            message,
        })?,
        (None, None) => StateFamily::PsiPlus,
    };
    if a_min > a_max {
        return Err(CliError::Invalid(format!("a-min {a_min} exceeds a-max {a_max}")));
    }
    let cfg = SweepConfig {
        a_grid: linspace(a_min, a_max, a_steps),
        theta_grid: linspace(theta_lo, theta_hi, theta_steps),
        mean_photon_list,
        family,
        output_path: args.out.clone().or(file.out),
        format: args.format.or(file.format).unwrap_or_default(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn emit<R: Record>(rows: &[R], cfg: &SweepConfig) -> Result<(), CliError> {
    let bytes = render(rows, cfg.format)?;
    match &cfg.output_path {
        Some(path) => write_file(path, &bytes),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&bytes)
                .and_then(|()| out.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::ZurekSurface(args) => {
            let cfg = resolve(&args, SweepKind::Zurek)?;
            emit(&sweep::zurek_surface(&cfg)?, &cfg)
        }
        Command::QuasiSurface(args) => {
            let cfg = resolve(&args, SweepKind::QuasiSurface)?;
            if cfg.family.is_maximally_entangled() {
                eprintln!(
                    "note: discord of {} Werner states does not depend on theta; writing werner-curves instead",
                    cfg.family
                );
                return emit(&sweep::werner_curves(&cfg)?, &cfg);
            }
            emit(&sweep::quasi_surface(&cfg)?, &cfg)
        }
        Command::WernerCurves(args) => {
            let cfg = resolve(&args, SweepKind::WernerCurves)?;
            emit(&sweep::werner_curves(&cfg)?, &cfg)
        }
        Command::QuasiCurves(args) => {
            let cfg = resolve(&args, SweepKind::QuasiCurves)?;
            emit(&sweep::quasi_curves(&cfg)?, &cfg)
        }
        Command::Verify => {
            let report = verify::run()?;
            println!("{report}");
            report.into_result().map(|_| ())
        }
    }
}
