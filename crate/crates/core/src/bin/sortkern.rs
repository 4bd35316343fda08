//! Command-line driver for the Monte Carlo studies.
//!
//! Exit codes: 0 on success, 1 on invalid configuration or I/O failure,
//! 2 on a numerical failure (factorization, eigensolver, residual checks).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sortkern::experiments::{execute, parse_eps_grid, parse_list, ExperimentConfig, ExperimentKind};
use sortkern::kernels::KernelFamily;
use sortkern::{Error, KernelSpec};

#[derive(Debug, Parser)]
#[command(name = "sortkern", version, about = "Sorted-kernel Monte Carlo studies; every study writes one CSV")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mean fill distances of uniform designs in the cube and the sorted simplex.
    Table1(Options),
    /// Empirical fill-distance tail probabilities against the closed-form bounds.
    TailCurves(Options),
    /// L² errors of plain, sorted and averaged interpolants of invariant targets.
    InterpCompare(Options),
    /// Nyström spectra with covering and Weyl eigenvalue bounds (--n sets m).
    EigenDecay(Options),
    /// Every bound constant, one row per (d, nu).
    BoundsReport(Options),
}

#[derive(Debug, Args)]
struct Options {
    /// Dimensions, comma separated.
    #[arg(long = "d", default_value = "3,6,9,12")]
    dims: String,
    /// Sample sizes, comma separated.
    #[arg(long = "n", default_value = "50,500,5000")]
    ns: String,
    /// Trials per (d, n).
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_TRIALS)]
    trials: usize,
    /// Epsilon grid: start:stop:step or a comma list.
    #[arg(long, default_value = ExperimentConfig::DEFAULT_EPS)]
    eps: String,
    /// Base kernel family.
    #[arg(long, default_value = "gaussian")]
    kernel: String,
    /// Kernel amplitude a in a·exp(−r²/2σ²).
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_AMPLITUDE)]
    amplitude: f64,
    /// Kernel length-scale σ.
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_BANDWIDTH)]
    bandwidth: f64,
    /// Smoothness degree used by the bounds.
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_NU)]
    nu: u32,
    /// Slack of the asymptotic sorted bounds.
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_ALPHA)]
    alpha: f64,
    /// Monte Carlo points per L² error estimate.
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_MC_SAMPLES)]
    mc_samples: usize,
    /// Uniform candidates per fill-distance estimate (cube corners are added).
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_CANDIDATES)]
    candidates: usize,
    /// Master seed.
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_SEED)]
    seed: u64,
    /// Output CSV path [default: <experiment>.csv].
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock fit times (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

impl Options {
    fn into_config(self, experiment: ExperimentKind) -> Result<ExperimentConfig, Error> {
        let family: KernelFamily = self.kernel.parse()?;
        let kernel = match family {
            KernelFamily::Gaussian => KernelSpec::gaussian(self.amplitude, self.bandwidth, self.nu)?,
            #[allow(unreachable_patterns)]
            other => return Err(Error::InvalidParameter(format!("unsupported kernel family {other:?}"))),
        };
        let defaults = ExperimentConfig::new(experiment);
        Ok(ExperimentConfig {
            experiment,
            dims: parse_list(&self.dims)?,
            ns: parse_list(&self.ns)?,
            trials: self.trials,
            eps_grid: parse_eps_grid(&self.eps)?,
            kernel,
            nu: self.nu,
            alpha: self.alpha,
            mc_samples: self.mc_samples,
            candidate_count: self.candidates,
            seed: self.seed,
            out_path: self.out.unwrap_or(defaults.out_path),
            timings: self.timings,
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (kind, options) = match cli.command {
        Command::Table1(o) => (ExperimentKind::Table1, o),
        Command::TailCurves(o) => (ExperimentKind::TailCurves, o),
        Command::InterpCompare(o) => (ExperimentKind::InterpCompare, o),
        Command::EigenDecay(o) => (ExperimentKind::EigenDecay, o),
        Command::BoundsReport(o) => (ExperimentKind::BoundsReport, o),
    };
    let result = options.into_config(kind).and_then(|cfg| execute(&cfg).map(|t| (t, cfg.out_path)));
    match result {
        Ok((table, path)) => {
            eprintln!("{kind}: wrote {} rows to {}", table.len(), path.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 2 } else { 1 })
        }
    }
}
