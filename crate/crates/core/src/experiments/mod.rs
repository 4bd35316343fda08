//! Seeded Monte Carlo studies that emit CSV.
//!
//! Each study is a pure function of an [`ExperimentConfig`]: every trial
//! draws from its own [`rng::stream`](crate::rng::stream) keyed by the master
//! seed, the experiment, the dimension, the sample size and the trial index,
//! trials run in parallel into pre-assigned slots, and rows are emitted in a
//! fixed order. The same configuration therefore yields a byte-identical CSV
//! regardless of the number of threads.

mod table;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

pub use table::{Cell, Table};

use crate::bounds::{eigen_bound_covering, eigen_bound_weyl, h_tail_bound, l2_bound, p_constant, tilde_constant, BoundInputs};
use crate::error::{invalid, Error, Result};
use crate::geometry::{
    candidates_with_corners, cone_condition_factor, cone_parameters, fill_distance_estimate, inradius, Design,
    DomainKind,
};
use crate::interpolation::{fit, l2_error, make_invariant_target};
use crate::kernels::{KernelMode, KernelSpec, ModeCaps};
use crate::rng::{stream, tag};
use crate::spectral::{decay_slope, nystrom_spectrum};

/// Atoms in the random invariant targets of the interpolation study.
pub const TARGET_ATOMS: usize = 3;

/// Modes compared by the interpolation study, fitted on identical data.
pub const INTERP_MODES: [KernelMode; 3] = [KernelMode::Plain, KernelMode::Sorted, KernelMode::PermSingle];

/// First index of the decay-slope fit; the last is `m / 10`.
pub const SLOPE_J_MIN: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    Table1,
    TailCurves,
    InterpCompare,
    EigenDecay,
    BoundsReport,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 5] = [
        ExperimentKind::Table1,
        ExperimentKind::TailCurves,
        ExperimentKind::InterpCompare,
        ExperimentKind::EigenDecay,
        ExperimentKind::BoundsReport,
    ];

    /// Command-line name, also used as the default output stem.
    pub fn label(self) -> &'static str {
        match self {
            ExperimentKind::Table1 => "table1",
            ExperimentKind::TailCurves => "tail-curves",
            ExperimentKind::InterpCompare => "interp-compare",
            ExperimentKind::EigenDecay => "eigen-decay",
            ExperimentKind::BoundsReport => "bounds-report",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|k| k.label() == key)
            .ok_or_else(|| invalid(format!("unknown experiment '{s}'")))
    }
}

/// Full description of one study.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub dims: Vec<usize>,
    /// Design sizes; Nyström sample sizes `m` for [`ExperimentKind::EigenDecay`].
    pub ns: Vec<usize>,
    pub trials: usize,
    pub eps_grid: Vec<f64>,
    pub kernel: KernelSpec,
    /// Smoothness degree used for every bound (overrides `kernel.nu`).
    pub nu: u32,
    pub alpha: f64,
    pub mc_samples: usize,
    pub candidate_count: usize,
    pub seed: u64,
    pub out_path: PathBuf,
    /// Record wall-clock fit times; off by default so output stays reproducible.
    pub timings: bool,
}

impl ExperimentConfig {
    pub const DEFAULT_DIMS: [usize; 4] = [3, 6, 9, 12];
    pub const DEFAULT_NS: [usize; 3] = [50, 500, 5000];
    pub const DEFAULT_TRIALS: usize = 200;
    pub const DEFAULT_EPS: &'static str = "0.05:1.5:0.05";
    pub const DEFAULT_AMPLITUDE: f64 = 0.159_154_9;
    pub const DEFAULT_BANDWIDTH: f64 = 1.0;
    pub const DEFAULT_NU: u32 = 2;
    pub const DEFAULT_ALPHA: f64 = crate::bounds::DEFAULT_ALPHA;
    pub const DEFAULT_MC_SAMPLES: usize = 20_000;
    pub const DEFAULT_CANDIDATES: usize = 200_000;
    pub const DEFAULT_SEED: u64 = 20_240_601;

    /// The documented defaults for `experiment`, writing to `<label>.csv`.
    pub fn new(experiment: ExperimentKind) -> Self {
        Self {
            experiment,
            dims: Self::DEFAULT_DIMS.to_vec(),
            ns: Self::DEFAULT_NS.to_vec(),
            trials: Self::DEFAULT_TRIALS,
            eps_grid: parse_eps_grid(Self::DEFAULT_EPS).expect("default grid parses"),
            kernel: KernelSpec::gaussian(Self::DEFAULT_AMPLITUDE, Self::DEFAULT_BANDWIDTH, Self::DEFAULT_NU)
                .expect("default kernel is valid"),
            nu: Self::DEFAULT_NU,
            alpha: Self::DEFAULT_ALPHA,
            mc_samples: Self::DEFAULT_MC_SAMPLES,
            candidate_count: Self::DEFAULT_CANDIDATES,
            seed: Self::DEFAULT_SEED,
            out_path: PathBuf::from(format!("{}.csv", experiment.label())),
            timings: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(invalid("trials must be at least 1"));
        }
        if self.dims.is_empty() || self.ns.is_empty() {
            return Err(invalid("dims and ns must be nonempty"));
        }
        if self.dims.contains(&0) {
            return Err(Error::ZeroDimension);
        }
        if self.ns.contains(&0) {
            return Err(invalid("every n must be at least 1"));
        }
        if self.nu == 0 {
            return Err(invalid("nu must be at least 1"));
        }
        if !(self.alpha > 1.0 && self.alpha.is_finite()) {
            return Err(invalid(format!("alpha must exceed 1, got {}", self.alpha)));
        }
        if self.mc_samples == 0 {
            return Err(invalid("mc_samples must be at least 1"));
        }
        if self.eps_grid.iter().any(|&e| !(e > 0.0 && e.is_finite())) {
            return Err(invalid("every epsilon must be positive and finite"));
        }
        match self.experiment {
            ExperimentKind::TailCurves if self.eps_grid.is_empty() => Err(invalid("epsilon grid must be nonempty")),
            ExperimentKind::InterpCompare => {
                self.dims.iter().try_for_each(|&d| ModeCaps::default().check(KernelMode::PermSingle, d))
            }
            ExperimentKind::EigenDecay if self.ns.iter().any(|&m| m < 2) => {
                Err(invalid("Nyström sample sizes must be at least 2"))
            }
            _ => Ok(()),
        }
    }

    /// The configured kernel with `nu` set to the bound smoothness degree.
    pub fn bound_kernel(&self) -> KernelSpec {
        KernelSpec { nu: self.nu, ..self.kernel }
    }
}

/// Parses `start:stop:step` (inclusive of `stop` up to rounding) or a
/// comma-separated list.
pub fn parse_eps_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let nums = parts
            .iter()
            .map(|p| p.trim().parse::<f64>().map_err(|_| invalid(format!("bad number '{p}' in grid '{s}'"))))
            .collect::<Result<Vec<f64>>>()?;
        let (start, stop, step) = (nums[0], nums[1], nums[2]);
        if !(step > 0.0 && stop >= start && start.is_finite() && stop.is_finite()) {
            return Err(invalid(format!("grid '{s}' needs step > 0 and stop >= start")));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        return Ok((0..count).map(|i| start + i as f64 * step).collect());
    }
    if parts.len() != 1 {
        return Err(invalid(format!("grid '{s}' must be start:stop:step or a comma list")));
    }
    parse_list(s)
}

/// Parses a comma-separated list.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| invalid(format!("bad list entry '{p}' in '{s}'"))))
        .collect()
}

/// Runs the configured study and writes its CSV to `cfg.out_path`.
pub fn execute(cfg: &ExperimentConfig) -> Result<Table> {
    let table = run(cfg)?;
    table.write_csv(&cfg.out_path)?;
    Ok(table)
}

/// Runs the configured study without writing anything.
pub fn run(cfg: &ExperimentConfig) -> Result<Table> {
    cfg.validate()?;
    match cfg.experiment {
        ExperimentKind::Table1 => run_table1(cfg),
        ExperimentKind::TailCurves => run_tail_curves(cfg),
        ExperimentKind::InterpCompare => run_interp_compare(cfg),
        ExperimentKind::EigenDecay => run_eigen_decay(cfg),
        ExperimentKind::BoundsReport => run_bounds_report(cfg),
    }
}

fn experiment_tag(kind: ExperimentKind) -> u64 {
    tag(kind.label())
}

fn derived_seed(master: u64, labels: &[u64]) -> u64 {
    stream(master, labels).random()
}

fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Fill distances of one random design in the cube and in the sorted simplex,
/// measured against a shared candidate set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FillTrial {
    pub h: f64,
    pub h_sorted: f64,
}

/// One [`FillTrial`] per trial for `(d, n)`, in trial order.
pub fn fill_distance_trials(cfg: &ExperimentConfig, d: usize, n: usize) -> Result<Vec<FillTrial>> {
    let exp = experiment_tag(cfg.experiment);
    (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream(cfg.seed, &[exp, d as u64, n as u64, t as u64]);
            let design = Design::uniform(&mut rng, n, d)?;
            let candidates = candidates_with_corners(&mut rng, d, cfg.candidate_count)?;
            let h = fill_distance_estimate(&design, DomainKind::Cube, &candidates)?;
            let h_sorted = fill_distance_estimate(&design, DomainKind::SortedSimplex, &candidates)?;
            // Candidate-wise ‖sort c − sort x‖ ≤ ‖c − x‖; the clamp only removes
            // last-bit differences from summing the squares in another order.
            Ok(FillTrial { h, h_sorted: h_sorted.min(h) })
        })
        .collect()
}

/// Mean fill distances of uniform designs; one row per `(d, n)`.
pub fn run_table1(cfg: &ExperimentConfig) -> Result<Table> {
    let mut table = Table::new(&["d", "n", "trials", "mean_h", "mean_h_sorted", "se_h", "se_h_sorted"]);
    for &d in &cfg.dims {
        for &n in &cfg.ns {
            let trials = fill_distance_trials(cfg, d, n)?;
            let (mean_h, se_h) = mean_and_se(&trials.iter().map(|t| t.h).collect::<Vec<_>>());
            let (mean_s, se_s) = mean_and_se(&trials.iter().map(|t| t.h_sorted).collect::<Vec<_>>());
            table.push(vec![
                d.into(),
                n.into(),
                cfg.trials.into(),
                mean_h.into(),
                mean_s.into(),
                se_h.into(),
                se_s.into(),
            ]);
        }
    }
    Ok(table)
}

/// Empirical `P[h > ε]` next to the closed-form tail bounds; one row per `(d, n, ε)`.
pub fn run_tail_curves(cfg: &ExperimentConfig) -> Result<Table> {
    let mut table = Table::new(&[
        "d",
        "n",
        "eps",
        "trials",
        "emp_p_plain",
        "emp_p_sorted",
        "bound_plain",
        "bound_sorted",
        "bound_plain_unclipped",
        "bound_sorted_unclipped",
        "bound_plain_valid",
        "bound_sorted_valid",
    ]);
    for &d in &cfg.dims {
        for &n in &cfg.ns {
            let trials = fill_distance_trials(cfg, d, n)?;
            let count = trials.len() as f64;
            for &eps in &cfg.eps_grid {
                let emp_plain = trials.iter().filter(|t| t.h > eps).count() as f64 / count;
                let emp_sorted = trials.iter().filter(|t| t.h_sorted > eps).count() as f64 / count;
                let plain = h_tail_bound(eps, n, d, 1.0, DomainKind::Cube);
                let sorted = h_tail_bound(eps, n, d, 1.0, DomainKind::SortedSimplex);
                table.push(vec![
                    d.into(),
                    n.into(),
                    eps.into(),
                    cfg.trials.into(),
                    emp_plain.into(),
                    emp_sorted.into(),
                    plain.value.into(),
                    sorted.value.into(),
                    plain.unclipped.into(),
                    sorted.unclipped.into(),
                    plain.valid.into(),
                    sorted.valid.into(),
                ]);
            }
        }
    }
    Ok(table)
}

struct InterpRow {
    mode: KernelMode,
    h: f64,
    l2_error: f64,
    bound: f64,
    bound_valid: bool,
    max_error: f64,
    fit_ms: f64,
    status: String,
}

impl InterpRow {
    fn failed(mode: KernelMode, h: f64, err: &Error) -> Self {
        Self {
            mode,
            h,
            l2_error: f64::NAN,
            bound: f64::NAN,
            bound_valid: false,
            max_error: f64::NAN,
            fit_ms: 0.0,
            status: err.to_string(),
        }
    }
}

fn interp_trial(cfg: &ExperimentConfig, d: usize, n: usize, trial: usize) -> Result<Vec<InterpRow>> {
    let exp = experiment_tag(cfg.experiment);
    let kernel = cfg.kernel;
    // The target depends on (d, trial) only, so a trial follows one target across n.
    let target_seed = derived_seed(cfg.seed, &[exp, tag("target"), d as u64, trial as u64]);
    let target = make_invariant_target(&kernel, d, TARGET_ATOMS, target_seed)?;
    let mut rng = stream(cfg.seed, &[exp, d as u64, n as u64, trial as u64]);
    let design = Design::uniform(&mut rng, n, d)?;
    let candidates = candidates_with_corners(&mut rng, d, cfg.candidate_count)?;
    let l2_seed: u64 = rng.random();
    let y = target.values(&design)?;
    let h_cube = fill_distance_estimate(&design, DomainKind::Cube, &candidates)?;
    let h_sorted = fill_distance_estimate(&design, DomainKind::SortedSimplex, &candidates)?;
    let inputs = BoundInputs::for_kernel(&cfg.bound_kernel(), d, target.norm_sq().sqrt(), cfg.alpha)?;

    let mut rows = Vec::with_capacity(INTERP_MODES.len());
    for mode in INTERP_MODES {
        let h = if mode == KernelMode::Sorted { h_sorted } else { h_cube };
        let start = Instant::now();
        let fitted = fit(&kernel, mode, &design, &y);
        let fit_ms = if cfg.timings { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
        let row = match fitted.and_then(|f| l2_error(&target, &f, cfg.mc_samples, l2_seed)) {
            Ok(est) => {
                let bound = l2_bound(&inputs, h, mode).report;
                InterpRow {
                    mode,
                    h,
                    l2_error: est.error,
                    bound: bound.value,
                    bound_valid: bound.valid,
                    max_error: est.max_abs,
                    fit_ms,
                    status: "ok".to_owned(),
                }
            }
            Err(e) if e.is_numerical() => InterpRow::failed(mode, h, &e),
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    Ok(rows)
}

/// Interpolation of random invariant targets in the plain, sorted and
/// averaged modes; one row per `(d, n, trial, mode)`.
pub fn run_interp_compare(cfg: &ExperimentConfig) -> Result<Table> {
    let mut table = Table::new(&[
        "d",
        "n",
        "trial",
        "mode",
        "h",
        "l2_error",
        "l2_bound_value",
        "bound_valid",
        "pointwise_max_error",
        "fit_ms",
        "status",
    ]);
    for &d in &cfg.dims {
        for &n in &cfg.ns {
            let trials: Vec<Vec<InterpRow>> =
                (0..cfg.trials).into_par_iter().map(|t| interp_trial(cfg, d, n, t)).collect::<Result<_>>()?;
            for (t, rows) in trials.into_iter().enumerate() {
                for r in rows {
                    table.push(vec![
                        d.into(),
                        n.into(),
                        t.into(),
                        r.mode.label().into(),
                        r.h.into(),
                        r.l2_error.into(),
                        r.bound.into(),
                        r.bound_valid.into(),
                        r.max_error.into(),
                        r.fit_ms.into(),
                        r.status.into(),
                    ]);
                }
            }
        }
    }
    Ok(table)
}

/// Nyström spectra of the plain and sorted kernels on matched samples next
/// to the covering and Weyl bounds; one row per `(d, m, trial, mode, j)` for
/// `j ≤ max(1, m/4)`.
pub fn run_eigen_decay(cfg: &ExperimentConfig) -> Result<Table> {
    let mut table = Table::new(&[
        "d",
        "m",
        "trial",
        "mode",
        "j",
        "lambda_hat",
        "bound_covering",
        "bound_weyl",
        "covering_valid",
        "weyl_valid",
        "trace_residual",
        "slope",
        "slope_j_min",
        "slope_j_max",
    ]);
    let exp = experiment_tag(cfg.experiment);
    let kernel = cfg.kernel;
    for &d in &cfg.dims {
        let inputs = BoundInputs::for_kernel(&cfg.bound_kernel(), d, 1.0, cfg.alpha)?;
        for &m in &cfg.ns {
            let j_max_slope = m / 10;
            let spectra = (0..cfg.trials)
                .into_par_iter()
                .map(|t| {
                    let seed = derived_seed(cfg.seed, &[exp, d as u64, m as u64, t as u64]);
                    [KernelMode::Plain, KernelMode::Sorted]
                        .into_iter()
                        .map(|mode| nystrom_spectrum(&kernel, mode, m, d, seed))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            for (t, pair) in spectra.iter().enumerate() {
                for s in pair {
                    let slope = decay_slope(s, SLOPE_J_MIN, j_max_slope).unwrap_or(f64::NAN);
                    let trace = s.trace_residual();
                    for j in 1..=(m / 4).max(1) {
                        let cov = eigen_bound_covering(j, &inputs, s.mode);
                        let weyl = eigen_bound_weyl(j, &inputs, s.mode);
                        table.push(vec![
                            d.into(),
                            m.into(),
                            t.into(),
                            s.mode.label().into(),
                            j.into(),
                            s.lambda(j).into(),
                            cov.value.into(),
                            weyl.value.into(),
                            cov.valid.into(),
                            weyl.valid.into(),
                            trace.into(),
                            slope.into(),
                            SLOPE_J_MIN.into(),
                            j_max_slope.into(),
                        ]);
                    }
                }
            }
        }
    }
    Ok(table)
}

/// Every constant entering the bounds; one row per `(d, ν)` for `ν ≤ cfg.nu`.
pub fn run_bounds_report(cfg: &ExperimentConfig) -> Result<Table> {
    let mut table = Table::new(&[
        "d",
        "nu",
        "c_k0",
        "c_knu",
        "tilde_constant",
        "tilde_valid",
        "p_constant",
        "theta_cube",
        "r_cube",
        "theta_sorted",
        "r_sorted",
        "cone_factor_cube",
        "cone_factor_sorted",
        "inradius_cube",
        "inradius_sorted",
        "alpha",
    ]);
    for &d in &cfg.dims {
        let cube = cone_parameters(d, DomainKind::Cube)?;
        let simplex = cone_parameters(d, DomainKind::SortedSimplex)?;
        for nu in 1..=cfg.nu {
            let kernel = KernelSpec { nu, ..cfg.kernel };
            let inputs = BoundInputs::for_kernel(&kernel, d, 1.0, cfg.alpha)?;
            let tilde = tilde_constant(&inputs);
            table.push(vec![
                d.into(),
                nu.into(),
                inputs.c_k0.into(),
                inputs.c_knu.into(),
                tilde.value.into(),
                tilde.valid.into(),
                p_constant(&inputs).into(),
                cube.theta.into(),
                cube.radius.into(),
                simplex.theta.into(),
                simplex.radius.into(),
                cone_condition_factor(nu, d, DomainKind::Cube).into(),
                cone_condition_factor(nu, d, DomainKind::SortedSimplex).into(),
                inradius(d, DomainKind::Cube).into(),
                inradius(d, DomainKind::SortedSimplex).into(),
                cfg.alpha.into(),
            ]);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(kind: ExperimentKind) -> ExperimentConfig {
        ExperimentConfig {
            dims: vec![2, 3],
            ns: vec![10, 20],
            trials: 4,
            eps_grid: vec![0.1, 0.3, 0.6],
            candidate_count: 500,
            mc_samples: 200,
            ..ExperimentConfig::new(kind)
        }
    }

    #[test]
    fn eps_grid_parsing() {
        let g = parse_eps_grid("0.05:1.5:0.05").unwrap();
        assert_eq!(g.len(), 30);
        assert!((g[29] - 1.5).abs() < 1e-12);
        assert_eq!(parse_eps_grid("0.1, 0.2").unwrap(), vec![0.1, 0.2]);
        assert!(parse_eps_grid("1:0:0.1").is_err());
        assert!(parse_eps_grid("0:1:0").is_err());
        assert!(parse_eps_grid("a:b").is_err());
        assert!(parse_list::<usize>("3,x").is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in ExperimentKind::ALL {
            assert_eq!(kind.label().parse::<ExperimentKind>().unwrap(), kind);
        }
        assert_eq!("tail_curves".parse::<ExperimentKind>().unwrap(), ExperimentKind::TailCurves);
        assert!("table2".parse::<ExperimentKind>().is_err());
    }

    #[test]
    fn validation() {
        let mut cfg = small(ExperimentKind::Table1);
        assert!(cfg.validate().is_ok());
        cfg.trials = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = small(ExperimentKind::InterpCompare);
        cfg.dims = vec![7];
        assert!(matches!(cfg.validate(), Err(Error::FactorialCap { .. })));
        let mut cfg = small(ExperimentKind::EigenDecay);
        cfg.ns = vec![1];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn table1_dominance_and_shape() {
        let cfg = small(ExperimentKind::Table1);
        for t in fill_distance_trials(&cfg, 3, 10).unwrap() {
            assert!(t.h_sorted <= t.h, "{} {}", t.h_sorted, t.h);
        }
        let table = run(&cfg).unwrap();
        assert_eq!(table.len(), 4);
        let h = table.numbers("mean_h").unwrap();
        let s = table.numbers("mean_h_sorted").unwrap();
        for (a, b) in h.iter().zip(&s) {
            assert!(b.unwrap() <= a.unwrap());
        }
    }

    #[test]
    fn tail_rows() {
        let table = run(&small(ExperimentKind::TailCurves)).unwrap();
        assert_eq!(table.len(), 2 * 2 * 3);
        let plain = table.numbers("emp_p_plain").unwrap();
        let sorted = table.numbers("emp_p_sorted").unwrap();
        for (p, s) in plain.iter().zip(&sorted) {
            assert!(s.unwrap() <= p.unwrap());
        }
    }

    #[test]
    fn interp_rows_and_determinism() {
        let mut cfg = small(ExperimentKind::InterpCompare);
        cfg.dims = vec![2];
        cfg.kernel = KernelSpec::gaussian(1.0, 0.3, 2).unwrap();
        let a = run(&cfg).unwrap();
        assert_eq!(a.len(), 2 * 4 * 3);
        let b = run(&cfg).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn eigen_rows() {
        let mut cfg = small(ExperimentKind::EigenDecay);
        cfg.dims = vec![2];
        cfg.ns = vec![40];
        cfg.trials = 2;
        let table = run(&cfg).unwrap();
        assert_eq!(table.len(), 2 * 2 * 10);
        for r in table.numbers("trace_residual").unwrap() {
            assert!(r.unwrap() < 1e-8);
        }
    }

    #[test]
    fn bounds_report_rows() {
        let mut cfg = small(ExperimentKind::BoundsReport);
        cfg.dims = vec![4];
        let table = run(&cfg).unwrap();
        assert_eq!(table.len(), 2);
        let theta = table.numbers("theta_cube").unwrap()[0].unwrap();
        assert!((theta - std::f64::consts::FRAC_PI_6).abs() < 1e-12);
        assert_eq!(table.numbers("r_cube").unwrap()[0], Some(0.5));
    }
}
