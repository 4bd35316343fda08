//! Nyström estimates of the spectrum of the integral operator
//! `T f = ∫ K(·, x) f(x) dx` over Unif\[0,1\]^d, and decay-rate fits.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{invalid, Error, Result};
use crate::geometry::Design;
use crate::kernels::{Evaluator, KernelMode, KernelSpec};
use crate::rng::{stream, tag};

/// Largest admissible `‖Gv − λv‖ / ‖G‖` over eigenpairs.
pub const EIGEN_RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Eigenvalues below `−NEGATIVITY_TOLERANCE · λ₁` are reported as errors;
/// smaller negative values are rounding noise and are clamped to zero.
pub const NEGATIVITY_TOLERANCE: f64 = 1e-10;

const MAX_SWEEPS: usize = 10_000;

/// Descending eigenvalues of `(1/m)·Gram` for a sample of `m` points.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEstimate {
    pub mode: KernelMode,
    pub m: usize,
    pub eigenvalues: Vec<f64>,
    pub seed: u64,
    /// `(1/m) Σᵢ K_mode(xᵢ, xᵢ)`, which the eigenvalues must sum to.
    pub diagonal_mean: f64,
}

impl SpectrumEstimate {
    /// Builds an estimate from given eigenvalues (sorted descending here).
    pub fn from_eigenvalues(mode: KernelMode, mut eigenvalues: Vec<f64>, seed: u64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let diagonal_mean = eigenvalues.iter().sum();
        Self { mode, m: eigenvalues.len(), eigenvalues, seed, diagonal_mean }
    }

    /// `|Σ λ̂ − diagonal_mean| / diagonal_mean`.
    pub fn trace_residual(&self) -> f64 {
        let sum: f64 = self.eigenvalues.iter().sum();
        (sum - self.diagonal_mean).abs() / self.diagonal_mean.abs().max(f64::MIN_POSITIVE)
    }

    /// `λ̂_j`, 1-indexed.
    pub fn lambda(&self, j: usize) -> f64 {
        self.eigenvalues[j - 1]
    }
}

/// The sample used by [`nystrom_spectrum`]; shared by every mode so that
/// spectra with the same seed are matched.
pub fn nystrom_sample(m: usize, d: usize, seed: u64) -> Result<Design> {
    let mut rng = stream(seed, &[tag("nystrom"), d as u64, m as u64]);
    Design::uniform(&mut rng, m, d)
}

/// Nyström spectrum of the `mode` kernel from `m` seeded uniform points.
pub fn nystrom_spectrum(k: &KernelSpec, mode: KernelMode, m: usize, d: usize, seed: u64) -> Result<SpectrumEstimate> {
    if m < 2 {
        return Err(invalid(format!("Nyström sample size must be at least 2, got {m}")));
    }
    let design = nystrom_sample(m, d, seed)?;
    spectrum_of_design(k, mode, &design, seed)
}

/// Nyström spectrum over a given design.
pub fn spectrum_of_design(k: &KernelSpec, mode: KernelMode, design: &Design, seed: u64) -> Result<SpectrumEstimate> {
    let m = design.len();
    if m < 2 {
        return Err(invalid(format!("Nyström sample size must be at least 2, got {m}")));
    }
    let evaluator = Evaluator::new(*k, mode, design.dim())?;
    let mut g = evaluator.gram(design)?;
    g /= m as f64;
    let diagonal_mean = g.trace();
    let eigenvalues = symmetric_eigenvalues(g)?;
    Ok(SpectrumEstimate { mode, m, eigenvalues, seed, diagonal_mean })
}

/// All eigenvalues of a dense symmetric matrix, descending, after checking
/// every eigenpair residual and numerical nonnegativity.
pub fn symmetric_eigenvalues(g: DMatrix<f64>) -> Result<Vec<f64>> {
    let n = g.nrows();
    let eig = SymmetricEigen::try_new(g.clone(), f64::EPSILON, MAX_SWEEPS)
        .ok_or_else(|| Error::EigenSolver(format!("no convergence after {MAX_SWEEPS} sweeps (n = {n})")))?;
    let norm = eig.eigenvalues.amax();
    let residuals = &g * &eig.eigenvectors - &eig.eigenvectors * DMatrix::from_diagonal(&eig.eigenvalues);
    for (j, col) in residuals.column_iter().enumerate() {
        let r = col.norm();
        if !(r <= EIGEN_RESIDUAL_TOLERANCE * norm) {
            return Err(Error::EigenSolver(format!(
                "eigenpair {j} residual {r:e} exceeds {EIGEN_RESIDUAL_TOLERANCE:e} · {norm:e}"
            )));
        }
    }
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    let floor = -NEGATIVITY_TOLERANCE * values[0].max(0.0);
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v < floor) {
        return Err(Error::NonPositiveEigenvalue { index: index + 1, value });
    }
    values.iter_mut().for_each(|v| *v = v.max(0.0));
    Ok(values)
}

/// Least-squares slope of `log λ̂_j` against `log j` for `j ∈ [j_min, j_max]`.
pub fn decay_slope(s: &SpectrumEstimate, j_min: usize, j_max: usize) -> Result<f64> {
    if !(2 <= j_min && j_min < j_max && j_max <= s.eigenvalues.len()) {
        return Err(invalid(format!(
            "slope range [{j_min}, {j_max}] must satisfy 2 <= j_min < j_max <= {}",
            s.eigenvalues.len()
        )));
    }
    let mut xs = Vec::with_capacity(j_max - j_min + 1);
    let mut ys = Vec::with_capacity(j_max - j_min + 1);
    for j in j_min..=j_max {
        let v = s.lambda(j);
        if !(v > 0.0) {
            return Err(Error::NonPositiveEigenvalue { index: j, value: v });
        }
        xs.push((j as f64).ln());
        ys.push(v.ln());
    }
    let count = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / count;
    let my = ys.iter().sum::<f64>() / count;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}
