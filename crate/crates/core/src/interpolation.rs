//! Minimal-norm kernel interpolation, permutation-invariant ground truths
//! with known RKHS norm, and Monte Carlo L² errors.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::geometry::{sort_desc, Design};
use crate::kernels::{Evaluator, KernelMode, KernelSpec};
use crate::rng::{stream, tag, uniform_rows};

/// Relative diagonal jitter levels tried after an unjittered factorization fails.
pub const JITTER_LADDER: [f64; 7] = [1e-12, 1e-11, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6];

/// Post-fit residual tolerance relative to `1 + max|y|`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// A fitted minimal-norm interpolant `Σᵢ πᵢ K_mode(·, xᵢ)`.
#[derive(Debug, Clone)]
pub struct Interpolant {
    evaluator: Evaluator,
    design: Design,
    /// Design used at evaluation time; sorted in `Sorted` mode.
    centers: Design,
    coeffs: Vec<f64>,
    jitter_used: f64,
    max_residual: f64,
    norm_sq: f64,
}

/// Factorizes `g`, escalating diagonal jitter `δ·trace(g)/n` through
/// [`JITTER_LADDER`]. Returns the factor and the absolute jitter added.
pub fn factorize_with_jitter(g: &DMatrix<f64>) -> Result<(Cholesky<f64, Dyn>, f64)> {
    let n = g.nrows();
    if let Some(chol) = Cholesky::new(g.clone()) {
        return Ok((chol, 0.0));
    }
    let scale = g.trace() / n as f64;
    let mut last = 0.0;
    for delta in JITTER_LADDER {
        last = delta * scale;
        let mut shifted = g.clone();
        shifted.iter_mut().step_by(n + 1).for_each(|v| *v += last);
        if let Some(chol) = Cholesky::new(shifted) {
            return Ok((chol, last));
        }
    }
    let diag = g.diagonal();
    Err(Error::Factorization { jitter: last, min_diag: diag.min(), max_diag: diag.max(), n })
}

impl Interpolant {
    pub fn kernel(&self) -> &KernelSpec {
        self.evaluator.kernel()
    }

    pub fn mode(&self) -> KernelMode {
        self.evaluator.mode()
    }

    pub fn design(&self) -> &Design {
        &self.design
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn jitter_used(&self) -> f64 {
        self.jitter_used
    }

    /// Largest `|f̂(xᵢ) − yᵢ|` observed right after fitting.
    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    /// Squared RKHS norm `πᵀ G π` of the interpolant.
    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    /// `Σᵢ πᵢ K_mode(x, xᵢ)`.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.design.dim() {
            return Err(Error::DimensionMismatch { expected: self.design.dim(), got: x.len() });
        }
        Ok(self.evaluate_unchecked(x))
    }

    fn evaluate_unchecked(&self, x: &[f64]) -> f64 {
        if self.mode() == KernelMode::Sorted {
            let mut sx = x.to_vec();
            sort_desc(&mut sx);
            let k = self.kernel();
            self.centers.rows().zip(&self.coeffs).map(|(c, &p)| p * k.base(&sx, c)).sum()
        } else {
            self.centers.rows().zip(&self.coeffs).map(|(c, &p)| p * self.evaluator.eval(x, c)).sum()
        }
    }

    /// Evaluates at every row of `points` (parallel, order-preserving).
    pub fn evaluate_many(&self, points: &Design) -> Result<Vec<f64>> {
        if points.dim() != self.design.dim() {
            return Err(Error::DimensionMismatch { expected: self.design.dim(), got: points.dim() });
        }
        let rows: Vec<&[f64]> = points.rows().collect();
        Ok(rows.par_iter().map(|x| self.evaluate_unchecked(x)).collect())
    }
}

/// Fits the minimal-norm interpolant of `y` at `design`.
///
/// Coefficients solve `G π = y` by Cholesky; if `G` is numerically
/// indefinite, jitter is escalated as in [`factorize_with_jitter`]. The fit
/// is rejected when the residual at the design exceeds
/// `RESIDUAL_TOLERANCE · (1 + max|y|)`.
pub fn fit(k: &KernelSpec, mode: KernelMode, design: &Design, y: &[f64]) -> Result<Interpolant> {
    if y.len() != design.len() {
        return Err(Error::DimensionMismatch { expected: design.len(), got: y.len() });
    }
    if let Some(i) = y.iter().position(|v| !v.is_finite()) {
        return Err(invalid(format!("observation {i} is not finite")));
    }
    let evaluator = Evaluator::new(*k, mode, design.dim())?;
    let (centers, _) = evaluator.canonical_design(design)?;
    let g = evaluator.gram(design)?;
    let (chol, jitter_used) = factorize_with_jitter(&g)?;
    let rhs = DVector::from_column_slice(y);
    let pi = chol.solve(&rhs);
    let fitted = &g * &pi;
    let max_residual = fitted.iter().zip(y).map(|(f, t)| (f - t).abs()).fold(0.0, f64::max);
    let tolerance = RESIDUAL_TOLERANCE * (1.0 + y.iter().fold(0.0f64, |m, v| m.max(v.abs())));
    if max_residual > tolerance {
        return Err(Error::Residual { residual: max_residual, tolerance });
    }
    let norm_sq = pi.dot(&fitted);
    Ok(Interpolant {
        evaluator,
        design: design.clone(),
        centers,
        coeffs: pi.iter().copied().collect(),
        jitter_used,
        max_residual,
        norm_sq,
    })
}

/// A finite combination `f = Σⱼ cⱼ K^perm(·, zⱼ)` of group-averaged kernel
/// sections; permutation-invariant with exactly computable RKHS norm.
#[derive(Debug, Clone)]
pub struct InvariantTarget {
    evaluator: Evaluator,
    atoms: Design,
    weights: Vec<f64>,
    norm_sq: f64,
}

impl InvariantTarget {
    /// Builds the target from explicit atoms and weights.
    pub fn new(k: &KernelSpec, atoms: Design, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != atoms.len() {
            return Err(Error::DimensionMismatch { expected: atoms.len(), got: weights.len() });
        }
        let evaluator = Evaluator::new(*k, KernelMode::PermSingle, atoms.dim())?;
        let g = evaluator.gram(&atoms)?;
        let c = DVector::from_column_slice(&weights);
        let norm_sq = c.dot(&(&g * &c)).max(0.0);
        Ok(Self { evaluator, atoms, weights, norm_sq })
    }

    pub fn atoms(&self) -> &Design {
        &self.atoms
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kernel(&self) -> &KernelSpec {
        self.evaluator.kernel()
    }

    /// `cᵀ K^perm(Z, Z) c`.
    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    pub fn dim(&self) -> usize {
        self.atoms.dim()
    }

    pub fn value(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.atoms.dim() {
            return Err(Error::DimensionMismatch { expected: self.atoms.dim(), got: x.len() });
        }
        Ok(self.value_unchecked(x))
    }

    fn value_unchecked(&self, x: &[f64]) -> f64 {
        self.atoms.rows().zip(&self.weights).map(|(z, &c)| c * self.evaluator.eval(x, z)).sum()
    }

    pub fn values(&self, points: &Design) -> Result<Vec<f64>> {
        if points.dim() != self.atoms.dim() {
            return Err(Error::DimensionMismatch { expected: self.atoms.dim(), got: points.dim() });
        }
        let rows: Vec<&[f64]> = points.rows().collect();
        Ok(rows.par_iter().map(|x| self.value_unchecked(x)).collect())
    }
}

/// Random target with `m` atoms drawn uniformly from the sorted simplex and
/// weights uniform in `[−1, 1]`.
pub fn make_invariant_target(k: &KernelSpec, dim: usize, m: usize, seed: u64) -> Result<InvariantTarget> {
    if m == 0 {
        return Err(invalid("target needs at least one atom"));
    }
    crate::kernels::ModeCaps::default().check(KernelMode::PermSingle, dim)?;
    let mut rng = stream(seed, &[tag("target"), dim as u64, m as u64]);
    let atoms = Design::uniform(&mut rng, m, dim)?.sorted();
    let weights = (0..m).map(|_| rng.random_range(-1.0..=1.0)).collect();
    InvariantTarget::new(k, atoms, weights)
}

/// Monte Carlo estimate of `‖f − f̂‖_{L²(Unif[0,1]^d)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L2Estimate {
    /// Square root of the mean squared error.
    pub error: f64,
    /// Mean squared error.
    pub mean_sq: f64,
    /// Standard error of `mean_sq`.
    pub mean_sq_se: f64,
    /// Largest absolute error among the samples.
    pub max_abs: f64,
}

/// Compares `target` and `f` at `mc_samples` seeded uniform points.
pub fn l2_error(target: &InvariantTarget, f: &Interpolant, mc_samples: usize, seed: u64) -> Result<L2Estimate> {
    if mc_samples == 0 {
        return Err(invalid("mc_samples must be at least 1"));
    }
    let dim = target.dim();
    if f.design().dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: f.design().dim() });
    }
    let mut rng = stream(seed, &[tag("l2"), dim as u64, mc_samples as u64]);
    let points = Design::from_rows(dim, uniform_rows(&mut rng, mc_samples, dim))?;
    let truth = target.values(&points)?;
    let approx = f.evaluate_many(&points)?;
    let sq: Vec<f64> = truth.iter().zip(&approx).map(|(t, a)| (t - a) * (t - a)).collect();
    let count = sq.len() as f64;
    let mean_sq = sq.iter().sum::<f64>() / count;
    let var = if sq.len() > 1 {
        sq.iter().map(|s| (s - mean_sq) * (s - mean_sq)).sum::<f64>() / (count - 1.0)
    } else {
        0.0
    };
    let max_abs = sq.iter().fold(0.0f64, |m, s| m.max(s.sqrt()));
    Ok(L2Estimate { error: mean_sq.sqrt(), mean_sq, mean_sq_se: (var / count).sqrt(), max_abs })
}
