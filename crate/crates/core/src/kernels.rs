//! Base kernels, the sorted and group-averaged evaluation modes, Gram
//! matrices, and derivative sup-constants.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::geometry::{find_duplicate_orbit, sort_desc, Design, Point};

/// Multiplier applied to grid-maximized derivative constants.
pub const SUP_SAFETY_FACTOR: f64 = 1.01;

/// Grid resolution for the one-dimensional derivative maximization.
const SUP_GRID_POINTS: usize = 20_001;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[non_exhaustive]
pub enum KernelFamily {
    /// `a · exp(−‖w − z‖² / (2σ²))`.
    Gaussian,
}

impl FromStr for KernelFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" | "rbf" => Ok(KernelFamily::Gaussian),
            other => Err(invalid(format!("unknown kernel family '{other}'"))),
        }
    }
}

/// Base kernel and the smoothness degree used when evaluating bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    pub family: KernelFamily,
    pub amplitude: f64,
    /// Length-scale `σ`.
    pub bandwidth: f64,
    pub nu: u32,
}

impl KernelSpec {
    pub fn gaussian(amplitude: f64, bandwidth: f64, nu: u32) -> Result<Self> {
        if !(amplitude > 0.0 && amplitude.is_finite()) {
            return Err(invalid(format!("amplitude must be positive, got {amplitude}")));
        }
        if !(bandwidth > 0.0 && bandwidth.is_finite()) {
            return Err(invalid(format!("bandwidth must be positive, got {bandwidth}")));
        }
        if nu == 0 {
            return Err(invalid("smoothness degree nu must be at least 1"));
        }
        Ok(Self { family: KernelFamily::Gaussian, amplitude, bandwidth, nu })
    }

    /// Value from a squared distance.
    #[inline]
    pub fn from_sq_dist(&self, sq: f64) -> f64 {
        match self.family {
            KernelFamily::Gaussian => self.amplitude * (-0.5 * sq / (self.bandwidth * self.bandwidth)).exp(),
        }
    }

    /// `K(w, z)` without any symmetrization.
    #[inline]
    pub fn base(&self, w: &[f64], z: &[f64]) -> f64 {
        self.from_sq_dist(w.iter().zip(z).map(|(a, b)| (a - b) * (a - b)).sum())
    }

    /// `K(x, x)`; constant for stationary families.
    pub fn diagonal(&self) -> f64 {
        self.amplitude
    }
}

/// How a base kernel is turned into a permutation-invariant one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelMode {
    /// `K(w, z)`.
    Plain,
    /// `K(sort w, sort z)`.
    Sorted,
    /// `(d!)⁻² Σ_{σ,σ'} K(σw, σ'z)`.
    PermDouble,
    /// `(d!)⁻¹ Σ_σ K(σw, z)`; equals `PermDouble` for isotropic kernels.
    PermSingle,
}

impl KernelMode {
    pub const ALL: [KernelMode; 4] =
        [KernelMode::Plain, KernelMode::Sorted, KernelMode::PermDouble, KernelMode::PermSingle];

    pub fn label(self) -> &'static str {
        match self {
            KernelMode::Plain => "plain",
            KernelMode::Sorted => "sorted",
            KernelMode::PermDouble => "perm_double",
            KernelMode::PermSingle => "perm_single",
        }
    }

    pub fn is_invariant(self) -> bool {
        self != KernelMode::Plain
    }
}

impl fmt::Display for KernelMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for KernelMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "plain" => Ok(KernelMode::Plain),
            "sorted" => Ok(KernelMode::Sorted),
            "perm_double" => Ok(KernelMode::PermDouble),
            "perm_single" => Ok(KernelMode::PermSingle),
            other => Err(invalid(format!("unknown kernel mode '{other}'"))),
        }
    }
}

/// Dimension caps for the averaged modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeCaps {
    pub perm_single_max_dim: usize,
    pub perm_double_max_dim: usize,
}

impl Default for ModeCaps {
    fn default() -> Self {
        Self { perm_single_max_dim: 6, perm_double_max_dim: 4 }
    }
}

impl ModeCaps {
    pub fn check(&self, mode: KernelMode, dim: usize) -> Result<()> {
        let cap = match mode {
            KernelMode::Plain | KernelMode::Sorted => return Ok(()),
            KernelMode::PermSingle => self.perm_single_max_dim,
            KernelMode::PermDouble => self.perm_double_max_dim,
        };
        if dim > cap {
            return Err(Error::FactorialCap { mode: mode.label(), d: dim, cap });
        }
        Ok(())
    }
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// A kernel bound to a mode and dimension, with the permutation table
/// precomputed for the averaged modes.
#[derive(Debug, Clone)]
pub struct Evaluator {
    kernel: KernelSpec,
    mode: KernelMode,
    dim: usize,
    perms: Vec<Vec<usize>>,
}

impl Evaluator {
    pub fn new(kernel: KernelSpec, mode: KernelMode, dim: usize) -> Result<Self> {
        Self::with_caps(kernel, mode, dim, ModeCaps::default())
    }

    pub fn with_caps(kernel: KernelSpec, mode: KernelMode, dim: usize, caps: ModeCaps) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        caps.check(mode, dim)?;
        let perms = match mode {
            KernelMode::PermSingle | KernelMode::PermDouble => permutations(dim),
            _ => Vec::new(),
        };
        Ok(Self { kernel, mode, dim, perms })
    }

    pub fn kernel(&self) -> &KernelSpec {
        &self.kernel
    }

    pub fn mode(&self) -> KernelMode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn permuted_sq_dist(&self, w: &[f64], p: &[usize], z: &[f64], q: &[usize]) -> f64 {
        p.iter().zip(q).map(|(&i, &j)| (w[i] - z[j]) * (w[i] - z[j])).sum()
    }

    /// Evaluates the mode kernel; both slices must have length `dim`.
    pub fn eval(&self, w: &[f64], z: &[f64]) -> f64 {
        debug_assert_eq!(w.len(), self.dim);
        debug_assert_eq!(z.len(), self.dim);
        match self.mode {
            KernelMode::Plain => self.kernel.base(w, z),
            KernelMode::Sorted => {
                let (mut sw, mut sz) = (w.to_vec(), z.to_vec());
                sort_desc(&mut sw);
                sort_desc(&mut sz);
                self.kernel.base(&sw, &sz)
            }
            KernelMode::PermSingle => {
                let identity = &self.perms[0];
                let total: f64 = self
                    .perms
                    .iter()
                    .map(|p| self.kernel.from_sq_dist(self.permuted_sq_dist(w, p, z, identity)))
                    .sum();
                total / self.perms.len() as f64
            }
            KernelMode::PermDouble => {
                let mut total = 0.0;
                for p in &self.perms {
                    for q in &self.perms {
                        total += self.kernel.from_sq_dist(self.permuted_sq_dist(w, p, z, q));
                    }
                }
                total / (self.perms.len() * self.perms.len()) as f64
            }
        }
    }

    /// Gram matrix over a design; entries are computed once per unordered
    /// pair so the result is exactly symmetric.
    pub fn gram(&self, design: &Design) -> Result<DMatrix<f64>> {
        if design.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: design.dim() });
        }
        let (points, plain) = self.canonical_design(design)?;
        let n = points.len();
        let upper: Vec<Vec<f64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let xi = points.point(i);
                (i..n).map(|j| plain.eval(xi, points.point(j))).collect()
            })
            .collect();
        let mut g = DMatrix::zeros(n, n);
        for (i, row) in upper.iter().enumerate() {
            for (offset, &v) in row.iter().enumerate() {
                g[(i, i + offset)] = v;
                g[(i + offset, i)] = v;
            }
        }
        Ok(g)
    }

    /// For `Sorted` mode: checks orbits and returns the sorted design with a
    /// plain evaluator, so later evaluations skip the per-call sort.
    pub(crate) fn canonical_design(&self, design: &Design) -> Result<(Design, Evaluator)> {
        if self.mode == KernelMode::Sorted {
            if let Some((first, second)) = find_duplicate_orbit(design) {
                return Err(Error::DuplicateOrbit { first, second });
            }
            let plain = Evaluator { kernel: self.kernel, mode: KernelMode::Plain, dim: self.dim, perms: Vec::new() };
            Ok((design.sorted(), plain))
        } else {
            Ok((design.clone(), self.clone()))
        }
    }
}

/// Evaluates `k` in `mode` at a pair of points.
pub fn eval(k: &KernelSpec, mode: KernelMode, w: &Point, z: &Point) -> Result<f64> {
    if w.dim() != z.dim() {
        return Err(Error::DimensionMismatch { expected: w.dim(), got: z.dim() });
    }
    Ok(Evaluator::new(*k, mode, w.dim())?.eval(w.coords(), z.coords()))
}

/// `G[i][j] = eval(k, mode, x_i, x_j)`.
pub fn gram(k: &KernelSpec, mode: KernelMode, design: &Design) -> Result<DMatrix<f64>> {
    Evaluator::new(*k, mode, design.dim())?.gram(design)
}

/// Sup-norm constants of the base kernel over the cube.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupConstants {
    /// `max |K|`.
    pub c0: f64,
    /// `max_{|α|+|β|=ν} max |∂₁^α ∂₂^β K| / (α! β!)`.
    pub c_nu: f64,
}

/// Probabilists' Hermite polynomial `He_n(x)`.
fn hermite(n: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let next = x * cur - f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Derivative constants for the Gaussian.
///
/// With `t = w − z ∈ [−1,1]^d`, `∂₁^α ∂₂^β K = ±a ∏ₖ σ^{−γₖ} He_{γₖ}(tₖ/σ) e^{−tₖ²/2σ²}`
/// for `γ = α + β`. The box is a product, so the maximum over `t` factorizes
/// into one-dimensional maxima, each found on a fine grid. For a fixed `γ` the
/// split maximizing `1/(α!β!)` is the balanced one, and a small dynamic
/// program picks the best `γ` with `|γ| = ν`. Grid maxima are inflated by
/// [`SUP_SAFETY_FACTOR`] for `ν ≥ 1`.
pub fn sup_kernel_constant(k: &KernelSpec, nu: u32, dim: usize) -> Result<SupConstants> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let c0 = k.amplitude;
    if nu == 0 {
        return Ok(SupConstants { c0, c_nu: c0 });
    }
    let sigma = k.bandwidth;
    let weight: Vec<f64> = (0..=nu)
        .map(|g| {
            let peak = (0..SUP_GRID_POINTS)
                .map(|i| {
                    let t = i as f64 / (SUP_GRID_POINTS - 1) as f64;
                    let u = t / sigma;
                    hermite(g, u).abs() * (-0.5 * u * u).exp()
                })
                .fold(0.0, f64::max);
            peak * sigma.powi(-(g as i32)) / (factorial(g / 2) * factorial(g - g / 2))
        })
        .collect();
    // best[s]: largest product over the coordinates seen so far with total order s.
    let nu = nu as usize;
    let mut best = vec![f64::NEG_INFINITY; nu + 1];
    best[0] = 1.0;
    for _ in 0..dim {
        let mut next = vec![f64::NEG_INFINITY; nu + 1];
        for s in 0..=nu {
            for g in 0..=s {
                next[s] = next[s].max(best[s - g] * weight[g]);
            }
        }
        best = next;
    }
    Ok(SupConstants { c0, c_nu: c0 * best[nu] * SUP_SAFETY_FACTOR })
}
