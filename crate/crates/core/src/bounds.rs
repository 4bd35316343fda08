//! Closed-form bounds: pointwise and L² interpolation error, tail
//! probabilities of the fill distance and of the L² error, and three upper
//! bounds on the eigenvalues of the kernel integral operator.
//!
//! Every bound comes in a standard form (plain kernel on the cube) and a
//! sorted form (sorted kernel on the fundamental domain). The averaged modes
//! define kernels whose derivative constants never exceed those of the base
//! kernel, so they are reported with the standard form.

use std::f64::consts::PI;

use crate::error::{invalid, Result};
use crate::geometry::{cone_condition_factor, cone_condition_holds, inradius, DomainKind};
use crate::kernels::{sup_kernel_constant, KernelMode, KernelSpec};

pub const DEFAULT_ALPHA: f64 = 1.05;

/// Inputs shared by the error and eigenvalue bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs {
    pub nu: u32,
    pub d: usize,
    /// `C_{K,0}`.
    pub c_k0: f64,
    /// `C_{K,ν}`.
    pub c_knu: f64,
    /// `‖f‖_H`.
    pub norm_h: f64,
    /// Lower density bound `ρ̲`.
    pub rho_low: f64,
    /// Upper density bound `ρ̄`.
    pub rho_high: f64,
    /// Slack `α > 1` of the asymptotic sorted bounds.
    pub alpha: f64,
}

impl BoundInputs {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        nu: u32,
        d: usize,
        c_k0: f64,
        c_knu: f64,
        norm_h: f64,
        rho_low: f64,
        rho_high: f64,
        alpha: f64,
    ) -> Result<Self> {
        let b = Self { nu, d, c_k0, c_knu, norm_h, rho_low, rho_high, alpha };
        b.validate()?;
        Ok(b)
    }

    /// Inputs for Unif\[0,1\]^d data (`ρ̲ = ρ̄ = 1`) with the kernel's own constants.
    pub fn for_kernel(k: &KernelSpec, d: usize, norm_h: f64, alpha: f64) -> Result<Self> {
        let c = sup_kernel_constant(k, k.nu, d)?;
        Self::new(k.nu, d, c.c0, c.c_nu, norm_h, 1.0, 1.0, alpha)
    }

    pub fn validate(&self) -> Result<()> {
        if self.nu == 0 {
            return Err(invalid("nu must be at least 1"));
        }
        if self.d == 0 {
            return Err(invalid("d must be at least 1"));
        }
        let nonneg = [("C_K0", self.c_k0), ("C_Knu", self.c_knu), ("norm_h", self.norm_h)];
        for (name, v) in nonneg {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(invalid(format!("{name} must be finite and nonnegative, got {v}")));
            }
        }
        if !(self.rho_low > 0.0 && self.rho_low.is_finite()) {
            return Err(invalid(format!("rho_low must be positive, got {}", self.rho_low)));
        }
        if !(self.rho_high >= self.rho_low && self.rho_high.is_finite()) {
            return Err(invalid(format!("rho_high must be at least rho_low, got {}", self.rho_high)));
        }
        if !(self.alpha > 1.0 && self.alpha.is_finite()) {
            return Err(invalid(format!("alpha must exceed 1, got {}", self.alpha)));
        }
        Ok(())
    }

    fn echo(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("nu", f64::from(self.nu)),
            ("d", self.d as f64),
            ("c_k0", self.c_k0),
            ("c_knu", self.c_knu),
            ("norm_h", self.norm_h),
            ("rho_low", self.rho_low),
            ("rho_high", self.rho_high),
            ("alpha", self.alpha),
        ]
    }
}

/// An evaluated bound and the inputs that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: &'static str,
    pub value: f64,
    /// The value before clipping to `[0, 1]`; equal to `value` for bounds that are not probabilities.
    pub unclipped: f64,
    /// Whether the bound's precondition held.
    pub valid: bool,
    pub inputs: Vec<(&'static str, f64)>,
}

impl BoundReport {
    fn new(name: &'static str, value: f64, valid: bool, inputs: Vec<(&'static str, f64)>) -> Self {
        let finite = value.is_finite();
        let value = if value.is_nan() { f64::INFINITY } else { value.max(0.0) };
        Self { name, value, unclipped: value, valid: valid && finite, inputs }
    }

    fn probability(name: &'static str, raw: f64, valid: bool, inputs: Vec<(&'static str, f64)>) -> Self {
        let raw = if raw.is_nan() { f64::INFINITY } else { raw.max(0.0) };
        Self { name, value: raw.min(1.0), unclipped: raw, valid, inputs }
    }

    fn with(mut self, key: &'static str, v: f64) -> Self {
        self.inputs.push((key, v));
        self
    }
}

/// Position of a point relative to the partial diagonals of the cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// In a subcube whose indices are pairwise distinct.
    Interior,
    /// In a subcube with a repeated index, i.e. close to some `xᵏ = xˡ`.
    NearDiagonal,
}

/// `ω_d`, the volume of the unit ball in `R^d`.
pub fn ball_volume(d: usize) -> f64 {
    let mut omega = if d.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut k = if d.is_multiple_of(2) { 2 } else { 3 };
    while k <= d {
        omega *= 2.0 * PI / k as f64;
        k += 2;
    }
    omega
}

/// `n!` in floating point; `+∞` past 170.
pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `C(n, k)` in floating point.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (1..=k).fold(1.0, |acc, i| acc * (n - k + i) as f64 / i as f64)
}

fn is_sorted_mode(mode: KernelMode) -> bool {
    mode == KernelMode::Sorted
}

fn domain_for(mode: KernelMode) -> DomainKind {
    if is_sorted_mode(mode) {
        DomainKind::SortedSimplex
    } else {
        DomainKind::Cube
    }
}

/// Assigns `x` to the subcube grid of side `l = 8ν²(√d + 1)h`, `q = ⌊1/l⌋`
/// cells per axis (points beyond `q·l` fall in the last cell).
pub fn subcube_classification(x: &[f64], h: f64, nu: u32, d: usize) -> Region {
    let side = cone_condition_factor(nu, d, DomainKind::Cube) * h;
    let cells = (1.0 / side).floor().max(1.0) as usize;
    let mut idx: Vec<usize> = x.iter().map(|&v| ((v / side).floor() as usize).min(cells - 1)).collect();
    idx.sort_unstable();
    if idx.windows(2).any(|w| w[0] == w[1]) {
        Region::NearDiagonal
    } else {
        Region::Interior
    }
}

/// `C̃ = 8 · C(ν+2d, 2d) · C_{K,ν} · (16ν²d)^ν`.
pub fn tilde_constant(b: &BoundInputs) -> BoundReport {
    let nu = f64::from(b.nu);
    let d = b.d as f64;
    let value = 8.0 * binomial(b.nu as usize + 2 * b.d, 2 * b.d) * b.c_knu * (16.0 * nu * nu * d).powf(nu);
    BoundReport::new("tilde_constant", value, true, b.echo())
}

/// `P = 8 ρ̄ 2^ν ν² d^{2ν+5/2}`.
pub fn p_constant(b: &BoundInputs) -> f64 {
    let nu = f64::from(b.nu);
    8.0 * b.rho_high * 2f64.powf(nu) * nu * nu * (b.d as f64).powf(2.0 * nu + 2.5)
}

/// Pointwise error bound `|f(x) − f̂(x)|` given the fill distance `h` of the
/// design in the mode's domain.
pub fn pointwise_bound(b: &BoundInputs, h: f64, mode: KernelMode, region: Region) -> BoundReport {
    let tilde = tilde_constant(b);
    let nu = f64::from(b.nu);
    let d = b.d as f64;
    let domain = domain_for(mode);
    let scale = if is_sorted_mode(mode) && region == Region::NearDiagonal { 2.0 * d * d } else { 1.0 };
    let value = b.norm_h * (tilde.value * (scale * h).powf(nu)).sqrt();
    let valid = tilde.valid && cone_condition_holds(h, b.nu, b.d, domain);
    let name = if scale > 1.0 { "pointwise_sorted_near_diagonal" } else { "pointwise" };
    BoundReport::new(name, value, valid, b.echo()).with("h", h)
}

/// L² error bound together with, for the sorted mode, the `α` form.
#[derive(Debug, Clone, PartialEq)]
pub struct L2Bound {
    /// Standard: `‖f‖² C̃ hᵛ`. Sorted: `‖f‖² C̃ (1 + P h) hᵛ`.
    pub report: BoundReport,
    /// Sorted only: `α ‖f‖² C̃ hᵛ`, valid when additionally `1 + P h ≤ α`.
    pub alpha_form: Option<BoundReport>,
}

/// Bound on the squared L²(P) error.
pub fn l2_bound(b: &BoundInputs, h: f64, mode: KernelMode) -> L2Bound {
    let tilde = tilde_constant(b);
    let base = b.norm_h * b.norm_h * tilde.value * h.powf(f64::from(b.nu));
    let valid = tilde.valid && cone_condition_holds(h, b.nu, b.d, domain_for(mode));
    if !is_sorted_mode(mode) {
        return L2Bound { report: BoundReport::new("l2", base, valid, b.echo()).with("h", h), alpha_form: None };
    }
    let growth = 1.0 + p_constant(b) * h;
    let report = BoundReport::new("l2_sorted", base * growth, valid, b.echo()).with("h", h);
    let alpha_form = BoundReport::new("l2_sorted_alpha", b.alpha * base, valid && growth <= b.alpha, b.echo()).with("h", h);
    L2Bound { report, alpha_form: Some(alpha_form) }
}

fn tail_probability(log_prefactor: f64, base: f64, n: usize) -> f64 {
    if base <= 0.0 {
        return 0.0;
    }
    let log_power = n as f64 * (base - 1.0).ln_1p();
    let direct = log_prefactor.exp() * log_power.exp();
    if direct.is_finite() {
        direct
    } else {
        (log_prefactor + log_power).exp()
    }
}

/// Bound on `P[h > ε]` for `n` i.i.d. points with density at least `ρ̲`.
///
/// Valid while a ball of radius `ε` fits in the domain.
pub fn h_tail_bound(epsilon: f64, n: usize, d: usize, rho_low: f64, domain: DomainKind) -> BoundReport {
    let omega = ball_volume(d);
    let df = d as f64;
    let mut log_prefactor = df * (6.0 / epsilon).ln() - omega.ln();
    if domain == DomainKind::SortedSimplex {
        log_prefactor -= factorial(d).ln();
    }
    let base = 1.0 - rho_low * omega * (epsilon / 4.0).powf(df);
    let raw = tail_probability(log_prefactor, base, n);
    let valid = epsilon > 0.0 && epsilon <= inradius(d, domain) && rho_low > 0.0;
    let name = match domain {
        DomainKind::Cube => "h_tail",
        DomainKind::SortedSimplex => "h_tail_sorted",
    };
    BoundReport::probability(
        name,
        raw,
        valid,
        vec![("epsilon", epsilon), ("n", n as f64), ("d", df), ("rho_low", rho_low)],
    )
}

/// Bound on `P[‖f − f̂‖²_{L²} > ε]` for `n` i.i.d. design points.
pub fn error_tail_bound(epsilon: f64, n: usize, b: &BoundInputs, mode: KernelMode) -> BoundReport {
    let tilde = tilde_constant(b);
    let nu = f64::from(b.nu);
    let df = b.d as f64;
    let root = epsilon.powf(1.0 / nu);
    let mut scale = b.norm_h * b.norm_h * tilde.value;
    if is_sorted_mode(mode) {
        scale *= 1.0 + p_constant(b) * root;
    }
    let m = scale.max(1.0);
    let omega = ball_volume(b.d);
    let mut log_prefactor = df * 6f64.ln() - omega.ln() + (df / nu) * (m / epsilon).ln();
    if is_sorted_mode(mode) {
        log_prefactor -= factorial(b.d).ln();
    }
    let base = 1.0 - b.rho_low * omega / 4f64.powf(df) * (epsilon / m).powf(df / nu);
    let raw = tail_probability(log_prefactor, base, n);
    let valid = tilde.valid && epsilon > 0.0 && cone_condition_holds(root, b.nu, b.d, domain_for(mode));
    let name = if is_sorted_mode(mode) { "error_tail_sorted" } else { "error_tail" };
    BoundReport::probability(name, raw, valid, b.echo()).with("epsilon", epsilon).with("n", n as f64)
}

/// `λ_j ≤ √(C_{K,0} C̃) h^{ν/2}` where `h` is the fill distance of a
/// `(j − 1)`-point design; the sorted form carries the factor `α`.
pub fn eigen_bound_fill(j: usize, h: f64, b: &BoundInputs, mode: KernelMode) -> BoundReport {
    let tilde = tilde_constant(b);
    let mut value = (b.c_k0 * tilde.value).sqrt() * h.powf(f64::from(b.nu) / 2.0);
    if is_sorted_mode(mode) {
        value *= b.alpha;
    }
    let valid = j >= 2 && tilde.valid && cone_condition_holds(h, b.nu, b.d, domain_for(mode));
    BoundReport::new("eigen_fill", value, valid, b.echo()).with("j", j as f64).with("h", h)
}

/// Eigenvalue bound obtained from a minimal covering of the domain.
pub fn eigen_bound_covering(j: usize, b: &BoundInputs, mode: KernelMode) -> BoundReport {
    let nu = f64::from(b.nu);
    let df = b.d as f64;
    let lead = (8.0 * binomial(b.nu as usize + 2 * b.d, 2 * b.d) * b.c_k0 * b.c_knu).sqrt();
    let numer = (48.0 * nu * nu * df).powf(nu / 2.0);
    let mut volume = ball_volume(b.d) * j as f64;
    let mut value = lead * numer;
    if is_sorted_mode(mode) {
        volume *= factorial(b.d);
        value *= b.alpha;
    }
    value /= volume.powf(nu / (2.0 * df));
    BoundReport::new("eigen_covering", value, j >= 2, b.echo()).with("j", j as f64)
}

/// Eigenvalue bound from Weyl's law for the Neumann Laplacian.
pub fn eigen_bound_weyl(j: usize, b: &BoundInputs, mode: KernelMode) -> BoundReport {
    let nu = f64::from(b.nu);
    let df = b.d as f64;
    let rate = nu / df;
    let lead = factorial(b.nu as usize + b.d) / factorial(b.d) * b.c_knu / (2.0 * PI).powf(nu);
    let spread = ((1.0 + nu) * df.powf(nu) * ball_volume(b.d) / b.rho_low).powf(rate);
    let mut value = lead * spread / (j as f64).powf(rate);
    if is_sorted_mode(mode) {
        value /= factorial(b.d).powf(rate - 1.0);
    }
    BoundReport::new("eigen_weyl", value, j >= 1, b.echo()).with("j", j as f64)
}
