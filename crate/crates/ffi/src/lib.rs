//! C ABI over the `sortkern` library.
//!
//! Conventions:
//! - every fallible function returns an [`SkStatus`] and writes results
//!   through out-pointers, which are left untouched on failure;
//! - points are passed as row-major `double` buffers of `n × d` values;
//! - fitted interpolants are opaque [`SkInterpolant`] handles released with
//!   [`sk_interpolant_free`];
//! - the message of the most recent failure on the calling thread is
//!   available from [`sk_last_error_message`];
//! - panics never cross the boundary; they surface as [`SkStatus::Panic`].
//!
//! The header `include/sortkern.h` is generated from this file by cbindgen.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use sortkern::bounds::{self, BoundInputs, BoundReport, Region};
use sortkern::geometry::{fill_distance_rows, sort_desc};
use sortkern::interpolation::{fit, Interpolant};
use sortkern::kernels::Evaluator;
use sortkern::{Design, DomainKind, Error, KernelMode, KernelSpec};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of range or inconsistent.
    InvalidArgument = 2,
    /// Two design points share an orbit (sorted mode).
    DuplicateOrbit = 3,
    /// An averaged mode was requested above its dimension cap.
    CapExceeded = 4,
    /// Factorization, eigensolver or residual check failed.
    Numerical = 5,
    /// An internal panic was caught.
    Panic = 6,
}

/// Kernel evaluation mode.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkMode {
    Plain = 0,
    Sorted = 1,
    PermDouble = 2,
    PermSingle = 3,
}

/// Domain in which fill distances and tail bounds are measured.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkDomain {
    Cube = 0,
    SortedSimplex = 1,
}

/// Position relative to the partial diagonals (sorted pointwise bound).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkRegion {
    Interior = 0,
    NearDiagonal = 1,
}

/// Gaussian base kernel `amplitude · exp(−‖w − z‖² / (2 bandwidth²))` with
/// smoothness degree `nu` for the bounds.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SkKernel {
    pub amplitude: f64,
    pub bandwidth: f64,
    pub nu: u32,
}

/// Constants shared by the error and eigenvalue bounds.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SkBoundInputs {
    pub nu: u32,
    pub d: usize,
    pub c_k0: f64,
    pub c_knu: f64,
    pub norm_h: f64,
    pub rho_low: f64,
    pub rho_high: f64,
    pub alpha: f64,
}

/// An evaluated bound; `valid` is 1 when its precondition held.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SkBound {
    pub value: f64,
    pub unclipped: f64,
    pub valid: i32,
}

/// Opaque fitted interpolant.
pub struct SkInterpolant {
    inner: Interpolant,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_last_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> SkStatus {
    match err {
        Error::DuplicateOrbit { .. } => SkStatus::DuplicateOrbit,
        Error::FactorialCap { .. } => SkStatus::CapExceeded,
        e if e.is_numerical() => SkStatus::Numerical,
        _ => SkStatus::InvalidArgument,
    }
}

/// Failure inside a call: a status plus the message for `sk_last_error_message`.
struct Failure(SkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(name: &str) -> Failure {
    Failure(SkStatus::NullPointer, format!("{name} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(String::new());
            SkStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| (*s).to_owned())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_owned());
            set_last_error(format!("panic: {msg}"));
            SkStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be null or valid for reads of `len` values.
unsafe fn input<'a>(ptr: *const f64, len: usize, name: &str) -> Result<&'a [f64], Failure> {
    if ptr.is_null() {
        return Err(null(name));
    }
    Ok(slice::from_raw_parts(ptr, len))
}

fn write<T>(out: *mut T, value: T, name: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    // SAFETY: non-null and, per every function's contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn mode_of(mode: SkMode) -> KernelMode {
    match mode {
        SkMode::Plain => KernelMode::Plain,
        SkMode::Sorted => KernelMode::Sorted,
        SkMode::PermDouble => KernelMode::PermDouble,
        SkMode::PermSingle => KernelMode::PermSingle,
    }
}

fn domain_of(domain: SkDomain) -> DomainKind {
    match domain {
        SkDomain::Cube => DomainKind::Cube,
        SkDomain::SortedSimplex => DomainKind::SortedSimplex,
    }
}

fn kernel_of(k: *const SkKernel) -> Result<KernelSpec, Failure> {
    if k.is_null() {
        return Err(null("kernel"));
    }
    // SAFETY: non-null, caller guarantees a valid SkKernel.
    let k = unsafe { *k };
    Ok(KernelSpec::gaussian(k.amplitude, k.bandwidth, k.nu)?)
}

fn inputs_of(b: *const SkBoundInputs) -> Result<BoundInputs, Failure> {
    if b.is_null() {
        return Err(null("inputs"));
    }
    // SAFETY: non-null, caller guarantees a valid SkBoundInputs.
    let b = unsafe { *b };
    Ok(BoundInputs::new(b.nu, b.d, b.c_k0, b.c_knu, b.norm_h, b.rho_low, b.rho_high, b.alpha)?)
}

fn bound_of(r: &BoundReport) -> SkBound {
    SkBound { value: r.value, unclipped: r.unclipped, valid: i32::from(r.valid) }
}

fn nonzero(v: usize, name: &str) -> Result<usize, Failure> {
    if v == 0 {
        Err(Failure(SkStatus::InvalidArgument, format!("{name} must be at least 1")))
    } else {
        Ok(v)
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sk_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version contains NUL"),
    };
    VERSION.as_ptr()
}

/// Copies the calling thread's most recent error message into `buf`
/// (truncated, always NUL-terminated when `len > 0`) and returns the full
/// message length in bytes, excluding the terminator. Empty after a success.
///
/// # Safety
/// `buf` must be null or valid for writes of `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn sk_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Writes `x` sorted into non-increasing order to `out` (may alias `x`).
///
/// # Safety
/// `x` and `out` must be valid for `d` values.
#[no_mangle]
pub unsafe extern "C" fn sk_sort_point(x: *const f64, d: usize, out: *mut f64) -> SkStatus {
    guard(|| {
        nonzero(d, "d")?;
        let mut v = input(x, d, "x")?.to_vec();
        if out.is_null() {
            return Err(null("out"));
        }
        sort_desc(&mut v);
        ptr::copy(v.as_ptr(), out, d);
        Ok(())
    })
}

/// Evaluates the kernel in `mode` at `w` and `z`.
///
/// # Safety
/// `kernel` must point to an `SkKernel`; `w` and `z` must be valid for `d` values.
#[no_mangle]
pub unsafe extern "C" fn sk_kernel_eval(
    kernel: *const SkKernel,
    mode: SkMode,
    w: *const f64,
    z: *const f64,
    d: usize,
    out: *mut f64,
) -> SkStatus {
    guard(|| {
        let k = kernel_of(kernel)?;
        nonzero(d, "d")?;
        let (w, z) = (input(w, d, "w")?, input(z, d, "z")?);
        let value = Evaluator::new(k, mode_of(mode), d)?.eval(w, z);
        write(out, value, "out")
    })
}

/// Fill distance of an `n × d` design, estimated over `m × d` candidates.
///
/// # Safety
/// `design` must be valid for `n·d` values and `candidates` for `m·d` values.
#[no_mangle]
pub unsafe extern "C" fn sk_fill_distance(
    design: *const f64,
    n: usize,
    candidates: *const f64,
    m: usize,
    d: usize,
    domain: SkDomain,
    out: *mut f64,
) -> SkStatus {
    guard(|| {
        nonzero(d, "d")?;
        let x = input(design, n * d, "design")?;
        let c = input(candidates, m * d, "candidates")?;
        let h = fill_distance_rows(x, c, d, domain_of(domain))?;
        write(out, h, "out")
    })
}

/// Fits the minimal-norm interpolant of `y` on an `n × d` design and stores
/// a new handle in `*out`.
///
/// # Safety
/// `kernel` must point to an `SkKernel`, `design` be valid for `n·d` values,
/// `y` for `n` values, and `out` for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn sk_interpolant_fit(
    kernel: *const SkKernel,
    mode: SkMode,
    design: *const f64,
    n: usize,
    d: usize,
    y: *const f64,
    out: *mut *mut SkInterpolant,
) -> SkStatus {
    guard(|| {
        let k = kernel_of(kernel)?;
        nonzero(d, "d")?;
        nonzero(n, "n")?;
        let x = input(design, n * d, "design")?;
        let y = input(y, n, "y")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let design = Design::from_rows(d, x.to_vec())?;
        let inner = fit(&k, mode_of(mode), &design, y)?;
        write(out, Box::into_raw(Box::new(SkInterpolant { inner })), "out")
    })
}

/// Evaluates a fitted interpolant at one point of dimension `d`.
///
/// # Safety
/// `f` must be a live handle from [`sk_interpolant_fit`]; `x` valid for `d` values.
#[no_mangle]
pub unsafe extern "C" fn sk_interpolant_evaluate(
    f: *const SkInterpolant,
    x: *const f64,
    d: usize,
    out: *mut f64,
) -> SkStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("interpolant"))?;
        let x = input(x, d, "x")?;
        let value = f.inner.evaluate(x)?;
        write(out, value, "out")
    })
}

/// Number of design points (and coefficients) of a fitted interpolant; 0 for null.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sk_interpolant_len(f: *const SkInterpolant) -> usize {
    f.as_ref().map_or(0, |f| f.inner.coeffs().len())
}

/// Copies the coefficients into `out`, which must hold `len` values with
/// `len` equal to [`sk_interpolant_len`].
///
/// # Safety
/// `f` must be a live handle and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn sk_interpolant_coefficients(f: *const SkInterpolant, out: *mut f64, len: usize) -> SkStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("interpolant"))?;
        let coeffs = f.inner.coeffs();
        if len != coeffs.len() {
            return Err(Failure(
                SkStatus::InvalidArgument,
                format!("buffer holds {len} values, interpolant has {}", coeffs.len()),
            ));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(coeffs.as_ptr(), out, len);
        Ok(())
    })
}

/// Diagonal jitter that was added to the Gram matrix (0 when none was needed).
///
/// # Safety
/// `f` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sk_interpolant_jitter(f: *const SkInterpolant, out: *mut f64) -> SkStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("interpolant"))?;
        write(out, f.inner.jitter_used(), "out")
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `f` must be null or a handle from [`sk_interpolant_fit`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sk_interpolant_free(f: *mut SkInterpolant) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Fills `out` with the kernel's sup constants `C_{K,0}`, `C_{K,ν}` for
/// dimension `d`, the given `‖f‖`, uniform density and slack `alpha`.
///
/// # Safety
/// `kernel` must point to an `SkKernel`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_bound_inputs_for_kernel(
    kernel: *const SkKernel,
    d: usize,
    norm_h: f64,
    alpha: f64,
    out: *mut SkBoundInputs,
) -> SkStatus {
    guard(|| {
        let b = BoundInputs::for_kernel(&kernel_of(kernel)?, d, norm_h, alpha)?;
        let value = SkBoundInputs {
            nu: b.nu,
            d: b.d,
            c_k0: b.c_k0,
            c_knu: b.c_knu,
            norm_h: b.norm_h,
            rho_low: b.rho_low,
            rho_high: b.rho_high,
            alpha: b.alpha,
        };
        write(out, value, "out")
    })
}

/// `C̃`.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_tilde_constant(inputs: *const SkBoundInputs, out: *mut SkBound) -> SkStatus {
    guard(|| write(out, bound_of(&bounds::tilde_constant(&inputs_of(inputs)?)), "out"))
}

/// `P_{ν,d}`.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_p_constant(inputs: *const SkBoundInputs, out: *mut f64) -> SkStatus {
    guard(|| write(out, bounds::p_constant(&inputs_of(inputs)?), "out"))
}

/// Pointwise error bound at fill distance `h`.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_pointwise_bound(
    inputs: *const SkBoundInputs,
    h: f64,
    mode: SkMode,
    region: SkRegion,
    out: *mut SkBound,
) -> SkStatus {
    guard(|| {
        let region = match region {
            SkRegion::Interior => Region::Interior,
            SkRegion::NearDiagonal => Region::NearDiagonal,
        };
        let r = bounds::pointwise_bound(&inputs_of(inputs)?, h, mode_of(mode), region);
        write(out, bound_of(&r), "out")
    })
}

/// Squared L² error bound at fill distance `h`. For the sorted mode
/// `alpha_form` (optional, may be null) receives the `α` form; otherwise it
/// is set to an invalid zero bound.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write;
/// `alpha_form` null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_l2_bound(
    inputs: *const SkBoundInputs,
    h: f64,
    mode: SkMode,
    out: *mut SkBound,
    alpha_form: *mut SkBound,
) -> SkStatus {
    guard(|| {
        let r = bounds::l2_bound(&inputs_of(inputs)?, h, mode_of(mode));
        write(out, bound_of(&r.report), "out")?;
        if !alpha_form.is_null() {
            write(alpha_form, r.alpha_form.as_ref().map(bound_of).unwrap_or_default(), "alpha_form")?;
        }
        Ok(())
    })
}

/// Bound on `P[h > ε]` for `n` i.i.d. points with density at least `rho_low`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_h_tail_bound(
    epsilon: f64,
    n: usize,
    d: usize,
    rho_low: f64,
    domain: SkDomain,
    out: *mut SkBound,
) -> SkStatus {
    guard(|| {
        nonzero(d, "d")?;
        write(out, bound_of(&bounds::h_tail_bound(epsilon, n, d, rho_low, domain_of(domain))), "out")
    })
}

/// Bound on `P[‖f − f̂‖² > ε]`.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_error_tail_bound(
    epsilon: f64,
    n: usize,
    inputs: *const SkBoundInputs,
    mode: SkMode,
    out: *mut SkBound,
) -> SkStatus {
    guard(|| {
        let r = bounds::error_tail_bound(epsilon, n, &inputs_of(inputs)?, mode_of(mode));
        write(out, bound_of(&r), "out")
    })
}

/// Eigenvalue bound from the fill distance `h` of a `(j − 1)`-point design.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_eigen_bound_fill(
    j: usize,
    h: f64,
    inputs: *const SkBoundInputs,
    mode: SkMode,
    out: *mut SkBound,
) -> SkStatus {
    guard(|| write(out, bound_of(&bounds::eigen_bound_fill(j, h, &inputs_of(inputs)?, mode_of(mode))), "out"))
}

/// Eigenvalue bound from a minimal covering.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_eigen_bound_covering(
    j: usize,
    inputs: *const SkBoundInputs,
    mode: SkMode,
    out: *mut SkBound,
) -> SkStatus {
    guard(|| write(out, bound_of(&bounds::eigen_bound_covering(j, &inputs_of(inputs)?, mode_of(mode))), "out"))
}

/// Eigenvalue bound from Weyl's law.
///
/// # Safety
/// `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sk_eigen_bound_weyl(
    j: usize,
    inputs: *const SkBoundInputs,
    mode: SkMode,
    out: *mut SkBound,
) -> SkStatus {
    guard(|| write(out, bound_of(&bounds::eigen_bound_weyl(j, &inputs_of(inputs)?, mode_of(mode))), "out"))
}
