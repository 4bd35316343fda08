use std::f64::consts::PI;
use std::ffi::CStr;
use std::path::Path;
use std::process::Command;
use std::ptr;

use sortkern_ffi::*;

const FIG_KERNEL: SkKernel = SkKernel { amplitude: 1.0 / (2.0 * PI), bandwidth: 1.0, nu: 2 };

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 256];
    let len = unsafe { sk_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let msg = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned();
    assert_eq!(msg.len(), len.min(255));
    msg
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(sk_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn sort_point_in_place() {
    let mut x = [0.2, 0.9, 0.5];
    let status = unsafe { sk_sort_point(x.as_ptr(), 3, x.as_mut_ptr()) };
    assert_eq!(status, SkStatus::Ok);
    assert_eq!(x, [0.9, 0.5, 0.2]);
    assert_eq!(unsafe { sk_sort_point(ptr::null(), 3, x.as_mut_ptr()) }, SkStatus::NullPointer);
    assert!(last_error().contains("x is null"));
    assert_eq!(unsafe { sk_sort_point(x.as_ptr(), 0, x.as_mut_ptr()) }, SkStatus::InvalidArgument);
}

#[test]
fn kernel_eval_modes() {
    let (w, z) = ([0.0, 0.2], [0.2, 0.0]);
    let mut out = f64::NAN;
    let status = unsafe { sk_kernel_eval(&FIG_KERNEL, SkMode::Sorted, w.as_ptr(), z.as_ptr(), 2, &mut out) };
    assert_eq!(status, SkStatus::Ok);
    assert_eq!(out, 1.0 / (2.0 * PI));
    let status = unsafe { sk_kernel_eval(&FIG_KERNEL, SkMode::Plain, w.as_ptr(), z.as_ptr(), 2, &mut out) };
    assert_eq!(status, SkStatus::Ok);
    assert!((out - (-0.04f64).exp() / (2.0 * PI)).abs() < 1e-16);

    let wide = [0.1; 7];
    let before = out;
    let status =
        unsafe { sk_kernel_eval(&FIG_KERNEL, SkMode::PermSingle, wide.as_ptr(), wide.as_ptr(), 7, &mut out) };
    assert_eq!(status, SkStatus::CapExceeded);
    assert_eq!(out, before, "out-pointer untouched on failure");

    let bad = SkKernel { bandwidth: -1.0, ..FIG_KERNEL };
    let status = unsafe { sk_kernel_eval(&bad, SkMode::Plain, w.as_ptr(), z.as_ptr(), 2, &mut out) };
    assert_eq!(status, SkStatus::InvalidArgument);
    assert!(last_error().contains("bandwidth"));
}

#[test]
fn fill_distance_examples() {
    let design = [0.5];
    let candidates = [0.0, 0.25, 1.0];
    let mut h = 0.0;
    let status =
        unsafe { sk_fill_distance(design.as_ptr(), 1, candidates.as_ptr(), 3, 1, SkDomain::Cube, &mut h) };
    assert_eq!(status, SkStatus::Ok);
    assert_eq!(h, 0.5);
    let status = unsafe { sk_fill_distance(design.as_ptr(), 0, candidates.as_ptr(), 3, 1, SkDomain::Cube, &mut h) };
    assert_eq!(status, SkStatus::InvalidArgument);
}

#[test]
fn interpolant_lifecycle() {
    let design = [0.1, 0.7, 0.4, 0.3, 0.9, 0.2];
    let y = [1.0, -0.5, 2.0];
    let mut handle: *mut SkInterpolant = ptr::null_mut();
    let status =
        unsafe { sk_interpolant_fit(&FIG_KERNEL, SkMode::Sorted, design.as_ptr(), 3, 2, y.as_ptr(), &mut handle) };
    assert_eq!(status, SkStatus::Ok, "{}", last_error());
    assert!(!handle.is_null());
    assert_eq!(unsafe { sk_interpolant_len(handle) }, 3);

    for (row, &target) in design.chunks(2).zip(&y) {
        let mut v = 0.0;
        assert_eq!(unsafe { sk_interpolant_evaluate(handle, row.as_ptr(), 2, &mut v) }, SkStatus::Ok);
        assert!((v - target).abs() < 1e-8);
        let swapped = [row[1], row[0]];
        let mut s = 0.0;
        assert_eq!(unsafe { sk_interpolant_evaluate(handle, swapped.as_ptr(), 2, &mut s) }, SkStatus::Ok);
        assert_eq!(v, s);
    }

    let mut coeffs = [0.0; 3];
    assert_eq!(unsafe { sk_interpolant_coefficients(handle, coeffs.as_mut_ptr(), 3) }, SkStatus::Ok);
    assert!(coeffs.iter().all(|c| c.is_finite() && *c != 0.0));
    assert_eq!(unsafe { sk_interpolant_coefficients(handle, coeffs.as_mut_ptr(), 2) }, SkStatus::InvalidArgument);
    let mut jitter = f64::NAN;
    assert_eq!(unsafe { sk_interpolant_jitter(handle, &mut jitter) }, SkStatus::Ok);
    assert_eq!(jitter, 0.0);

    let wrong_dim = [0.5; 3];
    let mut v = 0.0;
    assert_eq!(unsafe { sk_interpolant_evaluate(handle, wrong_dim.as_ptr(), 3, &mut v) }, SkStatus::InvalidArgument);
    unsafe { sk_interpolant_free(handle) };
    unsafe { sk_interpolant_free(ptr::null_mut()) };
    assert_eq!(unsafe { sk_interpolant_len(ptr::null()) }, 0);
}

#[test]
fn fit_reports_duplicate_orbits() {
    let design = [0.1, 0.2, 0.2, 0.1];
    let y = [1.0, 2.0];
    let mut handle: *mut SkInterpolant = ptr::null_mut();
    let status =
        unsafe { sk_interpolant_fit(&FIG_KERNEL, SkMode::Sorted, design.as_ptr(), 2, 2, y.as_ptr(), &mut handle) };
    assert_eq!(status, SkStatus::DuplicateOrbit);
    assert!(handle.is_null());
    assert!(last_error().contains("same orbit"));
    let status =
        unsafe { sk_interpolant_fit(&FIG_KERNEL, SkMode::Plain, design.as_ptr(), 2, 2, y.as_ptr(), &mut handle) };
    assert_eq!(status, SkStatus::Ok);
    assert!(last_error().is_empty());
    unsafe { sk_interpolant_free(handle) };
}

fn unit_inputs(nu: u32, d: usize) -> SkBoundInputs {
    SkBoundInputs { nu, d, c_k0: 1.0, c_knu: 1.0, norm_h: 1.0, rho_low: 1.0, rho_high: 1.0, alpha: 1.05 }
}

#[test]
fn bound_functions() {
    let mut b = SkBound::default();
    assert_eq!(unsafe { sk_tilde_constant(&unit_inputs(1, 1), &mut b) }, SkStatus::Ok);
    assert_eq!((b.value, b.valid), (384.0, 1));
    let mut p = 0.0;
    assert_eq!(unsafe { sk_p_constant(&unit_inputs(1, 1), &mut p) }, SkStatus::Ok);
    assert_eq!(p, 16.0);

    assert_eq!(unsafe { sk_h_tail_bound(0.2, 100, 1, 1.0, SkDomain::Cube, &mut b) }, SkStatus::Ok);
    assert!((b.value - 15.0 * 0.9f64.powi(100)).abs() < 1e-15);

    let mut alpha = SkBound { value: 7.0, unclipped: 7.0, valid: 1 };
    assert_eq!(unsafe { sk_l2_bound(&unit_inputs(1, 1), 0.01, SkMode::Sorted, &mut b, &mut alpha) }, SkStatus::Ok);
    assert!((b.value - 4.4544).abs() < 1e-12);
    assert!((alpha.value - 3.84 * 1.05).abs() < 1e-12);
    assert_eq!(unsafe { sk_l2_bound(&unit_inputs(1, 1), 0.01, SkMode::Plain, &mut b, &mut alpha) }, SkStatus::Ok);
    assert_eq!((alpha.value, alpha.valid), (0.0, 0));

    assert_eq!(unsafe { sk_eigen_bound_covering(100, &unit_inputs(1, 1), SkMode::Plain, &mut b) }, SkStatus::Ok);
    assert!((b.value - 2.4).abs() < 1e-12);
    assert_eq!(unsafe { sk_eigen_bound_weyl(7, &unit_inputs(1, 1), SkMode::Plain, &mut b) }, SkStatus::Ok);
    assert!((b.value - 8.0 / (2.0 * PI * 7.0)).abs() < 1e-14);
    assert_eq!(unsafe { sk_eigen_bound_fill(1, 0.01, &unit_inputs(1, 1), SkMode::Plain, &mut b) }, SkStatus::Ok);
    assert_eq!(b.valid, 0);
    assert_eq!(
        unsafe { sk_pointwise_bound(&unit_inputs(1, 2), 0.001, SkMode::Sorted, SkRegion::NearDiagonal, &mut b) },
        SkStatus::Ok
    );
    assert!((b.value - 3.2).abs() < 1e-12);
    assert_eq!(unsafe { sk_error_tail_bound(0.25, 200, &unit_inputs(1, 1), SkMode::Plain, &mut b) }, SkStatus::Ok);
    assert!(b.value <= 1.0);

    let bad = SkBoundInputs { alpha: 1.0, ..unit_inputs(1, 1) };
    assert_eq!(unsafe { sk_tilde_constant(&bad, &mut b) }, SkStatus::InvalidArgument);
    assert_eq!(unsafe { sk_tilde_constant(ptr::null(), &mut b) }, SkStatus::NullPointer);
    assert_eq!(unsafe { sk_tilde_constant(&unit_inputs(1, 1), ptr::null_mut()) }, SkStatus::NullPointer);
}

#[test]
fn bound_inputs_from_kernel() {
    let mut b = unit_inputs(1, 1);
    assert_eq!(unsafe { sk_bound_inputs_for_kernel(&FIG_KERNEL, 3, 2.0, 1.1, &mut b) }, SkStatus::Ok);
    assert_eq!((b.nu, b.d, b.norm_h, b.alpha), (2, 3, 2.0, 1.1));
    assert_eq!(b.c_k0, 1.0 / (2.0 * PI));
    assert!(b.c_knu >= 1.0 / (2.0 * PI));
}

#[test]
fn header_declares_every_export_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include").join("sortkern.h");
    let text = std::fs::read_to_string(&header).expect("header generated by build script");
    for name in [
        "sk_version",
        "sk_last_error_message",
        "sk_sort_point",
        "sk_kernel_eval",
        "sk_fill_distance",
        "sk_interpolant_fit",
        "sk_interpolant_evaluate",
        "sk_interpolant_len",
        "sk_interpolant_coefficients",
        "sk_interpolant_jitter",
        "sk_interpolant_free",
        "sk_bound_inputs_for_kernel",
        "sk_tilde_constant",
        "sk_p_constant",
        "sk_pointwise_bound",
        "sk_l2_bound",
        "sk_h_tail_bound",
        "sk_error_tail_bound",
        "sk_eigen_bound_fill",
        "sk_eigen_bound_covering",
        "sk_eigen_bound_weyl",
    ] {
        assert!(text.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(text.contains("typedef struct SkInterpolant SkInterpolant;"));

    // Syntax-check as C when a compiler is available.
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&header).status()
    else {
        eprintln!("cc not found; skipping C syntax check");
        return;
    };
    assert!(status.success(), "header does not compile as C");
}

#[test]
fn c_program_links_and_runs() {
    // Test binaries live in target/<profile>/deps; the cdylib one level up.
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().and_then(Path::parent).unwrap().to_path_buf();
    let lib = lib_dir.join(format!("{}sortkern_ffi{}", std::env::consts::DLL_PREFIX, std::env::consts::DLL_SUFFIX));
    if !lib.exists() {
        eprintln!("{} not built; skipping C link test", lib.display());
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = tempfile::tempdir().unwrap();
    let bin = out.path().join("smoke");
    let Ok(status) = Command::new("cc")
        .arg(manifest.join("tests").join("c").join("smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&lib_dir)
        .args(["-lsortkern_ffi", "-lm", "-o"])
        .arg(&bin)
        .status()
    else {
        eprintln!("cc not found; skipping C link test");
        return;
    };
    assert!(status.success(), "C smoke program failed to build");
    let run = Command::new(&bin).env("LD_LIBRARY_PATH", &lib_dir).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{stdout}{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(stdout.trim(), format!("ok {}", env!("CARGO_PKG_VERSION")));
}
