use std::f64::consts::PI;

use proptest::prelude::*;
use sortkern::geometry::{covering_design, fill_distance_estimate, nearest_distances, sort_desc};
use sortkern::interpolation::{fit, make_invariant_target};
use sortkern::kernels::{permutations, Evaluator};
use sortkern::rng::stream;
use sortkern::{Design, DomainKind, KernelMode, KernelSpec};

fn unit_vec(d: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0..=1.0f64, d)
}

fn pair(max_d: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1..=max_d).prop_flat_map(|d| (unit_vec(d), unit_vec(d)))
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn sorted(v: &[f64]) -> Vec<f64> {
    let mut s = v.to_vec();
    sort_desc(&mut s);
    s
}

fn kernel(bandwidth: f64) -> KernelSpec {
    KernelSpec::gaussian(1.0 / (2.0 * PI), bandwidth, 2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sorting_never_increases_distance((w, z) in pair(12)) {
        prop_assert!(dist(&sorted(&w), &sorted(&z)) <= dist(&w, &z) + 1e-12);
    }

    #[test]
    fn sorting_is_idempotent_and_orbit_constant(w in unit_vec(7), seed in any::<u64>()) {
        let once = sorted(&w);
        prop_assert_eq!(sorted(&once), once.clone());
        prop_assert!(once.windows(2).all(|p| p[0] >= p[1]));
        let perms = permutations(7);
        let p = &perms[(seed % perms.len() as u64) as usize];
        let shuffled: Vec<f64> = p.iter().map(|&i| w[i]).collect();
        prop_assert_eq!(sorted(&shuffled), once);
    }

    #[test]
    fn sorting_is_an_isometry_on_the_simplex((w, z) in pair(12)) {
        let (sw, sz) = (sorted(&w), sorted(&z));
        prop_assert_eq!(dist(&sorted(&sw), &sorted(&sz)), dist(&sw, &sz));
    }

    #[test]
    fn sorted_mode_is_plain_on_representatives((w, z) in pair(12), bw in 0.05..2.0f64) {
        let d = w.len();
        let k = kernel(bw);
        let s = Evaluator::new(k, KernelMode::Sorted, d).unwrap();
        let p = Evaluator::new(k, KernelMode::Plain, d).unwrap();
        prop_assert_eq!(s.eval(&w, &z), p.eval(&sorted(&w), &sorted(&z)));
        prop_assert_eq!(s.eval(&w, &z), s.eval(&z, &w));
    }

    #[test]
    fn averaged_modes_agree_for_isotropic_kernels((w, z) in (1..=4usize).prop_flat_map(|d| (unit_vec(d), unit_vec(d)))) {
        let d = w.len();
        let k = kernel(0.7);
        let single = Evaluator::new(k, KernelMode::PermSingle, d).unwrap().eval(&w, &z);
        let double = Evaluator::new(k, KernelMode::PermDouble, d).unwrap().eval(&w, &z);
        prop_assert!((single - double).abs() <= 1e-14 * double.abs().max(1e-300));
    }

    #[test]
    fn invariant_modes_ignore_permutations((w, z) in (1..=4usize).prop_flat_map(|d| (unit_vec(d), unit_vec(d))), seed in any::<u64>()) {
        let d = w.len();
        let perms = permutations(d);
        let p = &perms[(seed % perms.len() as u64) as usize];
        let pw: Vec<f64> = p.iter().map(|&i| w[i]).collect();
        for mode in [KernelMode::Sorted, KernelMode::PermSingle, KernelMode::PermDouble] {
            let e = Evaluator::new(kernel(0.5), mode, d).unwrap();
            let (a, b) = (e.eval(&w, &z), e.eval(&pw, &z));
            prop_assert!((a - b).abs() <= 1e-15, "{} {} {}", mode, a, b);
        }
    }

    #[test]
    fn sorted_fill_distance_is_dominated(d in 1..=8usize, n in 1..=30usize, seed in any::<u64>()) {
        let mut rng = stream(seed, &[]);
        let design = Design::uniform(&mut rng, n, d).unwrap();
        let candidates = Design::uniform(&mut rng, 300, d).unwrap();
        let h = fill_distance_estimate(&design, DomainKind::Cube, &candidates).unwrap();
        let hs = fill_distance_estimate(&design, DomainKind::SortedSimplex, &candidates).unwrap();
        prop_assert!(hs <= h + 1e-12);
        let raw = nearest_distances(&design, DomainKind::Cube, &candidates).unwrap();
        prop_assert_eq!(h, raw.iter().copied().fold(f64::NEG_INFINITY, f64::max));
    }

    #[test]
    fn coverings_cover(d in 1..=4usize, eps in 0.15..0.9f64, seed in any::<u64>()) {
        let mut rng = stream(seed, &[]);
        let probes = Design::uniform(&mut rng, 400, d).unwrap();
        for domain in [DomainKind::Cube, DomainKind::SortedSimplex] {
            let grid = covering_design(eps, d, domain).unwrap();
            let h = fill_distance_estimate(&grid, domain, &probes).unwrap();
            prop_assert!(h <= eps, "{:?}: {} > {}", domain, h, eps);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn interpolants_reproduce_data_with_minimal_norm(d in 1..=3usize, n in 2..=25usize, seed in any::<u64>()) {
        let k = kernel(0.3);
        let target = make_invariant_target(&k, d, 3, seed).unwrap();
        let design = Design::uniform(&mut stream(seed, &[1]), n, d).unwrap();
        let y = target.values(&design).unwrap();
        for mode in [KernelMode::Plain, KernelMode::Sorted, KernelMode::PermSingle] {
            let f = match fit(&k, mode, &design, &y) {
                Ok(f) => f,
                // Random designs may put two points in one orbit up to rounding.
                Err(sortkern::Error::DuplicateOrbit { .. }) => continue,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            };
            for (x, &yi) in design.rows().zip(&y) {
                prop_assert!((f.evaluate(x).unwrap() - yi).abs() <= 1e-6);
            }
            if mode == KernelMode::PermSingle && f.jitter_used() == 0.0 {
                // The target lies in the averaged space, so the minimal-norm
                // interpolant of its values cannot have a larger norm.
                prop_assert!(f.norm_sq() <= target.norm_sq() * (1.0 + 1e-6) + 1e-12);
            }
        }
    }
}

#[test]
fn gram_matrices_are_symmetric_positive_semidefinite() {
    let design = Design::uniform(&mut stream(5, &[]), 12, 3).unwrap();
    for mode in KernelMode::ALL {
        let g = Evaluator::new(kernel(0.4), mode, 3).unwrap().gram(&design).unwrap();
        assert_eq!(g, g.transpose(), "{mode}");
        let eig = g.symmetric_eigenvalues();
        assert!(eig.min() > -1e-12, "{mode}: {}", eig.min());
    }
}
