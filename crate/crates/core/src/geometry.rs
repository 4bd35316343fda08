//! Points in the unit cube, the sort map onto the fundamental domain, fill
//! distances, covering designs, and interior-cone parameters.

use std::f64::consts::FRAC_PI_2;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest cone angle handed out; `arcsin(1)` at `d = 1` is nudged below `π/2`.
pub const MAX_CONE_ANGLE: f64 = FRAC_PI_2 - 1e-9;

/// Default point-count cap for [`covering_design`].
pub const DEFAULT_GRID_CAP: usize = 10_000_000;

/// Dimensions up to this value get every cube corner as a fill-distance candidate.
const MAX_ENUMERATED_CORNER_DIM: usize = 16;

/// A point of `[0,1]^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        check_coords(&coords, None)?;
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

fn check_coords(coords: &[f64], expected_dim: Option<usize>) -> Result<()> {
    if coords.is_empty() {
        return Err(Error::ZeroDimension);
    }
    if let Some(expected) = expected_dim {
        if coords.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: coords.len() });
        }
    }
    match coords.iter().position(|v| !(0.0..=1.0).contains(v)) {
        Some(index) => Err(Error::OutsideCube { index, value: coords[index] }),
        None => Ok(()),
    }
}

/// An ordered, non-empty collection of points sharing one dimension.
///
/// Stored row-major so that distance loops run over contiguous memory.
#[derive(Debug, Clone, PartialEq)]
pub struct Design {
    dim: usize,
    coords: Vec<f64>,
}

impl Design {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyDesign)?.dim();
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.dim() });
            }
            coords.extend_from_slice(p.coords());
        }
        Ok(Self { dim, coords })
    }

    /// Builds a design from a row-major buffer of `n × dim` coordinates.
    pub fn from_rows(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if coords.is_empty() {
            return Err(Error::EmptyDesign);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: coords.len() % dim });
        }
        check_coords(&coords, None)?;
        Ok(Self { dim, coords })
    }

    /// Convenience constructor from nested slices.
    pub fn from_points<P: AsRef<[f64]>>(points: &[P]) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyDesign)?.as_ref().len();
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in points {
            check_coords(p.as_ref(), Some(dim))?;
            coords.extend_from_slice(p.as_ref());
        }
        Self::from_rows(dim, coords)
    }

    /// `n` i.i.d. Unif\[0,1\]^d points.
    pub fn uniform<R: Rng>(rng: &mut R, n: usize, dim: usize) -> Result<Self> {
        Self::from_rows(dim, crate::rng::uniform_rows(rng, n, dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always false; designs hold at least one point.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, f64> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    /// The design with every point replaced by its orbit representative.
    pub fn sorted(&self) -> Design {
        let mut coords = self.coords.clone();
        coords.chunks_exact_mut(self.dim).for_each(sort_desc);
        Design { dim: self.dim, coords }
    }
}

/// The two domains on which fill distances are measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    /// `[0,1]^d`.
    Cube,
    /// The fundamental domain `{1 ≥ x¹ ≥ ⋯ ≥ xᵈ ≥ 0}`.
    SortedSimplex,
}

impl DomainKind {
    pub fn label(self) -> &'static str {
        match self {
            DomainKind::Cube => "cube",
            DomainKind::SortedSimplex => "sorted_simplex",
        }
    }
}

/// Interior-cone angle (radians) and radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeParams {
    pub theta: f64,
    pub radius: f64,
}

/// Sorts coordinates in place into non-increasing order.
pub fn sort_desc(coords: &mut [f64]) {
    coords.sort_unstable_by(|a, b| b.total_cmp(a));
}

/// Maps a point to its orbit representative in the sorted simplex.
pub fn sort_point(p: &Point) -> Point {
    let mut coords = p.coords().to_vec();
    sort_desc(&mut coords);
    Point(coords)
}

/// Returns the first pair of design indices whose points share an orbit.
pub fn find_duplicate_orbit(design: &Design) -> Option<(usize, usize)> {
    let sorted = design.sorted();
    let mut order: Vec<usize> = (0..sorted.len()).collect();
    order.sort_by(|&a, &b| {
        sorted
            .point(a)
            .iter()
            .zip(sorted.point(b))
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    order.windows(2).find_map(|w| {
        // Exact comparison: 0.0 and -0.0 count as the same coordinate.
        let same = sorted.point(w[0]).iter().zip(sorted.point(w[1])).all(|(x, y)| x == y);
        same.then(|| (w[0].min(w[1]), w[0].max(w[1])))
    })
}

/// True iff the sorted design points are pairwise distinct.
pub fn distinct_orbits(design: &Design) -> bool {
    find_duplicate_orbit(design).is_none()
}

#[inline]
fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[inline]
fn sq_dist_fixed<const D: usize>(a: &[f64], b: &[f64]) -> f64 {
    let a: &[f64; D] = a.try_into().unwrap();
    let b: &[f64; D] = b.try_into().unwrap();
    let mut s = 0.0;
    for k in 0..D {
        let t = a[k] - b[k];
        s += t * t;
    }
    s
}

/// `max_c min_i ‖c − x_i‖²` with early abandonment of candidates that already
/// have a design point closer than the running maximum. Candidates that
/// survive are scanned in full, so the result is exact and independent of the
/// traversal order.
fn max_min_sq(design: &[f64], candidates: &[f64], dim: usize, dist: impl Fn(&[f64], &[f64]) -> f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    let mut witness = 0usize;
    for c in candidates.chunks_exact(dim) {
        if dist(c, &design[witness * dim..(witness + 1) * dim]) < best {
            continue;
        }
        let mut nearest = f64::INFINITY;
        let mut dominated = false;
        for (i, x) in design.chunks_exact(dim).enumerate() {
            let d = dist(c, x);
            if d < nearest {
                nearest = d;
                if nearest < best {
                    witness = i;
                    dominated = true;
                    break;
                }
            }
        }
        if !dominated {
            best = nearest;
        }
    }
    best
}

fn max_min_distance(design: &[f64], candidates: &[f64], dim: usize) -> f64 {
    macro_rules! fixed {
        ($($d:literal)*) => {
            match dim {
                $($d => max_min_sq(design, candidates, dim, sq_dist_fixed::<$d>),)*
                _ => max_min_sq(design, candidates, dim, sq_dist),
            }
        };
    }
    fixed!(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16).sqrt()
}

/// Sorts every candidate row; rows on cube corners collapse onto the `d + 1`
/// simplex vertices, so repeated vertices are dropped.
fn sort_candidates(candidates: &[f64], dim: usize) -> Vec<f64> {
    let mut seen_vertex = vec![false; dim + 1];
    let mut out = Vec::with_capacity(candidates.len());
    for row in candidates.chunks_exact(dim) {
        if row.iter().all(|&v| v == 0.0 || v == 1.0) {
            let ones = row.iter().filter(|&&v| v == 1.0).count();
            if std::mem::replace(&mut seen_vertex[ones], true) {
                continue;
            }
        }
        let start = out.len();
        out.extend_from_slice(row);
        sort_desc(&mut out[start..]);
    }
    out
}

/// Fill-distance estimate on raw row-major buffers.
///
/// Returns `max_c min_i ‖c − x_i‖₂` over the candidate rows; for
/// [`DomainKind::SortedSimplex`] both the design and the candidates are sorted
/// first. The value is a lower estimate of the supremum over the domain.
pub fn fill_distance_rows(design: &[f64], candidates: &[f64], dim: usize, domain: DomainKind) -> Result<f64> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if design.is_empty() {
        return Err(Error::EmptyDesign);
    }
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    for buf in [design, candidates] {
        if buf.len() % dim != 0 {
            return Err(Error::DimensionMismatch { expected: dim, got: buf.len() % dim });
        }
    }
    Ok(match domain {
        DomainKind::Cube => max_min_distance(design, candidates, dim),
        DomainKind::SortedSimplex => {
            let mut sorted_design = design.to_vec();
            sorted_design.chunks_exact_mut(dim).for_each(sort_desc);
            max_min_distance(&sorted_design, &sort_candidates(candidates, dim), dim)
        }
    })
}

/// Fill distance of `design` in `domain`, estimated over `candidates`.
pub fn fill_distance_estimate(design: &Design, domain: DomainKind, candidates: &Design) -> Result<f64> {
    if design.dim() != candidates.dim() {
        return Err(Error::DimensionMismatch { expected: design.dim(), got: candidates.dim() });
    }
    fill_distance_rows(design.as_flat(), candidates.as_flat(), design.dim(), domain)
}

/// Distance from every candidate to its nearest design point, in the metric
/// of `domain`. Unlike [`fill_distance_estimate`] nothing is pruned.
pub fn nearest_distances(design: &Design, domain: DomainKind, candidates: &Design) -> Result<Vec<f64>> {
    if design.dim() != candidates.dim() {
        return Err(Error::DimensionMismatch { expected: design.dim(), got: candidates.dim() });
    }
    let (design, candidates) = match domain {
        DomainKind::Cube => (design.clone(), candidates.clone()),
        DomainKind::SortedSimplex => (design.sorted(), candidates.sorted()),
    };
    Ok(candidates
        .rows()
        .map(|c| design.rows().map(|x| sq_dist(c, x)).fold(f64::INFINITY, f64::min).sqrt())
        .collect())
}

/// Every corner of `[0,1]^d` (first coordinate varies slowest).
pub fn cube_corners(dim: usize) -> Vec<f64> {
    let count = 1usize << dim;
    let mut out = Vec::with_capacity(count * dim);
    for mask in 0..count {
        out.extend((0..dim).map(|k| ((mask >> (dim - 1 - k)) & 1) as f64));
    }
    out
}

/// Default fill-distance candidate set: the cube corners followed by `count`
/// uniform draws.
///
/// Corners go first because in moderate and high dimension they are where the
/// nearest-point distance peaks, which lets the pruned search discard most
/// uniform candidates immediately. Above 16 dimensions `2^16` random corners
/// stand in for the full set.
pub fn candidates_with_corners<R: Rng>(rng: &mut R, dim: usize, count: usize) -> Result<Design> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut coords = if dim <= MAX_ENUMERATED_CORNER_DIM {
        cube_corners(dim)
    } else {
        (0..(1usize << MAX_ENUMERATED_CORNER_DIM) * dim)
            .map(|_| if rng.random::<bool>() { 1.0 } else { 0.0 })
            .collect()
    };
    coords.extend(crate::rng::uniform_rows(rng, count, dim));
    Design::from_rows(dim, coords)
}

/// Deterministic grid design whose fill distance in `domain` is at most `epsilon`.
///
/// Cells of side at most `2ε/√d` (at least two per axis) are represented by
/// their centers; for the sorted simplex only non-increasing index tuples are
/// kept, which is the sort-and-deduplicate image of the cube grid.
pub fn covering_design(epsilon: f64, dim: usize, domain: DomainKind) -> Result<Design> {
    covering_design_with_cap(epsilon, dim, domain, DEFAULT_GRID_CAP)
}

pub fn covering_design_with_cap(epsilon: f64, dim: usize, domain: DomainKind, cap: usize) -> Result<Design> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(crate::error::invalid(format!("covering radius must lie in (0, 1), got {epsilon}")));
    }
    let cells_f = ((dim as f64).sqrt() / (2.0 * epsilon) * (1.0 - 1e-12)).ceil().max(2.0);
    let needed = match domain {
        DomainKind::Cube => cells_f.powi(dim as i32),
        DomainKind::SortedSimplex => multiset_count(cells_f, dim),
    };
    if !(needed <= cap as f64) {
        return Err(Error::GridTooLarge { needed, cap });
    }
    let cells = cells_f as usize;
    let center = |i: usize| (i as f64 + 0.5) / cells as f64;
    let mut coords = Vec::with_capacity(needed as usize * dim);
    let mut index = vec![0usize; dim];
    match domain {
        DomainKind::Cube => loop {
            coords.extend(index.iter().map(|&i| center(i)));
            if !advance_odometer(&mut index, cells) {
                break;
            }
        },
        DomainKind::SortedSimplex => loop {
            coords.extend(index.iter().map(|&i| center(i)));
            if !advance_non_increasing(&mut index, cells) {
                break;
            }
        },
    }
    Design::from_rows(dim, coords)
}

/// `C(q + d − 1, d)` in floating point.
fn multiset_count(q: f64, d: usize) -> f64 {
    (1..=d).fold(1.0, |acc, k| acc * (q + k as f64 - 1.0) / k as f64)
}

fn advance_odometer(index: &mut [usize], base: usize) -> bool {
    for slot in index.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Steps through tuples `i₁ ≥ i₂ ≥ ⋯ ≥ i_d` in `[0, base)` lexicographically.
fn advance_non_increasing(index: &mut [usize], base: usize) -> bool {
    for k in (0..index.len()).rev() {
        let limit = if k == 0 { base - 1 } else { index[k - 1] };
        if index[k] < limit {
            index[k] += 1;
            index[k + 1..].iter_mut().for_each(|v| *v = 0);
            return true;
        }
    }
    false
}

/// Interior-cone parameters of the cube and of the sorted simplex.
pub fn cone_parameters(dim: usize, domain: DomainKind) -> Result<ConeParams> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let d = dim as f64;
    let (sin_theta, radius) = match domain {
        DomainKind::Cube => (1.0 / d.sqrt(), 0.5),
        DomainKind::SortedSimplex => (1.0 / d.powf(1.5), 1.0 / (2.0 * d + 2.0)),
    };
    Ok(ConeParams { theta: sin_theta.asin().min(MAX_CONE_ANGLE), radius })
}

/// Multiplier of `h` inside the floor condition for `domain`.
pub fn cone_condition_factor(nu: u32, dim: usize, domain: DomainKind) -> f64 {
    let d = dim as f64;
    let nu2 = f64::from(nu * nu);
    match domain {
        DomainKind::Cube => 8.0 * nu2 * (d.sqrt() + 1.0),
        DomainKind::SortedSimplex => 8.0 * nu2 * (d + 1.0) * (d.powf(1.5) + 1.0),
    }
}

/// `⌊(c·h)⁻¹⌋ > 1` with the domain's constant `c`; the regime in which the
/// pointwise and L² error bounds apply.
pub fn cone_condition_holds(h: f64, nu: u32, dim: usize, domain: DomainKind) -> bool {
    h > 0.0 && (1.0 / (cone_condition_factor(nu, dim, domain) * h)).floor() > 1.0
}

/// Radius of the largest ball inside `domain`.
pub fn inradius(dim: usize, domain: DomainKind) -> f64 {
    match domain {
        DomainKind::Cube => 0.5,
        // Equidistant from x¹ = 1, xᵈ = 0 and the d − 1 planes xᵏ = xᵏ⁺¹.
        DomainKind::SortedSimplex => 1.0 / (2.0 + (dim as f64 - 1.0) * std::f64::consts::SQRT_2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;
    use std::f64::consts::{FRAC_PI_6, SQRT_2};

    fn pt(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn sort_point_examples() {
        assert_eq!(sort_point(&pt(&[0.2, 0.7, 0.1])).coords(), &[0.7, 0.2, 0.1]);
        assert_eq!(sort_point(&pt(&[0.9, 0.5, 0.5])).coords(), &[0.9, 0.5, 0.5]);
        assert_eq!(sort_point(&pt(&[0.4])).coords(), &[0.4]);
    }

    #[test]
    fn point_validation() {
        assert!(matches!(Point::new(vec![]), Err(Error::ZeroDimension)));
        assert!(matches!(Point::new(vec![0.5, 1.5]), Err(Error::OutsideCube { index: 1, .. })));
        assert!(Point::new(vec![f64::NAN]).is_err());
        assert!(Point::new(vec![0.0, 1.0]).is_ok());
    }

    #[test]
    fn design_validation() {
        assert!(matches!(Design::new(vec![]), Err(Error::EmptyDesign)));
        assert!(matches!(
            Design::new(vec![pt(&[0.1]), pt(&[0.1, 0.2])]),
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        ));
        assert!(Design::from_rows(2, vec![0.1, 0.2, 0.3]).is_err());
    }

    #[test]
    fn distinct_orbit_examples() {
        let swap = Design::from_points(&[[0.1, 0.2], [0.2, 0.1]]).unwrap();
        assert!(!distinct_orbits(&swap));
        assert_eq!(find_duplicate_orbit(&swap), Some((0, 1)));
        assert!(distinct_orbits(&Design::from_points(&[[0.1, 0.2], [0.3, 0.1]]).unwrap()));
        assert!(distinct_orbits(&Design::from_points(&[[0.5, 0.5]]).unwrap()));
    }

    #[test]
    fn fill_distance_examples() {
        let center = Design::from_points(&[[0.5, 0.5]]).unwrap();
        let corners = Design::from_rows(2, cube_corners(2)).unwrap();
        let h = fill_distance_estimate(&center, DomainKind::Cube, &corners).unwrap();
        assert!((h - SQRT_2 / 2.0).abs() < 1e-15);

        let grid = covering_design(0.2, 2, DomainKind::Cube).unwrap();
        assert_eq!(fill_distance_estimate(&grid, DomainKind::Cube, &grid).unwrap(), 0.0);

        let vertex = Design::from_points(&[[1.0, 0.0]]).unwrap();
        let simplex = Design::from_points(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]).unwrap();
        let h = fill_distance_estimate(&vertex, DomainKind::SortedSimplex, &simplex).unwrap();
        assert_eq!(h, 1.0);
    }

    #[test]
    fn fill_distance_errors() {
        assert!(matches!(
            fill_distance_rows(&[0.5], &[], 1, DomainKind::Cube),
            Err(Error::EmptyCandidates)
        ));
        assert!(matches!(fill_distance_rows(&[], &[0.5], 1, DomainKind::Cube), Err(Error::EmptyDesign)));
        let a = Design::from_points(&[[0.5, 0.5]]).unwrap();
        let b = Design::from_points(&[[0.5]]).unwrap();
        assert!(fill_distance_estimate(&a, DomainKind::Cube, &b).is_err());
    }

    #[test]
    fn pruned_search_matches_exhaustive() {
        let mut rng = stream(3, &[]);
        for dim in [1, 2, 3, 7, 13, 17] {
            let design = Design::uniform(&mut rng, 40, dim).unwrap();
            let cands = candidates_with_corners(&mut rng, dim, 500).unwrap();
            for domain in [DomainKind::Cube, DomainKind::SortedSimplex] {
                let fast = fill_distance_estimate(&design, domain, &cands).unwrap();
                let slow = nearest_distances(&design, domain, &cands)
                    .unwrap()
                    .into_iter()
                    .fold(f64::NEG_INFINITY, f64::max);
                assert_eq!(fast, slow, "dim {dim} {domain:?}");
            }
        }
    }

    fn sorted_rows(d: &Design) -> Vec<Vec<f64>> {
        let mut rows: Vec<Vec<f64>> = d.rows().map(|r| r.to_vec()).collect();
        rows.sort_by(|a, b| a.partial_cmp(b).unwrap());
        rows
    }

    #[test]
    fn covering_examples() {
        let eps = SQRT_2 / 4.0;
        let cube = covering_design(eps, 2, DomainKind::Cube).unwrap();
        assert_eq!(
            sorted_rows(&cube),
            vec![vec![0.25, 0.25], vec![0.25, 0.75], vec![0.75, 0.25], vec![0.75, 0.75]]
        );
        let simplex = covering_design(eps, 2, DomainKind::SortedSimplex).unwrap();
        assert_eq!(sorted_rows(&simplex), vec![vec![0.25, 0.25], vec![0.75, 0.25], vec![0.75, 0.75]]);
        for domain in [DomainKind::Cube, DomainKind::SortedSimplex] {
            let line = covering_design(0.6, 1, domain).unwrap();
            assert_eq!(line.as_flat(), &[0.25, 0.75]);
        }
    }

    #[test]
    fn covering_errors() {
        assert!(covering_design(0.0, 2, DomainKind::Cube).is_err());
        assert!(covering_design(1.0, 2, DomainKind::Cube).is_err());
        assert!(matches!(
            covering_design(1e-3, 6, DomainKind::Cube),
            Err(Error::GridTooLarge { .. })
        ));
        assert!(matches!(
            covering_design_with_cap(0.1, 2, DomainKind::SortedSimplex, 10),
            Err(Error::GridTooLarge { .. })
        ));
    }

    #[test]
    fn covering_matches_brute_force_sort_dedupe() {
        for (eps, dim) in [(0.3, 2), (0.25, 3), (0.45, 4)] {
            let cube = covering_design(eps, dim, DomainKind::Cube).unwrap();
            let mut expected = sorted_rows(&cube.sorted());
            expected.dedup();
            let simplex = covering_design(eps, dim, DomainKind::SortedSimplex).unwrap();
            assert_eq!(sorted_rows(&simplex), expected);
        }
    }

    #[test]
    fn cone_parameter_examples() {
        let c = cone_parameters(4, DomainKind::Cube).unwrap();
        assert!((c.theta - FRAC_PI_6).abs() < 1e-15);
        assert_eq!(c.radius, 0.5);
        let s = cone_parameters(4, DomainKind::SortedSimplex).unwrap();
        assert!((s.theta - 0.125_f64.asin()).abs() < 1e-15);
        assert!((s.theta - 0.125328).abs() < 1e-6);
        assert!((s.radius - 0.1).abs() < 1e-15);
        let one = cone_parameters(1, DomainKind::Cube).unwrap();
        assert_eq!(one.theta, MAX_CONE_ANGLE);
        assert!(one.theta < FRAC_PI_2);
        assert!(cone_parameters(0, DomainKind::Cube).is_err());
    }

    #[test]
    fn cone_condition_examples() {
        assert!(cone_condition_holds(0.01, 1, 2, DomainKind::Cube));
        assert!(!cone_condition_holds(0.1, 1, 2, DomainKind::Cube));
        assert!(cone_condition_holds(0.001, 1, 2, DomainKind::SortedSimplex));
        assert!(!cone_condition_holds(0.0, 1, 2, DomainKind::Cube));
    }

    #[test]
    fn inradius_ball_fits() {
        assert_eq!(inradius(1, DomainKind::SortedSimplex), 0.5);
        // Center of the inscribed ball in 3-D sits at distance r from every facet.
        let r = inradius(3, DomainKind::SortedSimplex);
        let c = [r + 2.0 * SQRT_2 * r, r + SQRT_2 * r, r];
        assert!((1.0 - c[0] - r).abs() < 1e-15);
        assert!(((c[0] - c[1]) / SQRT_2 - r).abs() < 1e-15);
        assert!(((c[1] - c[2]) / SQRT_2 - r).abs() < 1e-15);
    }
}
