//! Kernel canonicalization for permutation-invariant function approximation.
//!
//! A permutation-invariant target `f(x) = f(σx)` can be learned with any
//! kernel `K` by first mapping every input to its orbit representative, the
//! vector with coordinates sorted in non-increasing order. The resulting
//! *sorted kernel* `K(sort w, sort z)` costs one sort per evaluation instead of
//! the `d!` or `(d!)²` kernel evaluations of group averaging, and interpolation
//! with it behaves like interpolation on the fundamental domain
//! `{x¹ ≥ ⋯ ≥ xᵈ}`, whose fill distance is never larger than that of the cube.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`geometry`] | sort map, orbits, fill distances, coverings, cone parameters |
//! | [`kernels`] | Gaussian kernel, the four evaluation modes, Gram matrices, derivative constants |
//! | [`interpolation`] | minimal-norm interpolants, invariant targets, Monte Carlo L² error |
//! | [`bounds`] | closed-form error, tail-probability and eigenvalue bounds |
//! | [`spectral`] | Nyström eigenvalue estimates and decay slopes |
//! | [`experiments`] | seeded Monte Carlo studies that emit CSV |

pub mod bounds;
pub mod error;
pub mod experiments;
pub mod geometry;
pub mod interpolation;
pub mod kernels;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use geometry::{Design, DomainKind, Point};
pub use kernels::{KernelMode, KernelSpec};
