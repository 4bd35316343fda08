#ifndef SORTKERN_H
#define SORTKERN_H

/* Generated by cbindgen from crates/ffi/src; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SkStatus {
  SK_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SK_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of range or inconsistent.
   */
  SK_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Two design points share an orbit (sorted mode).
   */
  SK_STATUS_DUPLICATE_ORBIT = 3,
  /**
   * An averaged mode was requested above its dimension cap.
   */
  SK_STATUS_CAP_EXCEEDED = 4,
  /**
   * Factorization, eigensolver or residual check failed.
   */
  SK_STATUS_NUMERICAL = 5,
  /**
   * An internal panic was caught.
   */
  SK_STATUS_PANIC = 6,
} SkStatus;

/**
 * Kernel evaluation mode.
 */
typedef enum SkMode {
  SK_MODE_PLAIN = 0,
  SK_MODE_SORTED = 1,
  SK_MODE_PERM_DOUBLE = 2,
  SK_MODE_PERM_SINGLE = 3,
} SkMode;

/**
 * Domain in which fill distances and tail bounds are measured.
 */
typedef enum SkDomain {
  SK_DOMAIN_CUBE = 0,
  SK_DOMAIN_SORTED_SIMPLEX = 1,
} SkDomain;

/**
 * Position relative to the partial diagonals (sorted pointwise bound).
 */
typedef enum SkRegion {
  SK_REGION_INTERIOR = 0,
  SK_REGION_NEAR_DIAGONAL = 1,
} SkRegion;

/**
 * Opaque fitted interpolant.
 */
typedef struct SkInterpolant SkInterpolant;

/**
 * Gaussian base kernel `amplitude · exp(−‖w − z‖² / (2 bandwidth²))` with
 * smoothness degree `nu` for the bounds.
 */
typedef struct SkKernel {
  double amplitude;
  double bandwidth;
  uint32_t nu;
} SkKernel;

/**
 * Constants shared by the error and eigenvalue bounds.
 */
typedef struct SkBoundInputs {
  uint32_t nu;
  size_t d;
  double c_k0;
  double c_knu;
  double norm_h;
  double rho_low;
  double rho_high;
  double alpha;
} SkBoundInputs;

/**
 * An evaluated bound; `valid` is 1 when its precondition held.
 */
typedef struct SkBound {
  double value;
  double unclipped;
  int32_t valid;
} SkBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *sk_version(void);

/**
 * Copies the calling thread's most recent error message into `buf`
 * (truncated, always NUL-terminated when `len > 0`) and returns the full
 * message length in bytes, excluding the terminator. Empty after a success.
 *
 * # Safety
 * `buf` must be null or valid for writes of `len` bytes.
 */
size_t sk_last_error_message(char *buf, size_t len);

/**
 * Writes `x` sorted into non-increasing order to `out` (may alias `x`).
 *
 * # Safety
 * `x` and `out` must be valid for `d` values.
 */
enum SkStatus sk_sort_point(const double *x, size_t d, double *out);

/**
 * Evaluates the kernel in `mode` at `w` and `z`.
 *
 * # Safety
 * `kernel` must point to an `SkKernel`; `w` and `z` must be valid for `d` values.
 */
enum SkStatus sk_kernel_eval(const struct SkKernel *kernel,
                             enum SkMode mode,
                             const double *w,
                             const double *z,
                             size_t d,
                             double *out);

/**
 * Fill distance of an `n × d` design, estimated over `m × d` candidates.
 *
 * # Safety
 * `design` must be valid for `n·d` values and `candidates` for `m·d` values.
 */
enum SkStatus sk_fill_distance(const double *design,
                               size_t n,
                               const double *candidates,
                               size_t m,
                               size_t d,
                               enum SkDomain domain,
                               double *out);

/**
 * Fits the minimal-norm interpolant of `y` on an `n × d` design and stores
 * a new handle in `*out`.
 *
 * # Safety
 * `kernel` must point to an `SkKernel`, `design` be valid for `n·d` values,
 * `y` for `n` values, and `out` for one pointer write.
 */
enum SkStatus sk_interpolant_fit(const struct SkKernel *kernel,
                                 enum SkMode mode,
                                 const double *design,
                                 size_t n,
                                 size_t d,
                                 const double *y,
                                 struct SkInterpolant **out);

/**
 * Evaluates a fitted interpolant at one point of dimension `d`.
 *
 * # Safety
 * `f` must be a live handle from [`sk_interpolant_fit`]; `x` valid for `d` values.
 */
enum SkStatus sk_interpolant_evaluate(const struct SkInterpolant *f,
                                      const double *x,
                                      size_t d,
                                      double *out);

/**
 * Number of design points (and coefficients) of a fitted interpolant; 0 for null.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
size_t sk_interpolant_len(const struct SkInterpolant *f);

/**
 * Copies the coefficients into `out`, which must hold `len` values with
 * `len` equal to [`sk_interpolant_len`].
 *
 * # Safety
 * `f` must be a live handle and `out` valid for `len` writes.
 */
enum SkStatus sk_interpolant_coefficients(const struct SkInterpolant *f, double *out, size_t len);

/**
 * Diagonal jitter that was added to the Gram matrix (0 when none was needed).
 *
 * # Safety
 * `f` must be a live handle.
 */
enum SkStatus sk_interpolant_jitter(const struct SkInterpolant *f, double *out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `f` must be null or a handle from [`sk_interpolant_fit`] not yet freed.
 */
void sk_interpolant_free(struct SkInterpolant *f);

/**
 * Fills `out` with the kernel's sup constants `C_{K,0}`, `C_{K,ν}` for
 * dimension `d`, the given `‖f‖`, uniform density and slack `alpha`.
 *
 * # Safety
 * `kernel` must point to an `SkKernel`; `out` valid for one write.
 */
enum SkStatus sk_bound_inputs_for_kernel(const struct SkKernel *kernel,
                                         size_t d,
                                         double norm_h,
                                         double alpha,
                                         struct SkBoundInputs *out);

/**
 * `C̃`.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
 */
enum SkStatus sk_tilde_constant(const struct SkBoundInputs *inputs, struct SkBound *out);

/**
 * `P_{ν,d}`.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
 */
enum SkStatus sk_p_constant(const struct SkBoundInputs *inputs, double *out);

/**
 * Pointwise error bound at fill distance `h`.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
 */
enum SkStatus sk_pointwise_bound(const struct SkBoundInputs *inputs,
                                 double h,
                                 enum SkMode mode,
                                 enum SkRegion region,
                                 struct SkBound *out);

/**
 * Squared L² error bound at fill distance `h`. For the sorted mode
 * `alpha_form` (optional, may be null) receives the `α` form; otherwise it
 * is set to an invalid zero bound.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write;
 * `alpha_form` null or valid for one write.
 */
enum SkStatus sk_l2_bound(const struct SkBoundInputs *inputs,
                          double h,
                          enum SkMode mode,
                          struct SkBound *out,
                          struct SkBound *alpha_form);

/**
 * Bound on `P[h > ε]` for `n` i.i.d. points with density at least `rho_low`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum SkStatus sk_h_tail_bound(double epsilon,
                              size_t n,
                              size_t d,
                              double rho_low,
                              enum SkDomain domain,
                              struct SkBound *out);

/**
 * Bound on `P[‖f − f̂‖² > ε]`.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
 */
enum SkStatus sk_error_tail_bound(double epsilon,
                                  size_t n,
                                  const struct SkBoundInputs *inputs,
                                  enum SkMode mode,
                                  struct SkBound *out);

/**
 * Eigenvalue bound from the fill distance `h` of a `(j − 1)`-point design.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
 */
enum SkStatus sk_eigen_bound_fill(size_t j,
                                  double h,
                                  const struct SkBoundInputs *inputs,
                                  enum SkMode mode,
                                  struct SkBound *out);

/**
 * Eigenvalue bound from a minimal covering.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
 */
enum SkStatus sk_eigen_bound_covering(size_t j,
                                      const struct SkBoundInputs *inputs,
                                      enum SkMode mode,
                                      struct SkBound *out);

/**
 * Eigenvalue bound from Weyl's law.
 *
 * # Safety
 * `inputs` must point to an `SkBoundInputs`; `out` valid for one write.
 */
enum SkStatus sk_eigen_bound_weyl(size_t j,
                                  const struct SkBoundInputs *inputs,
                                  enum SkMode mode,
                                  struct SkBound *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SORTKERN_H */
