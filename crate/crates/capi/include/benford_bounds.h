/* C ABI for the benford-bounds library. */

#ifndef BENFORD_BOUNDS_H
#define BENFORD_BOUNDS_H

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a C API call; `Ok` means all out-parameters were written.
typedef enum bb_status {
  BB_STATUS_OK = 0,
  // A required pointer argument was NULL.
  BB_STATUS_NULL_POINTER = 1,
  // A parameter was out of range or otherwise invalid.
  BB_STATUS_INVALID_ARGUMENT = 2,
  // The inputs lie outside the mathematical domain of the operation.
  BB_STATUS_DOMAIN_ERROR = 3,
  // The operation is not defined for this density family (e.g. derivatives
  // of a non-smooth family).
  BB_STATUS_UNSUPPORTED = 4,
  // Root finding or quadrature failed to converge.
  BB_STATUS_NO_CONVERGENCE = 5,
  // A measured value exceeded its certified bound.
  BB_STATUS_VERIFICATION_FAILED = 6,
  // A model spec, digit prefix or encoding could not be parsed.
  BB_STATUS_PARSE_ERROR = 7,
  // File access failed.
  BB_STATUS_IO_ERROR = 8,
  // An internal invariant was violated (caught panic).
  BB_STATUS_INTERNAL_ERROR = 9,
} bb_status;

// Opaque density model handle.
typedef struct bb_model bb_model;

// Opaque per-order bound report handle.
typedef struct bb_report bb_report;

// Opaque wrapped-distribution handle.
typedef struct bb_wrapped bb_wrapped;

// Closed-form wrapped-normal bounds at factorial index `m`.
typedef struct bb_gaussian_bounds_t {
  double range;
  double kuiper;
  double mrae;
  uint64_t m;
} bb_gaussian_bounds_t;

// Measured distances between the wrapped distribution and uniform.
typedef struct bb_discrepancies {
  double range_g;
  double kuiper;
  double mrae;
  double ks;
} bb_discrepancies;

// One row of a bound report.
typedef struct bb_per_k {
  uint32_t k;
  double tv_k;
  double range_bound;
  double kuiper_bound;
  double mrae_bound;
} bb_per_k;

// Best derivative order and the componentwise minimal bounds of a report.
typedef struct bb_best_bounds_t {
  uint32_t best_k;
  double range_bound;
  double kuiper_bound;
  double mrae_bound;
} bb_best_bounds_t;

// Benford and exact probabilities of one digit prefix with the certified
// relative-error bound.
typedef struct bb_digit_report_t {
  double benford_p;
  double exact_p;
  double rel_err;
  double certified_bound;
} bb_digit_report_t;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code.
const char *bb_status_message(enum bb_status status);

// # Safety
// `out` must be a valid pointer; the returned handle must be released with
// [`bb_model_free`].
enum bb_status bb_model_gaussian(double mu, double sigma, struct bb_model **out);

// # Safety
// `out` must be a valid pointer; the returned handle must be released with
// [`bb_model_free`].
enum bb_status bb_model_gumbel(double mu, double sigma, struct bb_model **out);

// Base-`base` logarithm of a Weibull variable with shape `tau`, scale `gamma`.
//
// # Safety
// `out` must be a valid pointer; the returned handle must be released with
// [`bb_model_free`].
enum bb_status bb_model_weibull(double tau, double gamma, uint32_t base, struct bb_model **out);

// # Safety
// `out` must be a valid pointer; the returned handle must be released with
// [`bb_model_free`].
enum bb_status bb_model_uniform_width(double width, struct bb_model **out);

// Piecewise-linear density through `len` `(knot, value)` pairs, zero outside.
//
// # Safety
// `knots` and `values` must point to `len` readable doubles; `out` must be a
// valid pointer; the returned handle must be released with [`bb_model_free`].
enum bb_status bb_model_piecewise_linear(const double *knots,
                                         const double *values,
                                         size_t len,
                                         struct bb_model **out);

// Parse a model spec string (`gauss:sigma=1`, `weibull:tau=0.5,gamma=2`,
// `uniform:width=1.5`, `pwl:file=path`); `base` feeds the Weibull conversion.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be a valid pointer; the
// returned handle must be released with [`bb_model_free`].
enum bb_status bb_model_parse(const char *spec, uint32_t base, struct bb_model **out);

// # Safety
// `model` must be a handle from a `bb_model_*` constructor, not yet freed.
void bb_model_free(struct bb_model *model);

// # Safety
// `model` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_model_density(const struct bb_model *model, double x, double *out);

// Exact `k`-th derivative of the density at `x` (smooth families for `k >= 1`).
//
// # Safety
// `model` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_model_derivative(const struct bb_model *model, uint32_t k, double x, double *out);

// Exact total variation of the `k`-th derivative of the standard normal density.
//
// # Safety
// `out` must be a valid pointer.
enum bb_status bb_tv_gaussian_deriv(uint32_t k, double *out);

// Exact total variation of the `k`-th derivative of the log-Weibull base density.
//
// # Safety
// `out` must be a valid pointer.
enum bb_status bb_tv_gumbel_deriv(uint32_t k, double *out);

// `sqrt((k+1)!)`.
double bb_tv_factorial_bound(uint32_t k);

// `h(m) = sqrt(m!/m^m)` for `m >= 1`.
//
// # Safety
// `out` must be a valid pointer.
enum bb_status bb_h_stirling(uint64_t m, double *out);

// Range bound from `TV(f^(k))`.
double bb_bound_range(double tv_k, uint32_t k);

// Kuiper bound from `TV(f^(k))`.
double bb_bound_kuiper(double tv_k, uint32_t k);

// MRAE bound from `TV(f^(k))`.
double bb_bound_mrae(double tv_k, uint32_t k);

// Pointwise bound `(y-x)(1-(y-x)) TV(f^(k)) / (2 * 6^k)` for `0 <= x < y <= 1`.
//
// # Safety
// `out` must be a valid pointer.
enum bb_status bb_bound_pointwise(double tv_k, uint32_t k, double x, double y, double *out);

// Closed-form wrapped-normal bounds for `sigma >= 1/6`.
//
// # Safety
// `out` must be a valid pointer.
enum bb_status bb_gaussian_bounds(double sigma, struct bb_gaussian_bounds_t *out);

// Weibull digit-error bound `B_tau(k) = 3 TV(f_o^(k)) (tau ln(base)/6)^(k+1)`.
//
// # Safety
// `out` must be a valid pointer.
enum bb_status bb_weibull_bound(double tau, uint32_t base, uint32_t k, double *out);

// Wrap a model modulo one (the model handle stays owned by the caller).
//
// # Safety
// `model` must be a live handle; `out` must be a valid pointer; the returned
// handle must be released with [`bb_wrapped_free`].
enum bb_status bb_wrapped_new(const struct bb_model *model, struct bb_wrapped **out);

// # Safety
// `wrapped` must be a handle from [`bb_wrapped_new`], not yet freed.
void bb_wrapped_free(struct bb_wrapped *wrapped);

// Wrapped density `g(x)`; periodic in `x`.
//
// # Safety
// `wrapped` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_wrapped_pdf(const struct bb_wrapped *wrapped, double x, double *out);

// Wrapped distribution `G(x)` for `x` in `[0, 1]`.
//
// # Safety
// `wrapped` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_wrapped_cdf(const struct bb_wrapped *wrapped, double x, double *out);

// Mass outside the truncation window (analytic bound).
//
// # Safety
// `wrapped` must be a live handle.
double bb_wrapped_tail_bound(const struct bb_wrapped *wrapped);

// Measure the discrepancies from uniform on a `grid_n`-cell scan grid
// (`grid_n >= 64`).
//
// # Safety
// `wrapped` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_wrapped_measure(const struct bb_wrapped *wrapped,
                                  size_t grid_n,
                                  struct bb_discrepancies *out);

// Build the per-order bound table for a model; with `verify` set, measure the
// wrapped distribution and fail with `BB_STATUS_VERIFICATION_FAILED` if any
// certificate is exceeded.
//
// # Safety
// `model` must be a live handle; `out` must be a valid pointer; the returned
// handle must be released with [`bb_report_free`].
enum bb_status bb_best_bounds(const struct bb_model *model,
                              uint32_t k_max,
                              bool verify,
                              struct bb_report **out);

// # Safety
// `report` must be a handle from [`bb_best_bounds`], not yet freed.
void bb_report_free(struct bb_report *report);

// Number of per-order rows in the report.
//
// # Safety
// `report` must be a live handle.
size_t bb_report_len(const struct bb_report *report);

// Fetch row `index` of the report.
//
// # Safety
// `report` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_report_row(const struct bb_report *report, size_t index, struct bb_per_k *out);

// Best derivative order and componentwise minimal bounds.
//
// # Safety
// `report` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_report_best(const struct bb_report *report, struct bb_best_bounds_t *out);

// Measured discrepancies attached by a verifying [`bb_best_bounds`] call;
// `BB_STATUS_UNSUPPORTED` when the report was built without verification.
//
// # Safety
// `report` must be a live handle; `out` must be a valid pointer.
enum bb_status bb_report_measured(const struct bb_report *report, struct bb_discrepancies *out);

// Mantissa value of a prefix such as `"17@10"` or `"1a@16"` (`default_base`
// applies when the `@base` suffix is missing).
//
// # Safety
// `prefix` must be a NUL-terminated string; `out` must be a valid pointer.
enum bb_status bb_prefix_value(const char *prefix, uint32_t default_base, double *out);

// Benford probability `log_b(1 + b^-l / d)` of a prefix.
//
// # Safety
// `prefix` must be a NUL-terminated string; `out` must be a valid pointer.
enum bb_status bb_benford_probability(const char *prefix, uint32_t default_base, double *out);

// Exact probability of the prefix event under a wrapped distribution.
//
// # Safety
// `wrapped` must be a live handle; `prefix` must be a NUL-terminated string;
// `out` must be a valid pointer.
enum bb_status bb_exact_prefix_probability(const struct bb_wrapped *wrapped,
                                           const char *prefix,
                                           uint32_t default_base,
                                           double *out);

// Full digit report for a model and prefix; `k_max < 0` picks the family
// default derivative-order cap.
//
// # Safety
// `model` must be a live handle; `prefix` must be a NUL-terminated string;
// `out` must be a valid pointer.
enum bb_status bb_digit_report(const struct bb_model *model,
                               const char *prefix,
                               uint32_t default_base,
                               int32_t k_max,
                               struct bb_digit_report_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BENFORD_BOUNDS_H */
