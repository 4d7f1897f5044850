//! Certified error bounds for the uniformity of `Y mod 1` and for Benford
//! digit probabilities.
//!
//! For a random variable `Y` with density `f`, the remainder `U = Y - floor(Y)` has
//! the wrapped density `g(x) = sum_z f(z + x)` and distribution `G`. The closeness of
//! `U` to uniform controls how well the leading digits of `X = b^Y` follow Benford's
//! law, and it is bounded explicitly through the total variation of `f` or of one of
//! its derivatives:
//!
//! * `R(g) <= TV(f)/2` and, for `k`-times differentiable `f`,
//!   `R(g) <= TV(f^(k)) / (8 * 6^(k-1))`;
//! * `KD(G) <= TV(f^(k)) / (8 * 6^k)` and `MRAE(G) <= TV(f^(k)) / (2 * 6^k)`.
//!
//! The crate computes the total variations exactly for the Gaussian and Gumbel
//! (log-Weibull) families, selects the derivative order that minimizes each bound,
//! maps leading-digit events to subintervals of `[0, 1)`, and verifies every
//! certificate against direct quadrature of the wrapped distribution.
//!
//! The `benford-bounds` binary exposes the same machinery as `table1`, `gauss`,
//! `digits` and `verify` subcommands emitting deterministic CSV or JSON.

pub mod bounds;
pub mod densities;
pub mod digits;
mod error;
mod quad;
pub mod report;
mod roots;
pub mod total_variation;
pub mod wrapping;

pub use error::{Error, Result};

pub use bounds::{
    best_bounds, bound_kuiper, bound_mrae, bound_pointwise, bound_range, gaussian_bounds,
    h_stirling, weibull_bound, BoundReport, GaussianBounds, PerKBound,
};
pub use densities::{
    eval_density, eval_derivative, gumbel_poly, hermite_poly, stirling_table, tv_scale,
    DensityModel, Family, PolyKind, PolySeq,
};
pub use digits::{
    benford_probability, digit_report, exact_prefix_probability, DigitPrefix, DigitReport,
};
pub use total_variation::{
    tv_factorial_bound, tv_gaussian_deriv, tv_gumbel_deriv, tv_numeric, tv_unimodal, TvMethod,
    TvResult,
};
pub use wrapping::{Discrepancies, WrappedDist};
