//! Certified bounds on the wrapped-distribution discrepancies, and selection of the
//! derivative order that minimizes them.
//!
//! For a density `f` with `TV(f^(k)) < infinity` the wrapped density `g` and
//! distribution `G` satisfy
//!
//! * `R(g) <= TV(f)/2` (order zero) and `R(g) <= TV(f^(k)) / (8 * 6^(k-1))` for `k >= 1`,
//! * `|G(y) - G(x) - (y-x)| <= (y-x)(1-(y-x)) TV(f^(k)) / (2 * 6^k)`,
//! * `KD(G) <= TV(f^(k)) / (8 * 6^k)` and `MRAE(G) <= TV(f^(k)) / (2 * 6^k)`.
//!
//! For the normal family `TV(phi^(k)) <= sqrt((k+1)!)` turns the order-minimized
//! Kuiper bound into `0.75 * h(m)` with `h(m) = sqrt(m!/m^m)` at `m = floor(36 sigma^2)`
//! (and `4.5 * h(m)`, `3 * h(m)` for range and MRAE); for the Weibull/Gumbel family the
//! per-order digit-error bound is `B_tau(k) = 3 * TV(f_o^(k)) * (tau ln b / 6)^(k+1)`.

use crate::densities::{tv_scale, DensityModel, Family};
use crate::error::{Error, Result};
use crate::total_variation::tv_gumbel_deriv;
use crate::wrapping::{Discrepancies, WrappedDist};

/// Slack added to dominance comparisons to absorb the floating-point noise floor
/// of the measured quantities.
pub const DOMINANCE_SLACK: f64 = 1e-12;

/// Bound on the range `R(g)` from `TV(f^(k))`.
pub fn bound_range(tv_k: f64, k: u32) -> f64 {
    if k == 0 {
        tv_k / 2.0
    } else {
        tv_k / (8.0 * 6f64.powi(k as i32 - 1))
    }
}

/// Bound on the Kuiper distance `KD(G)` from `TV(f^(k))`.
pub fn bound_kuiper(tv_k: f64, k: u32) -> f64 {
    tv_k / (8.0 * 6f64.powi(k as i32))
}

/// Bound on the maximal relative approximation error `MRAE(G)` from `TV(f^(k))`.
pub fn bound_mrae(tv_k: f64, k: u32) -> f64 {
    tv_k / (2.0 * 6f64.powi(k as i32))
}

/// Pointwise bound `|G(y) - G(x) - (y-x)| <= d(1-d) TV(f^(k)) / (2 * 6^k)`, `d = y - x`.
pub fn bound_pointwise(tv_k: f64, k: u32, x: f64, y: f64) -> Result<f64> {
    if !(0.0 <= x && x < y && y <= 1.0) {
        return Err(Error::Domain(format!(
            "need 0 <= x < y <= 1, got x = {x}, y = {y}"
        )));
    }
    let delta = y - x;
    Ok(delta * (1.0 - delta) * tv_k / (2.0 * 6f64.powi(k as i32)))
}

/// `h(m) = sqrt(m!/m^m)`, evaluated in log space; decays like `m^(1/4) e^(-m/2)`.
pub fn h_stirling(m: u64) -> Result<f64> {
    if m < 1 {
        return Err(Error::Domain("h(m) needs m >= 1".into()));
    }
    let m = m as f64;
    Ok((0.5 * (libm::lgamma(m + 1.0) - m * m.ln())).exp())
}

/// Closed-form bounds for a wrapped normal density with scale `sigma >= 1/6`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianBounds {
    pub range: f64,
    pub kuiper: f64,
    pub mrae: f64,
    /// The factorial index the bounds were taken at, `floor(36 sigma^2)` or a
    /// neighbor when that is strictly better.
    pub m: u64,
}

/// Bounds `(4.5, 0.75, 3) * sqrt(m!/(36 sigma^2)^m)` minimized over
/// `m = floor(36 sigma^2)` and its neighbors; independent of the location.
///
/// Every positive integer `m` yields a valid bound, so checking the neighbors can
/// only sharpen the result; at integer `36 sigma^2` the minimum is exactly
/// `(4.5, 0.75, 3) * h(m)`.
pub fn gaussian_bounds(sigma: f64) -> Result<GaussianBounds> {
    if sigma.is_nan() || sigma < 1.0 / 6.0 {
        return Err(Error::SigmaTooSmall { sigma });
    }
    let s36 = 36.0 * sigma * sigma;
    // epsilon guards the floor against cases like 36*(1/3)^2 = 3.999...96
    let m0 = (s36 + 1e-9).floor().max(1.0) as u64;
    let factor = |m: u64| {
        let m = m as f64;
        (0.5 * (libm::lgamma(m + 1.0) - m * s36.ln())).exp()
    };
    let mut best_m = m0;
    let mut best = factor(m0);
    for cand in [m0.saturating_sub(1).max(1), m0 + 1] {
        let f = factor(cand);
        if f < best {
            best = f;
            best_m = cand;
        }
    }
    Ok(GaussianBounds {
        range: 4.5 * best,
        kuiper: 0.75 * best,
        mrae: 3.0 * best,
        m: best_m,
    })
}

/// Weibull digit-error bound `B_tau(k) = 3 * TV(f_o^(k)) * (tau ln(base) / 6)^(k+1)`.
pub fn weibull_bound(tau: f64, base: u32, k: u32) -> Result<f64> {
    if !tau.is_finite() || tau <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "tau",
            reason: format!("must be positive and finite, got {tau}"),
        });
    }
    if base < 2 {
        return Err(Error::InvalidParameter {
            name: "base",
            reason: format!("must be at least 2, got {base}"),
        });
    }
    let tv = tv_gumbel_deriv(k)?.value;
    Ok(3.0 * tv * (tau * f64::from(base).ln() / 6.0).powi(k as i32 + 1))
}

/// One row of a [`BoundReport`]: the bounds derived from `TV(f^(k))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerKBound {
    pub k: u32,
    pub tv_k: f64,
    pub range_bound: f64,
    pub kuiper_bound: f64,
    pub mrae_bound: f64,
}

/// Componentwise minima over the per-order table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestBounds {
    pub range_bound: f64,
    pub kuiper_bound: f64,
    pub mrae_bound: f64,
}

/// Certified bounds per derivative order, the best order, and (optionally) the
/// measured discrepancies they were verified against.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub per_k: Vec<PerKBound>,
    /// Smallest order attaining the minimal Kuiper bound.
    pub best_k: u32,
    pub best: BestBounds,
    pub measured: Option<Discrepancies>,
}

impl BoundReport {
    /// Violations of `measured <= best + slack`, as `(metric, measured, bound)`.
    pub fn dominance_violations(&self) -> Vec<(&'static str, f64, f64)> {
        let mut out = Vec::new();
        if let Some(meas) = &self.measured {
            for (name, m, b) in [
                ("range", meas.range_g, self.best.range_bound),
                ("kuiper", meas.kuiper, self.best.kuiper_bound),
                ("mrae", meas.mrae, self.best.mrae_bound),
            ] {
                if m > b + DOMINANCE_SLACK {
                    out.push((name, m, b));
                }
            }
        }
        out
    }
}

/// Grid resolution used when `best_bounds` is asked to verify its certificates.
pub const VERIFY_GRID: usize = 8192;

/// Build the per-order bound table for a model and pick the best order.
///
/// Exact total variations are used for the smooth families; the non-smooth families
/// are capped at order zero with their closed-form `TV(f)`. With `verify` set, the
/// wrapped distribution is measured on a 8192-cell grid and every certificate is
/// checked against the measurement (the check is numerical, not a proof).
pub fn best_bounds(model: &DensityModel, k_max: u32, verify: bool) -> Result<BoundReport> {
    let k_cap = if model.family().is_smooth() { k_max } else { 0 };
    let base_tvs = match model.family() {
        Family::Gaussian => crate::total_variation::tv_gaussian_deriv_upto(k_cap)?,
        Family::Gumbel => crate::total_variation::tv_gumbel_deriv_upto(k_cap)?,
        _ => Vec::new(),
    };
    let mut per_k = Vec::with_capacity(k_cap as usize + 1);
    let mut growth_streak = 0u32;
    for k in 0..=k_cap {
        let tv_base = match model.family() {
            Family::Gaussian | Family::Gumbel => base_tvs[k as usize],
            Family::UniformWidth { .. } | Family::PiecewiseLinear { .. } => {
                model.tv_density() * model.sigma() // undo the transport below
            }
        };
        let tv_k = tv_scale(tv_base, model.sigma(), k);
        let row = PerKBound {
            k,
            tv_k,
            range_bound: bound_range(tv_k, k),
            kuiper_bound: bound_kuiper(tv_k, k),
            mrae_bound: bound_mrae(tv_k, k),
        };
        if let Some(prev) = per_k.last() {
            let prev: &PerKBound = prev;
            growth_streak = if row.kuiper_bound > prev.kuiper_bound {
                growth_streak + 1
            } else {
                0
            };
        }
        per_k.push(row);
        // past the minimum the bounds grow factorially; stop after a clear streak
        if growth_streak >= 3 {
            break;
        }
    }

    let best_row = per_k
        .iter()
        .min_by(|a, b| {
            a.kuiper_bound
                .partial_cmp(&b.kuiper_bound)
                .unwrap()
                .then(a.k.cmp(&b.k))
        })
        .expect("table is nonempty");
    let best_k = best_row.k;
    let best = BestBounds {
        range_bound: per_k
            .iter()
            .map(|r| r.range_bound)
            .fold(f64::INFINITY, f64::min),
        kuiper_bound: per_k
            .iter()
            .map(|r| r.kuiper_bound)
            .fold(f64::INFINITY, f64::min),
        mrae_bound: per_k
            .iter()
            .map(|r| r.mrae_bound)
            .fold(f64::INFINITY, f64::min),
    };

    let measured = if verify {
        Some(WrappedDist::new(model.clone())?.measure(VERIFY_GRID)?)
    } else {
        None
    };
    let report = BoundReport {
        per_k,
        best_k,
        best,
        measured,
    };
    if let Some((metric, measured, bound)) = report.dominance_violations().first().copied() {
        return Err(Error::DominanceViolation {
            metric,
            measured,
            bound,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densities::FRAC_1_SQRT_2PI;

    #[test]
    fn range_bound_cases() {
        assert!((bound_range(0.7979, 0) - 0.39895).abs() < 1e-10);
        assert!((bound_range(0.9679, 1) - 0.9679 / 8.0).abs() < 1e-15);
        assert_eq!(bound_range(0.0, 5), 0.0);
    }

    #[test]
    fn kuiper_bound_cases() {
        // wrapped uniform of support 1.5: TV = 4/3, bound = 1/6 (attained)
        assert!((bound_kuiper(4.0 / 3.0, 0) - 1.0 / 6.0).abs() < 1e-15);
        assert!((bound_kuiper(0.7979, 0) - 0.09974).abs() < 1e-5);
        assert!((bound_kuiper(1.5100, 2) - 1.5100 / 288.0).abs() < 1e-15);
    }

    #[test]
    fn mrae_bound_cases() {
        assert_eq!(bound_mrae(0.0, 3), 0.0);
        assert!((bound_mrae(1.5100, 2) - 1.5100 / 72.0).abs() < 1e-15);
        // scaled Gumbel TV at k = 0 reproduces the decimal digit bound
        let tv0 = 2.0 * (-1.0f64).exp() * std::f64::consts::LN_10;
        assert!((bound_mrae(tv0, 0) - 0.84707).abs() < 1e-5);
    }

    #[test]
    fn pointwise_bound_cases() {
        assert!((bound_pointwise(1.0, 0, 0.25, 0.75).unwrap() - 0.125).abs() < 1e-15);
        assert!(bound_pointwise(1.0, 0, 0.5, 0.5).is_err());
        assert!(bound_pointwise(1.0, 0, 0.7, 0.2).is_err());
        let v = bound_pointwise(1.5100, 2, 0.25, 0.75).unwrap();
        assert!((v - 1.5100 / 288.0).abs() < 1e-12);
        // boundary factor vanishes
        let tiny = bound_pointwise(1.0, 0, 0.0, 1.0).unwrap();
        assert!(tiny.abs() < 1e-15);
    }

    #[test]
    fn h_stirling_values() {
        assert!((h_stirling(1).unwrap() - 1.0).abs() < 1e-15);
        assert!((h_stirling(2).unwrap() - 0.5f64.sqrt()).abs() < 1e-14);
        let h36 = h_stirling(36).unwrap();
        assert!((h36 / 5.913e-8 - 1.0).abs() < 1e-3, "h(36) = {h36:e}");
        assert!(h_stirling(0).is_err());
        // no overflow far out
        assert!(h_stirling(1_000_000).unwrap().is_finite());
    }

    #[test]
    fn h_stirling_strictly_decreasing() {
        let mut prev = h_stirling(1).unwrap();
        for m in 2..=200 {
            let cur = h_stirling(m).unwrap();
            assert!(cur < prev, "h({m}) = {cur} not below h({}) = {prev}", m - 1);
            prev = cur;
        }
        // asymptotic decay rate: log h(m)/m -> -1/2
        for m in [8u64, 16, 32, 64, 128] {
            let ratio = h_stirling(2 * m).unwrap() / h_stirling(m).unwrap();
            assert!(ratio < (-(m as f64) / 4.0).exp(), "m = {m}");
        }
    }

    #[test]
    fn gaussian_bounds_reference_sigma_one() {
        let b = gaussian_bounds(1.0).unwrap();
        assert_eq!(b.m, 36);
        assert!(
            (b.range / 2.661e-7 - 1.0).abs() < 1e-3,
            "range {:e}",
            b.range
        );
        assert!(
            (b.kuiper / 4.435e-8 - 1.0).abs() < 1e-3,
            "kuiper {:e}",
            b.kuiper
        );
        assert!((b.mrae / 1.774e-7 - 1.0).abs() < 1e-3, "mrae {:e}", b.mrae);
    }

    #[test]
    fn gaussian_bounds_small_sigma() {
        let b = gaussian_bounds(1.0 / 6.0).unwrap();
        assert_eq!(b.m, 1);
        assert!((b.range - 4.5).abs() < 1e-9);
        assert!((b.kuiper - 0.75).abs() < 1e-10);
        assert!((b.mrae - 3.0).abs() < 1e-9);
        assert!(matches!(
            gaussian_bounds(0.16),
            Err(Error::SigmaTooSmall { .. })
        ));
    }

    #[test]
    fn gaussian_bounds_sqrt_two() {
        let b = gaussian_bounds(2f64.sqrt()).unwrap();
        assert_eq!(b.m, 72);
        let h72 = h_stirling(72).unwrap();
        assert!((b.range - 4.5 * h72).abs() < 1e-12 * b.range.max(1e-300));
        assert!((b.kuiper - 0.75 * h72).abs() < 1e-12);
        assert!((b.mrae - 3.0 * h72).abs() < 1e-12);
    }

    #[test]
    fn gaussian_bounds_third_sigma_floor_guard() {
        // 36*(1/3)^2 rounds below 4 in floating point; the guard must keep m = 4
        let b = gaussian_bounds(1.0 / 3.0).unwrap();
        assert_eq!(b.m, 4);
    }

    #[test]
    fn weibull_bound_matches_reference_table() {
        for (tau, k, expect) in [
            (1.0, 3u32, 2.9348e-1),
            (0.5, 7, 6.7546e-3),
            (0.3, 12, 3.6801e-5),
        ] {
            let b = weibull_bound(tau, 10, k).unwrap();
            assert!(
                (b / expect - 1.0).abs() < 1e-4,
                "tau = {tau}, k = {k}: {b:e} vs {expect:e}"
            );
        }
        assert!(weibull_bound(0.0, 10, 0).is_err());
        assert!(weibull_bound(1.0, 1, 0).is_err());
    }

    #[test]
    fn weibull_bound_increasing_in_tau() {
        for k in [0u32, 3, 7] {
            let mut prev = 0.0;
            for i in 1..=20 {
                let tau = 0.1 * f64::from(i);
                let b = weibull_bound(tau, 10, k).unwrap();
                assert!(b > prev, "k = {k}, tau = {tau}");
                prev = b;
            }
        }
    }

    #[test]
    fn best_bounds_gaussian_beats_factorial_route() {
        let model = DensityModel::gaussian(0.0, 1.0).unwrap();
        let report = best_bounds(&model, 40, false).unwrap();
        let closed_form = gaussian_bounds(1.0).unwrap();
        assert!(report.best.kuiper_bound <= closed_form.kuiper);
        assert!(report.best.kuiper_bound <= 4.435e-8);
        // best values are the componentwise minima of the table
        let min_kuiper = report
            .per_k
            .iter()
            .map(|r| r.kuiper_bound)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(report.best.kuiper_bound, min_kuiper);
    }

    #[test]
    fn best_bounds_gumbel_decimal_min_at_k3() {
        // sigma = 1/ln(10) is the decimal Weibull wrapper with tau = 1
        let model = DensityModel::weibull(1.0, 1.0, 10).unwrap();
        let report = best_bounds(&model, 14, false).unwrap();
        assert_eq!(report.best_k, 3);
        let b3 = weibull_bound(1.0, 10, 3).unwrap();
        assert!((report.best.mrae_bound - b3).abs() < 1e-12 * b3);
    }

    #[test]
    fn best_bounds_uniform_forced_to_order_zero() {
        let model = DensityModel::uniform_width(1.5).unwrap();
        let report = best_bounds(&model, 14, false).unwrap();
        assert_eq!(report.per_k.len(), 1);
        assert_eq!(report.best_k, 0);
        assert!((report.best.kuiper_bound - 1.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn best_bounds_verified_dominance() {
        let model = DensityModel::uniform_width(1.5).unwrap();
        let report = best_bounds(&model, 0, true).unwrap();
        let meas = report.measured.unwrap();
        // the Kuiper certificate is attained by this witness
        assert!((meas.kuiper - 1.0 / 6.0).abs() < 1e-9);
        assert!(report.dominance_violations().is_empty());
    }

    #[test]
    fn scale_consistency_across_sigmas() {
        for sigma in [0.5, 1.0, 2.0] {
            let model = DensityModel::gaussian(0.3, sigma).unwrap();
            let report = best_bounds(&model, 40, false).unwrap();
            let closed_form = gaussian_bounds(sigma).unwrap();
            assert!(
                report.best.kuiper_bound <= closed_form.kuiper + 1e-18,
                "sigma = {sigma}"
            );
        }
    }

    #[test]
    fn kuiper_tightens_classical_sup_bound() {
        // tv/8 strictly improves on the classical tv/6 sup bound
        let tv = 2.0 * FRAC_1_SQRT_2PI;
        assert!(bound_kuiper(tv, 0) < tv / 6.0);
    }
}
