//! Total variation of the density families and of arbitrary differentiable functions.
//!
//! For an absolutely continuous `h`, `TV(h) = int |h'|`. The smooth families admit
//! exact sign partitions of that integral:
//!
//! * Gaussian: `TV(phi^(k)) = int |H_{k+1}(x)| phi(x) dx`, and `(H_k phi)' = H_{k+1} phi`,
//!   so each piece between consecutive real roots of `H_{k+1}` integrates in closed form.
//! * Gumbel: substituting `t = e^y` into `TV(f_o^(k)) = int |f_o^(k+1)|` gives
//!   `int_0^inf |q(t)| e^-t dt` with `q = p_{k+2}(t)/t`, and `t^m e^-t` has the exact
//!   antiderivative `-e^-t sum_{j<=m} (m!/j!) t^j`.
//!
//! Piece endpoints are stationary points of the antiderivative, so root error enters
//! the piece values only at second order. The Gumbel antiderivative is evaluated in
//! exact rational arithmetic because its coefficients grow factorially and cancel
//! heavily (the order-14 value is ~1.7e9 out of ~1e21-sized terms).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::densities::{gumbel_poly, FRAC_1_SQRT_2PI};
use crate::error::{Error, Result};
use crate::quad;
use crate::roots::{hermite_he_eval, hermite_he_roots, positive_interlaced_roots};

/// How a [`TvResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TvMethod {
    /// Exact integral split at the sign changes of the integrand.
    ExactSignPartition,
    /// `TV(f) = 2 f(mode)` for a unimodal density.
    UnimodalClosedForm,
    /// Adaptive quadrature of `|h'|`.
    NumericQuadrature,
}

/// A total-variation value together with its provenance and error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TvResult {
    pub value: f64,
    pub method: TvMethod,
    /// Zero for the exact methods, the quadrature estimate otherwise.
    pub est_error: f64,
}

/// `TV(f) = 2 f(mode)` for a density known to be unimodal with peak value `f_peak`.
pub fn tv_unimodal(f_peak: f64) -> Result<TvResult> {
    if f_peak.is_nan() || f_peak < 0.0 {
        return Err(Error::InvalidParameter {
            name: "f_peak",
            reason: format!("peak value must be nonnegative, got {f_peak}"),
        });
    }
    Ok(TvResult {
        value: 2.0 * f_peak,
        method: TvMethod::UnimodalClosedForm,
        est_error: 0.0,
    })
}

fn phi(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

fn tv_gaussian_from_roots(k: u32, roots: &[f64]) -> Result<f64> {
    if roots.len() != k as usize + 1 {
        return Err(Error::RootFinding {
            k,
            degree: k as usize + 1,
        });
    }
    // antiderivative of H_{k+1} phi is H_k phi, up to a sign that cancels below
    let anti = |x: f64| hermite_he_eval(k, x) * phi(x);
    let mut tv = anti(roots[0]).abs();
    for w in roots.windows(2) {
        tv += (anti(w[1]) - anti(w[0])).abs();
    }
    tv += anti(*roots.last().unwrap()).abs();
    Ok(tv)
}

/// Exact `TV(phi^(k))` for the standard normal density.
///
/// The real roots of `H_{k+1}` split the line into pieces where `H_{k+1} phi` keeps
/// its sign; on each piece the integral is a difference of `H_k phi` endpoint values
/// (the product vanishes at infinity).
pub fn tv_gaussian_deriv(k: u32) -> Result<TvResult> {
    let roots = hermite_he_roots(k + 1);
    Ok(TvResult {
        value: tv_gaussian_from_roots(k, &roots)?,
        method: TvMethod::ExactSignPartition,
        est_error: 0.0,
    })
}

/// `TV(phi^(k))` for every `k <= k_max`, sharing one root ladder.
pub(crate) fn tv_gaussian_deriv_upto(k_max: u32) -> Result<Vec<f64>> {
    let ladder = crate::roots::hermite_he_root_ladder(k_max + 1);
    (0..=k_max)
        .map(|k| tv_gaussian_from_roots(k, &ladder[k as usize]))
        .collect()
}

/// `int_0^inf |q(t)| e^-t dt` from the sign-change positions of `q`.
///
/// `int q(t) e^-t dt = -e^-t W(t)` where `W` has exact rational coefficients
/// `D_j / j!` with `D_j = sum_{m >= j} q_m m!`; `W` is evaluated in exact rational
/// arithmetic at the (dyadic) roots because its terms grow factorially and cancel
/// heavily, then the piece values are summed in absolute value.
fn tv_gumbel_from_roots(k: u32, q: &[BigInt], roots: &[f64]) -> Result<f64> {
    let deg = q.len() - 1;
    if roots.len() != k as usize + 1 {
        return Err(Error::RootFinding { k, degree: deg });
    }
    let mut fact = vec![BigInt::one()];
    for m in 1..=deg {
        let next = &fact[m - 1] * BigInt::from(m as u64);
        fact.push(next);
    }
    let w_coeffs: Vec<BigRational> = (0..=deg)
        .map(|j| {
            let d: BigInt = (j..=deg).map(|m| &q[m] * &fact[m]).sum();
            BigRational::new(d, fact[j].clone())
        })
        .collect();
    let w_at = |t: f64| -> f64 {
        let tr = BigRational::from_float(t).expect("finite root");
        let mut acc = BigRational::zero();
        for c in w_coeffs.iter().rev() {
            acc = acc * &tr + c;
        }
        acc.to_f64().unwrap_or(f64::NAN)
    };

    let anti = |t: f64, w: f64| -(-t).exp() * w;
    let mut tv = 0.0;
    let mut prev_t = 0.0;
    let mut prev_w = w_at(0.0);
    for r in roots {
        let w = w_at(*r);
        tv += (anti(*r, w) - anti(prev_t, prev_w)).abs();
        prev_t = *r;
        prev_w = w;
    }
    // tail piece to +infinity, where the antiderivative vanishes
    tv += anti(prev_t, prev_w).abs();
    if !tv.is_finite() {
        return Err(Error::RootFinding { k, degree: deg });
    }
    Ok(tv)
}

/// `TV(f_o^(k))` for every `k <= k_max`, walking one interlacing root ladder.
///
/// The roots of `q_{n+1} = p_{n+1}/t` interlace `{0}` and the roots of `q_n`
/// plus one bracket beyond the largest, so each level's roots bracket the next.
pub(crate) fn tv_gumbel_deriv_upto(k_max: u32) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(k_max as usize + 1);
    let mut prev_roots: Vec<f64> = Vec::new();
    for k in 0..=k_max {
        let p = gumbel_poly(k + 2)?;
        // q(t) = p_{k+2}(t)/t; the constant term of p is zero
        let q: Vec<BigInt> = p.coeffs()[1..].to_vec();
        let roots = positive_interlaced_roots(&q, &prev_roots);
        out.push(tv_gumbel_from_roots(k, &q, &roots)?);
        prev_roots = roots;
    }
    Ok(out)
}

/// Exact `TV(f_o^(k))` for the standardized log-Weibull base density.
pub fn tv_gumbel_deriv(k: u32) -> Result<TvResult> {
    let value = tv_gumbel_deriv_upto(k)?
        .pop()
        .expect("ladder returns k_max + 1 values");
    Ok(TvResult {
        value,
        method: TvMethod::ExactSignPartition,
        est_error: 0.0,
    })
}

/// `TV(h)` over `domain` by adaptive quadrature of `|h'|`.
///
/// The derivative is scanned on a 4096-point grid for sign changes, each bracket is
/// bisected, and the resulting sign-constant pieces are integrated separately. The
/// scan is a heuristic: oscillations finer than the grid can be missed, which is
/// acceptable for the low-oscillation shipped families. The mismatch between the
/// signed piece sum and `h(b) - h(a)` is folded into the error estimate.
pub fn tv_numeric<H, Hp>(h: H, h_prime: Hp, domain: (f64, f64), tol: f64) -> Result<TvResult>
where
    H: Fn(f64) -> f64,
    Hp: Fn(f64) -> f64,
{
    let (a, b) = domain;
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::Domain(format!(
            "need a finite interval with a < b, got [{a}, {b}]"
        )));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: format!("must be positive, got {tol}"),
        });
    }

    const SCAN: usize = 4096;
    let step = (b - a) / SCAN as f64;
    let mut cuts = vec![a];
    let mut prev_x = a;
    let mut prev_sign = h_prime(a).signum();
    for i in 1..=SCAN {
        let x = if i == SCAN { b } else { a + step * i as f64 };
        let sign = h_prime(x).signum();
        if sign != prev_sign && prev_sign != 0.0 && sign != 0.0 {
            // bracket a sign change of h'
            let (mut lo, mut hi) = (prev_x, x);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if h_prime(mid).signum() == prev_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            cuts.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_sign = if sign == 0.0 { prev_sign } else { sign };
    }
    cuts.push(b);

    let pieces = cuts.len() - 1;
    let piece_tol = tol / (2.0 * pieces as f64);
    let mut tv = 0.0;
    let mut signed = 0.0;
    let mut est_error = 0.0;
    for w in cuts.windows(2) {
        let q = quad::integrate(&h_prime, w[0], w[1], piece_tol, 2048);
        tv += q.value.abs();
        signed += q.value;
        est_error += q.est_error;
    }
    est_error += (signed - (h(b) - h(a))).abs();

    if est_error > tol {
        return Err(Error::QuadratureNoConvergence {
            value: tv,
            est_error,
            tol,
        });
    }
    Ok(TvResult {
        value: tv,
        method: TvMethod::NumericQuadrature,
        est_error,
    })
}

/// `sqrt((k+1)!)`, the Cauchy-Schwarz bound on `TV(phi^(k))`, via log-gamma.
pub fn tv_factorial_bound(k: u32) -> f64 {
    (0.5 * libm::lgamma(f64::from(k) + 2.0)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densities::DensityModel;

    const SQRT_3: f64 = 1.7320508075688772;

    #[test]
    fn unimodal_closed_form() {
        let r = tv_unimodal(phi(0.0)).unwrap();
        assert_eq!(r.method, TvMethod::UnimodalClosedForm);
        assert!((r.value - 0.7978845608028654).abs() < 1e-15);
        assert_eq!(tv_unimodal(0.0).unwrap().value, 0.0);
        assert!(tv_unimodal(-0.1).is_err());
    }

    #[test]
    fn gaussian_tv_first_three_orders() {
        // closed forms: 2 phi(0), 4 phi(1), 8 phi(sqrt 3) + 2 phi(0)
        let tv0 = tv_gaussian_deriv(0).unwrap();
        assert_eq!(tv0.method, TvMethod::ExactSignPartition);
        assert_eq!(tv0.est_error, 0.0);
        assert!((tv0.value - 2.0 * phi(0.0)).abs() < 1e-13);

        let tv1 = tv_gaussian_deriv(1).unwrap();
        assert!((tv1.value - 4.0 * phi(1.0)).abs() < 1e-13);

        let tv2 = tv_gaussian_deriv(2).unwrap();
        assert!((tv2.value - (8.0 * phi(SQRT_3) + 2.0 * phi(0.0))).abs() < 1e-13);
    }

    #[test]
    fn gaussian_tv_below_factorial_bound() {
        for k in 0..=25u32 {
            let tv = tv_gaussian_deriv(k).unwrap().value;
            let bound = tv_factorial_bound(k);
            assert!(tv <= bound, "k = {k}: {tv} > {bound}");
            assert!(tv > 0.0);
        }
    }

    #[test]
    fn gumbel_tv_matches_reference_values() {
        // k = 0 in closed form: int_0^inf |1 - t| e^-t dt = 2/e
        let tv0 = tv_gumbel_deriv(0).unwrap();
        assert!((tv0.value - 2.0 * (-1.0f64).exp()).abs() < 1e-13);

        let tv3 = tv_gumbel_deriv(3).unwrap();
        assert!((tv3.value / 4.5103 - 1.0).abs() < 1e-4, "got {}", tv3.value);

        let tv8 = tv_gumbel_deriv(8).unwrap();
        assert!(
            (tv8.value / 7.0056e3 - 1.0).abs() < 1e-4,
            "got {}",
            tv8.value
        );
    }

    #[test]
    fn factorial_bound_values() {
        assert!((tv_factorial_bound(0) - 1.0).abs() < 1e-12);
        assert!((tv_factorial_bound(1) - 2.0f64.sqrt()).abs() < 1e-12);
        assert!((tv_factorial_bound(3) - 24.0f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn numeric_matches_exact_gaussian() {
        let m = DensityModel::gaussian(0.0, 1.0).unwrap();
        for k in 0..=6u32 {
            let exact = tv_gaussian_deriv(k).unwrap().value;
            let num = tv_numeric(
                |x| m.derivative(k, x).unwrap(),
                |x| m.derivative(k + 1, x).unwrap(),
                (-12.0, 12.0),
                1e-8,
            )
            .unwrap();
            assert_eq!(num.method, TvMethod::NumericQuadrature);
            assert!(
                (num.value - exact).abs() <= 1e-6 * exact.max(1.0),
                "k = {k}: numeric {} vs exact {exact}",
                num.value
            );
        }
    }

    #[test]
    fn numeric_matches_exact_gumbel() {
        let m = DensityModel::gumbel(0.0, 1.0).unwrap();
        for k in 0..=10u32 {
            let exact = tv_gumbel_deriv(k).unwrap().value;
            let num = tv_numeric(
                |y| m.derivative(k, y).unwrap(),
                |y| m.derivative(k + 1, y).unwrap(),
                (-40.0, 8.0),
                1e-4 * exact.max(1.0),
            )
            .unwrap();
            // agreement to 4 significant digits
            assert!(
                (num.value / exact - 1.0).abs() < 1e-4,
                "k = {k}: numeric {} vs exact {exact}",
                num.value
            );
        }
    }

    #[test]
    fn numeric_constant_function_is_zero() {
        let r = tv_numeric(|_| 2.5, |_| 0.0, (-1.0, 1.0), 1e-10).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn numeric_gumbel_base_closed_form() {
        let m = DensityModel::gumbel(0.0, 1.0).unwrap();
        let r = tv_numeric(
            |y| m.density(y),
            |y| m.derivative(1, y).unwrap(),
            (-40.0, 8.0),
            1e-6,
        )
        .unwrap();
        assert!((r.value - 2.0 * (-1.0f64).exp()).abs() < 1e-6);
    }

    #[test]
    fn numeric_interval_additivity() {
        // piecewise-monotone cubic: TV over [a,c] = TV[a,b] + TV[b,c]
        let h = |x: f64| x.powi(3) - 3.0 * x;
        let hp = |x: f64| 3.0 * x * x - 3.0;
        let full = tv_numeric(h, hp, (-2.0, 2.0), 1e-10).unwrap().value;
        let left = tv_numeric(h, hp, (-2.0, 0.3), 1e-10).unwrap().value;
        let right = tv_numeric(h, hp, (0.3, 2.0), 1e-10).unwrap().value;
        assert!(
            (full - (left + right)).abs() < 1e-9,
            "{full} vs {}",
            left + right
        );
        // known exact value: |h| swings 2 -> -2 -> 2 plus endpoint runs
        assert!((full - 12.0).abs() < 1e-9);
    }

    #[test]
    fn unimodal_agrees_with_numeric_for_bases() {
        for m in [
            DensityModel::gaussian(0.0, 1.0).unwrap(),
            DensityModel::gumbel(0.0, 1.0).unwrap(),
        ] {
            let closed = tv_unimodal(m.peak()).unwrap().value;
            let num = tv_numeric(
                |x| m.density(x),
                |x| m.derivative(1, x).unwrap(),
                (-40.0, 10.0),
                1e-8,
            )
            .unwrap()
            .value;
            assert!((closed - num).abs() < 1e-7, "{closed} vs {num}");
        }
    }

    #[test]
    fn numeric_reports_nonconvergence() {
        // absurd tolerance cannot be met
        let err = tv_numeric(|x| x.sin(), |x| x.cos(), (0.0, 30.0), 1e-300);
        match err {
            Err(Error::QuadratureNoConvergence { value, .. }) => {
                // partial value still carried: about 2/pi * 30 swings
                assert!(value > 0.0);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
