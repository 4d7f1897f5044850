//! Density families, their exact derivatives and location-scale transport.
//!
//! Every model is a base density `f_o` moved through `f(x) = f_o((x - mu)/sigma)/sigma`.
//! The smooth bases carry exact derivatives of every order:
//!
//! * standard normal `phi(x)`, with `phi^(k)(x) = H_k(x) phi(x)` for the Hermite-type
//!   polynomial `H_k` generated by `H_0 = 1`, `H_{k+1} = H_k' - x H_k`;
//! * standardized log-Weibull `f_o(y) = e^y exp(-e^y)`, with
//!   `f_o^(n-1)(y) = p_n(e^y) exp(-e^y)` for `p_1(t) = t`, `p_{n+1} = t (p_n' - p_n)`.
//!
//! The `p_n` coefficients are signed Stirling numbers of the second kind; both polynomial
//! families are kept as exact big integers and only converted to floating point at
//! evaluation time.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::quad;

/// Inverse of sqrt(2*pi), the standard normal peak value.
pub(crate) const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Tolerance for the normalization check run at construction.
const NORMALIZATION_TOL: f64 = 1e-10;

/// Density family of a [`DensityModel`], with the family-specific base parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Standard normal base density.
    Gaussian,
    /// Standardized log-Weibull base density `e^y exp(-e^y)`.
    Gumbel,
    /// Uniform base density `1{0 < x < width}/width`.
    UniformWidth { width: f64 },
    /// User-supplied density, linear between knots and zero outside.
    PiecewiseLinear { knots: Vec<f64>, values: Vec<f64> },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gaussian => "gaussian",
            Family::Gumbel => "gumbel",
            Family::UniformWidth { .. } => "uniform",
            Family::PiecewiseLinear { .. } => "pwl",
        }
    }

    /// Smooth families expose exact derivatives of every order.
    pub fn is_smooth(&self) -> bool {
        matches!(self, Family::Gaussian | Family::Gumbel)
    }
}

/// A probability density on the real line in location-scale form.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityModel {
    family: Family,
    mu: f64,
    sigma: f64,
    /// Cumulative area up to each knot (PiecewiseLinear only).
    cum_area: Vec<f64>,
}

impl DensityModel {
    fn new(family: Family, mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mu",
                reason: format!("must be finite, got {mu}"),
            });
        }
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "sigma",
                reason: format!("must be positive and finite, got {sigma}"),
            });
        }
        let mut model = DensityModel {
            family,
            mu,
            sigma,
            cum_area: Vec::new(),
        };
        if let Family::PiecewiseLinear { knots, values } = &model.family {
            if knots.len() < 2 || knots.len() != values.len() {
                return Err(Error::InvalidParameter {
                    name: "knots",
                    reason: "need at least two knots, one value per knot".into(),
                });
            }
            if !knots.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter {
                    name: "knots",
                    reason: "knot positions must be strictly increasing".into(),
                });
            }
            if !knots.iter().chain(values).all(|v| v.is_finite()) {
                return Err(Error::InvalidParameter {
                    name: "knots",
                    reason: "knots and values must be finite".into(),
                });
            }
            if let Some(v) = values.iter().find(|v| **v < 0.0) {
                return Err(Error::InvalidParameter {
                    name: "values",
                    reason: format!("density values must be nonnegative, got {v}"),
                });
            }
            // Trapezoid areas are exact for a piecewise-linear density.
            let mut acc = 0.0;
            let mut cum = vec![0.0];
            for i in 1..knots.len() {
                acc += 0.5 * (values[i] + values[i - 1]) * (knots[i] - knots[i - 1]);
                cum.push(acc);
            }
            model.cum_area = cum;
        }
        model.check_normalized()?;
        Ok(model)
    }

    /// Standard normal moved to location `mu`, scale `sigma`.
    pub fn gaussian(mu: f64, sigma: f64) -> Result<Self> {
        Self::new(Family::Gaussian, mu, sigma)
    }

    /// Standardized log-Weibull (negated Gumbel) base moved to `mu`, `sigma`.
    pub fn gumbel(mu: f64, sigma: f64) -> Result<Self> {
        Self::new(Family::Gumbel, mu, sigma)
    }

    /// The base-`b` logarithm of a Weibull variable with shape `tau` and scale `gamma`:
    /// a Gumbel-family model with `mu = log_b(gamma)` and `sigma = 1/(tau ln b)`.
    pub fn weibull(tau: f64, gamma: f64, base: u32) -> Result<Self> {
        if !tau.is_finite() || tau <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "tau",
                reason: format!("must be positive and finite, got {tau}"),
            });
        }
        if !gamma.is_finite() || gamma <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "gamma",
                reason: format!("must be positive and finite, got {gamma}"),
            });
        }
        if base < 2 {
            return Err(Error::InvalidParameter {
                name: "base",
                reason: format!("must be at least 2, got {base}"),
            });
        }
        let ln_b = f64::from(base).ln();
        Self::gumbel(gamma.ln() / ln_b, 1.0 / (tau * ln_b))
    }

    /// Uniform density on `(0, width)` (before the location-scale move).
    pub fn uniform_width(width: f64) -> Result<Self> {
        Self::uniform_width_at(width, 0.0, 1.0)
    }

    /// Uniform base of the given support length, moved to `mu`, `sigma`.
    pub fn uniform_width_at(width: f64, mu: f64, sigma: f64) -> Result<Self> {
        if !width.is_finite() || width <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "width",
                reason: format!("must be positive and finite, got {width}"),
            });
        }
        Self::new(Family::UniformWidth { width }, mu, sigma)
    }

    /// User density interpolated linearly between `(knot, value)` pairs, zero outside.
    pub fn piecewise_linear(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Self::new(Family::PiecewiseLinear { knots, values }, 0.0, 1.0)
    }

    /// Read a piecewise-linear density from two-column CSV text, `x,f(x)` per line.
    ///
    /// Lines starting with `#` and blank lines are skipped; knot positions must be
    /// strictly increasing.
    pub fn piecewise_linear_from_csv(text: &str) -> Result<Self> {
        let mut knots = Vec::new();
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split(',');
            let (x, v) = match (cols.next(), cols.next(), cols.next()) {
                (Some(x), Some(v), None) => (x.trim(), v.trim()),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected exactly two comma-separated columns",
                        lineno + 1
                    )))
                }
            };
            // Tolerate a header line such as "x,f" on the first row.
            if lineno == 0 && x.parse::<f64>().is_err() {
                continue;
            }
            let x: f64 = x
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad x value: {e}", lineno + 1)))?;
            let v: f64 = v
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad f(x) value: {e}", lineno + 1)))?;
            knots.push(x);
            values.push(v);
        }
        Self::piecewise_linear(knots, values)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Smallest interval carrying all base-density mass except at most `eps`.
    ///
    /// Compact-support families report their exact support (tail mass zero).
    pub(crate) fn base_mass_interval(&self, eps: f64) -> (f64, f64, f64) {
        match &self.family {
            Family::Gaussian => {
                // Two-sided normal tail beyond L: erfc(L/sqrt(2)).
                let mut half = 8.0;
                while libm::erfc(half / std::f64::consts::SQRT_2) > eps {
                    half += 2.0;
                }
                let tail = libm::erfc(half / std::f64::consts::SQRT_2);
                (-half, half, tail)
            }
            Family::Gumbel => {
                // Lower tail F_o(-L) = 1 - exp(-e^-L) ~ e^-L decays slowly,
                // the upper tail exp(-e^R) is double-exponential.
                let mut lo = 29.0;
                let mut hi = 6.0;
                let tail = |lo: f64, hi: f64| -libm::expm1(-(-lo).exp()) + (-(hi).exp()).exp();
                while tail(lo, hi) > eps {
                    lo += 4.0;
                    hi += 1.0;
                }
                let t = tail(lo, hi);
                (-lo, hi, t)
            }
            Family::UniformWidth { width } => (0.0, *width, 0.0),
            Family::PiecewiseLinear { knots, .. } => {
                (knots[0], *knots.last().expect("validated nonempty"), 0.0)
            }
        }
    }

    /// Interval carrying all transported-density mass except at most `eps`.
    pub(crate) fn mass_interval(&self, eps: f64) -> (f64, f64, f64) {
        let (lo, hi, tail) = self.base_mass_interval(eps);
        (self.mu + self.sigma * lo, self.mu + self.sigma * hi, tail)
    }

    fn check_normalized(&self) -> Result<()> {
        let integral = match &self.family {
            // Exact trapezoid sum; quadrature would only re-derive it.
            Family::PiecewiseLinear { .. } => *self.cum_area.last().expect("nonempty"),
            Family::UniformWidth { .. } | Family::Gaussian | Family::Gumbel => {
                let (lo, hi, tail) = self.base_mass_interval(1e-13);
                let q = quad::integrate(|u| self.base_density(u), lo, hi, 1e-12, 2048);
                q.value + tail
            }
        };
        if (integral - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized {
                integral,
                tol: NORMALIZATION_TOL,
            });
        }
        Ok(())
    }

    /// Base density `f_o(u)` before the location-scale move.
    pub fn base_density(&self, u: f64) -> f64 {
        match &self.family {
            Family::Gaussian => FRAC_1_SQRT_2PI * (-0.5 * u * u).exp(),
            Family::Gumbel => (u - u.exp()).exp(),
            Family::UniformWidth { width } => {
                if u > 0.0 && u < *width {
                    1.0 / width
                } else {
                    0.0
                }
            }
            Family::PiecewiseLinear { knots, values } => {
                if u < knots[0] || u > *knots.last().unwrap() {
                    return 0.0;
                }
                let i = match knots.binary_search_by(|k| k.partial_cmp(&u).unwrap()) {
                    Ok(i) => return values[i],
                    Err(i) => i,
                };
                let (x0, x1) = (knots[i - 1], knots[i]);
                let t = (u - x0) / (x1 - x0);
                values[i - 1] + t * (values[i] - values[i - 1])
            }
        }
    }

    /// Base cumulative distribution `F_o(u)`.
    pub fn base_cdf(&self, u: f64) -> f64 {
        match &self.family {
            Family::Gaussian => 0.5 * libm::erfc(-u / std::f64::consts::SQRT_2),
            Family::Gumbel => {
                if u > 700.0 {
                    1.0
                } else {
                    -libm::expm1(-u.exp())
                }
            }
            Family::UniformWidth { width } => (u / width).clamp(0.0, 1.0),
            Family::PiecewiseLinear { knots, values } => {
                if u <= knots[0] {
                    return 0.0;
                }
                if u >= *knots.last().unwrap() {
                    return 1.0;
                }
                let i = match knots.binary_search_by(|k| k.partial_cmp(&u).unwrap()) {
                    Ok(i) => return self.cum_area[i],
                    Err(i) => i,
                };
                let (x0, x1) = (knots[i - 1], knots[i]);
                let t = (u - x0) / (x1 - x0);
                let v = values[i - 1] + t * (values[i] - values[i - 1]);
                self.cum_area[i - 1] + 0.5 * (values[i - 1] + v) * (u - x0)
            }
        }
    }

    /// Density `f(x) = f_o((x - mu)/sigma)/sigma`; zero outside the support.
    pub fn density(&self, x: f64) -> f64 {
        self.base_density((x - self.mu) / self.sigma) / self.sigma
    }

    /// Cumulative distribution of the transported density.
    pub fn cdf(&self, x: f64) -> f64 {
        self.base_cdf((x - self.mu) / self.sigma)
    }

    /// Exact `k`-th derivative of the density at `x`.
    ///
    /// Order zero returns the density itself for every family; higher orders exist
    /// only for the smooth families.
    pub fn derivative(&self, k: u32, x: f64) -> Result<f64> {
        if k == 0 {
            return Ok(self.density(x));
        }
        let u = (x - self.mu) / self.sigma;
        let scale = self.sigma.powi(-(k as i32 + 1));
        match &self.family {
            Family::Gaussian => Ok(gaussian_base_derivative(k, u) * scale),
            Family::Gumbel => {
                let p = gumbel_poly(k + 1)?;
                let coeffs: Vec<f64> = p.coeffs().iter().map(big_to_f64).collect();
                Ok(gumbel_base_derivative(&coeffs, u) * scale)
            }
            fam => Err(Error::DerivativeUnavailable {
                family: fam.name(),
                k,
            }),
        }
    }

    /// Prebuilt evaluator for the `k`-th derivative, for use in tight loops:
    /// the polynomial work happens once instead of per call.
    pub fn derivative_fn(&self, k: u32) -> Result<impl Fn(f64) -> f64 + Send + Sync + 'static> {
        enum Kernel {
            Gaussian(u32),
            Gumbel(Vec<f64>),
            Order0(DensityModel),
        }
        let kernel = if k == 0 {
            Kernel::Order0(self.clone())
        } else {
            match &self.family {
                Family::Gaussian => Kernel::Gaussian(k),
                Family::Gumbel => {
                    let p = gumbel_poly(k + 1)?;
                    Kernel::Gumbel(p.coeffs().iter().map(big_to_f64).collect())
                }
                fam => {
                    return Err(Error::DerivativeUnavailable {
                        family: fam.name(),
                        k,
                    })
                }
            }
        };
        let (mu, sigma) = (self.mu, self.sigma);
        let scale = sigma.powi(-(k as i32 + 1));
        Ok(move |x: f64| {
            let u = (x - mu) / sigma;
            match &kernel {
                Kernel::Gaussian(k) => gaussian_base_derivative(*k, u) * scale,
                Kernel::Gumbel(coeffs) => gumbel_base_derivative(coeffs, u) * scale,
                Kernel::Order0(model) => model.base_density(u) * scale,
            }
        })
    }

    /// Peak value of the transported density (the smooth families and the uniform
    /// family are unimodal).
    pub fn peak(&self) -> f64 {
        match &self.family {
            Family::Gaussian => FRAC_1_SQRT_2PI / self.sigma,
            // f_o' = p_2(e^y) exp(-e^y) vanishes at e^y = 1, so the base mode is 0.
            Family::Gumbel => (-1.0f64).exp() / self.sigma,
            Family::UniformWidth { width } => 1.0 / (width * self.sigma),
            Family::PiecewiseLinear { values, .. } => {
                values.iter().cloned().fold(0.0, f64::max) / self.sigma
            }
        }
    }

    /// Total variation of the transported density.
    ///
    /// Unimodal families use `2 f(mode)`; piecewise-linear densities sum the exact
    /// slope changes, counting jumps at the support edges.
    pub fn tv_density(&self) -> f64 {
        match &self.family {
            Family::Gaussian => 2.0 * FRAC_1_SQRT_2PI / self.sigma,
            Family::Gumbel => 2.0 * (-1.0f64).exp() / self.sigma,
            Family::UniformWidth { width } => 2.0 / (width * self.sigma),
            Family::PiecewiseLinear { values, .. } => {
                let mut tv = values[0].abs() + values.last().unwrap().abs();
                tv += values.windows(2).map(|w| (w[1] - w[0]).abs()).sum::<f64>();
                tv / self.sigma
            }
        }
    }
}

/// `phi^(k)(u) = H_k(u) phi(u)`, with `H_k = (-1)^k He_k` evaluated by the stable
/// three-term recurrence.
fn gaussian_base_derivative(k: u32, u: f64) -> f64 {
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * crate::roots::hermite_he_eval(k, u) * FRAC_1_SQRT_2PI * (-0.5 * u * u).exp()
}

/// `f_o^(k)(y) = p_{k+1}(e^y) exp(-e^y)` from prepared f64 coefficients.
///
/// For large `y` the double-exponential factor wins over any polynomial, so the
/// value is flushed to zero before `exp` overflows.
fn gumbel_base_derivative(coeffs: &[f64], y: f64) -> f64 {
    if y > 700.0 {
        return 0.0;
    }
    let t = y.exp();
    let mut p = 0.0;
    for c in coeffs.iter().rev() {
        p = p * t + c;
    }
    p * (-t).exp()
}

/// Evaluate the transported density; synonym for [`DensityModel::density`].
pub fn eval_density(model: &DensityModel, x: f64) -> f64 {
    model.density(x)
}

/// Evaluate the exact `k`-th derivative; synonym for [`DensityModel::derivative`].
pub fn eval_derivative(model: &DensityModel, k: u32, x: f64) -> Result<f64> {
    model.derivative(k, x)
}

/// Transport a base total variation through the location-scale map:
/// `TV(f^(k)) = TV(f_o^(k)) / sigma^(k+1)`.
pub fn tv_scale(tv_base: f64, sigma: f64, k: u32) -> f64 {
    tv_base / sigma.powi(k as i32 + 1)
}

/// Which recursion generated a [`PolySeq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// `H_0 = 1`, `H_{k+1} = H_k' - x H_k`; `phi^(k) = H_k phi`.
    Hermite,
    /// `p_1 = t`, `p_{n+1} = t (p_n' - p_n)`; `f_o^(n-1)(y) = p_n(e^y) exp(-e^y)`.
    GumbelP,
}

/// Integer-coefficient polynomial from one of the two derivative recursions,
/// coefficients exact and ordered by ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySeq {
    kind: PolyKind,
    coeffs: Vec<BigInt>,
}

impl PolySeq {
    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    /// Coefficients by ascending degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients of the derivative polynomial.
    pub fn derivative_coeffs(&self) -> Vec<BigInt> {
        derivative_coeffs(&self.coeffs)
    }

    /// Horner evaluation after converting each exact coefficient to `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + big_to_f64(c);
        }
        acc
    }
}

pub(crate) fn derivative_coeffs(coeffs: &[BigInt]) -> Vec<BigInt> {
    (1..coeffs.len())
        .map(|i| &coeffs[i] * BigInt::from(i as u64))
        .collect()
}

pub(crate) fn big_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(if v.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Exact coefficients of `H_k`, the polynomial with `phi^(k) = H_k phi`.
///
/// `H_0 = 1` and `H_{k+1} = H_k' - x H_k`, so the degree is `k` and the leading
/// coefficient is `(-1)^k`.
pub fn hermite_poly(k: u32) -> PolySeq {
    let mut c = vec![BigInt::from(1)];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); c.len() + 1];
        // H' part
        for (i, d) in derivative_coeffs(&c).into_iter().enumerate() {
            next[i] += d;
        }
        // -x * H part
        for (i, v) in c.iter().enumerate() {
            next[i + 1] -= v;
        }
        c = next;
    }
    PolySeq {
        kind: PolyKind::Hermite,
        coeffs: c,
    }
}

/// Exact coefficients of `p_n`: `p_1(t) = t`, `p_{n+1}(t) = t (p_n'(t) - p_n(t))`.
///
/// Degree `n`, zero constant term, leading coefficient `(-1)^(n-1)`; the magnitudes
/// are Stirling numbers of the second kind.
pub fn gumbel_poly(n: u32) -> Result<PolySeq> {
    if n < 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: "gumbel polynomial index starts at 1".into(),
        });
    }
    let mut c = vec![BigInt::zero(), BigInt::from(1)];
    for _ in 1..n {
        let d = derivative_coeffs(&c);
        let mut next = vec![BigInt::zero(); c.len() + 1];
        for (i, v) in d.into_iter().enumerate() {
            next[i + 1] += v;
        }
        for (i, v) in c.iter().enumerate() {
            next[i + 1] -= v;
        }
        c = next;
    }
    Ok(PolySeq {
        kind: PolyKind::GumbelP,
        coeffs: c,
    })
}

/// Table of Stirling numbers of the second kind `S[n][k]` for `n, k <= n_max`,
/// from `S_{1,1} = 1` and `S_{n,k} = S_{n-1,k-1} + k S_{n-1,k}`.
///
/// Row `n` holds `n_max + 1` entries (`k = 0..=n_max`); entries outside the
/// triangle are zero, and `S[0][0] = 1` by convention.
pub fn stirling_table(n_max: u32) -> Vec<Vec<BigInt>> {
    let n_max = n_max as usize;
    let mut s = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
    s[0][0] = BigInt::from(1);
    for n in 1..=n_max {
        for k in 1..=n {
            let carry = &s[n - 1][k] * BigInt::from(k as u64);
            s[n][k] = &s[n - 1][k - 1] + carry;
        }
    }
    s
}
