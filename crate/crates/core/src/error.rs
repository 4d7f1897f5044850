//! Error type shared across the crate.

/// Errors produced by model construction, bound computation and the CLI layer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A density handed to a constructor does not integrate to one.
    #[error("density integrates to {integral:.12} instead of 1 (|diff| > {tol:e})")]
    NotNormalized { integral: f64, tol: f64 },

    /// Exact derivatives only exist for the smooth families.
    #[error("derivative unavailable: family `{family}` has no order-{k} derivative")]
    DerivativeUnavailable { family: &'static str, k: u32 },

    /// The polynomial root isolation failed to converge.
    #[error("root finding did not converge (derivative order {k}, degree {degree})")]
    RootFinding { k: u32, degree: usize },

    /// Adaptive quadrature exhausted its budget; `value` is the partial result.
    #[error(
        "quadrature did not converge: value {value:e}, est. error {est_error:e} > tol {tol:e}"
    )]
    QuadratureNoConvergence {
        value: f64,
        est_error: f64,
        tol: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    /// The Gaussian closed-form bounds require scale at least 1/6.
    #[error("gaussian bounds require sigma >= 1/6, got {sigma}")]
    SigmaTooSmall { sigma: f64 },

    /// A measured discrepancy exceeded its certified bound.
    #[error("verification failure: measured {metric} = {measured:e} exceeds bound {bound:e}")]
    DominanceViolation {
        metric: &'static str,
        measured: f64,
        bound: f64,
    },

    #[error("invalid digit prefix: {0}")]
    InvalidPrefix(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
