use thiserror::Error;

/// Errors produced by the numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a domain restriction (e.g. `x <= 0` for `ln_gamma`).
    #[error("domain error in {context}: {message}")]
    Domain {
        context: &'static str,
        message: String,
    },

    /// A structural parameter (truncation order, grid, sizes) is invalid.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested truncation order is too small for the requested modes;
    /// detected from a non-negligible tail coefficient.
    #[error("truncation order {order} too small: |beta_N| = {tail:.3e} exceeds 1e-12 of the peak coefficient")]
    TruncationTooSmall { order: usize, tail: f64 },

    /// An eigenvalue iteration failed to converge.
    #[error("eigen solver failed to converge: {0}")]
    SolverFailure(String),

    /// |mu_n| underflowed below the threshold where dependent quantities
    /// (analytic extension, lambda) are numerically meaningful.
    #[error("|mu_n| = {mu:.3e} below usable range")]
    MuUnderflow { mu: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            context,
            message: message.into(),
        }
    }
}
