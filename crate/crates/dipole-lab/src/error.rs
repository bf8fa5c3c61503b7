use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The retarded-time solver exhausted its iteration budget. The root is
    /// provably unique and bracketed for r > z0 and v < c, so this signals a
    /// solver bug rather than a bad input.
    #[error(
        "retarded-time solver did not converge at t_obs = {t_obs}: \
         residual {residual:e} exceeds tolerance {tolerance:e}"
    )]
    NoConvergence {
        t_obs: f64,
        residual: f64,
        tolerance: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit status associated with the error (2 = bad arguments,
    /// 3 = numerical nonconvergence).
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::InvalidArgument(_) => 2,
            Error::NoConvergence { .. } => 3,
        }
    }
}
