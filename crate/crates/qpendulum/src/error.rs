use thiserror::Error;

/// Errors produced by this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on an input value failed.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Rejection sampling stalled; the envelope no longer dominates the
    /// target density.
    #[error(
        "sampler failure: acceptance rate {rate:.3e} after {proposals} proposals \
         (minimum {min:.1e})"
    )]
    SamplerFailure { rate: f64, proposals: u64, min: f64 },

    /// A bracketing root search was given endpoints of the same sign.
    #[error("no sign change over bracket [{lo:.6e}, {hi:.6e}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Not enough samples for the requested analysis.
    #[error("too few samples: got {got}, need at least {need}")]
    TooFewSamples { got: usize, need: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True when the error is an input-validation failure, false when it is a
    /// numerical failure (no sign change, sampler stall).
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::InvalidInput(_) | Error::TooFewSamples { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
