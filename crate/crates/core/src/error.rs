use thiserror::Error;

/// Errors raised by the engine, the colourings and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{budget} budget exceeded: need {needed}, limit is {limit}")]
    Resource {
        budget: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("resource exhausted: {0}")]
    Exhausted(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors caused by a budget or attempt limit.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. } | Error::Exhausted(_))
    }

    /// True for errors caused by invalid input rather than a fault in the program.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Parameter(_) | Error::Degenerate(_) | Error::Precondition(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
