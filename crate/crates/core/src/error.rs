use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}

impl GeomError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        GeomError::InvalidInput(msg.into())
    }

    pub fn degenerate(msg: impl Into<String>) -> Self {
        GeomError::DegenerateInput(msg.into())
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            GeomError::InvalidInput(_) => "InvalidInput",
            GeomError::DegenerateInput(_) => "DegenerateInput",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            GeomError::InvalidInput(s) | GeomError::DegenerateInput(s) => s,
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
