use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: partition of {left} against partition of {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("unsupported characteristic {0}: only odd primes are accepted")]
    UnsupportedCharacteristic(u64),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Short machine-readable tag used in structured output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid-partition",
            Error::SizeMismatch { .. } => "size-mismatch",
            Error::Domain(_) => "domain",
            Error::Budget(_) => "budget",
            Error::UnsupportedCharacteristic(_) => "unsupported-characteristic",
            Error::Inconsistent(_) => "inconsistent",
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
