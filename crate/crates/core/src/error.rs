use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ring order {order} exceeds the configured cap of {cap}")]
    OrderCapExceeded { order: u128, cap: usize },

    #[error("ideal lattice exceeds the configured cap of {cap} ideals")]
    LatticeCapExceeded { cap: usize },

    #[error("ideals belong to different rings")]
    RingMismatch,
}

impl Error {
    /// True for errors caused by configured resource limits rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. } | Error::LatticeCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
