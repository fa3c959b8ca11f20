use alloc::string::String;

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("box count must be at least 1")]
    NoBoxes,

    #[error("{name} must be {requirement}, got {value}")]
    OutOfDomain {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("instance has {count} microstates, above the limit of {limit}")]
    TooManyMicrostates { count: BigUint, limit: u64 },

    #[error("probabilities sum to {0}, expected 1")]
    NotNormalized(f64),

    #[error("too few usable values: {got}, need at least {need}")]
    TooFewValues { got: u64, need: u64 },

    #[error("empty input")]
    Empty,

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, requirement: &'static str, value: f64) -> Self {
        Error::OutOfDomain {
            name,
            requirement,
            value,
        }
    }
}
