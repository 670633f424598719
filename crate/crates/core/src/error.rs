use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of 0..{degree}: {images:?}")]
    NotAPermutation { degree: usize, images: Vec<usize> },

    #[error("element cap of {cap} exceeded (closure reached {reached} elements)")]
    CapExceeded { cap: usize, reached: usize },

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("group is insoluble; Hall subgroups are only searched for in soluble groups")]
    Insoluble,

    #[error("Hall subgroup search failed after {attempts} attempts")]
    HallSearchExhausted { attempts: usize },

    #[error("invalid level {level} for {variant}")]
    InvalidLevel { variant: &'static str, level: usize },

    #[error("no star-commutator of the group maps onto the given quotient element")]
    NoLift,

    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),

    #[error("parameter out of range for `{name}`: {reason}")]
    BadParameter { name: String, reason: String },

    #[error("expected order {expected} but generators produce a group of order {actual}")]
    OrderMismatch { expected: usize, actual: usize },

    #[error("malformed group file {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Serialize(#[from] serde_json::Error),
}
