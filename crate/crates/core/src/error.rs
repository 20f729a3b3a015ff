use thiserror::Error;

/// Problems with the text form of a partition or bipartition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse partition text {0:?}")]
    Syntax(String),
    #[error("negative part {0:?} in partition")]
    Negative(String),
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("bipartition text {0:?} must have exactly one '|'")]
    MissingBar(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("e must be at least 2, got {0}")]
    InvalidE(i64),
    #[error("abacus row is not canonical: {0}")]
    NonCanonicalAbacus(String),
    #[error("not in crystal image: shift of period {k} is invalid at step {step}")]
    NotInImage { k: usize, step: usize },
    #[error("{what} = {value} exceeds the limit {limit}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
