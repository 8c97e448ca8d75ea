use thiserror::Error;

/// Errors raised by the algebra, combinatorics and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for S_{n}")]
    GeneratorOutOfRange { n: usize, index: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("{0} is not a partition")]
    NotPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("{sub} is not a refinement of {sup}")]
    NotRefinement { sub: String, sup: String },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("element is not central")]
    NotCentral,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures of the library's own consistency checks, as opposed
    /// to bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
