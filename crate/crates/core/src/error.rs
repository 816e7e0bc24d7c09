use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank is undefined for the empty partition")]
    EmptyRank,

    /// A configured desk-scale cap was exceeded. This is a refusal, not a
    /// failed computation.
    #[error("refused: {what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("auxiliary variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },

    #[error("constant term is not a unit (must be +1 or -1)")]
    NonUnit,

    #[error("q^{n} lies beyond the truncation order {order}")]
    BeyondOrder { n: usize, order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
