use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),

    #[error("K_r - e needs r >= 2, got {0}")]
    CompleteMinusEdgeTooSmall(usize),

    /// A size guard was exceeded; `what` names the offending dimension.
    #[error("{what}: {actual} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("not an independence polynomial: constant term must be 1")]
    NotIndependencePolynomial,

    #[error("f-symmetry constant must be positive")]
    NonPositiveConstant,

    #[error("independence number of H must be 2, got {0}")]
    IndependenceNumberNotTwo(usize),

    #[error("polynomial degree {actual} does not match expected {expected}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("omega must be at least 1")]
    ZeroOmega,

    #[error("b2 must be nonzero for the reciprocal invariant")]
    ZeroLeadingDenominator,
}
