use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Surface(String),
    #[error("malformed tangle word: {0}")]
    Word(String),
    #[error("invalid link: {0}")]
    Link(String),
    #[error("invalid state: {0}")]
    State(String),
    #[error("generator count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("zero element has no leading term")]
    ZeroElement,
    #[error("evaluation at w = 0")]
    ZeroEvaluation,
    #[error("inexact division")]
    InexactDivision,
    #[error("not in edge subalgebra: {0}")]
    NotInEdgeSubalgebra(String),
    #[error("not balanced")]
    NotBalanced,
    #[error("too many crossings: {0} > {1}")]
    TooManyCrossings(usize, usize),
    #[error("too many state points: {0} > {1}")]
    TooManyPoints(usize, usize),
    #[error("move {mv} does not apply: {msg}")]
    Move { mv: String, msg: String },
    #[error("flip: {0}")]
    Flip(String),
    #[error("link is not a simple multicurve: {0}")]
    NotSimple(String),
    #[error("shear value must be positive: {0}")]
    Shear(String),
}

pub type Result<T> = std::result::Result<T, Error>;
