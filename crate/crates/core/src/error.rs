use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("bad edge labels: {0}")]
    Labels(String),

    #[error("inconsistent orientation: {0}")]
    Orientation(String),

    #[error("not a planar diagram: found {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },

    #[error("diagram is disconnected")]
    Disconnected,

    #[error("invalid decoration: {0}")]
    Decoration(String),

    #[error("gauss code is not realizable: {0}")]
    Gauss(String),

    #[error("diagram is not alternating")]
    NotAlternating,

    #[error("diagram is not reduced (crossing {0} is nugatory)")]
    NotReduced(usize),

    #[error("expected a knot, found a {0}-component link")]
    NotAKnot(usize),

    #[error("fiberedness not established: top coefficient {0} is not a unit (pass assume-fibered to override)")]
    NotFibered(String),

    #[error("polynomial is not symmetric")]
    Asymmetric,

    #[error("polynomial does not evaluate to 1 at T = 1")]
    NotNormalized,

    #[error("size guard exceeded: {crossings} crossings, limit {limit}")]
    GuardExceeded { crossings: usize, limit: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
