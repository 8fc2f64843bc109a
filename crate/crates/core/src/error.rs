use thiserror::Error;

/// Errors raised while constructing or checking the combinatorial objects.
///
/// A claim that turns out false is not an error; it is recorded in the
/// corresponding certificate or report. These variants signal broken inputs
/// or construction bugs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(√5)")]
    DivisionByZero,

    #[error("generator {0} is not a unit quaternion")]
    NotUnit(String),

    #[error("group closure exceeds {limit} elements (offending product {left} * {right})")]
    ClosureOverflow {
        limit: usize,
        left: String,
        right: String,
    },

    #[error("subgroup not found: {0}")]
    SubgroupNotFound(String),

    #[error("no element of order 5 with disjoint cosets")]
    NoOrderFive,

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("vertex {0} lies in no maximal simplex with other vertices")]
    IsolatedVertex(usize),

    #[error("involution is invalid: {0}")]
    BadInvolution(String),

    #[error("quotient degenerates: {0}")]
    DegenerateQuotient(String),

    #[error("two colorings produce the same simplex {0}")]
    DuplicateColoring(String),

    #[error("image of vertex {0} under phi is not a vertex of B^2")]
    PhiNotVertex(usize),

    #[error("class size {class_size} is not forced: an independent set of size {found} exists")]
    ClassSizeNotForced { class_size: usize, found: usize },

    #[error("unknown complex name {name:?}; valid names: {valid}")]
    UnknownComplex { name: String, valid: String },

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("stage failed: {0}")]
    Stage(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
