use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} out of range for a space with {n} points")]
    PointOutOfRange { point: usize, n: usize },

    #[error("subset mentions points outside a space with {n} points")]
    SubsetOutOfRange { n: usize },

    #[error("spaces are limited to {max} points, got {n}")]
    TooManyPoints { n: usize, max: usize },

    #[error("relation is not a preorder: {0}")]
    NotAPreorder(String),

    #[error("enumeration bound exceeded: n = {n}, bound = {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("invalid predicate: {0}")]
    Predicate(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("product ring needs at least one factor")]
    EmptyProduct,

    #[error("element has {got} coordinates, ring has {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("coordinate {index} lies in {got}, factor is {expected}")]
    FieldMismatch {
        index: usize,
        expected: String,
        got: String,
    },

    #[error("element {0} is not in the index set")]
    NotInIndex(String),

    #[error("index set needs at least {0} elements")]
    IndexTooSmall(usize),

    #[error("element lies in the coefficient field; use field logic")]
    ScalarElement,

    #[error("cut {cut} is not valid for index {index}")]
    InvalidCut { cut: String, index: String },

    #[error("unknown gallery entry {name:?}; catalog: {catalog}")]
    UnknownGalleryEntry { name: String, catalog: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
