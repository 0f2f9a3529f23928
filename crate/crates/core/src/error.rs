use thiserror::Error;

use crate::transform::MAX_DEGREE;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} exceeds the capacity bound of {MAX_DEGREE}")]
    Capacity(usize),

    #[error("degree must be at least {min}, got {found}")]
    DegreeTooSmall { min: usize, found: usize },

    #[error("expected {expected} images, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("image {value} at point {point} lies outside 1..={degree}")]
    ImageOutOfRange {
        point: usize,
        value: usize,
        degree: usize,
    },

    #[error("point {point} lies outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("malformed token {token:?}")]
    Parse { token: String },

    #[error("empty element line")]
    EmptyLine,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("length {length} is invalid for degree {degree}: need 1 <= l <= {}", degree.saturating_sub(1))]
    InvalidLength { degree: usize, length: usize },

    #[error("unknown variant {0:?}; expected one of plain, star, full")]
    UnknownVariant(String),

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("set is not closed under composition: ({left})({right}) = ({product}) is missing")]
    NotClosed {
        left: String,
        right: String,
        product: String,
    },

    #[error("enumeration exceeds the budget of {0} elements")]
    TooManyElements(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
