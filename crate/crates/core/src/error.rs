use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero polynomial where a nonzero polynomial is required")]
    ZeroPolynomial,

    #[error("polynomial of degree {found} given, degree >= {min} required")]
    DegreeTooLow { found: i64, min: i64 },

    /// A closed form was asked for outside the parameter range it is valid on.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal divisor of a closed form vanished for these coefficients.
    /// Callers fall back to the resultant oracle.
    #[error("closed form is singular for this instance: {0}")]
    SingularFormula(&'static str),

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
