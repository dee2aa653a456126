use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter {0} must be nonzero")]
    ParamZero(&'static str),

    #[error("a = {a} is outside the proven region a >= 2")]
    ParamOutOfProvenRegion { a: String },

    #[error("characteristic polynomial does not have three distinct real roots (discriminant {discriminant})")]
    NotThreeRealRoots { discriminant: String },

    #[error("index {index} is out of range: {reason}")]
    IndexOutOfRange { index: i64, reason: &'static str },

    #[error("invalid rational literal `{0}` (expected p/q or an integer)")]
    ParseRational(String),

    #[error("{0}")]
    Usage(String),

    #[error("sqrt(5) component did not cancel in Binet form at n = {0}")]
    BinetCancellation(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
