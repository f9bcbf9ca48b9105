use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero polynomial has no canonical form")]
    ZeroPolynomial,
    #[error("degree limit exceeded: degree {degree} > {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("polynomial not palindromic")]
    NotPalindromic,
    #[error("not a knot Seifert matrix")]
    NotKnotSeifert,
    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),
    #[error("indeterminate signature sample at angle {angle}")]
    IndeterminateSignature { angle: f64 },
    #[error("root isolation failed")]
    RootIsolation,
    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),
    #[error("inconsistent knot record: {0}")]
    InconsistentRecord(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("bad schema: {0}")]
    BadSchema(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown knot: {0}")]
    UnknownKnot(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
