use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operation undefined on the zero form")]
    ZeroForm,
    #[error("substitution requires linear forms")]
    NonLinearSubstitution,
    #[error("points span no line: they coincide projectively")]
    CoincidentPoints,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("duplicate point {0} in configuration")]
    DuplicatePoint(usize),
    #[error("no generic line found after {0} rejections")]
    GenericLineExhausted(usize),
    #[error("line is not generic: {0}")]
    NonGenericLine(String),
    #[error("generic samples disagree at j = {j}: {values:?}")]
    GenericityDisagreement { j: usize, values: Vec<usize> },
    #[error("splitting recovery did not converge for k = {k}: {reason}")]
    NonConvergent { k: usize, reason: String },
    #[error("certification failed: {0}")]
    CertificationFailure(String),
    #[error("constructed curve is identically zero")]
    ZeroCurve,
    #[error("case too large for symbolic check: {0}")]
    CaseTooLarge(String),
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("mathematical inconsistency: {0}")]
    Inconsistency(String),
}

/// Coarse classification used for process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Math,
    Genericity,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_)
            | Error::InvalidInput(_)
            | Error::DuplicatePoint(_)
            | Error::IndexOutOfRange { .. }
            | Error::CaseTooLarge(_)
            | Error::DegreeMismatch(_)
            | Error::NonLinearSubstitution
            | Error::CoincidentPoints => ErrorKind::Usage,
            Error::GenericLineExhausted(_)
            | Error::NonGenericLine(_)
            | Error::GenericityDisagreement { .. } => ErrorKind::Genericity,
            Error::DivisionByZero
            | Error::ZeroForm
            | Error::NonConvergent { .. }
            | Error::CertificationFailure(_)
            | Error::ZeroCurve
            | Error::Inconsistency(_) => ErrorKind::Math,
        }
    }
}
