use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not snappable: {0} has no rational reconstruction within tolerance")]
    NotSnappable(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u8, u8),
    #[error("wrong degree: expected {expected}, found {found}")]
    WrongDegree { expected: u8, found: u8 },
    #[error("form is not horizontal")]
    NonHorizontal,
    #[error("form is not of the form eta (x) {0}")]
    NotAlongBasis(String),
    #[error("unknown corepresentation '{0}'")]
    UnknownCorep(String),
    #[error("corepresentation mismatch: {0} vs {1}")]
    CorepMismatch(String, String),
    #[error("degree overflow: exterior covariant derivative of a {0}-form")]
    DegreeOverflow(u8),
    #[error("no adjoint on {0}-forms")]
    NoAdjoint(u8),
    #[error("singular matrix")]
    Singular,
    #[error("not convolution invertible")]
    NotConvolutionInvertible,
    #[error("not a gauge map: {0}")]
    NotGauge(String),
    #[error("gauge action left the space of connections")]
    NotConnection,
    #[error("no flat completion for lambda0 = {0}")]
    NoFlatCompletion(String),
    #[error("no convergence after {iterations} iterations (objective {objective:e})")]
    NoConvergence { iterations: usize, objective: f64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
