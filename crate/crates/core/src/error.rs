use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unlucky specialization after {attempts} draws (seed {seed})")]
    UnluckySpecialization { seed: u64, attempts: usize },

    #[error("degenerate linear system of parameters: {0}")]
    DegenerateLsop(String),

    #[error("degenerate coordinates: {0}")]
    DegenerateCoordinates(String),

    #[error("cycle degree inconsistency: {0}")]
    CycleDegreeInconsistency(String),

    #[error("fatal inconsistency: {0}")]
    FatalInconsistency(String),

    #[error("mode error: {0}")]
    Mode(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
