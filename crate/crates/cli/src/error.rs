use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: parse error at line {line}, column {column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{path}: invalid document at {location}: {message}")]
    Document { path: String, location: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("unknown corpus entry or suite: {0}")]
    Lookup(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] facering::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

impl CliError {
    /// 2 for bad input or an unsupported request, 3 when a computation
    /// could not be completed.
    pub fn exit_code(&self) -> i32 {
        use facering::Error as E;
        match self {
            CliError::Core(E::DegenerateCoordinates(_))
            | CliError::Core(E::DegenerateLsop(_))
            | CliError::Core(E::UnluckySpecialization { .. })
            | CliError::Core(E::CycleDegreeInconsistency(_))
            | CliError::Core(E::FatalInconsistency(_)) => 3,
            _ => 2,
        }
    }
}
