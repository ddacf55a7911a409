use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("minor size {size} exceeds a {rows}x{cols} matrix")]
    Size { size: usize, rows: usize, cols: usize },
    #[error("S-pair limit of {0} exceeded")]
    ResourceLimit(usize),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("genericity failure: {0}")]
    GenericityFailure(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("singularity is not isolated: {0}")]
    NonIsolatedSingularity(String),
    #[error("singular locus has irrational coordinates: {0}")]
    UnsupportedSingularLocus(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("polynomials share a common component")]
    CommonComponent,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable status label used in reports.
    pub fn status(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::UndeclaredVariable(_) => "ParseError",
            Error::InvalidSubstitution(_) => "InvalidSubstitution",
            Error::Size { .. } => "SizeError",
            Error::ResourceLimit(_) => "ResourceLimit",
            Error::NotZeroDimensional => "NotZeroDimensional",
            Error::GenericityFailure(_) => "GenericityFailure",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NonIsolatedSingularity(_) => "NonIsolatedSingularity",
            Error::UnsupportedSingularLocus(_) => "UnsupportedSingularLocus",
            Error::ConsistencyFailure(_) => "ConsistencyFailure",
            Error::Fixture(_) => "FixtureError",
            Error::CommonComponent => "CommonComponent",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
