use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid torus point: {0}")]
    InvalidPoint(String),

    #[error("group closure exceeded bound of {bound} elements")]
    GroupTooLarge { bound: usize },

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),

    #[error("unsupported root system type: {0}")]
    UnsupportedType(String),

    #[error("point carries no Springer data")]
    MissingSpringerData,

    #[error("inconsistent labels: {0}")]
    InconsistentLabels(String),

    #[error("points live over different groups")]
    MismatchedGroups,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
