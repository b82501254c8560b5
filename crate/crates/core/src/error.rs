use thiserror::Error;

/// Errors produced by dataset ingestion, estimation, and simulation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("column `{0}` not found in CSV header")]
    MissingColumn(String),

    #[error("row {row}: cannot parse `{value}` in column `{column}` as a number")]
    Parse {
        row: usize,
        column: String,
        value: String,
    },

    #[error("row {row}: non-finite value in column `{column}`")]
    NonFiniteValue { row: usize, column: String },

    #[error("dataset contains no data rows")]
    EmptyDataset,

    #[error("cell ({0}, {1}) exceeds the maximum cell size {2}")]
    CellTooLarge(usize, usize, usize),

    #[error("invalid schema: {0}")]
    Schema(String),

    #[error("penalty constant must be > 1, got {0}")]
    InvalidPenaltyConstant(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("design matrix or response contains non-finite entries")]
    NonFiniteInput,

    #[error("treatment is degenerate: projection residual is identically zero")]
    SingularTreatment,

    #[error("inference requires min(N, M) >= 2, got {0}")]
    InsufficientClusters(usize),

    #[error("correlation matrix is not positive definite")]
    NotPositiveDefinite,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
