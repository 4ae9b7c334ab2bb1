use thiserror::Error;

/// Errors produced by the core pipeline.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("parse error at row {row}, column '{column}': {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),

    #[error("degenerate column '{0}': max must exceed min")]
    DegenerateColumn(String),

    #[error("constant column '{0}': correlation undefined")]
    ConstantColumn(String),

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("too few rows: have {have}, need at least {need}")]
    TooFewRows { have: usize, need: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("covariance not positive definite (ridge {ridge:.3e}); try a larger ridge")]
    NotPositiveDefinite { ridge: f64 },

    #[error("correlation matrix is not repairable to positive semi-definite")]
    IndefiniteCorrelation,

    #[error("training diverged: non-finite loss at epoch {epoch}")]
    Divergence { epoch: usize },

    #[error("calibration set too small: {n_cal} scores cannot support alpha {alpha}")]
    CalibrationTooSmall { n_cal: usize, alpha: f64 },

    #[error("model is not calibrated")]
    NotCalibrated,

    #[error("non-finite model evaluation at {context}")]
    NonFiniteEval { context: String },

    #[error("no feasible start found after {tries} rejection samples")]
    NoFeasibleStart { tries: usize },

    #[error("target variance is zero: R^2 undefined")]
    ZeroVarianceTarget,

    #[error("artifact format error: {0}")]
    ArtifactFormat(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
