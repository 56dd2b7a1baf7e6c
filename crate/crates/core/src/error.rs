use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid cell ({row}, {col}) for partition {partition}")]
    InvalidCell {
        partition: String,
        row: usize,
        col: usize,
    },

    #[error("ell must be at least 2, got {0}")]
    EllTooSmall(u64),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("{what} = {value} exceeds the configured bound {bound}; {hint}")]
    OverBound {
        what: &'static str,
        value: u64,
        bound: u64,
        hint: &'static str,
    },

    #[error("order must be positive")]
    ZeroOrder,

    #[error("value {0} is not rational")]
    NotRational(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("calibration failed: {0}")]
    Calibration(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
