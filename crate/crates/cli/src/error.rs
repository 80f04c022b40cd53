use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] aseries_core::Error),

    #[error("oracle rejected the generated series for {n}: {detail}")]
    OracleRejected { n: u64, detail: String },

    #[error("failed to encode JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit status: 2 for usage errors, 1 for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(aseries_core::Error::TooSmall { .. })
            | CliError::Core(aseries_core::Error::InvalidArgument(_)) => 2,
            _ => 1,
        }
    }
}
