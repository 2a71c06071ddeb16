use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed document or flag value; the message names the field.
    #[error("schema error: {0}")]
    Schema(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] spsw_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
