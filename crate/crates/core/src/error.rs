use thiserror::Error;

use crate::field::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("width error: {0}")]
    Width(String),
    #[error("category mismatch: {0}")]
    Category(String),
    #[error("zero element has no lead term")]
    ZeroElement,
    #[error("grading error: {0}")]
    Grading(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("modular characteristic {characteristic} is not coprime to {n}!")]
    ModularCharacteristic { characteristic: u64, n: usize },
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}
