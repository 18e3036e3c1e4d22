use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("letter x{letter} is out of range for {strands} strands (expected 1..={max})", max = .strands.saturating_sub(1))]
    LetterOutOfRange { letter: usize, strands: usize },

    #[error("strand count must be between 1 and {max}, got {strands}", max = crate::word::MAX_STRANDS)]
    InvalidStrands { strands: usize },

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("cannot embed a {from}-strand braid into {to} strands")]
    EmbedTooSmall { from: usize, to: usize },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("equivalence class exceeds the configured cap of {cap} words")]
    ClassTooLarge { cap: usize },

    #[error("{what} is capped at n <= {max}, got n = {n}")]
    EnumerationCap {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("{0}")]
    Precondition(String),
}

impl BraidError {
    /// Resource-limit errors are distinguished from malformed input so the
    /// CLI can map them to their own exit status.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            BraidError::ClassTooLarge { .. } | BraidError::EnumerationCap { .. }
        )
    }
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
