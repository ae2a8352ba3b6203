use thiserror::Error;

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("{0:?} is not a valid OEIS sequence id (expected A followed by up to six digits)")]
    InvalidId(String),

    #[error("b-file line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("sequence {id} unavailable: offline (or network failed) and nothing cached")]
    Unavailable { id: String },

    #[error("request for {url} failed: {reason}")]
    Http { url: String, reason: String },

    #[error("index ranges do not overlap (local {local_start}..={local_end}, remote {remote_start}..={remote_end})")]
    DisjointRanges {
        local_start: i64,
        local_end: i64,
        remote_start: i64,
        remote_end: i64,
    },

    #[error("nothing to compare: {0}")]
    EmptyInput(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
