use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input is not valid UTF-8 (line {line})")]
    InvalidUtf8 { line: usize },

    /// `line` is 1-based; for plain-text corpora it is the record's first line.
    #[error("corpus line {line}: {message}")]
    MalformedRecord { line: usize, message: String },

    #[error("duplicate poem id `{0}`")]
    DuplicateId(String),

    #[error("gazetteer line {line}: {message}")]
    MalformedGazetteer { line: usize, message: String },

    #[error("lexicon `{name}` line {line}: {message}")]
    MalformedLexicon {
        name: String,
        line: usize,
        message: String,
    },

    #[error("author `{0}` has no poems in the corpus")]
    UnknownAuthor(String),

    #[error("no poem with id `{0}`")]
    UnknownPoem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported export format `{0}`")]
    UnknownFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by the caller's parameters rather than the data.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::InvalidArgument(_) | Error::UnknownFormat(_))
    }

    pub(crate) fn arg(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }
}
