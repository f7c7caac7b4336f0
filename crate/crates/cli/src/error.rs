use std::io;
use std::path::PathBuf;

use commlex::{AnalysisError, CorpusError, LexiconError, SeriesError, StatsError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("corpus {label:?}: {source}")]
    Corpus {
        label: String,
        #[source]
        source: CorpusError,
    },
    #[error("market {label:?}: {source}")]
    Series {
        label: String,
        #[source]
        source: SeriesError,
    },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("{context}: {source}")]
    Stats {
        context: String,
        #[source]
        source: StatsError,
    },
    #[error("abbreviation list {}: {source}", path.display())]
    Abbreviations {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("cannot write {}: {source}", path.display())]
    Output {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    /// The `<kind>` in the `error:<kind>:` stderr prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Corpus { source, .. } => source.kind(),
            CliError::Series { source, .. } => source.kind(),
            CliError::Lexicon(e) => e.kind(),
            CliError::Analysis(e) => e.kind(),
            CliError::Stats { source, .. } => source.kind(),
            CliError::Abbreviations { .. } | CliError::Output { .. } => "io",
        }
    }

    pub(crate) fn stats(context: impl Into<String>) -> impl FnOnce(StatsError) -> CliError {
        let context = context.into();
        move |source| CliError::Stats { context, source }
    }
}
