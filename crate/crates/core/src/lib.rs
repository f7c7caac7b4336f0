//! Communication-quality metrics for dated policy announcements.
//!
//! The pipeline loads a [`Corpus`], tokenizes each document
//! ([`textproc`]), computes lexical-diversity and readability indices
//! ([`metrics`]), scores dictionary uncertainty ([`lexicon`]) and relates the
//! resulting series to market data ([`stats`]).

pub use chrono::{Datelike, Days, NaiveDate};

pub mod analysis;
pub mod corpus;
pub mod lexicon;
pub mod metrics;
pub mod stats;
pub mod textproc;

pub use analysis::{analyze_corpus, analyze_document, AnalysisError, DocumentAnalysis};
pub use corpus::{
    load_corpus, load_series, Corpus, CorpusError, CorpusFormat, Document, SeriesError, TimeSeries,
};
pub use lexicon::{
    load_lexicon, uncertainty_rate, uncertainty_records, uncertainty_series, Lexicon, LexiconError,
    UncertaintyRecord,
};
pub use metrics::{
    compute_metrics, fk_grade, flesch_re, mattr, ttr, MetricsError, MetricsRecord,
    DEFAULT_MATTR_WINDOW,
};
pub use stats::{
    align, correlate, dcor, moving_average, pearson, yearly_mean, AlignRule, AlignedPair,
    CorrelationResult, StatsError,
};
pub use textproc::{
    count_syllables, segment_sentences, tokenize_document, tokenize_words, Segmenter, TextError,
    TokenizedDocument,
};
