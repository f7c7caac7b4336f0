//! Per-document pipeline: tokenize, then compute metrics.

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{Corpus, Document};
use crate::metrics::{compute_metrics, MetricsError, MetricsRecord};
use crate::textproc::{Segmenter, TextError, TokenizedDocument};

#[derive(Debug, Clone, PartialEq)]
pub struct DocumentAnalysis {
    pub source: String,
    pub tokens: TokenizedDocument,
    pub metrics: MetricsRecord,
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Text(#[from] TextError),
    #[error("document {id:?}: {source}")]
    Metrics {
        id: String,
        #[source]
        source: MetricsError,
    },
}

impl AnalysisError {
    pub fn kind(&self) -> &'static str {
        match self {
            AnalysisError::Text(e) => e.kind(),
            AnalysisError::Metrics { source, .. } => source.kind(),
        }
    }
}

pub fn analyze_document(
    doc: &Document,
    segmenter: &Segmenter,
    window: usize,
) -> Result<DocumentAnalysis, AnalysisError> {
    let tokens = segmenter.tokenize_document(doc)?;
    let metrics = compute_metrics(&tokens, window).map_err(|source| AnalysisError::Metrics {
        id: doc.id.clone(),
        source,
    })?;
    Ok(DocumentAnalysis {
        source: doc.source.clone(),
        tokens,
        metrics,
    })
}

/// Analyzes every document in corpus order. Work is spread over the rayon
/// pool; the output order does not depend on scheduling. On failure the
/// error for the earliest failing document is returned.
pub fn analyze_corpus(
    corpus: &Corpus,
    segmenter: &Segmenter,
    window: usize,
) -> Result<Vec<DocumentAnalysis>, AnalysisError> {
    let results: Vec<_> = corpus
        .documents()
        .par_iter()
        .map(|doc| analyze_document(doc, segmenter, window))
        .collect();
    results.into_iter().collect()
}
