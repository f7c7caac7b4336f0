//! Tokenization, sentence segmentation and syllable counting.
//!
//! These produce the raw counts every readability and diversity index is
//! built from, so all text normalization lives here.

mod segment;
mod syllables;
mod tokenize;

use std::ops::Range;

use chrono::NaiveDate;
use serde::Serialize;
use thiserror::Error;

use crate::corpus::Document;

pub use segment::{segment_sentences, Segmenter, DEFAULT_ABBREVIATIONS};
pub use syllables::count_syllables;
pub use tokenize::tokenize_words;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("document {id:?} contains no word tokens")]
    EmptyDocument { id: String },
}

impl TextError {
    pub fn kind(&self) -> &'static str {
        match self {
            TextError::EmptyDocument { .. } => "empty-document",
        }
    }
}

/// Word, sentence and syllable breakdown of one document.
///
/// Only sentences containing at least one word token are kept, so
/// `total_sentences` counts the sentences that contribute words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TokenizedDocument {
    doc_id: String,
    date: NaiveDate,
    sentences: Vec<Range<usize>>,
    words: Vec<String>,
    syllables: Vec<u32>,
    total_words: usize,
    total_sentences: usize,
    total_syllables: u64,
}

impl TokenizedDocument {
    pub fn doc_id(&self) -> &str {
        &self.doc_id
    }

    pub fn date(&self) -> NaiveDate {
        self.date
    }

    /// Byte ranges into the source document text.
    pub fn sentences(&self) -> &[Range<usize>] {
        &self.sentences
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    /// Per-word syllable counts, parallel to [`words`](Self::words).
    pub fn syllables(&self) -> &[u32] {
        &self.syllables
    }

    pub fn total_words(&self) -> usize {
        self.total_words
    }

    pub fn total_sentences(&self) -> usize {
        self.total_sentences
    }

    pub fn total_syllables(&self) -> u64 {
        self.total_syllables
    }
}

impl Segmenter {
    pub fn tokenize_document(&self, doc: &Document) -> Result<TokenizedDocument, TextError> {
        let mut sentences = Vec::new();
        let mut words = Vec::new();
        for span in self.spans(&doc.text) {
            let tokens = tokenize_words(&doc.text[span.clone()]);
            if !tokens.is_empty() {
                sentences.push(span);
                words.extend(tokens);
            }
        }
        if words.is_empty() {
            return Err(TextError::EmptyDocument { id: doc.id.clone() });
        }
        let syllables: Vec<u32> = words.iter().map(|w| count_syllables(w)).collect();
        Ok(TokenizedDocument {
            doc_id: doc.id.clone(),
            date: doc.date,
            total_words: words.len(),
            total_sentences: sentences.len(),
            total_syllables: syllables.iter().map(|&s| u64::from(s)).sum(),
            sentences,
            words,
            syllables,
        })
    }
}

/// Tokenizes a document with the default [`Segmenter`].
pub fn tokenize_document(doc: &Document) -> Result<TokenizedDocument, TextError> {
    Segmenter::default().tokenize_document(doc)
}
