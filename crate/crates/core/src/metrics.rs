//! Lexical diversity and readability indices.
//!
//! * TTR: `100 * types / tokens`.
//! * MATTR: mean TTR over every `window`-token slice (stride 1). Texts no
//!   longer than the window fall back to plain TTR.
//! * Flesch Reading Ease: `206.835 - 0.846 * wl - 1.015 * sl`, with `wl`
//!   syllables per 100 words and `sl` words per sentence.
//! * Flesch-Kincaid grade: `0.39 * sl + 11.8 * syllables_per_word - 15.59`,
//!   not clamped.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use chrono::NaiveDate;
use serde::Serialize;
use thiserror::Error;

use crate::textproc::TokenizedDocument;

pub const DEFAULT_MATTR_WINDOW: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricsError {
    #[error("empty token list")]
    EmptyInput,
    #[error("window must be at least 1")]
    ZeroWindow,
    #[error("{name} is not finite ({value})")]
    NonFinite { name: &'static str, value: f64 },
}

impl MetricsError {
    pub fn kind(&self) -> &'static str {
        match self {
            MetricsError::EmptyInput => "empty-input",
            MetricsError::ZeroWindow => "invalid-window",
            MetricsError::NonFinite { .. } => "non-finite",
        }
    }
}

pub type Result<T> = std::result::Result<T, MetricsError>;

/// Type-token ratio in percent.
pub fn ttr<T: Hash + Eq>(tokens: &[T]) -> Result<f64> {
    if tokens.is_empty() {
        return Err(MetricsError::EmptyInput);
    }
    let types: HashSet<&T> = tokens.iter().collect();
    Ok(100.0 * types.len() as f64 / tokens.len() as f64)
}

/// Moving-average type-token ratio in percent.
pub fn mattr<T: Hash + Eq>(tokens: &[T], window: usize) -> Result<f64> {
    if tokens.is_empty() {
        return Err(MetricsError::EmptyInput);
    }
    if window == 0 {
        return Err(MetricsError::ZeroWindow);
    }
    if tokens.len() <= window {
        return ttr(tokens);
    }

    let mut counts: HashMap<&T, usize> = HashMap::new();
    for t in &tokens[..window] {
        *counts.entry(t).or_insert(0) += 1;
    }
    let mut distinct_sum = counts.len() as u64;
    for (outgoing, incoming) in tokens.iter().zip(&tokens[window..]) {
        *counts.entry(incoming).or_insert(0) += 1;
        if let Some(c) = counts.get_mut(outgoing) {
            *c -= 1;
            if *c == 0 {
                counts.remove(outgoing);
            }
        }
        distinct_sum += counts.len() as u64;
    }
    let windows = (tokens.len() - window + 1) as f64;
    Ok(100.0 * distinct_sum as f64 / (window as f64 * windows))
}

fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(MetricsError::NonFinite { name, value })
    }
}

/// Flesch Reading Ease from words per sentence and syllables per word.
pub fn flesch_re(mean_sentence_length: f64, syllables_per_word: f64) -> Result<f64> {
    let sl = finite("mean_sentence_length", mean_sentence_length)?;
    let spw = finite("syllables_per_word", syllables_per_word)?;
    let wl = 100.0 * spw;
    Ok(206.835 - 0.846 * wl - 1.015 * sl)
}

/// Flesch-Kincaid grade level.
pub fn fk_grade(mean_sentence_length: f64, syllables_per_word: f64) -> Result<f64> {
    let sl = finite("mean_sentence_length", mean_sentence_length)?;
    let spw = finite("syllables_per_word", syllables_per_word)?;
    Ok(0.39 * sl + 11.8 * spw - 15.59)
}

/// Per-document metric vector. Field order is the column order of the CLI
/// output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsRecord {
    pub doc_id: String,
    pub date: NaiveDate,
    pub word_count: usize,
    pub sentence_count: usize,
    pub syllable_count: u64,
    pub ttr: f64,
    pub mattr: f64,
    pub mattr_window: usize,
    pub flesch_re: f64,
    pub fk_grade: f64,
    pub mean_sentence_length: f64,
    pub syllables_per_word: f64,
    /// Uncertainty-lexicon hits per 100 words; 0 until a lexicon pass.
    pub uncertainty_rate: f64,
}

impl MetricsRecord {
    pub const FIELDS: [&'static str; 13] = [
        "doc_id",
        "date",
        "word_count",
        "sentence_count",
        "syllable_count",
        "ttr",
        "mattr",
        "mattr_window",
        "flesch_re",
        "fk_grade",
        "mean_sentence_length",
        "syllables_per_word",
        "uncertainty_rate",
    ];
}

pub fn compute_metrics(tdoc: &TokenizedDocument, window: usize) -> Result<MetricsRecord> {
    let words = tdoc.words();
    let ttr = ttr(words)?;
    let mattr = mattr(words, window)?;
    let word_count = tdoc.total_words();
    let sentence_count = tdoc.total_sentences();
    let syllable_count = tdoc.total_syllables();
    let mean_sentence_length = word_count as f64 / sentence_count as f64;
    let syllables_per_word = syllable_count as f64 / word_count as f64;
    Ok(MetricsRecord {
        doc_id: tdoc.doc_id().to_string(),
        date: tdoc.date(),
        word_count,
        sentence_count,
        syllable_count,
        ttr,
        mattr,
        mattr_window: window,
        flesch_re: flesch_re(mean_sentence_length, syllables_per_word)?,
        fk_grade: fk_grade(mean_sentence_length, syllables_per_word)?,
        mean_sentence_length,
        syllables_per_word,
        uncertainty_rate: 0.0,
    })
}
