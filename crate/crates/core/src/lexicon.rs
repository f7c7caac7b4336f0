//! Dictionary-based unigram classification and the uncertainty index.
//!
//! The index of a document is the share of its word tokens, counted with
//! multiplicity, that exactly match a lexicon entry, expressed per 100
//! words. Matching is strictly unigram: "uncertainty declined" still
//! counts one uncertainty hit.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::DocumentAnalysis;
use crate::corpus::TimeSeries;
use crate::stats;
use crate::textproc::TokenizedDocument;

const SEED_UNCERTAINTY: &str = include_str!("../data/uncertainty_seed.txt");

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("lexicon {name:?} has no entries")]
    Empty { name: String },
    #[error("lexicon {name:?}: invalid entry {entry:?} on line {line}")]
    InvalidEntry {
        name: String,
        entry: String,
        line: usize,
    },
    #[error("no documents to classify")]
    NoDocuments,
}

impl LexiconError {
    pub fn kind(&self) -> &'static str {
        match self {
            LexiconError::Io { .. } => "io",
            LexiconError::Empty { .. } => "empty-lexicon",
            LexiconError::InvalidEntry { .. } => "invalid-entry",
            LexiconError::NoDocuments => "empty-input",
        }
    }
}

/// A named category of lowercase words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    name: String,
    words: BTreeSet<String>,
}

fn normalize_entry(raw: &str) -> Option<String> {
    let entry: String = raw
        .chars()
        .flat_map(char::to_lowercase)
        .map(|c| if c == '\u{2019}' { '\'' } else { c })
        .collect();
    let valid = entry.chars().any(char::is_alphabetic)
        && entry
            .chars()
            .all(|c| c.is_alphabetic() || c == '\'' || c == '-');
    valid.then_some(entry)
}

impl Lexicon {
    /// Builds a lexicon, case-folding entries and collapsing duplicates.
    pub fn new<I, S>(name: &str, entries: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut words = BTreeSet::new();
        for (idx, raw) in entries.into_iter().enumerate() {
            let raw = raw.as_ref().trim();
            let entry = normalize_entry(raw).ok_or_else(|| LexiconError::InvalidEntry {
                name: name.to_string(),
                entry: raw.to_string(),
                line: idx + 1,
            })?;
            words.insert(entry);
        }
        if words.is_empty() {
            return Err(LexiconError::Empty {
                name: name.to_string(),
            });
        }
        Ok(Lexicon {
            name: name.to_string(),
            words,
        })
    }

    /// Parses one entry per line, skipping blank lines and `#` comments.
    pub fn parse(name: &str, content: &str) -> Result<Self, LexiconError> {
        let mut words = BTreeSet::new();
        for (idx, line) in content.lines().enumerate() {
            let entry = line.split('#').next().unwrap_or("").trim();
            if entry.is_empty() {
                continue;
            }
            let normalized = normalize_entry(entry).ok_or_else(|| LexiconError::InvalidEntry {
                name: name.to_string(),
                entry: entry.to_string(),
                line: idx + 1,
            })?;
            words.insert(normalized);
        }
        if words.is_empty() {
            return Err(LexiconError::Empty {
                name: name.to_string(),
            });
        }
        Ok(Lexicon {
            name: name.to_string(),
            words,
        })
    }

    /// The bundled stand-in uncertainty list (seed words and inflections).
    pub fn uncertainty_seed() -> Self {
        Lexicon::parse("uncertainty", SEED_UNCERTAINTY).expect("bundled lexicon is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    /// Entries in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    pub fn insert(&mut self, word: &str) -> Result<bool, LexiconError> {
        let entry = normalize_entry(word.trim()).ok_or_else(|| LexiconError::InvalidEntry {
            name: self.name.clone(),
            entry: word.to_string(),
            line: 0,
        })?;
        Ok(self.words.insert(entry))
    }
}

pub fn load_lexicon(path: &Path, name: &str) -> Result<Lexicon, LexiconError> {
    let content = fs::read_to_string(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Lexicon::parse(name, &content)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UncertaintyRecord {
    pub doc_id: String,
    pub date: NaiveDate,
    pub hits: usize,
    pub word_count: usize,
    /// Hits per 100 words.
    pub rate: f64,
}

/// Counts lexicon hits in a document.
pub fn uncertainty_rate(tdoc: &TokenizedDocument, lex: &Lexicon) -> UncertaintyRecord {
    let hits = tdoc.words().iter().filter(|w| lex.contains(w)).count();
    let word_count = tdoc.total_words();
    UncertaintyRecord {
        doc_id: tdoc.doc_id().to_string(),
        date: tdoc.date(),
        hits,
        word_count,
        rate: 100.0 * hits as f64 / word_count as f64,
    }
}

/// Per-document records in `(date, id)` order, without collapsing
/// same-day documents. Each document's `uncertainty_rate` is updated.
pub fn uncertainty_records(
    docs: &mut [DocumentAnalysis],
    lex: &Lexicon,
) -> Result<Vec<UncertaintyRecord>, LexiconError> {
    if docs.is_empty() {
        return Err(LexiconError::NoDocuments);
    }
    let mut records: Vec<UncertaintyRecord> = docs
        .iter_mut()
        .map(|doc| {
            let record = uncertainty_rate(&doc.tokens, lex);
            doc.metrics.uncertainty_rate = record.rate;
            record
        })
        .collect();
    records.sort_by(|a, b| a.date.cmp(&b.date).then_with(|| a.doc_id.cmp(&b.doc_id)));
    Ok(records)
}

/// Date-ordered uncertainty series. Same-day documents are collapsed to
/// their mean rate so dates stay strictly increasing.
pub fn uncertainty_series(
    docs: &mut [DocumentAnalysis],
    lex: &Lexicon,
) -> Result<TimeSeries, LexiconError> {
    let records = uncertainty_records(docs, lex)?;
    Ok(
        stats::collapse_by_mean(records.iter().map(|r| (r.date, r.rate)))
            .expect("rates are finite"),
    )
}
