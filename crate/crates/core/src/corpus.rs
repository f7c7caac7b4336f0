//! Loading and validation of announcement corpora and market series.
//!
//! Three corpus layouts are supported:
//!
//! * a directory of UTF-8 `.txt` files named `YYYY-MM-DD[_suffix].txt`,
//!   one document per file, id = file stem;
//! * a CSV file with header `date,text[,id][,source]`;
//! * a JSONL file with one `{"id", "date", "source", "text"}` object per line.
//!
//! Market series are CSV files with header `date,value`.
//!
//! Text is kept verbatim. All normalization happens in [`crate::textproc`].

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use chrono::{DateTime, NaiveDate};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A single dated announcement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub date: NaiveDate,
    pub source: String,
    pub text: String,
}

/// Documents sorted ascending by `(date, id)` with unique ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    documents: Vec<Document>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{location}: malformed date {value:?} (expected YYYY-MM-DD)")]
    MalformedDate { location: String, value: String },
    #[error("duplicate document id {id:?}")]
    DuplicateId { id: String },
    #[error("document {id:?} has empty text")]
    EmptyText { id: String },
    #[error("{location}: empty document id")]
    EmptyId { location: String },
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
}

impl CorpusError {
    /// Stable machine-readable error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            CorpusError::Io { .. } => "io",
            CorpusError::MalformedDate { .. } => "malformed-date",
            CorpusError::DuplicateId { .. } => "duplicate-id",
            CorpusError::EmptyText { .. } => "empty-text",
            CorpusError::EmptyId { .. } => "empty-id",
            CorpusError::Parse { .. } => "parse",
        }
    }
}

impl Corpus {
    /// Validates the documents and sorts them by `(date, id)`.
    pub fn new(mut documents: Vec<Document>) -> Result<Self, CorpusError> {
        let mut seen = HashSet::with_capacity(documents.len());
        for doc in &documents {
            if doc.id.is_empty() {
                return Err(CorpusError::EmptyId {
                    location: format!("document dated {}", doc.date),
                });
            }
            if !seen.insert(doc.id.as_str()) {
                return Err(CorpusError::DuplicateId { id: doc.id.clone() });
            }
            if doc.text.trim().is_empty() {
                return Err(CorpusError::EmptyText { id: doc.id.clone() });
            }
        }
        documents.sort_by(|a, b| a.date.cmp(&b.date).then_with(|| a.id.cmp(&b.id)));
        Ok(Corpus { documents })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Document> {
        self.documents.iter()
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn into_documents(self) -> Vec<Document> {
        self.documents
    }

    /// Writes the corpus as JSONL, one document per line.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for doc in &self.documents {
            serde_json::to_writer(&mut out, doc)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a Document;
    type IntoIter = std::slice::Iter<'a, Document>;

    fn into_iter(self) -> Self::IntoIter {
        self.documents.iter()
    }
}

/// On-disk corpus layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    DirOfTxt,
    Csv,
    Jsonl,
}

impl FromStr for CorpusFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dir" | "dir-of-txt" => Ok(CorpusFormat::DirOfTxt),
            "csv" => Ok(CorpusFormat::Csv),
            "jsonl" => Ok(CorpusFormat::Jsonl),
            other => Err(format!(
                "unknown corpus format {other:?} (expected dir, csv or jsonl)"
            )),
        }
    }
}

impl fmt::Display for CorpusFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorpusFormat::DirOfTxt => "dir",
            CorpusFormat::Csv => "csv",
            CorpusFormat::Jsonl => "jsonl",
        })
    }
}

/// Loads a corpus. `default_source` labels every document whose layout does
/// not carry its own source (all of dir-of-txt, CSV rows without a `source`
/// column, JSONL objects without `source`).
pub fn load_corpus(
    path: &Path,
    format: CorpusFormat,
    default_source: &str,
) -> Result<Corpus, CorpusError> {
    let documents = match format {
        CorpusFormat::DirOfTxt => read_txt_dir(path, default_source)?,
        CorpusFormat::Csv => read_csv_corpus(path, default_source)?,
        CorpusFormat::Jsonl => read_jsonl_corpus(path, default_source)?,
    };
    Corpus::new(documents)
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CorpusError + '_ {
    move |source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Parses an ISO-8601 calendar date. Accepts `YYYY-MM-DD` or an RFC 3339
/// timestamp, which is reduced to its UTC day.
pub fn parse_iso_date(s: &str) -> Option<NaiveDate> {
    let s = s.trim();
    let b = s.as_bytes();
    if b.len() == 10 && b[4] == b'-' && b[7] == b'-' {
        return NaiveDate::parse_from_str(s, "%Y-%m-%d").ok();
    }
    DateTime::parse_from_rfc3339(s)
        .ok()
        .map(|dt| dt.naive_utc().date())
}

fn date_from_stem(stem: &str) -> Option<NaiveDate> {
    let head = match stem.split_once('_') {
        Some((head, _)) => head,
        None => stem,
    };
    let b = head.as_bytes();
    if b.len() != 10 || b[4] != b'-' || b[7] != b'-' {
        return None;
    }
    NaiveDate::parse_from_str(head, "%Y-%m-%d").ok()
}

fn read_txt_dir(dir: &Path, source: &str) -> Result<Vec<Document>, CorpusError> {
    let mut documents = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err(dir))? {
        let path = entry.map_err(io_err(dir))?.path();
        if !path.is_file() || path.extension().and_then(|e| e.to_str()) != Some("txt") {
            continue;
        }
        let file_name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        if file_name.starts_with('.') {
            continue;
        }
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| CorpusError::MalformedDate {
                location: file_name.clone(),
                value: file_name.clone(),
            })?
            .to_string();
        let date = date_from_stem(&stem).ok_or_else(|| CorpusError::MalformedDate {
            location: path.display().to_string(),
            value: stem.clone(),
        })?;
        let text = fs::read_to_string(&path).map_err(io_err(&path))?;
        documents.push(Document {
            id: stem,
            date,
            source: source.to_string(),
            text,
        });
    }
    Ok(documents)
}

fn read_csv_corpus(path: &Path, default_source: &str) -> Result<Vec<Document>, CorpusError> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    let mut reader = csv::ReaderBuilder::new().from_reader(file);
    let location = |line: u64| format!("{}:{}", path.display(), line);
    let parse_err = |line: u64, e: csv::Error| CorpusError::Parse {
        location: location(line),
        message: e.to_string(),
    };

    let headers = reader.headers().map_err(|e| parse_err(1, e))?.clone();
    let column = |name: &str| headers.iter().position(|h| h.trim() == name);
    let (Some(date_col), Some(text_col)) = (column("date"), column("text")) else {
        return Err(CorpusError::Parse {
            location: location(1),
            message: "header must contain `date` and `text` columns".into(),
        });
    };
    let id_col = column("id");
    let source_col = column("source");

    let mut documents = Vec::new();
    let mut per_date: std::collections::HashMap<NaiveDate, usize> = Default::default();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e)
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |col: usize| record.get(col).unwrap_or("");
        let raw_date = field(date_col);
        let date = parse_iso_date(raw_date).ok_or_else(|| CorpusError::MalformedDate {
            location: location(line),
            value: raw_date.to_string(),
        })?;
        let id = match id_col {
            Some(col) => {
                let id = field(col).trim();
                if id.is_empty() {
                    return Err(CorpusError::EmptyId {
                        location: location(line),
                    });
                }
                id.to_string()
            }
            None => {
                // Same-day rows get `_2`, `_3`, ... in file order.
                let seen = per_date.entry(date).or_insert(0);
                *seen += 1;
                if *seen == 1 {
                    date.to_string()
                } else {
                    format!("{date}_{seen}")
                }
            }
        };
        let source = source_col
            .map(|col| field(col).trim())
            .filter(|s| !s.is_empty())
            .unwrap_or(default_source)
            .to_string();
        documents.push(Document {
            id,
            date,
            source,
            text: field(text_col).to_string(),
        });
    }
    Ok(documents)
}

#[derive(Deserialize)]
struct JsonlRow {
    id: String,
    date: String,
    #[serde(default)]
    source: Option<String>,
    text: String,
}

fn read_jsonl_corpus(path: &Path, default_source: &str) -> Result<Vec<Document>, CorpusError> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    let mut documents = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let location = format!("{}:{}", path.display(), idx + 1);
        let row: JsonlRow = serde_json::from_str(&line).map_err(|e| CorpusError::Parse {
            location: location.clone(),
            message: e.to_string(),
        })?;
        let date = parse_iso_date(&row.date).ok_or_else(|| CorpusError::MalformedDate {
            location: location.clone(),
            value: row.date.clone(),
        })?;
        if row.id.is_empty() {
            return Err(CorpusError::EmptyId { location });
        }
        documents.push(Document {
            id: row.id,
            date,
            source: row
                .source
                .filter(|s| !s.is_empty())
                .unwrap_or_else(|| default_source.to_string()),
            text: row.text,
        });
    }
    Ok(documents)
}

/// Date-ordered `(date, value)` points with strictly increasing dates and
/// finite values.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct TimeSeries {
    points: Vec<(NaiveDate, f64)>,
}

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error("{location}: non-finite value on {date}")]
    NonFinite { location: String, date: NaiveDate },
    #[error("{location}: duplicate date {date}")]
    DuplicateDate { location: String, date: NaiveDate },
    #[error("{location}: date {date} is earlier than preceding {previous}")]
    OutOfOrder {
        location: String,
        date: NaiveDate,
        previous: NaiveDate,
    },
}

impl SeriesError {
    pub fn kind(&self) -> &'static str {
        match self {
            SeriesError::Io { .. } => "io",
            SeriesError::Parse { .. } => "parse",
            SeriesError::NonFinite { .. } => "non-finite",
            SeriesError::DuplicateDate { .. } => "duplicate-date",
            SeriesError::OutOfOrder { .. } => "out-of-order",
        }
    }
}

impl TimeSeries {
    /// Builds a series, rejecting duplicate or decreasing dates and
    /// non-finite values. Points are not reordered.
    pub fn new(points: Vec<(NaiveDate, f64)>) -> Result<Self, SeriesError> {
        for (i, &(date, value)) in points.iter().enumerate() {
            let location = format!("point {}", i + 1);
            if !value.is_finite() {
                return Err(SeriesError::NonFinite { location, date });
            }
            if i > 0 {
                check_order(points[i - 1].0, date, location)?;
            }
        }
        Ok(TimeSeries { points })
    }

    pub fn points(&self) -> &[(NaiveDate, f64)] {
        &self.points
    }

    pub fn dates(&self) -> impl Iterator<Item = NaiveDate> + '_ {
        self.points.iter().map(|p| p.0)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.1)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Value on `date`, if present.
    pub fn get(&self, date: NaiveDate) -> Option<f64> {
        self.points
            .binary_search_by(|p| p.0.cmp(&date))
            .ok()
            .map(|i| self.points[i].1)
    }

    /// Latest point dated on or before `date`.
    pub fn last_on_or_before(&self, date: NaiveDate) -> Option<(NaiveDate, f64)> {
        let idx = self.points.partition_point(|p| p.0 <= date);
        idx.checked_sub(1).map(|i| self.points[i])
    }
}

fn check_order(previous: NaiveDate, date: NaiveDate, location: String) -> Result<(), SeriesError> {
    match date.cmp(&previous) {
        std::cmp::Ordering::Greater => Ok(()),
        std::cmp::Ordering::Equal => Err(SeriesError::DuplicateDate { location, date }),
        std::cmp::Ordering::Less => Err(SeriesError::OutOfOrder {
            location,
            date,
            previous,
        }),
    }
}

/// Loads a `date,value` CSV market series.
pub fn load_series(path: &Path) -> Result<TimeSeries, SeriesError> {
    let file = fs::File::open(path).map_err(|source| SeriesError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(file);
    let location = |line: u64| format!("{}:{}", path.display(), line);

    let headers = reader
        .headers()
        .map_err(|e| SeriesError::Parse {
            location: location(1),
            message: e.to_string(),
        })?
        .clone();
    let column = |name: &str| headers.iter().position(|h| h == name);
    let (Some(date_col), Some(value_col)) = (column("date"), column("value")) else {
        return Err(SeriesError::Parse {
            location: location(1),
            message: "header must contain `date` and `value` columns".into(),
        });
    };

    let mut points: Vec<(NaiveDate, f64)> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| SeriesError::Parse {
            location: location(e.position().map_or(0, |p| p.line())),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let raw_date = record.get(date_col).unwrap_or("");
        let raw_value = record.get(value_col).unwrap_or("");
        let date = parse_iso_date(raw_date).ok_or_else(|| SeriesError::Parse {
            location: location(line),
            message: format!("malformed date {raw_date:?}"),
        })?;
        let value: f64 = raw_value.parse().map_err(|_| SeriesError::Parse {
            location: location(line),
            message: format!("malformed value {raw_value:?}"),
        })?;
        if !value.is_finite() {
            return Err(SeriesError::NonFinite {
                location: location(line),
                date,
            });
        }
        if let Some(&(previous, _)) = points.last() {
            check_order(previous, date, location(line))?;
        }
        points.push((date, value));
    }
    Ok(TimeSeries { points })
}
