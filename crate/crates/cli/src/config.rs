//! Validated run configuration assembled from command-line flags.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use commlex::{AlignRule, CorpusFormat, Lexicon, Segmenter};

use crate::args::Emit;
use crate::error::CliError;

/// Environment variable naming an abbreviation list for the sentence
/// splitter.
pub const ABBREV_ENV: &str = "COMMLEX_ABBREV";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub label: String,
    pub path: PathBuf,
    pub format: CorpusFormat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarketSpec {
    pub label: String,
    pub path: PathBuf,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpora: Vec<CorpusSpec>,
    pub lexicon: Option<PathBuf>,
    pub category: String,
    pub markets: Vec<MarketSpec>,
    pub window: usize,
    pub align: AlignRule,
    pub diff: bool,
    pub emit: Emit,
    pub out: Option<PathBuf>,
    pub pairs_out: Option<PathBuf>,
    pub trend_k: Option<usize>,
    pub abbreviations: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(corpora: Vec<CorpusSpec>) -> Self {
        RunConfig {
            corpora,
            lexicon: None,
            category: "uncertainty".into(),
            markets: Vec::new(),
            window: commlex::DEFAULT_MATTR_WINDOW,
            align: AlignRule::default(),
            diff: false,
            emit: Emit::Csv,
            out: None,
            pairs_out: None,
            trend_k: None,
            abbreviations: std::env::var_os(ABBREV_ENV).map(PathBuf::from),
        }
    }

    /// Checks the invariants every command relies on: at least one corpus,
    /// unique labels, window ≥ 1, odd trend window, and existing inputs.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.corpora.is_empty() {
            return Err(CliError::Usage("at least one --corpus is required".into()));
        }
        if self.window == 0 {
            return Err(CliError::Usage("--window must be at least 1".into()));
        }
        if let Some(k) = self.trend_k {
            if k == 0 || k.is_multiple_of(2) {
                return Err(CliError::Usage(format!(
                    "--trend-k must be odd and positive, got {k}"
                )));
            }
        }
        let mut labels = HashSet::new();
        for c in &self.corpora {
            if !labels.insert(c.label.as_str()) {
                return Err(CliError::Usage(format!(
                    "corpus label {:?} given twice",
                    c.label
                )));
            }
            require_exists(&c.path, "corpus")?;
        }
        let mut market_labels = HashSet::new();
        for m in &self.markets {
            if !market_labels.insert(m.label.as_str()) {
                return Err(CliError::Usage(format!(
                    "market label {:?} given twice",
                    m.label
                )));
            }
            require_exists(&m.path, "market series")?;
        }
        if let Some(path) = &self.lexicon {
            require_exists(path, "lexicon")?;
        }
        Ok(())
    }

    pub fn segmenter(&self) -> Result<Segmenter, CliError> {
        match &self.abbreviations {
            Some(path) => {
                Segmenter::from_abbreviation_file(path).map_err(|source| CliError::Abbreviations {
                    path: path.clone(),
                    source,
                })
            }
            None => Ok(Segmenter::default()),
        }
    }

    pub fn load_lexicon(&self) -> Result<Lexicon, CliError> {
        Ok(match &self.lexicon {
            Some(path) => commlex::load_lexicon(path, &self.category)?,
            None => Lexicon::uncertainty_seed(),
        })
    }

    /// Where the aligned-pairs audit table goes, if anywhere.
    pub fn pairs_path(&self) -> Option<PathBuf> {
        if let Some(p) = &self.pairs_out {
            return Some(p.clone());
        }
        let out = self.out.as_ref()?;
        let ext = match self.emit {
            Emit::Csv => "pairs.csv",
            Emit::Json => "pairs.json",
        };
        Some(out.with_extension(ext))
    }
}

fn require_exists(path: &Path, what: &str) -> Result<(), CliError> {
    if path.exists() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{what} path {} does not exist",
            path.display()
        )))
    }
}

fn split_label(spec: &str, flag: &str) -> Result<(Option<String>, PathBuf), CliError> {
    match spec.split_once('=') {
        Some((label, path)) => {
            let label = label.trim();
            if label.is_empty() || path.is_empty() {
                return Err(CliError::Usage(format!(
                    "{flag} expects LABEL=PATH, got {spec:?}"
                )));
            }
            Ok((Some(label.to_string()), PathBuf::from(path)))
        }
        None if spec.is_empty() => Err(CliError::Usage(format!("{flag} expects a path"))),
        None => Ok((None, PathBuf::from(spec))),
    }
}

fn stem_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Infers the corpus layout from the path when no `--format` is given.
pub fn infer_format(path: &Path) -> Option<CorpusFormat> {
    if path.is_dir() {
        return Some(CorpusFormat::DirOfTxt);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => Some(CorpusFormat::Csv),
        Some("jsonl" | "ndjson") => Some(CorpusFormat::Jsonl),
        _ => None,
    }
}

pub fn parse_corpus_spec(spec: &str, format: Option<CorpusFormat>) -> Result<CorpusSpec, CliError> {
    let (label, path) = split_label(spec, "--corpus")?;
    let format = match format.or_else(|| infer_format(&path)) {
        Some(f) => f,
        None => {
            return Err(CliError::Usage(format!(
                "cannot infer the format of {}; pass --format dir|csv|jsonl",
                path.display()
            )))
        }
    };
    Ok(CorpusSpec {
        label: label.unwrap_or_else(|| stem_label(&path)),
        path,
        format,
    })
}

pub fn parse_market_spec(spec: &str) -> Result<MarketSpec, CliError> {
    let (label, path) = split_label(spec, "--market")?;
    Ok(MarketSpec {
        label: label.unwrap_or_else(|| stem_label(&path)),
        path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_spec_forms() {
        let s = parse_corpus_spec("BoI=data/boi.csv", None).unwrap();
        assert_eq!(s.label, "BoI");
        assert_eq!(s.format, CorpusFormat::Csv);
        let s = parse_corpus_spec("data/fed.jsonl", None).unwrap();
        assert_eq!(s.label, "fed");
        assert_eq!(s.format, CorpusFormat::Jsonl);
        let s = parse_corpus_spec("ECB=x.txtdump", Some(CorpusFormat::DirOfTxt)).unwrap();
        assert_eq!(s.format, CorpusFormat::DirOfTxt);
        assert!(parse_corpus_spec("=x.csv", None).is_err());
        assert!(parse_corpus_spec("x.unknown", None).is_err());
    }

    #[test]
    fn validation() {
        let dir = tempfile::tempdir().unwrap();
        let spec = |label: &str| CorpusSpec {
            label: label.into(),
            path: dir.path().to_path_buf(),
            format: CorpusFormat::DirOfTxt,
        };
        let mut cfg = RunConfig::new(vec![spec("a")]);
        cfg.abbreviations = None;
        assert!(cfg.validate().is_ok());

        cfg.window = 0;
        assert_eq!(cfg.validate().unwrap_err().kind(), "usage");
        cfg.window = 100;

        cfg.trend_k = Some(4);
        assert!(cfg.validate().is_err());
        cfg.trend_k = Some(3);

        cfg.corpora.push(spec("a"));
        assert!(cfg.validate().is_err());
        cfg.corpora.pop();

        cfg.lexicon = Some(dir.path().join("missing.txt"));
        assert!(cfg.validate().is_err());

        assert!(RunConfig::new(vec![]).validate().is_err());
    }

    #[test]
    fn pairs_path_derivation() {
        let mut cfg = RunConfig::new(vec![]);
        assert_eq!(cfg.pairs_path(), None);
        cfg.out = Some(PathBuf::from("out/corr.csv"));
        assert_eq!(cfg.pairs_path(), Some(PathBuf::from("out/corr.pairs.csv")));
        cfg.pairs_out = Some(PathBuf::from("p.csv"));
        assert_eq!(cfg.pairs_path(), Some(PathBuf::from("p.csv")));
    }
}
