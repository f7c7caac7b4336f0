use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commlex::{AlignRule, CorpusFormat, DEFAULT_MATTR_WINDOW};

#[derive(Debug, Parser)]
#[command(
    name = "commlex",
    version,
    about = "Readability, lexical diversity and uncertainty metrics for policy announcements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row of metrics per document.
    Analyze(AnalyzeArgs),
    /// Correlate the uncertainty index with market series.
    Correlate(CorrelateArgs),
    /// Yearly FK grade and MATTR per source.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Corpus as LABEL=PATH, or PATH (label = file stem). Repeatable.
    #[arg(long = "corpus", value_name = "LABEL=PATH", required = true)]
    pub corpora: Vec<String>,

    /// Corpus layout; inferred from the path when omitted.
    #[arg(long, value_name = "dir|csv|jsonl")]
    pub format: Option<CorpusFormat>,

    /// MATTR window in tokens.
    #[arg(long, default_value_t = DEFAULT_MATTR_WINDOW)]
    pub window: usize,

    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    pub emit: Emit,

    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LexiconArgs {
    /// Word list, one entry per line. Defaults to the bundled stand-in list.
    #[arg(long)]
    pub lexicon: Option<PathBuf>,

    /// Category name recorded for the lexicon.
    #[arg(long, default_value = "uncertainty")]
    pub category: String,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub lexicon: LexiconArgs,
    /// Append centered moving-average trend columns (odd window).
    #[arg(long, value_name = "K")]
    pub trend_k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CorrelateArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub lexicon: LexiconArgs,

    /// Market series CSV (date,value) as LABEL=PATH or PATH. Repeatable.
    #[arg(long = "market", value_name = "LABEL=PATH", required = true)]
    pub markets: Vec<String>,

    #[arg(long, default_value = "last-on-or-before")]
    pub align: AlignRule,

    /// Correlate first differences instead of levels.
    #[arg(long)]
    pub diff: bool,

    /// Aligned-pairs audit file. Defaults to `<out>.pairs.<ext>` when
    /// `--out` is given.
    #[arg(long)]
    pub pairs_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Append a centered moving-average trend column over years (odd window).
    #[arg(long, value_name = "K")]
    pub trend_k: Option<usize>,
}
