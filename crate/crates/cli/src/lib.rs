//! Command-line front end for `commlex`.
//!
//! The binary is a thin wrapper over [`run`]; the command functions return
//! [`Table`]s so they can be tested without spawning a process.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

pub use args::Cli;
pub use error::CliError;
pub use table::Table;

use args::{AnalyzeArgs, Command, CompareArgs, CorpusArgs, CorrelateArgs, Emit, LexiconArgs};
use config::{parse_corpus_spec, parse_market_spec, RunConfig};

fn base_config(corpus: CorpusArgs) -> Result<RunConfig, CliError> {
    let corpora = corpus
        .corpora
        .iter()
        .map(|spec| parse_corpus_spec(spec, corpus.format))
        .collect::<Result<Vec<_>, _>>()?;
    let mut config = RunConfig::new(corpora);
    config.window = corpus.window;
    config.emit = corpus.emit;
    config.out = corpus.out;
    Ok(config)
}

fn with_lexicon(mut config: RunConfig, lexicon: LexiconArgs) -> RunConfig {
    config.lexicon = lexicon.lexicon;
    config.category = lexicon.category;
    config
}

/// Turns parsed arguments into a run configuration.
pub fn build_config(command: Command) -> Result<RunConfig, CliError> {
    match command {
        Command::Analyze(AnalyzeArgs {
            corpus,
            lexicon,
            trend_k,
        }) => {
            let mut config = with_lexicon(base_config(corpus)?, lexicon);
            config.trend_k = trend_k;
            Ok(config)
        }
        Command::Correlate(CorrelateArgs {
            corpus,
            lexicon,
            markets,
            align,
            diff,
            pairs_out,
        }) => {
            let mut config = with_lexicon(base_config(corpus)?, lexicon);
            config.markets = markets
                .iter()
                .map(|m| parse_market_spec(m))
                .collect::<Result<_, _>>()?;
            config.align = align;
            config.diff = diff;
            config.pairs_out = pairs_out;
            Ok(config)
        }
        Command::Compare(CompareArgs { corpus, trend_k }) => {
            let mut config = base_config(corpus)?;
            config.trend_k = trend_k;
            Ok(config)
        }
    }
}

fn write_table(table: &Table, emit: Emit, path: Option<&Path>) -> Result<(), CliError> {
    let render = |out: &mut dyn Write| -> io::Result<()> {
        match emit {
            Emit::Csv => table.write_csv(&mut *out)?,
            Emit::Json => table.write_json(&mut *out)?,
        }
        out.flush()
    };
    match path {
        Some(path) => {
            let output_err = |source| CliError::Output {
                path: path.to_path_buf(),
                source,
            };
            let file = File::create(path).map_err(output_err)?;
            render(&mut BufWriter::new(file)).map_err(output_err)
        }
        None => {
            let stdout = io::stdout();
            render(&mut stdout.lock()).map_err(|source| CliError::Output {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}

/// Runs one command, writing its table to `--out` or stdout.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let is_correlate = matches!(cli.command, Command::Correlate(_));
    let is_compare = matches!(cli.command, Command::Compare(_));
    let config = build_config(cli.command)?;
    if is_correlate {
        let output = commands::cmd_correlate(&config)?;
        write_table(&output.summary, config.emit, config.out.as_deref())?;
        if let Some(path) = config.pairs_path() {
            write_table(&output.pairs, config.emit, Some(&path))?;
        }
        return output.failure.map_or(Ok(()), Err);
    }
    let table = if is_compare {
        commands::cmd_compare(&config)?
    } else {
        commands::cmd_analyze(&config)?
    };
    write_table(&table, config.emit, config.out.as_deref())
}
