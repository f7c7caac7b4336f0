//! The `analyze`, `correlate` and `compare` commands.

use std::collections::BTreeMap;

use commlex::stats::{centered_moving_average, collapse_by_mean};
use commlex::{
    align, analyze_corpus, dcor, load_corpus, load_series, pearson, uncertainty_records,
    uncertainty_series, yearly_mean, AlignRule, Datelike, DocumentAnalysis, MetricsRecord,
    NaiveDate,
};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};

/// Loads and analyzes every corpus, then groups the documents by source
/// label (sorted), each group in `(date, id)` order.
fn analyze_sources(
    config: &RunConfig,
) -> Result<BTreeMap<String, Vec<DocumentAnalysis>>, CliError> {
    let segmenter = config.segmenter()?;
    let mut by_source: BTreeMap<String, Vec<DocumentAnalysis>> = BTreeMap::new();
    for spec in &config.corpora {
        let corpus = load_corpus(&spec.path, spec.format, &spec.label).map_err(|source| {
            CliError::Corpus {
                label: spec.label.clone(),
                source,
            }
        })?;
        for analysis in analyze_corpus(&corpus, &segmenter, config.window)? {
            by_source
                .entry(analysis.source.clone())
                .or_default()
                .push(analysis);
        }
    }
    for docs in by_source.values_mut() {
        docs.sort_by(|a, b| {
            a.metrics
                .date
                .cmp(&b.metrics.date)
                .then_with(|| a.metrics.doc_id.cmp(&b.metrics.doc_id))
        });
    }
    Ok(by_source)
}

type MetricGetter = fn(&MetricsRecord) -> f64;

const TREND_COLUMNS: [(&str, MetricGetter); 7] = [
    ("ttr_trend", |m| m.ttr),
    ("mattr_trend", |m| m.mattr),
    ("flesch_re_trend", |m| m.flesch_re),
    ("fk_grade_trend", |m| m.fk_grade),
    ("mean_sentence_length_trend", |m| m.mean_sentence_length),
    ("syllables_per_word_trend", |m| m.syllables_per_word),
    ("uncertainty_rate_trend", |m| m.uncertainty_rate),
];

fn metric_cells(m: &MetricsRecord) -> Vec<Cell> {
    vec![
        m.doc_id.clone().into(),
        m.date.into(),
        m.word_count.into(),
        m.sentence_count.into(),
        m.syllable_count.into(),
        m.ttr.into(),
        m.mattr.into(),
        m.mattr_window.into(),
        m.flesch_re.into(),
        m.fk_grade.into(),
        m.mean_sentence_length.into(),
        m.syllables_per_word.into(),
        m.uncertainty_rate.into(),
    ]
}

/// One row per document, sorted by `(source, date, id)`. A leading
/// `source` column appears when more than one source is present; trend
/// columns are appended when `trend_k` is set.
pub fn cmd_analyze(config: &RunConfig) -> Result<Table, CliError> {
    config.validate()?;
    let lexicon = config.load_lexicon()?;
    let mut by_source = analyze_sources(config)?;
    for docs in by_source.values_mut() {
        uncertainty_records(docs, &lexicon)?;
    }

    let with_source = by_source.len() > 1;
    let mut columns: Vec<&str> = Vec::new();
    if with_source {
        columns.push("source");
    }
    columns.extend(MetricsRecord::FIELDS);
    if config.trend_k.is_some() {
        columns.extend(TREND_COLUMNS.iter().map(|(name, _)| *name));
    }
    let mut table = Table::new(columns);

    for (source, docs) in &by_source {
        let trends = match config.trend_k {
            Some(k) => TREND_COLUMNS
                .iter()
                .map(|(_, get)| {
                    let values: Vec<f64> = docs.iter().map(|d| get(&d.metrics)).collect();
                    centered_moving_average(&values, k)
                        .map_err(CliError::stats(format!("trend for source {source:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?,
            None => Vec::new(),
        };
        for (i, doc) in docs.iter().enumerate() {
            let mut row = Vec::with_capacity(table.columns.len());
            if with_source {
                row.push(source.clone().into());
            }
            row.extend(metric_cells(&doc.metrics));
            row.extend(trends.iter().map(|t| Cell::from(t[i])));
            table.push(row);
        }
    }
    Ok(table)
}

#[derive(Debug)]
pub struct CorrelateOutput {
    pub summary: Table,
    pub pairs: Table,
    /// Set when a coefficient could not be computed for some market; the
    /// tables are still complete and the command should exit nonzero.
    pub failure: Option<CliError>,
}

/// Correlates the uncertainty index of a single corpus with each market
/// series.
pub fn cmd_correlate(config: &RunConfig) -> Result<CorrelateOutput, CliError> {
    config.validate()?;
    if config.corpora.len() != 1 {
        return Err(CliError::Usage(
            "correlate takes exactly one --corpus".into(),
        ));
    }
    if config.markets.is_empty() {
        return Err(CliError::Usage(
            "correlate needs at least one --market".into(),
        ));
    }
    let lexicon = config.load_lexicon()?;
    let mut docs: Vec<DocumentAnalysis> =
        analyze_sources(config)?.into_values().flatten().collect();
    let metric = uncertainty_series(&mut docs, &lexicon)?;

    let mode = if config.diff { "diff" } else { "levels" };
    let staleness = match config.align {
        AlignRule::SameDay => None,
        AlignRule::LastOnOrBefore { max_staleness_days } => Some(max_staleness_days as usize),
    };

    let mut summary = Table::new([
        "market",
        "mode",
        "align",
        "max_staleness_days",
        "n",
        "pearson",
        "dcor",
        "lexicon",
        "lexicon_size",
    ]);
    let mut pairs = Table::new([
        "market",
        "date",
        "market_date",
        "uncertainty_rate",
        "market_value",
    ]);
    let mut failure = None;

    for spec in &config.markets {
        let market = load_series(&spec.path).map_err(|source| CliError::Series {
            label: spec.label.clone(),
            source,
        })?;
        let context = format!("market {:?}", spec.label);
        let mut pair =
            align(&metric, &market, config.align).map_err(CliError::stats(context.clone()))?;
        if config.diff {
            pair = pair
                .differenced()
                .map_err(CliError::stats(context.clone()))?;
        }
        let pearson = match pearson(&pair) {
            Ok(r) => Some(r),
            Err(e) => {
                failure.get_or_insert_with(|| CliError::stats(context.clone())(e));
                None
            }
        };
        summary.push(vec![
            spec.label.clone().into(),
            mode.into(),
            config.align.to_string().into(),
            staleness.into(),
            pair.len().into(),
            pearson.into(),
            dcor(&pair).into(),
            lexicon.name().into(),
            lexicon.len().into(),
        ]);
        for i in 0..pair.len() {
            pairs.push(vec![
                spec.label.clone().into(),
                pair.dates()[i].into(),
                pair.market_dates()[i].into(),
                pair.x()[i].into(),
                pair.y()[i].into(),
            ]);
        }
    }
    Ok(CorrelateOutput {
        summary,
        pairs,
        failure,
    })
}

const COMPARE_METRICS: [(&str, MetricGetter); 2] =
    [("fk_grade", |m| m.fk_grade), ("mattr", |m| m.mattr)];

/// Yearly means of FK grade and MATTR per source in long format.
pub fn cmd_compare(config: &RunConfig) -> Result<Table, CliError> {
    config.validate()?;
    let by_source = analyze_sources(config)?;
    if by_source.len() < 2 {
        return Err(CliError::Usage(format!(
            "compare needs at least two sources, found {}",
            by_source.len()
        )));
    }

    let mut columns = vec!["source", "year", "metric", "value"];
    if config.trend_k.is_some() {
        columns.push("trend");
    }
    let mut table = Table::new(columns);

    for (source, docs) in &by_source {
        // (year, metric index) -> (value, trend)
        let mut cells: BTreeMap<(i32, usize), (f64, Option<f64>)> = BTreeMap::new();
        for (mi, (_, get)) in COMPARE_METRICS.iter().enumerate() {
            let series = collapse_by_mean(docs.iter().map(|d| (d.metrics.date, get(&d.metrics))))
                .expect("metrics are finite");
            let yearly = yearly_mean(&series);
            let values: Vec<f64> = yearly.values().collect();
            let trend = match config.trend_k {
                Some(k) => Some(
                    centered_moving_average(&values, k)
                        .map_err(CliError::stats(format!("trend for source {source:?}")))?,
                ),
                None => None,
            };
            for (i, (date, value)) in yearly.points().iter().enumerate() {
                cells.insert((year_of(*date), mi), (*value, trend.as_ref().map(|t| t[i])));
            }
        }
        for ((year, mi), (value, trend)) in cells {
            let mut row: Vec<Cell> = vec![
                source.clone().into(),
                (year as u64).into(),
                COMPARE_METRICS[mi].0.into(),
                value.into(),
            ];
            if config.trend_k.is_some() {
                row.push(trend.into());
            }
            table.push(row);
        }
    }
    Ok(table)
}

fn year_of(date: NaiveDate) -> i32 {
    date.year()
}
