//! Series alignment, correlation and smoothing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use chrono::{Datelike, NaiveDate};
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{SeriesError, TimeSeries};

/// Maximum age of a market quote paired under [`AlignRule::LastOnOrBefore`].
pub const DEFAULT_MAX_STALENESS_DAYS: u32 = 7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("{0} series is empty")]
    EmptySeries(&'static str),
    #[error("only {n} aligned points; at least 2 are required")]
    InsufficientOverlap { n: usize },
    #[error("{margin} margin has zero variance")]
    Degenerate { margin: &'static str },
    #[error("margins differ in length ({x} vs {y})")]
    LengthMismatch { x: usize, y: usize },
    #[error("non-finite value at position {index}")]
    NonFinite { index: usize },
    #[error("dates must be strictly increasing (position {index})")]
    NotIncreasing { index: usize },
    #[error("window {k} must be odd and at most the series length {n}")]
    InvalidWindow { k: usize, n: usize },
}

impl StatsError {
    pub fn kind(&self) -> &'static str {
        match self {
            StatsError::EmptySeries(_) => "empty-input",
            StatsError::InsufficientOverlap { .. } => "insufficient-overlap",
            StatsError::Degenerate { .. } => "degenerate-input",
            StatsError::LengthMismatch { .. } => "length-mismatch",
            StatsError::NonFinite { .. } => "non-finite",
            StatsError::NotIncreasing { .. } => "out-of-order",
            StatsError::InvalidWindow { .. } => "invalid-window",
        }
    }
}

pub type Result<T> = std::result::Result<T, StatsError>;

/// How metric dates are matched to market quotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlignRule {
    SameDay,
    /// Latest quote on or before the metric date, at most
    /// `max_staleness_days` old.
    LastOnOrBefore {
        max_staleness_days: u32,
    },
}

impl Default for AlignRule {
    fn default() -> Self {
        AlignRule::LastOnOrBefore {
            max_staleness_days: DEFAULT_MAX_STALENESS_DAYS,
        }
    }
}

impl fmt::Display for AlignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlignRule::SameDay => f.write_str("same-day"),
            AlignRule::LastOnOrBefore { .. } => f.write_str("last-on-or-before"),
        }
    }
}

impl FromStr for AlignRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "same-day" => Ok(AlignRule::SameDay),
            "last-on-or-before" => Ok(AlignRule::default()),
            other => Err(format!(
                "unknown alignment rule {other:?} (expected same-day or last-on-or-before)"
            )),
        }
    }
}

/// Two equally long margins over strictly increasing dates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlignedPair {
    dates: Vec<NaiveDate>,
    /// Date of the market quote paired with each point.
    market_dates: Vec<NaiveDate>,
    x: Vec<f64>,
    y: Vec<f64>,
}

impl AlignedPair {
    pub fn new(dates: Vec<NaiveDate>, x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let market_dates = dates.clone();
        Self::with_market_dates(dates, market_dates, x, y)
    }

    fn with_market_dates(
        dates: Vec<NaiveDate>,
        market_dates: Vec<NaiveDate>,
        x: Vec<f64>,
        y: Vec<f64>,
    ) -> Result<Self> {
        if x.len() != y.len() || dates.len() != x.len() {
            return Err(StatsError::LengthMismatch {
                x: x.len(),
                y: y.len(),
            });
        }
        if x.len() < 2 {
            return Err(StatsError::InsufficientOverlap { n: x.len() });
        }
        if let Some(index) = x.iter().chain(&y).position(|v| !v.is_finite()) {
            return Err(StatsError::NonFinite {
                index: index % x.len(),
            });
        }
        if let Some(index) = dates.windows(2).position(|w| w[1] <= w[0]) {
            return Err(StatsError::NotIncreasing { index: index + 1 });
        }
        Ok(AlignedPair {
            dates,
            market_dates,
            x,
            y,
        })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn dates(&self) -> &[NaiveDate] {
        &self.dates
    }

    pub fn market_dates(&self) -> &[NaiveDate] {
        &self.market_dates
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    /// First differences of both margins, dated at the later point.
    pub fn differenced(&self) -> Result<AlignedPair> {
        let diff = |v: &[f64]| v.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>();
        Self::with_market_dates(
            self.dates[1..].to_vec(),
            self.market_dates[1..].to_vec(),
            diff(&self.x),
            diff(&self.y),
        )
    }

    /// Applies `f` to the metric margin.
    pub fn map_x(&self, f: impl Fn(f64) -> f64) -> Result<AlignedPair> {
        Self::with_market_dates(
            self.dates.clone(),
            self.market_dates.clone(),
            self.x.iter().map(|&v| f(v)).collect(),
            self.y.clone(),
        )
    }
}

/// Pairs each metric point with a market value. Metric dates without an
/// admissible quote are dropped.
pub fn align(metric: &TimeSeries, market: &TimeSeries, rule: AlignRule) -> Result<AlignedPair> {
    if metric.is_empty() {
        return Err(StatsError::EmptySeries("metric"));
    }
    if market.is_empty() {
        return Err(StatsError::EmptySeries("market"));
    }
    let mut dates = Vec::new();
    let mut market_dates = Vec::new();
    let mut x = Vec::new();
    let mut y = Vec::new();
    for &(date, value) in metric.points() {
        let quote = match rule {
            AlignRule::SameDay => market.get(date).map(|v| (date, v)),
            AlignRule::LastOnOrBefore { max_staleness_days } => market
                .last_on_or_before(date)
                .filter(|(d, _)| (date - *d).num_days() <= i64::from(max_staleness_days)),
        };
        if let Some((market_date, market_value)) = quote {
            dates.push(date);
            market_dates.push(market_date);
            x.push(value);
            y.push(market_value);
        }
    }
    if x.len() < 2 {
        return Err(StatsError::InsufficientOverlap { n: x.len() });
    }
    AlignedPair::with_market_dates(dates, market_dates, x, y)
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn is_constant(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

/// Sample Pearson correlation of two equally long slices.
pub fn pearson_slices(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(StatsError::InsufficientOverlap { n: x.len() });
    }
    if is_constant(x) {
        return Err(StatsError::Degenerate { margin: "x" });
    }
    if is_constant(y) {
        return Err(StatsError::Degenerate { margin: "y" });
    }
    let (mx, my) = (mean(x), mean(y));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        let dx = a - mx;
        let dy = b - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    Ok(sxy / (sxx.sqrt() * syy.sqrt()))
}

pub fn pearson(pair: &AlignedPair) -> Result<f64> {
    pearson_slices(&pair.x, &pair.y)
}

/// Row means of the pairwise distance matrix and its grand mean.
fn distance_means(v: &[f64]) -> (Vec<f64>, f64) {
    let n = v.len() as f64;
    let rows: Vec<f64> = v
        .iter()
        .map(|&a| v.iter().map(|&b| (a - b).abs()).sum::<f64>() / n)
        .collect();
    let grand = rows.iter().sum::<f64>() / n;
    (rows, grand)
}

/// Squared distance covariance and both squared distance variances
/// (biased V-statistics), in that order.
pub fn dcov2_slices(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len();
    let (rx, gx) = distance_means(x);
    let (ry, gy) = distance_means(y);
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for j in 0..n {
        for k in 0..n {
            let a = (x[j] - x[k]).abs() - rx[j] - rx[k] + gx;
            let b = (y[j] - y[k]).abs() - ry[j] - ry[k] + gy;
            sxy += a * b;
            sxx += a * a;
            syy += b * b;
        }
    }
    let nn = (n * n) as f64;
    (sxy / nn, sxx / nn, syy / nn)
}

/// Distance correlation of two equally long slices; 0 when either margin
/// has zero distance variance.
pub fn dcor_slices(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(StatsError::InsufficientOverlap { n: x.len() });
    }
    let (dcov2, dvar2_x, dvar2_y) = dcov2_slices(x, y);
    if dvar2_x <= 0.0 || dvar2_y <= 0.0 {
        return Ok(0.0);
    }
    // the V-statistic is non-negative; negatives are rounding residue
    let dcov2 = dcov2.max(0.0);
    Ok((dcov2 / (dvar2_x * dvar2_y).sqrt()).sqrt())
}

pub fn dcor(pair: &AlignedPair) -> f64 {
    dcor_slices(&pair.x, &pair.y).expect("aligned pair has equal margins with n >= 2")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationResult {
    pub n: usize,
    pub pearson: f64,
    pub dcor: f64,
}

/// Pearson and distance correlation of an aligned pair.
pub fn correlate(pair: &AlignedPair) -> Result<CorrelationResult> {
    Ok(CorrelationResult {
        n: pair.len(),
        pearson: pearson(pair)?,
        dcor: dcor(pair),
    })
}

/// Mean value per calendar year, dated December 31.
pub fn yearly_mean(series: &TimeSeries) -> TimeSeries {
    let mut years: BTreeMap<i32, (f64, usize)> = BTreeMap::new();
    for &(date, value) in series.points() {
        let entry = years.entry(date.year()).or_insert((0.0, 0));
        entry.0 += value;
        entry.1 += 1;
    }
    let points = years
        .into_iter()
        .map(|(year, (sum, count))| {
            (
                NaiveDate::from_ymd_opt(year, 12, 31).expect("Dec 31 exists"),
                sum / count as f64,
            )
        })
        .collect();
    TimeSeries::new(points).expect("one point per year in ascending order")
}

/// Centered `k`-point moving average. Near the ends the window shrinks
/// symmetrically, so the first and last values are kept as is.
pub fn centered_moving_average(values: &[f64], k: usize) -> Result<Vec<f64>> {
    let n = values.len();
    if k == 0 || k.is_multiple_of(2) || k > n {
        return Err(StatsError::InvalidWindow { k, n });
    }
    let half = k / 2;
    Ok((0..n)
        .map(|i| {
            let h = half.min(i).min(n - 1 - i);
            mean(&values[i - h..=i + h])
        })
        .collect())
}

pub fn moving_average(series: &TimeSeries, k: usize) -> Result<TimeSeries> {
    let values: Vec<f64> = series.values().collect();
    let smoothed = centered_moving_average(&values, k)?;
    Ok(TimeSeries::new(series.dates().zip(smoothed).collect())
        .expect("dates unchanged and means of finite values are finite"))
}

/// Builds a series from possibly repeated, unordered dates by averaging
/// the values that share a date.
pub fn collapse_by_mean(
    points: impl IntoIterator<Item = (NaiveDate, f64)>,
) -> std::result::Result<TimeSeries, SeriesError> {
    let mut by_date: BTreeMap<NaiveDate, (f64, usize)> = BTreeMap::new();
    for (date, value) in points {
        let entry = by_date.entry(date).or_insert((0.0, 0));
        entry.0 += value;
        entry.1 += 1;
    }
    TimeSeries::new(
        by_date
            .into_iter()
            .map(|(date, (sum, count))| (date, sum / count as f64))
            .collect(),
    )
}
