//! Synthetic inputs shared by the benchmarks.

use commlex::{Document, NaiveDate};

const SENTENCES: &[&str] = &[
    "The Monetary Committee decided to leave the interest rate unchanged at 0.1 percent.",
    "Inflation over the past twelve months was 0.5 percent, below the target range.",
    "Risks to the outlook include volatility in global markets and uncertainty about trade.",
    "Housing prices continued to rise; mortgage volume remained high.",
    "The shekel appreciated by 2.3 percent against the dollar, e.g. after strong exports.",
    "Forecasts by the Research Department indicate moderate growth in 2018 and 2019.",
];

/// A document of roughly `words` words built from announcement-like sentences.
pub fn announcement(words: usize) -> Document {
    let mut text = String::new();
    let mut count = 0;
    for sentence in SENTENCES.iter().cycle() {
        if count >= words {
            break;
        }
        text.push_str(sentence);
        text.push(' ');
        count += sentence.split_whitespace().count();
    }
    Document {
        id: "bench".into(),
        date: NaiveDate::from_ymd_opt(2017, 1, 23).expect("valid date"),
        source: "BoI".into(),
        text,
    }
}
