#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

pub fn commlex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commlex"))
        .args(args)
        .env_remove("COMMLEX_ABBREV")
        .output()
        .expect("spawn commlex")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

/// Runs a command that must succeed and returns its stdout.
pub fn ok(args: &[&str]) -> String {
    let out = commlex(args);
    assert!(
        out.status.success(),
        "commlex {args:?} failed: {}",
        stderr(&out)
    );
    stdout(&out)
}

/// Compares `actual` with a stored golden file. `UPDATE_GOLDEN=1`
/// rewrites the file instead.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = fixtures().join("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: {e} (run with UPDATE_GOLDEN=1)", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{name} differs from golden\n--- expected\n{expected}\n--- actual\n{actual}"
        ))
    }
}

/// Parses CSV text into a header and rows of string fields. Fixture
/// outputs never need quoting.
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let split = |l: &str| l.split(',').map(str::to_string).collect::<Vec<_>>();
    let header = split(lines.next().expect("header"));
    (header, lines.map(split).collect())
}

pub fn field<'a>(header: &[String], row: &'a [String], name: &str) -> &'a str {
    let i = header
        .iter()
        .position(|h| h == name)
        .unwrap_or_else(|| panic!("no column {name}"));
    &row[i]
}

/// The golden command set, keyed by golden file name.
pub fn golden_runs() -> Vec<(&'static str, Vec<String>)> {
    let corpus = format!("BoI={}", fixture("toy_corpus"));
    let lexicon = fixture("lexicon.txt");
    let market = format!("VIX={}", fixture("market.csv"));
    let strs = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        (
            "analyze.csv",
            strs(&["analyze", "--corpus", &corpus, "--lexicon", &lexicon]),
        ),
        (
            "analyze_trend.json",
            strs(&[
                "analyze",
                "--corpus",
                &corpus,
                "--lexicon",
                &lexicon,
                "--trend-k",
                "3",
                "--emit",
                "json",
            ]),
        ),
        (
            "correlate.csv",
            strs(&[
                "correlate",
                "--corpus",
                &corpus,
                "--lexicon",
                &lexicon,
                "--market",
                &market,
            ]),
        ),
        (
            "correlate_diff.csv",
            strs(&[
                "correlate",
                "--corpus",
                &corpus,
                "--lexicon",
                &lexicon,
                "--market",
                &market,
                "--diff",
            ]),
        ),
        (
            "compare.csv",
            strs(&[
                "compare",
                "--corpus",
                &corpus,
                "--corpus",
                &format!("Copy={}", fixture("toy_corpus")),
            ]),
        ),
    ]
}
