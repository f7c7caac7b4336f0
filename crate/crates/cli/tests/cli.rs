mod common;

use std::fs;

use common::*;

fn corpus_arg() -> String {
    format!("BoI={}", fixture("toy_corpus"))
}

#[test]
fn golden_outputs() {
    let failures: Vec<String> = golden_runs()
        .into_iter()
        .filter_map(|(name, args)| {
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            check_golden(name, &ok(&args)).err()
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn correlate_matches_python_oracle() {
    let oracle: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(fixtures().join("toy_oracle.json")).unwrap())
            .unwrap();
    let text = ok(&[
        "correlate",
        "--corpus",
        &corpus_arg(),
        "--lexicon",
        &fixture("lexicon.txt"),
        "--market",
        &format!("VIX={}", fixture("market.csv")),
    ]);
    let (header, rows) = parse_csv(&text);
    assert_eq!(rows.len(), 1);
    let get = |name| field(&header, &rows[0], name).parse::<f64>().unwrap();
    assert_eq!(get("n"), oracle["n"].as_f64().unwrap());
    assert!((get("pearson") - oracle["pearson"].as_f64().unwrap()).abs() < 1e-12);
    assert!((get("dcor") - oracle["dcor"].as_f64().unwrap()).abs() < 1e-12);

    let (header, rows) = parse_csv(&ok(&[
        "correlate",
        "--corpus",
        &corpus_arg(),
        "--lexicon",
        &fixture("lexicon.txt"),
        "--market",
        &format!("VIX={}", fixture("market.csv")),
        "--diff",
    ]));
    let get = |name| field(&header, &rows[0], name).parse::<f64>().unwrap();
    assert_eq!(get("n"), 4.0);
    assert!((get("pearson") - oracle["diff_pearson"].as_f64().unwrap()).abs() < 1e-12);
    assert!((get("dcor") - oracle["diff_dcor"].as_f64().unwrap()).abs() < 1e-12);

    let analyzed = ok(&[
        "analyze",
        "--corpus",
        &corpus_arg(),
        "--lexicon",
        &fixture("lexicon.txt"),
    ]);
    let (header, rows) = parse_csv(&analyzed);
    for (row, doc) in rows.iter().zip(oracle["documents"].as_array().unwrap()) {
        assert_eq!(field(&header, row, "date"), doc["date"].as_str().unwrap());
        assert_eq!(
            field(&header, row, "word_count").parse::<u64>().unwrap(),
            doc["words"].as_u64().unwrap()
        );
        let rate: f64 = field(&header, row, "uncertainty_rate").parse().unwrap();
        assert!((rate - doc["rate"].as_f64().unwrap()).abs() < 1e-12);
    }
}

#[test]
fn pairs_file_defaults_next_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corr.csv");
    ok(&[
        "correlate",
        "--corpus",
        &corpus_arg(),
        "--lexicon",
        &fixture("lexicon.txt"),
        "--market",
        &format!("VIX={}", fixture("market.csv")),
        "--out",
        out.to_str().unwrap(),
    ]);
    let pairs = fs::read_to_string(dir.path().join("corr.pairs.csv")).unwrap();
    check_golden("correlate.pairs.csv", &pairs).unwrap();
    let (header, rows) = parse_csv(&pairs);
    assert_eq!(rows.len(), 5);
    for row in &rows {
        assert_eq!(
            field(&header, row, "date"),
            field(&header, row, "market_date")
        );
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "analyze",
        "--corpus",
        &corpus_arg(),
        "--trend-k",
        "5",
        "--emit",
        "json",
    ];
    let first = ok(&args);
    for _ in 0..3 {
        assert_eq!(ok(&args), first);
    }
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.json");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", out.to_str().unwrap()]);
    assert_eq!(ok(&with_out), "");
    assert_eq!(fs::read_to_string(out).unwrap(), first);
}

#[test]
fn three_documents_give_three_rows_of_thirteen_columns() {
    let dir = tempfile::tempdir().unwrap();
    for (date, text) in [
        ("2019-01-07", "Rates held. Risk rose."),
        ("2019-02-25", "The Committee kept the rate unchanged."),
        (
            "2019-04-08",
            "Inflation is low. Growth is solid. Uncertainty remains.",
        ),
    ] {
        fs::write(dir.path().join(format!("{date}.txt")), text).unwrap();
    }
    let text = ok(&["analyze", "--corpus", dir.path().to_str().unwrap()]);
    let (header, rows) = parse_csv(&text);
    assert_eq!(header.len(), 13);
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.len() == 13));
    assert_eq!(field(&header, &rows[0], "word_count"), "4");
    assert_eq!(field(&header, &rows[0], "sentence_count"), "2");
}

#[test]
fn json_and_csv_agree() {
    let csv = ok(&["analyze", "--corpus", &corpus_arg()]);
    let json = ok(&["analyze", "--corpus", &corpus_arg(), "--emit", "json"]);
    let parsed: Vec<serde_json::Map<String, serde_json::Value>> =
        serde_json::from_str(&json).unwrap();
    let (header, rows) = parse_csv(&csv);
    assert_eq!(parsed.len(), rows.len());
    let first = json.lines().nth(1).unwrap();
    let positions: Vec<usize> = header
        .iter()
        .map(|h| first.find(&format!("\"{h}\":")).unwrap())
        .collect();
    assert!(
        positions.windows(2).all(|w| w[0] < w[1]),
        "keys out of column order"
    );
    for (obj, row) in parsed.iter().zip(&rows) {
        assert_eq!(obj.len(), header.len());
        let fk: f64 = field(&header, row, "fk_grade").parse().unwrap();
        assert_eq!(obj["fk_grade"].as_f64().unwrap(), fk);
    }
}

#[test]
fn empty_document_fails_naming_it() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("2019-01-07.txt"), "Rates held.").unwrap();
    fs::write(dir.path().join("2019-02-25.txt"), "12.5 3.0 ...").unwrap();
    let out = commlex(&["analyze", "--corpus", dir.path().to_str().unwrap()]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.starts_with("error:empty-document:"), "{err}");
    assert!(err.contains("2019-02-25"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn error_prefixes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad");
    fs::create_dir(&bad).unwrap();
    fs::write(bad.join("2019-13-01.txt"), "Text.").unwrap();
    let far_market = dir.path().join("far.csv");
    fs::write(&far_market, "date,value\n2001-01-02,20\n2001-01-03,21\n").unwrap();
    let broken_market = dir.path().join("broken.csv");
    fs::write(&broken_market, "date,value\n2017-01-23,abc\n").unwrap();

    let cases: Vec<(Vec<String>, &str, i32)> = vec![
        (vec!["analyze".into()], "usage", 2),
        (
            vec![
                "analyze".into(),
                "--corpus".into(),
                "/no/such/dir".into(),
                "--format".into(),
                "dir".into(),
            ],
            "usage",
            2,
        ),
        (
            vec![
                "analyze".into(),
                "--corpus".into(),
                corpus_arg(),
                "--trend-k".into(),
                "4".into(),
            ],
            "usage",
            2,
        ),
        (
            vec![
                "analyze".into(),
                "--corpus".into(),
                corpus_arg(),
                "--trend-k".into(),
                "7".into(),
            ],
            "invalid-window",
            1,
        ),
        (
            vec![
                "analyze".into(),
                "--corpus".into(),
                bad.display().to_string(),
            ],
            "malformed-date",
            1,
        ),
        (
            vec!["compare".into(), "--corpus".into(), corpus_arg()],
            "usage",
            2,
        ),
        (
            vec![
                "correlate".into(),
                "--corpus".into(),
                corpus_arg(),
                "--market".into(),
                far_market.display().to_string(),
            ],
            "insufficient-overlap",
            1,
        ),
        (
            vec![
                "correlate".into(),
                "--corpus".into(),
                corpus_arg(),
                "--market".into(),
                broken_market.display().to_string(),
            ],
            "parse",
            1,
        ),
        (
            vec![
                "correlate".into(),
                "--corpus".into(),
                corpus_arg(),
                "--corpus".into(),
                format!("Other={}", fixture("toy_corpus")),
                "--market".into(),
                fixture("market.csv"),
            ],
            "usage",
            2,
        ),
    ];
    for (args, kind, code) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = commlex(&args);
        let err = stderr(&out);
        assert!(
            err.starts_with(&format!("error:{kind}:")),
            "{args:?}: expected {kind}, got {err}"
        );
        assert_eq!(out.status.code(), Some(code), "{args:?}");
    }
}

#[test]
fn self_correlation_is_one() {
    let analyzed = ok(&["analyze", "--corpus", &corpus_arg()]);
    let (header, rows) = parse_csv(&analyzed);
    let dir = tempfile::tempdir().unwrap();
    let market = dir.path().join("self.csv");
    let mut text = String::from("date,value\n");
    for row in &rows {
        text.push_str(&format!(
            "{},{}\n",
            field(&header, row, "date"),
            field(&header, row, "uncertainty_rate")
        ));
    }
    fs::write(&market, text).unwrap();

    let (header, rows) = parse_csv(&ok(&[
        "correlate",
        "--corpus",
        &corpus_arg(),
        "--market",
        market.to_str().unwrap(),
        "--align",
        "same-day",
    ]));
    let get = |name| field(&header, &rows[0], name).parse::<f64>().unwrap();
    assert!((get("pearson") - 1.0).abs() < 1e-12);
    assert!((get("dcor") - 1.0).abs() < 1e-12);
    assert_eq!(field(&header, &rows[0], "max_staleness_days"), "");
}

#[test]
fn constant_market_is_degenerate_but_still_reported() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("corr.csv");
    let out = commlex(&[
        "correlate",
        "--corpus",
        &corpus_arg(),
        "--market",
        &format!("Flat={}", fixture("flat_market.csv")),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error:degenerate-input:"));
    let (header, rows) = parse_csv(&fs::read_to_string(out_path).unwrap());
    assert_eq!(field(&header, &rows[0], "pearson"), "");
    assert_eq!(field(&header, &rows[0], "dcor"), "0");
    assert!(dir.path().join("corr.pairs.csv").exists());
}

#[test]
fn compare_of_identical_corpora_is_identical() {
    let text = ok(&[
        "compare",
        "--corpus",
        &corpus_arg(),
        "--corpus",
        &format!("Copy={}", fixture("toy_corpus")),
        "--trend-k",
        "1",
    ]);
    let (header, rows) = parse_csv(&text);
    assert_eq!(header, ["source", "year", "metric", "value", "trend"]);
    let (a, b): (Vec<_>, Vec<_>) = rows.iter().partition(|r| r[0] == "BoI");
    assert_eq!(a.len(), 4);
    assert_eq!(a.len(), b.len());
    for (ra, rb) in a.iter().zip(&b) {
        assert_eq!(ra[1..], rb[1..]);
        assert_eq!(ra[3], ra[4]);
    }
    assert_eq!(
        rows.iter()
            .map(|r| r[2].as_str())
            .take(2)
            .collect::<Vec<_>>(),
        ["fk_grade", "mattr"]
    );
}

#[test]
fn analyze_adds_source_column_for_multiple_corpora() {
    let text = ok(&[
        "analyze",
        "--corpus",
        &corpus_arg(),
        "--corpus",
        &format!("Copy={}", fixture("toy_corpus")),
    ]);
    let (header, rows) = parse_csv(&text);
    assert_eq!(header[0], "source");
    assert_eq!(header.len(), 14);
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0][0], "BoI");
    assert_eq!(rows[5][0], "Copy");
}

#[test]
fn abbreviation_file_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("2019-01-07.txt"),
        "Growth is slow, e.g. in Europe. Rates held.",
    )
    .unwrap();
    let lists = tempfile::tempdir().unwrap();
    let abbrev = lists.path().join("abbrev.txt");
    fs::write(&abbrev, "# none that matter\nvs\n").unwrap();
    let corpus = dir.path().display().to_string();

    let default = ok(&["analyze", "--corpus", &corpus]);
    let (header, rows) = parse_csv(&default);
    assert_eq!(field(&header, &rows[0], "sentence_count"), "2");

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_commlex"))
        .args(["analyze", "--corpus", &corpus])
        .env("COMMLEX_ABBREV", &abbrev)
        .output()
        .unwrap();
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(field(&header, &rows[0], "sentence_count"), "3");
}
