use std::process::{Command, Output};

use hgnum::Rational;
use hgnum_cli::OutputRecord;

fn hgnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgnum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_records(text: &str) -> Vec<OutputRecord> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(Result::unwrap)
        .collect()
}

#[test]
fn compute_all_methods_agree() {
    let o = hgnum(&[
        "compute", "--family", "hg-euler", "--N", "2", "--max-n", "8", "--method", "all",
        "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let records = csv_records(&stdout(&o));
    for n in (0..=8).step_by(2) {
        let at_n: Vec<&OutputRecord> = records.iter().filter(|r| r.n == n).collect();
        assert_eq!(at_n.len(), 6, "n = {n}");
        assert!(at_n.iter().all(|r| r.value == at_n[0].value));
    }
    let four = records.iter().find(|r| r.n == 4).unwrap();
    assert_eq!(four.value, Rational::new(13, 1050));
}

#[test]
fn csv_and_json_carry_identical_values() {
    let base = [
        "compute",
        "--family",
        "comp-hg-euler",
        "--N",
        "3",
        "--max-n",
        "12",
        "--method",
        "all",
    ];
    let csv_out = hgnum(&[&base[..], &["--format", "csv"]].concat());
    let json_out = hgnum(&[&base[..], &["--format", "json"]].concat());
    let from_csv = csv_records(&stdout(&csv_out));
    let from_json: Vec<OutputRecord> = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(from_csv, from_json);
    let raw: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    for (rec, v) in from_json.iter().zip(raw.as_array().unwrap()) {
        let s = v["value"].as_str().unwrap();
        assert_eq!(s.parse::<Rational>().unwrap(), rec.value);
        assert_eq!(s, rec.value.to_string());
    }
}

#[test]
fn compute_examples() {
    let o = hgnum(&[
        "compute", "--family", "hg-euler", "--N", "0", "--max-n", "0",
    ]);
    assert_eq!(
        stdout(&o),
        "family,N,n,method,value\nhg-euler,0,0,recurrence,1/1\n"
    );
    let o = hgnum(&[
        "compute",
        "--family",
        "comp-hg-euler",
        "--N",
        "0",
        "--max-n",
        "4",
        "--method",
        "series",
        "--format",
        "json",
    ]);
    let recs: Vec<OutputRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<String> = recs.iter().map(|r| r.value.to_string()).collect();
    assert_eq!(values, ["1/1", "0/1", "-1/3", "0/1", "7/15"]);
}

#[test]
fn bernoulli_and_cauchy_families() {
    let o = hgnum(&[
        "compute",
        "--family",
        "hg-bernoulli",
        "--N",
        "1",
        "--max-n",
        "4",
        "--method",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let recs = csv_records(&stdout(&o));
    assert!(recs
        .iter()
        .all(|r| ["recurrence", "series", "det", "trudi"].contains(&r.method.as_str())));
    let b4: Vec<&OutputRecord> = recs.iter().filter(|r| r.n == 4).collect();
    assert_eq!(b4.len(), 4);
    assert!(b4.iter().all(|r| r.value == Rational::new(-1, 30)));
    let o = hgnum(&[
        "compute",
        "--family",
        "hg-cauchy",
        "--N",
        "1",
        "--max-n",
        "2",
        "--method",
        "det",
    ]);
    let recs = csv_records(&stdout(&o));
    assert_eq!(recs[2].value, Rational::new(-1, 6));
}

#[test]
fn invalid_requests_exit_2() {
    for args in [
        &[
            "compute",
            "--family",
            "hg-bernoulli",
            "--N",
            "0",
            "--max-n",
            "4",
        ][..],
        &[
            "compute", "--family", "hg-euler", "--N", "1", "--max-n", "40", "--method", "explicit",
        ],
        &[
            "compute", "--family", "hg-euler", "--N", "1", "--max-n", "4", "--method", "magic",
        ],
        &["verify", "--suite", "sumprod", "--N", "0"],
        &["verify", "--suite", "unknown"],
    ] {
        assert_eq!(hgnum(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table1_reproduces_reference() {
    let o = hgnum(&["table1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("\t558599021/126395447928750\t"));
    assert!(text.lines().nth(7).unwrap().starts_with("6\t1/1\t-1/91\t"));
}

#[test]
fn verify_named_suites() {
    for args in [
        &["verify", "--suite", "tangent", "--max-n", "8"][..],
        &["verify", "--suite", "e1-bernoulli", "--max-n", "60"],
        &["verify", "--suite", "sumprod", "--N", "2", "--max-n", "12"],
    ] {
        let o = hgnum(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn verify_all_defaults_pass() {
    let o = hgnum(&["verify"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert!(reports.len() > 100);
    assert!(reports.iter().all(|r| r["passed"] == true));
}

#[test]
fn out_flag_and_thread_cap() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e1.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_hgnum"))
        .args([
            "compute", "--family", "hg-euler", "--N", "1", "--max-n", "6", "--method", "all",
            "--out",
        ])
        .arg(&path)
        .env("HGNUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let recs = csv_records(&std::fs::read_to_string(&path).unwrap());
    assert!(recs
        .iter()
        .any(|r| r.n == 6 && r.value == Rational::new(-5, 42)));
    let o = Command::new(env!("CARGO_BIN_EXE_hgnum"))
        .args(["table1"])
        .env("HGNUM_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
