use std::path::PathBuf;
use std::process::{Command, Output};

use lie_meet::cli::{Certificate, ReportRow, Verdict};
use lie_meet::obstruction::{Facts, HullSummary};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-meet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn verdict(args: &[&str]) -> Verdict {
    let out = bin(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_wedge_square() {
    let v = verdict(&["classify", "A", "3", "w2", "--json"]);
    assert!(v.intersection_nonempty && v.minuscule && v.classical);
    let Certificate::Witness(w) = &v.certificate else {
        panic!("expected a witness")
    };
    assert_eq!(w.wedge.as_ref().unwrap().j, 2);
    assert!(v.certificate.recheck());
}

#[test]
fn classify_adjoint_sl2() {
    let v = verdict(&["classify", "A", "1", "2", "--json"]);
    assert!(!v.intersection_nonempty);
    let Certificate::Obstruction(o) = &v.certificate else {
        panic!()
    };
    let Facts::RootString(f) = &o.facts else {
        panic!()
    };
    assert_eq!(f.s, 2);
    assert!(v.certificate.recheck());
}

#[test]
fn classify_e6_and_e7_round_trip() {
    let v = verdict(&["classify", "E", "6", "w6", "--json"]);
    assert!(v.minuscule && !v.intersection_nonempty);
    assert!(v.certificate.recheck());

    let v = verdict(&["classify", "E", "7", "w7", "--json"]);
    let Certificate::Obstruction(o) = &v.certificate else {
        panic!()
    };
    assert!(matches!(o.facts, Facts::E7Hyperplane(_)));
    assert!(v.certificate.recheck());
}

#[test]
fn tampered_certificate_fails_recheck() {
    let out = bin(&["classify", "C", "3", "w3", "--json"]);
    let mut json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    json["certificate"]["obstruction"]["facts"]["root_string"]["s"] = 3.into();
    let v: Verdict = serde_json::from_value(json).unwrap();
    assert!(!v.certificate.recheck());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bin(&["classify", "X", "3", "w1"]).status.code(), Some(2));
    assert_eq!(bin(&["classify", "A", "3", "w9"]).status.code(), Some(2));
    assert_eq!(
        bin(&["classify", "A", "3", "1,-1,0"]).status.code(),
        Some(2)
    );
    assert_eq!(bin(&["classify", "A", "9", "w1"]).status.code(), Some(2));
    assert_eq!(
        bin(&["classify", "E", "9", "w1", "--max-rank", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        bin(&["verify-all", "--only", "nothing"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bin(&["facets", "/nonexistent/points.txt"]).status.code(),
        Some(2)
    );
}

#[test]
fn max_rank_override() {
    let out = bin(&["classify", "A", "9", "w1", "--max-rank", "9"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_point_file_reports_line() {
    let path = scratch("bad_points.txt");
    std::fs::write(&path, "0 0\n1 0\n1/0 1\n").unwrap();
    let out = bin(&["facets", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn facet_histograms_of_fixtures() {
    let hist = |file: &str| {
        let out = bin(&["facets", &data(file), "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let h: HullSummary = serde_json::from_slice(&out.stdout).unwrap();
        h.histogram.into_iter().collect::<Vec<_>>()
    };
    assert_eq!(hist("square.txt"), vec![(2, 4)]);
    let e6 = hist("e6_27.txt");
    assert_eq!(e6.iter().map(|p| p.0).collect::<Vec<_>>(), vec![6, 10]);
    let e7 = hist("e7_56.txt");
    assert_eq!(e7.iter().map(|p| p.0).collect::<Vec<_>>(), vec![7, 12]);
}

#[test]
fn report_is_deterministic() {
    let a = bin(&["report"]);
    let b = bin(&["report"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let rows: Vec<ReportRow> = serde_json::from_slice(&bin(&["report", "--json"]).stdout).unwrap();
    let e8 = rows
        .iter()
        .filter(|r| r.type_label == lie_meet::rootsys::TypeLabel::E && r.rank == 8);
    assert!(e8.clone().count() == 8 && e8.clone().all(|r| !r.minuscule && r.s >= 2));
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("report.txt");
    let out = bin(&["report", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("ϖ"));
}

#[test]
fn verify_all_only_and_negative_control() {
    let out = bin(&[
        "verify-all",
        "--only",
        "e6",
        "--e6-fixture",
        &data("e6_27.txt"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("PASS e6"));

    let good = std::fs::read_to_string(data("e6_27.txt")).unwrap();
    let bad = good.replacen("1 0 0 0 0 1/3 1/3 -1/3", "1 0 0 0 1 1/3 1/3 -1/3", 1);
    assert_ne!(good, bad);
    let path = scratch("e6_corrupt.txt");
    std::fs::write(&path, bad).unwrap();
    let out = bin(&[
        "verify-all",
        "--only",
        "e6",
        "--e6-fixture",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("FAIL e6"));
}
