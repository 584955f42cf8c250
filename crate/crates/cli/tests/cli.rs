use std::process::{Command, Output};

use stablemap::qfield::UPoly;
use stablemap::solver::ClassTable;
use stablemap::target::TargetSpace;

fn stablemap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stablemap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = stablemap(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn table(args: &[&str]) -> ClassTable {
    ClassTable::from_json(&ok(args)).unwrap()
}

#[test]
fn compute_known_classes() {
    let t = table(&["compute", "--target", "point", "--kmax", "5"]);
    assert_eq!(t.get(5, &[0]), Some(&UPoly::from_i64s(&[1, 5, 1])));
    let t = table(&["compute", "--target", "pn:1", "--kmax", "0", "--dmax", "1"]);
    assert_eq!(t.get(0, &[1]), Some(&UPoly::one()));
    let t = table(&["compute", "--target", "pn:3", "--kmax", "0", "--dmax", "1"]);
    assert_eq!(t.get(0, &[1]), Some(&UPoly::from_i64s(&[1, 1, 2, 1, 1])));
}

#[test]
fn compute_csv_has_both_conventions() {
    let csv = ok(&["compute", "--target", "point", "--kmax", "5", "--format", "csv"]);
    assert!(csv.starts_with("k,beta,coeffs,u,q,chi\n"));
    assert!(csv.contains("5,0,\"[1,5,1]\",u^2 + 5*u + 1,q^4 + 5*q^2 + 1,7\n"));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let doc = ok(&["compute", "--target", "pn:2", "--kmax", "3", "--dmax", "2"]);
    assert_eq!(ClassTable::from_json(&doc).unwrap().to_json(), doc);
}

#[test]
fn out_file_and_worker_counts_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oracle.json");
    let p = path.to_str().unwrap();
    let base = ["oracle", "--target", "pn:1", "--kmax", "4", "--dmax", "2"];
    let one = ok(&[&base[..], &["--workers", "1"]].concat());
    let four = ok(&[&base[..], &["--workers", "4"]].concat());
    assert_eq!(one, four);
    let quiet = ok(&[&base[..], &["--out", p]].concat());
    assert!(quiet.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), one);
}

#[test]
fn file_target_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p1.json");
    let w = TargetSpace::projective_space(1).unwrap();
    std::fs::write(&path, w.to_json(&[2]).unwrap()).unwrap();
    let spec = format!("file:{}", path.display());
    let from_file = ok(&["compute", "--target", &spec, "--kmax", "3", "--dmax", "2"]);
    let builtin = ok(&["compute", "--target", "pn:1", "--kmax", "3", "--dmax", "2"]);
    assert_eq!(from_file, builtin);

    // The file only carries classes up to degree 2.
    let o = stablemap(&["compute", "--target", &spec, "--kmax", "3", "--dmax", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let out = ok(&["verify", "--suite", "oracle", "--target", "pn:1", "--kmax", "4", "--dmax", "2"]);
    assert!(out.starts_with("PASS oracle"));
    let summary = out.split_once('\n').unwrap().1;
    let v: serde_json::Value = serde_json::from_str(summary).unwrap();
    assert_eq!(v["passed"], true);

    let out = ok(&["verify", "--suite", "ffcount", "--n", "1", "--dmaxff", "2", "--primes", "2,3,5"]);
    assert!(out.starts_with("PASS ffcount"));
    let out = ok(&["verify", "--suite", "ode", "--target", "point", "--kmax", "6"]);
    assert!(out.starts_with("PASS ode"));
    let out = ok(&[
        "verify", "--suite", "dt,potential,recurrence,chi", "--target", "pn:2", "--kmax", "3", "--dmax", "2",
    ]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 4);
}

#[test]
fn verify_failure_exits_one() {
    // At this truncation the z-series has not converged at z = 0.01.
    let o = stablemap(&["verify", "--suite", "implicit", "--target", "pn:1", "--kmax", "4", "--dmax", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL implicit"));
    let o = stablemap(&["verify", "--suite", "implicit", "--target", "point", "--kmax", "10"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn euler_table() {
    let csv = ok(&["euler", "--target", "pn:1", "--kmax", "4", "--dmax", "2", "--format", "csv"]);
    assert!(csv.lines().any(|l| l == "4,0,4"));
    let json = ok(&["euler", "--target", "point", "--kmax", "5"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let chis: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["chi"].as_str().unwrap()).collect();
    assert_eq!(chis, ["0", "0", "0", "1", "2", "7"]);
}

#[test]
fn trees_and_counts() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["trees", "--vmax", "5"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
    let csv = ok(&["trees", "--vmax", "5", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 9);

    let v: serde_json::Value = serde_json::from_str(&ok(&["count-ff", "--n", "2", "--d", "1", "--p", "3"])).unwrap();
    assert_eq!(v["count"], 312);
    assert_eq!(v["class_at_p"], "312");
}

#[test]
fn usage_and_data_errors_exit_two() {
    for args in [
        &["compute", "--target", "bogus"][..],
        &["compute", "--target", "pn:1", "--dmax", "1,2"],
        &["compute", "--workers", "0"],
        &["compute", "--target", "file:/nonexistent/target.json"],
        &["count-ff", "--n", "1", "--d", "1", "--p", "4"],
        &["verify", "--suite", "nonsense"],
        &["frobnicate"],
        &[],
    ] {
        let o = stablemap(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}
