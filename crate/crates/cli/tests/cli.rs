use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_univsum"))
        .args(args)
        .env_remove("UNIVSUM_CATALOG_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

fn without_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn theta_tables() {
    assert_eq!(
        stdout(&run(&["theta", "1", "3", "--limit", "10"])).trim(),
        "1,1,0,1,0,0,1,0,0,0,1"
    );
    assert_eq!(
        stdout(&run(&["theta", "1", "1", "--limit", "9"])).trim(),
        "1,2,0,0,2,0,0,0,0,2"
    );
    assert_eq!(
        stdout(&run(&[
            "theta", "1", "2", "--limit", "7", "--format", "json"
        ]))
        .trim(),
        "[1,1,1,0,0,1,0,1]"
    );
    let csv = stdout(&run(&[
        "theta", "1", "1", "--limit", "2", "--format", "csv",
    ]));
    assert_eq!(csv, "n,coeff\n0,1\n1,2\n2,0\n");
}

#[test]
fn universal_and_exit_codes() {
    let ok = run(&[
        "universal",
        "8",
        "6",
        "4",
        "2",
        "4",
        "2",
        "--limit",
        "100000",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&[
        "universal",
        "8",
        "6",
        "4",
        "2",
        "4",
        "2",
        "--limit",
        "100000",
    ]);
    assert_eq!(v["rows"][0]["verdict"], "pass");
    assert_eq!(v["rows"][0]["gaps"], serde_json::json!([]));
    assert_eq!(v["rows"][0]["bound"], 100000);

    let squares = run(&["universal", "2", "0", "2", "0", "2", "0", "--limit", "100"]);
    assert_eq!(squares.status.code(), Some(1));
    let v = json(&["universal", "2", "0", "2", "0", "2", "0", "--limit", "100"]);
    let gaps: Vec<u64> = v["rows"][0]["gaps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_u64().unwrap())
        .collect();
    assert!(gaps.contains(&7) && gaps.contains(&28));

    assert_eq!(
        run(&["universal", "2", "1", "2", "0", "2", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["universal", "2", "0"]).status.code(), Some(2));
    assert_eq!(run(&["theta", "-1", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["identity", "verify", "no-such-id"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["universal", "2", "0", "2", "0", "2", "0", "--limit", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exceptional_set_of_an_almost_universal_sum() {
    let v = json(&[
        "exceptional",
        "2",
        "2",
        "6",
        "6",
        "3",
        "1",
        "--limit",
        "200000",
    ]);
    assert_eq!(v["rows"][0]["verdict"], "pass");
    assert_eq!(v["rows"][0]["gaps"], serde_json::json!([16]));
}

#[test]
fn identities() {
    let v = json(&["identity", "verify", "--all", "--limit", "3000"]);
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() >= 40);

    let v = json(&["identity", "dissect", "psi1-x2-f6.4"]);
    let tuples: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["tuple"].as_str().unwrap())
        .collect();
    assert_eq!(tuples, ["(10,2,6,2,4,2)", "(8,2,5,1,3,1)", "(8,6,5,1,3,1)"]);

    let v = json(&["identity", "transfer", "psi9-x1-x2", "--limit", "5000"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn reports() {
    let v = json(&["report", "triangular", "--limit", "20000"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1540);
    assert_eq!(v["failed"], 0);
    let universal: Vec<&str> = rows
        .iter()
        .filter(|r| r["gap_count"] == 0)
        .map(|r| r["tuple"].as_str().unwrap())
        .collect();
    assert_eq!(universal.len(), 7);
    assert!(rows
        .iter()
        .filter(|r| r["gap_count"] != 0)
        .all(|r| r["witness"].as_str().unwrap().parse::<u64>().unwrap() <= 20000));

    let v = json(&["report", "pentagonal", "--limit", "100000"]);
    assert_eq!(
        (v["passed"].as_u64(), v["failed"].as_u64()),
        (Some(20), Some(0))
    );
    let v = json(&["report", "dissection", "--limit", "100000"]);
    assert_eq!(
        (v["passed"].as_u64(), v["failed"].as_u64()),
        (Some(34), Some(0))
    );
    assert_eq!(json(&["report", "equiv"])["failed"], 0);
    assert_eq!(json(&["report", "lemmas", "--limit", "3000"])["failed"], 0);
    assert_eq!(
        json(&["report", "dickson", "--limit", "20000"])["failed"],
        0
    );
}

#[test]
fn equivalence_command() {
    let v = json(&["equiv", "(1,1),(1,1)", "(2,0),(2,2)"]);
    assert_eq!(v["rows"][0]["verdict"], "pass");
    assert_eq!(
        json(&["equiv", "(3,1),(1,1)", "(3,1),(1,1)"])["rows"][0]["verdict"],
        "pass"
    );
    let o = run(&["equiv", "(1,1),(1,1)", "(2,0),(2,0)"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        run(&["equiv", "(1,1),(1", "(2,0),(2,2)"]).status.code(),
        Some(2)
    );
}

#[test]
fn reports_are_deterministic() {
    let args = ["report", "forms", "--limit", "20000"];
    let a = without_time(json(&args));
    let b = without_time(json(&[&args[..], &["--jobs", "2"]].concat()));
    assert_eq!(a, b);
    assert_eq!(a["failed"], 0);
    let csv1 = stdout(&run(&[
        "report",
        "pentagonal",
        "--limit",
        "5000",
        "--format",
        "csv",
    ]));
    let csv2 = stdout(&run(&[
        "report",
        "pentagonal",
        "--limit",
        "5000",
        "--format",
        "csv",
    ]));
    assert_eq!(csv1, csv2);
    assert!(csv1.starts_with("claim,kind,subject,bound,verdict,"));
}

fn cached_report(dir: &Path) -> Value {
    let d = dir.to_str().unwrap();
    without_time(json(&[
        "report", "almost", "--limit", "30000", "--cache", d,
    ]))
}

#[test]
fn cache_matches_fresh_computation() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = without_time(json(&["report", "almost", "--limit", "30000"]));
    assert_eq!(cached_report(dir.path()), fresh);
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 20);
    assert_eq!(cached_report(dir.path()), fresh);

    for e in std::fs::read_dir(dir.path()).unwrap() {
        let p = e.unwrap().path();
        if p.extension().is_some_and(|x| x == "bin") {
            let mut bytes = std::fs::read(&p).unwrap();
            let last = bytes.len() - 8;
            bytes[last] ^= 0x40;
            std::fs::write(&p, bytes).unwrap();
        }
    }
    assert_eq!(cached_report(dir.path()), fresh);
}

#[test]
fn catalog_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let rec = r#"[{"id":"psi-only","k":2,"lhs":[[1,3]],"rhs":[{"m":1,"shift":0,"factors":[[6,10]]},{"m":1,"shift":1,"factors":[[2,14]]}],"source":"psi(q) split by 2"}]"#;
    std::fs::write(dir.path().join("identities.json"), rec).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_univsum"))
        .args(["identity", "verify", "--all", "--format", "json"])
        .env("UNIVSUM_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["identity"], "psi-only");

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"[{"form":[1,1,1],"residue_families":[[8,3]],"source":"wrong"}]"#,
    )
    .unwrap();
    let o = run(&[
        "report",
        "dickson",
        "--limit",
        "100",
        "--rules",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness=3"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&[
        "report",
        "equiv",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["command"], "report equiv");
}
