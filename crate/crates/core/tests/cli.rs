use std::process::Command;

fn qcalc(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcalc")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn algebra_suite_records() {
    let (code, out) = qcalc(&["verify-all", "--suites", "algebra", "--format", "records"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9);
    assert!(out.lines().all(|l| l.starts_with("algebra\trelations twoJ=") && l.ends_with("\tpass\t-")));
    assert_eq!(qcalc(&["verify-all", "--suites", "algebra", "--format", "records"]).1, out);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qcalc(&["verify-all", "--max-two-j", "1"]).0, 2);
    assert_eq!(qcalc(&["verify-all", "--suites", "algebra,bogus"]).0, 2);
    assert_eq!(qcalc(&["dump", "bogus"]).0, 2);
    assert_eq!(qcalc(&["dump", "cg", "1"]).0, 2);
    assert_eq!(qcalc(&["--format", "yaml", "structure-constants"]).0, 2);
}

#[test]
fn dump_matches_subcommand() {
    let (code, dumped) = qcalc(&["dump", "rmatrix", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(qcalc(&["rmatrix", "1", "1", "--format", "records"]).1, dumped);
    let v: serde_json::Value = serde_json::from_str(&dumped).unwrap();
    assert_eq!(v["r"].as_array().unwrap().len(), 4);
}

#[test]
fn structure_constants_text() {
    let (code, out) = qcalc(&["structure-constants"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.starts_with("c[")));
    assert!(!out.contains("c[0][0][0]"));
}
