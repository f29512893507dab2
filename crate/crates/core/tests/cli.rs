use std::process::{Command, Output};

fn sorklie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sorklie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sork_e8() {
    let o = sorklie(&["sork", "E8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "sork(E8) = 8\n");
}

#[test]
fn nu_so71() {
    let o = sorklie(&["nu", "so(7,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "nu = 3\n");
}

#[test]
fn syntax_error_exit_code() {
    let o = sorklie(&["nu", "so(3,5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 7"));
}

#[test]
fn usage_error_exit_code() {
    let o = sorklie(&["sork"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(
        sorklie(&["verify-tables", "--nope"]).status.code(),
        Some(64)
    );
}

#[test]
fn verify_commands_pass() {
    let o = sorklie(&["verify-tables", "--rank-cap", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let o = sorklie(&["verify-kronecker", "--max-size", "3", "--samples", "50"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn certify_round_trip() {
    let o = sorklie(&["sork", "F4", "--certificate", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let cert = v["certificate"].clone();
    assert_eq!(cert["n"], 4);

    let dir = std::env::temp_dir().join(format!("sorklie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, cert.to_string()).unwrap();
    let o = sorklie(&["certify", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(maximum)"));

    let mut reversed = cert.clone();
    reversed["roots"].as_array_mut().unwrap().reverse();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, reversed.to_string()).unwrap();
    let o = sorklie(&["certify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "invalid: NotCanonical\n");

    let o = sorklie(&["certify", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dump_roots_schema() {
    let o = sorklie(&["dump-roots", "G2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], "G2");
    assert_eq!(v["ambient_dim"], 3);
    assert_eq!(v["doubled_coords"].as_array().unwrap().len(), 12);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["sork", "E7", "--certificate"][..],
        &["nu", "--json", "--certificate", "so(3,5) x E6(-26)"],
        &["verify-tables", "--json"],
    ] {
        assert_eq!(sorklie(args).stdout, sorklie(args).stdout, "{args:?}");
    }
}
