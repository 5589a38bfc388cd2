use std::process::{Command, Output};

use serde_json::Value;

fn kn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kn")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = kn(args);
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn exit_codes() {
    assert_eq!(kn(&["verify-jacobi", "--family", "witt"]).status.code(), Some(0));
    assert_eq!(kn(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(kn(&["verify-jacobi", "--family", "no-such-family"]).status.code(), Some(2));
    assert_eq!(kn(&["bracket", "--family", "witt", "--n", "1"]).status.code(), Some(2));
    // the printed L1 coboundary is refuted, so the check fails
    assert_eq!(kn(&["cohomology", "check", "--algebra", "l1", "--cocycle", "l1-phi-printed"]).status.code(), Some(1));
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["verify-geometry", "--family", "elliptic", "--samples", "3"];
    let (a, b) = (kn(&args), kn(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = kn(&["--seed", "1", "verify-geometry", "--family", "elliptic", "--samples", "3"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn elliptic_bracket() {
    let v = json(&["bracket", "--family", "elliptic", "--n", "2", "--m", "4"]);
    let terms = v["checks"][0]["detail"]["element"].as_array().expect("element");
    assert_eq!(terms.len(), 3);
}

#[test]
fn goncharova_table() {
    let v = json(&["cohomology", "goncharova", "--qmax", "3", "--smax", "20"]);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    for (q, c) in (1i64..).zip(checks) {
        assert_eq!(c["status"], "PASS");
        let dims = c["detail"]["dims"].as_array().unwrap();
        for (s, d) in (1i64..).zip(dims) {
            let hit = 2 * s == 3 * q * q + q || 2 * s == 3 * q * q - q;
            assert_eq!(d.as_i64(), Some(hit as i64), "q={q} s={s}");
        }
    }
}

#[test]
fn three_point_locality() {
    let v = json(&["central", "locality", "--family", "three-point"]);
    assert_eq!(v["checks"][0]["status"], "PASS");
    assert_eq!(v["checks"][0]["detail"]["M"], -2);
}

#[test]
fn timings_only_on_request() {
    let plain = json(&["cohomology", "goncharova"]);
    assert!(plain.get("timings").is_none());
    let timed = json(&["--timings", "cohomology", "goncharova"]);
    assert!(timed.get("timings").is_some());
}
