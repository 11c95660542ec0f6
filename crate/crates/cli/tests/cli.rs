use std::process::{Command, Output};

use serde_json::Value;

fn sieve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sieve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = sieve(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).expect("valid JSON")
}

fn assert_decomposition_schema(v: &Value) {
    assert!(v["m"].is_u64());
    let verdict = v["verdict"].as_str().unwrap();
    assert!(["NotPreCsp", "PreCsp", "Csp"].contains(&verdict));
    match v.get("a") {
        None => assert_eq!(verdict, "NotPreCsp"),
        Some(a) => {
            let keys: Vec<u64> = a.as_object().unwrap().keys().map(|k| k.parse().unwrap()).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "divisor keys ascending");
            assert!(keys.iter().all(|d| v["m"].as_u64().unwrap().is_multiple_of(*d)));
            assert!(a.as_object().unwrap().values().all(Value::is_i64));
        }
    }
}

#[test]
fn analyze_reports_nine_fold_congruence() {
    let v = json(&[
        "analyze",
        "--shape",
        "27,27,18,9/18,9",
        "--vars",
        "4",
        "--mod",
        "9",
        "--json",
    ]);
    assert_eq!(v["decomposition"]["a"]["9"].as_i64(), Some(54665112));
    assert_eq!(v["decomposition"]["a"]["3"].as_i64(), Some(-3));
    assert_eq!(v["decomposition"]["verdict"], "PreCsp");
    assert_decomposition_schema(&v["decomposition"]);
    assert_eq!(v["shape"], "27,27,18,9/18,9");
    assert!(v["hypotheses"]["rows_divisible_vars_multiple"].is_boolean());
    assert!(v["hypotheses"]["border_strip_rows_divisible"].is_boolean());
    assert!(v.get("orbit_counts").is_none());
}

#[test]
fn analyze_csp_has_orbit_counts() {
    let v = json(&[
        "analyze",
        "--shape",
        "12,12,4/8,4",
        "--vars",
        "6",
        "--mod",
        "4",
        "--json",
        "--full",
    ]);
    assert_eq!(v["orbit_counts"]["4"].as_i64(), Some(1576440));
    assert_eq!(v["cardinality"].as_i64(), Some(12 + 2 * 264 + 4 * 1576440));
}

#[test]
fn shifted_analysis_is_a_bare_decomposition() {
    let v = json(&[
        "analyze",
        "--shape",
        "27,27,18,9/18,9",
        "--vars",
        "4",
        "--mod",
        "9",
        "--shift",
        "1",
        "--json",
    ]);
    assert_eq!(v["verdict"], "NotPreCsp");
    assert_decomposition_schema(&v);
}

#[test]
fn specialize_text_and_decomposition() {
    let out = sieve(&["specialize", "--shape", "2,1", "--vars", "3"]);
    assert_eq!(stdout(&out), "q + 2*q^2 + 2*q^3 + 2*q^4 + q^5\n");
    let v = json(&["specialize", "--shape", "2,1", "--vars", "3", "--mod", "3"]);
    assert_decomposition_schema(&v);
    assert_eq!(v["verdict"], "PreCsp");
    assert_eq!(v["a"]["1"].as_i64(), Some(-1));
    assert_eq!(v["a"]["3"].as_i64(), Some(3));
}

#[test]
fn quotient_and_perm_text() {
    let out = sieve(&["quotient", "--shape", "9,9,6,6,6,4,1/2,1,1,1", "--order", "3"]);
    assert_eq!(stdout(&out), "4,3/1 ; 2 ; 2,1,1\n");
    let out = sieve(&["perm", "--shape", "9,9,6,6,6,4,1/2,1,1,1", "--order", "3"]);
    assert_eq!(stdout(&out), "2147356\n");
}

#[test]
fn character_and_root_values() {
    let v = json(&["char", "--shape", "2,1", "--type", "3"]);
    assert_eq!(v["value"].as_i64(), Some(-1));
    assert_eq!(v["bst_count"].as_i64(), Some(1));
    assert_eq!(v["epsilon"].as_i64(), Some(-1));
    assert_eq!(stdout(&sieve(&["char", "--shape", "2,1", "--nu", "1,1,1"])), "2\n");
    assert_eq!(
        stdout(&sieve(&["eval-root", "--shape", "2,2", "--vars", "2", "--order", "2"])),
        "1\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["specialize", "--shape", "2,1", "--vars", "0"][..],
        &["analyze", "--shape", "2,1", "--vars", "2", "--mod", "0"],
        &["analyze", "--shape", "2,1", "--vars", "2", "--mod", "2", "--bogus"],
        &["perm", "--shape", "2,1"],
        &["char", "--shape", "2,1", "--type", "3", "--nu", "1,1,1"],
    ] {
        assert_eq!(sieve(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn shape_parse_errors_carry_position() {
    let out = sieve(&["specialize", "--shape", "3,x/1", "--vars", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 2"));
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(
        sieve(&["quotient", "--shape", "2,2/1", "--order", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(sieve(&["char", "--shape", "2,1", "--type", "2"]).status.code(), Some(1));
    assert_eq!(
        sieve(&["eval-root", "--shape", "2,1", "--vars", "3", "--order", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_passes() {
    let out = sieve(&["verify"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 6);
    let v = json(&["verify", "--json"]);
    assert!(v.as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn output_is_deterministic() {
    let args = ["bst", "--shape", "4,3,2/1", "--order", "2", "--json"];
    let first = sieve(&args);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(
        v["count"].as_u64().unwrap() as usize,
        v["tableaux"].as_array().unwrap().len()
    );
    for _ in 0..3 {
        assert_eq!(sieve(&args).stdout, first.stdout);
    }
}

#[test]
fn thread_count_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_sieve"))
            .env("SIEVE_THREADS", threads)
            .args(["analyze", "--shape", "4,4", "--vars", "4", "--mod", "2", "--json"])
            .output()
            .unwrap()
    };
    assert_eq!(run("1").stdout, run("0").stdout);
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn abacus_and_core() {
    assert_eq!(
        stdout(&sieve(&["abacus", "--shape", "2,1", "--order", "2"])),
        "0 1\n· ●\n· ●\n"
    );
    assert_eq!(stdout(&sieve(&["core", "--shape", "2,1", "--order", "3"])), "0\n");
}
