//! End-to-end runs of the binary: the documented examples, exit codes,
//! and byte-level determinism of emitted artifacts.

use std::fs;
use std::process::{Command, Output};

fn prlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn counterexample_claim_passes_and_cites_witness() {
    let o = prlab(&["check", "claim", "S3.counterexample", "--ring", "z4xz4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["witness"]["witness_module"], "Z4#1");
}

#[test]
fn eval_hat_of_jacobson_is_zero_at_z4() {
    let o = prlab(&["pr", "eval", "--expr", "hat(jac)", "--module", "Z4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 1);
    assert_eq!(v["elements"], serde_json::json!([[0]]));
}

#[test]
fn localize_at_zero_is_identity_on_z4() {
    let o = prlab(&["rel", "localize", "--expr", "zero", "--module", "Z4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["shape"], "Z4");
    assert_eq!(v["eta_is_iso"], true);
    assert_eq!(v["eta_kernel"], serde_json::json!([[0]]));
}

#[test]
fn malformed_json_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.json");
    fs::write(&p, "{ \"ring\": ").unwrap();
    let o = prlab(&["universe", "verify", "--universe", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("line") && e.contains("column"), "{e}");
}

#[test]
fn unknown_claim_exits_2() {
    let o = prlab(&["check", "claim", "S0.missing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn claim_ring_assertion_is_checked() {
    let o = prlab(&["check", "claim", "A2", "--ring", "t2f2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = prlab(&["check", "claim", "A2", "--ring", "z4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn unknown_flag_exits_2() {
    let o = prlab(&["pr", "eval", "--expr", "soc", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_error_reports_position() {
    let o = prlab(&["pr", "eval", "--expr", "soc &"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("5"), "{}", stderr(&o));
}

#[test]
fn emitted_universe_reloads_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("u4.json");
    let o = prlab(&["universe", "build", "--ring", "z4", "--out", p.to_str().unwrap()]);
    assert!(o.status.success());
    let o = prlab(&["universe", "verify", "--universe", p.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["reps"], 6);

    // the saved universe feeds other commands
    let o = prlab(&[
        "pr", "eval", "--universe", p.to_str().unwrap(), "--expr", "hat(jac)", "--module", "Z4",
    ]);
    assert!(o.status.success());
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["filters", "list", "--ring", "z4"],
        vec!["universe", "build", "--ring", "t2f2"],
        vec!["enumerate", "--ring", "z4"],
        vec!["pr", "traits", "--expr", "soc & jac | sing*one"],
    ] {
        let a = prlab(&args);
        let b = prlab(&args);
        assert!(a.status.success());
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}

#[test]
fn filter_documents_round_trip_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("filters.json");
    let o = prlab(&["filters", "list", "--ring", "z4", "--out", list.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&list).unwrap()).unwrap();
    assert_eq!(v["linear"], 3);
    assert_eq!(v["gabriel"], 2);
    for (k, f) in v["filters"].as_array().unwrap().iter().enumerate() {
        let p = dir.path().join(format!("f{k}.json"));
        fs::write(&p, serde_json::to_string_pretty(f).unwrap()).unwrap();
        let o = prlab(&["filters", "check", p.to_str().unwrap()]);
        assert!(o.status.success(), "filter {k}: {}", stderr(&o));
    }
}

#[test]
fn tampered_filter_flags_fail_check() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("filters.json");
    prlab(&["filters", "list", "--ring", "z4", "--out", list.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&list).unwrap()).unwrap();
    let mut f = v["filters"][0].clone();
    let flipped = !f["flags"]["gabriel"].as_bool().unwrap();
    f["flags"]["gabriel"] = serde_json::Value::Bool(flipped);
    let p = dir.path().join("tampered.json");
    fs::write(&p, serde_json::to_string_pretty(&f).unwrap()).unwrap();
    let o = prlab(&["filters", "check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn rel_commands_agree_with_table_shapes() {
    // the socle of Z2+Z4 is soc-dense since the quotient is simple
    let o = prlab(&[
        "rel", "dense", "[[1,0],[0,2]]", "--expr", "soc", "--module", "Z2+Z4",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], true);

    let o = prlab(&["rel", "pure", "[[2]]", "--expr", "soc", "--module", "Z4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pure"], false);

    let o = prlab(&["rel", "hull", "--expr", "soc", "--module", "Z2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["hull"], "R");

    let o = prlab(&["rel", "injective", "purity", "--expr", "soc", "--module", "Z2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["holds"], false);

    let o = prlab(&["rel", "pseudo", "[[2,0]]", "--expr", "one", "--module", "Z4+Z4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["found"], true);
}

#[test]
fn table_format_renders_lines() {
    let o = prlab(&["pr", "eval", "--expr", "soc", "--format", "table"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().count() >= 6, "{text}");
    assert!(text.contains("R: "), "{text}");
}

#[test]
fn ring_list_names_the_builtin_families() {
    let o = prlab(&["ring", "list"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let patterns: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["pattern"].as_str().unwrap())
        .collect();
    assert_eq!(patterns, ["z<n>", "z<n>xz<m>", "t2f<p>"]);
    for r in v.as_array().unwrap() {
        let o = prlab(&["ring", "define", "--ring", r["example"].as_str().unwrap()]);
        assert!(o.status.success());
    }
}
