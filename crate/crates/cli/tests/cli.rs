//! End-to-end tests driving the `tug` binary: exit codes, plain output,
//! JSON schema stability, file-format round trips, and replay.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tug(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tug"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write_game(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

const SYMMETRIC_GAME: &str = r#"{"n":3,"worth":[
    {"coalition":[1],"value":"1"},
    {"coalition":[2],"value":"1"},
    {"coalition":[3],"value":"1"},
    {"coalition":[1,2,3],"value":"2"}
]}"#;

#[test]
fn compute_prints_exact_payoffs() {
    let dir = tempfile::tempdir().unwrap();
    let game = write_game(dir.path(), "v.json", SYMMETRIC_GAME);

    // Fully symmetric game: every efficient symmetric solution splits v(N).
    let out = tug(&["compute", "--game", &game, "--solution", "egalitarian", "--alpha", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(2/3, 2/3, 2/3)");

    let out = tug(&["compute", "--game", &game, "--solution", "vi_plus_a", "--a", "-1/2"]);
    assert_eq!(stdout(&out).trim(), "(1/2, 1/2, 1/2)");

    let out =
        tug(&["compute", "--game", &game, "--solution", "shapley", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["payoffs"], serde_json::json!(["2/3", "2/3", "2/3"]));
}

#[test]
fn dividends_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let game = write_game(dir.path(), "v.json", SYMMETRIC_GAME);

    let out = tug(&["dividends", "--game", &game, "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["basis"], "unanimity");
    let coeffs = doc["coefficients"].as_array().unwrap();
    assert!(coeffs.contains(&serde_json::json!({"coalition": [1, 2, 3], "value": "5"})));
    assert!(coeffs.contains(&serde_json::json!({"coalition": [1, 2], "value": "-2"})));

    let out = tug(&["dividends", "--game", &game, "--basis", "canonical"]);
    assert!(stdout(&out).contains("{1,2,3}: 2"));

    let unanimity_one = write_game(
        dir.path(),
        "u1.json",
        r#"{"n":3,"worth":[
            {"coalition":[1],"value":"1"},
            {"coalition":[1,2],"value":"1"},
            {"coalition":[1,3],"value":"1"},
            {"coalition":[1,2,3],"value":"1"}
        ]}"#,
    );
    let out = tug(&["classify", "--game", &unanimity_one, "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["null_players"], serde_json::json!([2, 3]));
    assert_eq!(doc["nullifying_players"], serde_json::json!([]));
    assert_eq!(doc["symmetric_pairs"], serde_json::json!([[2, 3]]));
}

#[test]
fn check_exit_codes_follow_verdicts() {
    // Equal division violates the null player property: witness mode, exit 1.
    let out = tug(&[
        "check",
        "--solution",
        "equal_division",
        "--axiom",
        "null_player_property",
        "--mode",
        "witnesses",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("COUNTEREXAMPLE"));

    // Shapley passes it on a small exhaustive grid: exit 0.
    let out = tug(&[
        "check",
        "--solution",
        "shapley",
        "--axiom",
        "null_player_property",
        "--grid",
        "-1,0,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASSED"));

    // A tiny instance cap is inconclusive: exit 3.
    let out = tug(&[
        "check",
        "--solution",
        "shapley",
        "--axiom",
        "efficiency",
        "--max-instances",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("INCONCLUSIVE"));

    // Random mode is deterministic in the seed.
    let args = [
        "check",
        "--solution",
        "egalitarian",
        "--alpha",
        "-2",
        "--axiom",
        "null_player_neutrality",
        "--mode",
        "random",
        "--n",
        "4",
        "--trials",
        "200",
        "--seed",
        "42",
        "--format",
        "json",
    ];
    let first = stdout(&tug(&args));
    let second = stdout(&tug(&args));
    assert_eq!(first, second);
    let doc: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["verdict"]["outcome"], "passed");
    assert_eq!(doc["verdict"]["instances_checked"], 200);
}

#[test]
fn check_json_counterexample_replays() {
    let out = tug(&[
        "check",
        "--solution",
        "equal_surplus_division",
        "--axiom",
        "null_player_neutrality",
        "--mode",
        "witnesses",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    let doc: Value = serde_json::from_str(&report).unwrap();
    assert_eq!(doc["verdict"]["outcome"], "counterexample");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ce.json");
    std::fs::write(&path, &report).unwrap();
    let path = path.to_string_lossy();

    // The stored instance still violates the axiom for the same solution...
    let out = tug(&[
        "check",
        "--solution",
        "equal_surplus_division",
        "--axiom",
        "null_player_neutrality",
        "--replay",
        &path,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("violates"));

    // ...and satisfies it for a family member.
    let out = tug(&[
        "check",
        "--solution",
        "equal_division",
        "--axiom",
        "null_player_neutrality",
        "--replay",
        &path,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("satisfies"));
}

#[test]
fn fit_and_membership() {
    let out = tug(&["fit", "--solution", "shapley", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("alpha = 0"));

    let out = tug(&[
        "fit",
        "--solution",
        "egalitarian",
        "--alpha",
        "7/3",
        "--n",
        "3",
        "--trials",
        "100",
        "--seed",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["fit"]["outcome"], "consistent");
    assert_eq!(doc["fit"]["alpha"], "7/3");
    assert_eq!(doc["membership"]["outcome"], "in_family");

    let out = tug(&[
        "fit",
        "--solution",
        "phi1",
        "--n",
        "3",
        "--trials",
        "300",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["membership"]["outcome"], "not_in_family");

    let out = tug(&["fit", "--solution", "equal_surplus_division", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("inconsistent"));
}

#[test]
fn corpus_runs_and_exports() {
    let out = tug(&["corpus", "--run-all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all passed"));

    let out = tug(&["corpus", "--run-all", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["all_passed"], true);
    assert!(doc["bundles"].as_array().unwrap().len() >= 5);

    // Exported games are valid game files that parse back in.
    let dir = tempfile::tempdir().unwrap();
    let out = tug(&["corpus", "--export", &dir.path().to_string_lossy()]);
    assert_eq!(out.status.code(), Some(0));
    let exported = dir.path().join("W1_v.json");
    assert!(exported.exists());
    let out = tug(&[
        "compute",
        "--game",
        &exported.to_string_lossy(),
        "--solution",
        "equal_division",
    ]);
    assert_eq!(stdout(&out).trim(), "(2/3, 2/3, 2/3)");
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["compute", "--game", "/nonexistent.json", "--solution", "shapley"],
        &["compute", "--game", "/nonexistent.json", "--solution", "nope"],
        &["check", "--solution", "egalitarian", "--axiom", "efficiency"],
        &["check", "--solution", "shapley", "--axiom", "not_an_axiom"],
        &["check", "--solution", "shapley", "--axiom", "efficiency", "--mode", "random", "--grid", "0,1"],
        &["check", "--solution", "vi_plus_a", "--a", "0", "--axiom", "efficiency"],
        &["fit", "--solution", "shapley", "--n", "2"],
        &["corpus"],
    ];
    for args in cases {
        let out = tug(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }

    // Malformed game files are usage errors too.
    let dir = tempfile::tempdir().unwrap();
    let bad = write_game(
        dir.path(),
        "bad.json",
        r#"{"n":3,"worth":[{"coalition":[1],"value":"1/0"}]}"#,
    );
    let out = tug(&["compute", "--game", &bad, "--solution", "shapley"]);
    assert_eq!(out.status.code(), Some(2));
}
