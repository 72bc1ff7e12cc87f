use std::process::Command;

use conflict_games::cli::dispatch_to;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("conflict-games").chain(args.iter().copied());
    let code = dispatch_to(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn no_subcommand_is_a_usage_error() {
    let (code, _, err) = run(&[]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
}

#[test]
fn path4_enumeration() {
    let (code, out, _) = run(&["enumerate", "--gen", "path4"]);
    assert_eq!(code, 0);
    assert!(out.contains("optimum: (1,2,1,2) value 8"), "{out}");
    assert!(out.contains("  (1,2,2,1) 10"), "{out}");
    assert!(out.contains("strong PoA: 5/4"), "{out}");
}

#[test]
fn enumerate_csv_lists_strong_states() {
    let (code, out, _) = run(&["enumerate", "--gen", "path4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("row,state,value\n"));
    assert!(out.contains("strong_ne,\"(1,2,2,1)\",10\n"), "{out}");
}

#[test]
fn named_battery_passes_and_is_deterministic() {
    let first = run(&["reproduce", "--named", "--seed", "7"]);
    assert_eq!(first.0, 0, "{}", first.1);
    assert!(first.1.contains(" 0 failed"));
    let second = run(&["reproduce", "--named", "--seed", "7", "--threads", "2"]);
    assert_eq!(first.1, second.1);
}

#[test]
fn reproduce_csv_header() {
    let (code, out, _) = run(&["reproduce", "--named", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("claim_id,instance,bound,measured,verdict,slack\n"));
}

#[test]
fn cap_exceedance_names_the_limit() {
    let (code, _, err) = run(&["enumerate", "--gen", "bwc-multipartite", "--m", "3", "--max-states", "100"]);
    assert_eq!(code, 2);
    assert!(err.contains("limit is 100"), "{err}");
}

#[test]
fn failed_verdict_exits_one() {
    let (code, out, _) = run(&["smoothness", "--gen", "maxcut-edge", "--lambda", "1", "--mu", "0"]);
    assert_eq!(code, 1, "{out}");
    let (code, _, _) = run(&["smoothness", "--gen", "maxcut-edge", "--lambda", "1/2", "--mu", "0"]);
    assert_eq!(code, 0);
}

#[test]
fn bad_inputs_are_usage_errors() {
    assert_eq!(run(&["eval", "--gen", "path4", "--state", "1,3,1,1"]).0, 2);
    assert_eq!(run(&["eval", "--gen", "path4", "--state", "1,x"]).0, 2);
    assert_eq!(run(&["cce", "--gen", "bwc-multipartite"]).0, 2);
    assert_eq!(run(&["enumerate"]).0, 2);
    assert_eq!(run(&["enumerate", "--instance", "/nonexistent/file.toml"]).0, 2);
}

#[test]
fn eval_reports_one_based_moves() {
    let (code, out, _) = run(&["eval", "--gen", "path4", "--state", "1,1,2,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("social: 12"));
    assert!(out.contains("pure NE: true"));
}

#[test]
fn generated_document_loads_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.toml");
    let path = path.to_str().unwrap();
    let args = ["gen", "--gen", "random", "--kind", "SwC", "--n", "4", "--m", "2", "--edge-prob", "1/2", "--seed", "3", "--out", path];
    assert_eq!(run(&args).0, 0);
    let (code, a, _) = run(&["enumerate", "--instance", path]);
    assert_eq!(code, 0);
    let (_, b, _) = run(&["enumerate", "--gen", "random", "--kind", "SwC", "--n", "4", "--m", "2", "--edge-prob", "1/2", "--seed", "3"]);
    let tail = |s: &str| s.lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(tail(&a), tail(&b));
}

#[test]
fn dynamics_trace_csv() {
    let (code, out, _) = run(&["dynamics", "--gen", "bwc-multipartite", "--m", "2", "--worst-start", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("step,mover,from,to,gain,potential,social"));
    assert_eq!(lines.next(), Some("0,,,,,12/1,24/1"));
    let (code, out, _) = run(&["dynamics", "--check", "--gen", "swc-pos", "--m", "3", "--eps", "1/10"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("Thm:UtilityConvergence2Persists"));
}

#[test]
fn worst_cce_text() {
    let (code, out, _) = run(&["cce", "--gen", "bwc-multipartite", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("worst CCE value: 14"));
    assert!(out.contains("ratio: 7/4"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_conflict-games");
    let status = Command::new(bin).status().unwrap();
    assert_eq!(status.code(), Some(2));
    let output = Command::new(bin).args(["enumerate", "--gen", "path4"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&output.stdout).contains("strong PoA: 5/4"));
}

#[test]
fn shipped_path4_document() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/path4.game");
    let (code, out, _) = run(&["enumerate", "--instance", path]);
    assert_eq!(code, 0);
    assert!(out.contains("value 8"));
    assert!(out.contains("  (2,1,1,2) 10"), "{out}");
}

#[test]
fn reproduce_honors_the_state_cap() {
    let (code, _, err) = run(&["reproduce", "--named", "--max-states", "1000"]);
    assert_eq!(code, 2);
    assert!(err.contains("limit is 1000"), "{err}");
    let (code, _, _) = run(&["reproduce", "--table", "--max-n", "9", "--max-states", "1000"]);
    assert_eq!(code, 2);
}
