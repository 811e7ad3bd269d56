//! End-to-end tests of the `yendo` binary: golden text output, JSON output
//! that matches the library's own serialization, argument handling, and the
//! exit-code contract (0 pass, 2 usage/domain error).

use std::process::{Command, Output};

use yendo::report::{decompose_report, document, to_json};
use yendo::AlgebraContext;

fn yendo_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yendo"))
        .args(args)
        .output()
        .expect("binary should run")
}

/// Runs the binary expecting success and returns stdout.
fn stdout_of(args: &[&str]) -> String {
    let out = yendo_bin(args);
    assert!(
        out.status.success(),
        "yendo {args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Runs the binary expecting failure; returns (exit code, stderr).
fn failure_of(args: &[&str]) -> (i32, String) {
    let out = yendo_bin(args);
    assert!(!out.status.success(), "yendo {args:?} unexpectedly passed");
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn mult_table_golden() {
    let expect = "\
multiplication table for lambda = (2,2)  [m = 0, lambda2 = 2]
*    | b(0) b(1) b(2)
---------------------
b(0) | 1    b(1) b(2)
b(1) | b(1) 0    0
b(2) | b(2) 0    0
";
    assert_eq!(stdout_of(&["mult-table", "--lambda", "2,2"]), expect);
}

#[test]
fn decompose_golden() {
    let expect = "\
Young-module summands of M^(4,2)  [m = 2, lambda2 = 2]
g  mu     C(m+2g,g) mod 2  summand
0  (4,2)  1                yes
1  (5,1)  0                no
2  (6,0)  1                yes
summands: 2
";
    assert_eq!(stdout_of(&["decompose", "--lambda", "4,2"]), expect);
}

#[test]
fn idempotents_golden() {
    let expect = "\
idempotent family of S_K((4,2))  [m = 2, lambda2 = 2]
g  mu     I    J    e_{m,g}  status
0  (4,2)  {1}  {}   1+b(2)   ok
1  (5,1)  {2}  {}   0        vanished
2  (6,0)  {2}  {1}  b(2)     ok
";
    assert_eq!(stdout_of(&["idempotents", "--lambda", "4,2"]), expect);
}

#[test]
fn idempotents_truncated_column() {
    let out = stdout_of(&["idempotents", "--lambda", "4,2", "--truncate", "1"]);
    assert!(
        out.contains("truncated (u <= 1)"),
        "no truncated column:\n{out}"
    );
}

#[test]
fn endo_golden() {
    let expect = "\
End(Y^(4,2)) as a corner of S_K((4,2))  [m = 2, g = 0]
idempotent: e = 1+b(2)
dimension: 2
basis:
  e*b(0) = 1+b(2)
  e*b(1) = b(1)
generators:
  x1 = e*b(1) = b(1)
presentation: K[x1]/<x1^2>
";
    assert_eq!(stdout_of(&["endo", "--lambda", "4,2", "--g", "0"]), expect);
}

#[test]
fn lambda_flag_styles_agree() {
    let by_parts = stdout_of(&["decompose", "--lambda", "4,2"]);
    let by_coords = stdout_of(&["decompose", "--m", "2", "--lambda2", "2"]);
    assert_eq!(by_parts, by_coords);
}

#[test]
fn mu_and_g_select_the_same_summand() {
    let by_g = stdout_of(&["endo", "--lambda", "4,2", "--g", "2"]);
    let by_mu = stdout_of(&["endo", "--lambda", "4,2", "--mu", "6,0"]);
    assert_eq!(by_g, by_mu);

    // Both flags together are fine when they agree...
    let both = stdout_of(&["endo", "--lambda", "4,2", "--g", "2", "--mu", "6,0"]);
    assert_eq!(both, by_g);

    // ...and a domain error when they do not.
    let (code, stderr) = failure_of(&["endo", "--lambda", "4,2", "--g", "0", "--mu", "6,0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("disagree"), "stderr: {stderr}");
}

#[test]
fn vanished_summand_is_a_domain_error() {
    let (code, stderr) = failure_of(&["endo", "--lambda", "4,2", "--g", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not a summand"), "stderr: {stderr}");
}

#[test]
fn json_output_matches_library_serialization() {
    let out = stdout_of(&["decompose", "--lambda", "4,2", "--format", "json"]);
    let ctx = AlgebraContext::for_lambda(4, 2).unwrap();
    let expect = to_json(&document("decompose", &decompose_report(&ctx)));
    assert_eq!(out, expect);
}

#[test]
fn json_endo_fields() {
    let out = stdout_of(&["endo", "--lambda", "4,2", "--g", "0", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["command"], "endo");
    assert_eq!(doc["result"]["dimension"], 2);
    assert_eq!(doc["result"]["presentation"]["text"], "K[x1]/<x1^2>");
}

#[test]
fn presentation_golden() {
    let expect = "\
dimension n = 5, generators k = 3
presentation: K[x1,x2,x3]/<x1^2,x2^2,x3^2,x1x3,x2x3,x1x2x3>
quotient basis: 1, x1, x2, x1x2, x3
killed beyond squares: x1x3, x2x3, x1x2x3
";
    assert_eq!(stdout_of(&["presentation", "--dim", "5"]), expect);

    let (code, _) = failure_of(&["presentation", "--dim", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_single_partition_passes() {
    let out = stdout_of(&["verify", "--lambda", "4,2"]);
    assert!(out.contains("result: PASS"), "output:\n{out}");
}

#[test]
fn verify_sweep_passes() {
    let out = stdout_of(&["verify", "--max-r", "8"]);
    assert!(
        out.contains("checked 25 partitions: all PASS"),
        "output:\n{out}"
    );

    // The verbose sweep prints the full battery per partition.
    let verbose = stdout_of(&["verify", "--max-r", "8", "--verbose"]);
    assert!(verbose.contains("result: PASS") && verbose.len() > out.len());
}

#[test]
fn oracle_check_passes() {
    let out = stdout_of(&["oracle-check", "--lambda", "4,2"]);
    assert!(out.contains("result: PASS"), "output:\n{out}");
}

#[test]
fn oracle_check_out_of_model_range() {
    // r = 16 subsets cannot be enumerated by the model.
    let (code, stderr) = failure_of(&["oracle-check", "--lambda", "10,6"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn usage_errors_exit_2() {
    // No partition given.
    let (code, stderr) = failure_of(&["mult-table"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--lambda"), "stderr: {stderr}");

    // Conflicting selectors are rejected by the argument parser.
    let (code, _) = failure_of(&["decompose", "--lambda", "4,2", "--m", "2"]);
    assert_eq!(code, 2);

    // --m without --lambda2.
    let (code, _) = failure_of(&["decompose", "--m", "2"]);
    assert_eq!(code, 2);

    // Unparseable partition text.
    let (code, stderr) = failure_of(&["decompose", "--lambda", "nope"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot parse"), "stderr: {stderr}");

    // Not weakly decreasing, so not a partition.
    let (code, _) = failure_of(&["decompose", "--lambda", "1,3"]);
    assert_eq!(code, 2);
}

#[test]
fn help_and_version_exit_0() {
    assert!(yendo_bin(&["--help"]).status.success());
    assert!(yendo_bin(&["endo", "--help"]).status.success());
    assert!(yendo_bin(&["--version"]).status.success());
}
