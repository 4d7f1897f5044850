//! End-to-end checks of the `benford-bounds` binary: exit codes, determinism,
//! and output framing.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_benford-bounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn table1_is_byte_identical_across_runs() {
    let a = run(&["table1", "--kmax", "8"]);
    let b = run(&["table1", "--kmax", "8"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("# format_version=1\n# command=table1\n"));
    assert_eq!(text.lines().count(), 5 + 1 + 9); // metadata + header + rows
}

#[test]
fn json_output_is_deterministic_and_tagged() {
    let a = run(&["--format", "json", "gauss", "--sigma", "1,2"]);
    let b = run(&["gauss", "--sigma", "1,2", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "flag position must not matter");
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("{\"command\":\"gauss\",\"format_version\":\"1\""));
    assert!(text.contains("\"kuiper_bound\":4.43490e-8"));
}

#[test]
fn gauss_rejects_small_sigma_with_hypothesis() {
    let out = run(&["gauss", "--sigma", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("1/6"),
        "stderr should cite the hypothesis: {err}"
    );
}

#[test]
fn digits_usage_errors_exit_2() {
    let bad_prefix = run(&["digits", "--model", "gauss:sigma=1", "0x@10"]);
    assert_eq!(bad_prefix.status.code(), Some(2));

    let bad_model = run(&["digits", "--model", "cauchy:gamma=1", "1@10"]);
    assert_eq!(bad_model.status.code(), Some(2));

    let missing_args = run(&["digits"]);
    assert_eq!(missing_args.status.code(), Some(2));
}

#[test]
fn digits_weibull_reference_bound() {
    let out = run(&["digits", "--model", "weibull:tau=0.3", "1@10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("3.68011e-5"),
        "certified bound column: {text}"
    );
}

#[test]
fn verify_single_model_passes() {
    let out = run(&["verify", "--model", "uniform:width=1.5", "--grid", "1024"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let data_line = text.lines().last().unwrap();
    assert!(data_line.ends_with("true"), "ok column: {data_line}");
}

#[test]
fn pwl_model_from_file() {
    let dir = std::env::temp_dir().join("benford-bounds-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triangle.csv");
    std::fs::write(&path, "0.0,0.0\n1.0,1.0\n2.0,0.0\n").unwrap();
    let out = run(&[
        "verify",
        "--model",
        &format!("pwl:file={}", path.display()),
        "--grid",
        "512",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
