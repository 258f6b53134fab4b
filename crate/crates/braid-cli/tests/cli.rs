//! End-to-end tests of the binary surface: output formats and exit codes.

use std::process::{Command, Output};

fn braid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn classify_prints_class_names() {
    let out = braid(&["classify", "--n", "3", "--word", "2 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "delta^1\n");

    let out = braid(&["classify", "--n", "4", "--word", "1"]);
    assert_eq!(stdout(&out), "non-periodic\n");

    let out = braid(&["classify", "--n", "4", "--word", "1 3 2 1"]);
    assert_eq!(stdout(&out), "epsilon^1\n");
}

#[test]
fn solve_prints_conjugator_and_verified() {
    let out = braid(&[
        "solve",
        "--n",
        "4",
        "--target",
        "delta",
        "--word",
        "-1 3 2 1 1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let conj = lines.next().expect("conjugator line");
    assert_eq!(lines.next(), Some("VERIFIED"));
    // The printed conjugator really works.
    let check = braid(&["classify", "--n", "4", "--word", conj]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn solve_mismatched_target_fails_with_code_1() {
    let out = braid(&[
        "solve", "--n", "4", "--target", "delta^2", "--word", "3 2 1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "FAIL\n");
}

#[test]
fn conjugate_prints_conjugator_or_fail() {
    let out = braid(&["conjugate", "--n", "4", "3 2 1", "-1 3 2 1 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).is_empty());

    let out = braid(&["conjugate", "--n", "3", "1", "2 1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "FAIL\n");
}

#[test]
fn usage_errors_exit_2() {
    let out = braid(&["classify", "--n", "3", "--word", "7"]);
    assert_eq!(out.status.code(), Some(2));

    let out = braid(&["solve", "--n", "4", "--target", "gamma^2", "--word", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = braid(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn uss_count_matches_closed_forms() {
    let out = braid(&["uss-count", "6", "delta"]);
    assert_eq!(stdout(&out), "16\n");
    let out = braid(&["uss-count", "6", "epsilon"]);
    assert_eq!(stdout(&out), "32\n");
    // --full lists one permutation per member.
    let out = braid(&["uss-count", "4", "delta", "--full"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert_eq!(text.lines().next(), Some("4"));
}

#[test]
fn bench_csv_is_deterministic_without_timing() {
    let args = [
        "bench",
        "--n",
        "4",
        "--k",
        "1",
        "--c",
        "3",
        "--samples",
        "2",
        "--seed",
        "7",
        "--no-time",
    ];
    let a = braid(&args);
    let b = braid(&args);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    assert_eq!(text, stdout(&b));
    assert!(text.starts_with("algo,n,k,c,samples,ok,timeout,total_ms\n"));
    assert_eq!(text.lines().count(), 5);
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",2,0,0"), "all ok, zero ms: {line}");
    }
}

#[test]
fn bench_reads_config_file_with_flag_overrides() {
    let dir = std::env::temp_dir().join("braid-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bench.conf");
    std::fs::write(&path, "n=4\nk=1\nc=2\nsamples=5\nseed=3\n").unwrap();
    let out = braid(&[
        "bench",
        "--config",
        path.to_str().unwrap(),
        "--samples",
        "1",
        "--no-time",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // samples overridden to 1 by the flag.
    for line in stdout(&out).lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[4], "1");
    }
}
