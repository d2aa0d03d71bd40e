use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gcdn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcdn"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .expect("binary runs")
}

fn gcdn_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gcdn"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_prints_only_the_gcd() {
    let o = gcdn(&["compute", "--alg", "gcd-n", "22", "36", "74", "98"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
    let o = gcdn(&["compute", "--alg", "binary-gcd-n", "14", "28", "56", "98"]);
    assert_eq!(stdout(&o), "14\n");
    let o = gcdn(&["compute", "--alg", "gcd-n", "0", "0", "0"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn every_algorithm_handles_huge_values() {
    let a = format!("{}", u128::MAX);
    let b = "0x100000000000000000000000000000000";
    for alg in ["gcd-n", "binary-gcd-n", "fold-euclid", "fold-binary"] {
        let o = gcdn(&["compute", "--alg", alg, &a, b]);
        assert_eq!(stdout(&o), "1\n", "{alg}");
    }
}

#[test]
fn golden_traces() {
    let o = gcdn(&[
        "compute", "--alg", "gcd-n", "--trace", "22", "36", "74", "98",
    ]);
    assert_eq!(stdout(&o), include_str!("golden/example1_gcd_n.jsonl"));
    let o = gcdn(&[
        "compute",
        "--alg",
        "binary-gcd-n",
        "--trace",
        "14",
        "28",
        "56",
        "98",
    ]);
    assert_eq!(
        stdout(&o),
        include_str!("golden/example2_binary_gcd_n.jsonl")
    );
}

#[test]
fn fold_trace_is_a_single_record() {
    let o = gcdn(&["compute", "--alg", "fold-euclid", "--trace", "12", "18"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\"kind\":\"terminate\""));
    assert_eq!(lines[1], "6");
}

#[test]
fn reads_stdin_and_files() {
    let o = gcdn_stdin(&["compute"], "22 36\n74\t98\n");
    assert_eq!(stdout(&o), "2\n");
    let o = gcdn_stdin(&["compute", "--hex"], "e 1c 38 62");
    assert_eq!(stdout(&o), "14\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nums.txt");
    std::fs::write(&path, "1071\n462 0x2b5\n").unwrap();
    let o = gcdn(&["compute", "--input", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "21\n");
}

#[test]
fn exit_codes() {
    let o = gcdn(&["compute", "1", "2x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`2x`"));
    assert!(stderr(&o).contains("argument 2"));

    let o = gcdn_stdin(&["compute"], "  \n ");
    assert_eq!(o.status.code(), Some(3));

    let o = gcdn(&["compute", "--alg", "lehmer", "4"]);
    assert_eq!(o.status.code(), Some(2));

    let o = gcdn(&["compute", "--input", "/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(2));

    let o = gcdn(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_agreement_table() {
    for (args, want) in [
        (vec!["verify", "22", "36", "74", "98"], "2"),
        (vec!["verify", "0"], "0"),
        (vec!["verify", "1071", "462", "693"], "21"),
    ] {
        let o = gcdn(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let out = stdout(&o);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 7);
        for row in &rows[..6] {
            assert_eq!(row.split_whitespace().last(), Some(want), "{row}");
        }
        assert_eq!(rows[6], "all methods agree");
    }
}

#[test]
fn verify_enforces_oracle_bound() {
    let o = gcdn(&["verify", "18446744073709551617", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("oracle bound"));
    // stdin is empty here
    assert_eq!(gcdn(&["verify"]).status.code(), Some(3));
}

#[test]
fn verify_skips_bruteforce_above_scan_bound() {
    let o = gcdn(&["verify", "4000000", "6000000"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("oracle-bruteforce      - (skipped"));
    assert!(out.contains("oracle-factorization   2000000"));
}

#[test]
fn bench_table_has_four_algorithms() {
    let o = gcdn(&[
        "bench",
        "--seed",
        "1",
        "--n",
        "8",
        "--bits",
        "64",
        "--trials",
        "100",
        "--dist",
        "uniform-random",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for alg in ["gcd-n", "binary-gcd-n", "fold-euclid", "fold-binary"] {
        assert!(
            out.lines()
                .any(|l| l.starts_with(alg) && l.contains("mods")),
            "{alg}"
        );
    }
}

#[test]
fn bench_usage_errors() {
    for args in [
        vec!["bench", "--trials", "0"],
        vec!["bench", "--n", "0"],
        vec!["bench", "--bits", "0"],
        vec!["bench", "--dist", "gaussian"],
        vec!["bench", "--algs", "gcd-n,nope"],
        vec!["bench", "--format", "xml"],
        vec!["bench", "--dist", "common-factor", "--factor", "0"],
    ] {
        assert_eq!(gcdn(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bench_json_lines_are_repeatable() {
    let args = [
        "bench",
        "--seed",
        "3",
        "--n",
        "5",
        "--bits",
        "80",
        "--trials",
        "10",
        "--dist",
        "common-factor",
        "--factor",
        "35",
        "--format",
        "json-lines",
    ];
    let a = stdout(&gcdn(&args));
    let b = stdout(&gcdn(&args));
    let strip = |s: &str| gcdn_bench::report::counter_section(s);
    assert_eq!(strip(&a), strip(&b));
    assert!(a.lines().next().unwrap().contains("\"factor\":\"35\""));
}
