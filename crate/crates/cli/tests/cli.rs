use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overlap-gap"))
        .args(args)
        .env_remove("OVERLAP_GAP_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn csv_is_byte_stable() {
    let o = run(&["table", "(baa)~", "~(aab)", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,log,rog,og\n0,0,0,0\n1,0,0,0\n2,0,0,0\n3,1,2,1\n4,2,1,1\n"
    );
    let default = run(&["table", "(baa)~", "~(aab)"]);
    assert_eq!(stdout(&default).lines().count(), 22);
}

#[test]
fn markdown_rows() {
    let o = run(&[
        "table",
        "(bbaa)~cab",
        "~(abba)",
        "--n",
        "3",
        "--format",
        "md",
    ]);
    assert_eq!(
        stdout(&o),
        "| n | 0 | 1 | 2 | 3 |\n|---|---|---|---|---|\n| log | 0 | 1 | 0 | 1 |\n| rog | 0 | 1 | 0 | 3 |\n| og | 0 | 1 | 0 | 1 |\n"
    );
}

#[test]
fn horizon_cap() {
    assert_eq!(
        run(&["table", "(a)~", "~(a)", "--n", "1000001"])
            .status
            .code(),
        Some(2)
    );
    let capped = Command::new(env!("CARGO_BIN_EXE_overlap-gap"))
        .args(["table", "(a)~", "~(a)", "--n", "11"])
        .env("OVERLAP_GAP_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let raised = Command::new(env!("CARGO_BIN_EXE_overlap-gap"))
        .args(["table", "(a)~", "~(a)", "--n", "11"])
        .env("OVERLAP_GAP_MAX_N", "20")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["table", "()~a", "~(a)"][..],
        &["table", "(a-)~", "~(a)"],
        &["table", "~(a)", "~(a)"],
        &["decide", "(a)~", "@nope"],
        &["sets", "(a", "~(a)"],
        &["table", "(a)~", "~(a)", "--format", "xml"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn decide_exit_codes() {
    let finite = run(&["decide", "(bbaa)~cab", "~(abba)"]);
    assert_eq!(finite.status.code(), Some(0));
    assert!(stdout(&finite).starts_with("finite\n"));
    assert_eq!(run(&["decide", "(ab)~", "~(a)"]).status.code(), Some(1));
    assert_eq!(
        run(&["decide", "@thue-morse", "@fibonacci"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["decide", "--one-sided", "(ab)~", "(ab)~a"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["decide", "--one-sided", "(ab)~c", "(ab)~d"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn sets_rejects_non_conjugate_periods() {
    let o = run(&["sets", "(ab)~", "~(a)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not conjugate"));
}

#[test]
fn one_sided_table() {
    let o = run(&["table", "--one-sided", "(ab)~", "(ab)~a", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn verify_writes_json_lines() {
    let path =
        std::env::temp_dir().join(format!("overlap-gap-verify-{}.jsonl", std::process::id()));
    let o = run(&[
        "verify",
        "--suite",
        "threshold",
        "--seed",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with(
        r#"{"property":"threshold","instances":8,"failures":[],"seed":null,"elapsed_ms":"#
    ));
    let step = run(&["verify", "--suite", "step", "--seed", "3"]);
    assert_eq!(step.status.code(), Some(0));
    assert!(stdout(&step).contains(r#""seed":3"#));
}

#[test]
fn bench_reports_agreement() {
    let o = run(&["bench", "--len", "2000", "--trials", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree: true"));
}
