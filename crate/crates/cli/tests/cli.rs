use std::io::Write;
use std::process::{Command, Output, Stdio};

fn domcheck(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domcheck"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
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

#[test]
fn gen_k4() {
    let o = domcheck(&["gen", "--n", "4", "--delta", "3", "--count", "1"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "C~\n");
}

#[test]
fn gen_is_reproducible() {
    let args = [
        "gen", "--n", "10", "--delta", "3", "--count", "100", "--seed", "7",
    ];
    let a = domcheck(&args, "");
    let b = domcheck(&args, "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 100);
}

#[test]
fn gen_infeasible_is_an_error() {
    let o = domcheck(&["gen", "--n", "7", "--delta", "3"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_stream() {
    let gen = domcheck(
        &[
            "gen", "--n", "8", "--delta", "3", "--count", "5", "--seed", "1",
        ],
        "",
    );
    let input = format!("C~\nE{{Sw\n{}", stdout(&gen));
    let args = ["check", "--trials", "2000", "--jobs", "2"];
    let o = domcheck(&args, &input);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 7 + 1);
    assert!(lines[0].starts_with("{\"type\":\"header\",\"schema\":\"domcheck-report/1\""));
    assert!(lines[2].contains("\"gamma\":2,\"gamma_e\":2"));
    assert!(lines[8].contains("\"exit_code\":0"));
    assert_eq!(domcheck(&args, &input).stdout, o.stdout);
}

#[test]
fn non_regular_input_is_exempt() {
    // Two adjacent centers with two leaves each.
    let o = domcheck(&["check", "--methods", "t1,t1d"], "EsP?\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"gamma\":2,\"gamma_e\":1"));
    assert!(text.contains("\"conjecture_holds\":null"));
}

#[test]
fn csv_format() {
    let o = domcheck(&["check", "--format", "csv", "--methods", "t3"], "C~\n");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("graph_id,"));
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("1,C~,4,3,true,true,1,2,1/2,true"));
}

#[test]
fn bad_records_are_counted_not_fatal() {
    let o = domcheck(&["check", "--methods", ""], "C~\n!!\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"errors\":1"));
}

#[test]
fn usage_errors() {
    assert_eq!(
        domcheck(&["check", "--methods", "t9"], "").status.code(),
        Some(1)
    );
    assert_eq!(
        domcheck(&["check", "--cap", "65"], "").status.code(),
        Some(1)
    );
    assert_eq!(
        domcheck(&["check", "--input", "/nonexistent/x.g6"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(domcheck(&["frobnicate"], "").status.code(), Some(1));
}

#[test]
fn bound_output() {
    let o = domcheck(&["bound", "--delta", "3"], "");
    let text = stdout(&o);
    assert!(text.contains("transversal_bound: 7/6"));
    assert!(text.contains("large_degree_threshold: false"));
    let o = domcheck(&["bound", "--delta", "13"], "");
    assert!(stdout(&o).contains("large_degree_threshold: true"));
}
