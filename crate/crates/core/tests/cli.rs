use std::io::Write;
use std::process::{Command, Output, Stdio};

use equitor::cli::{Report, TaskResult};
use equitor::FieldSpec;

const EXAMPLE: &str = r#"{"n":3,"generators":[[4,1,1],[5,2,0]],"characteristic":0,"tasks":["betti"]}"#;

fn equitor(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_equitor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_output_from_stdin() {
    let out = equitor(&[], EXAMPLE);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("ideal <(4,1,1),(5,2,0)>_S3 over QQ\n"), "{text}");
    assert!(text.contains(
        "Betti table of I:\n       0  1 2\ntotal: 9 12 4\n    6: 3  . .\n    7: 6  6 .\n    8: .  3 .\n    9: .  3 3\n   10: .  . 1\n"
    ));
    assert!(text.contains("Betti table of R/I:\n       0 1  2 3\ntotal: 1 9 12 4\n"), "{text}");
}

#[test]
fn job_from_file() {
    let dir = std::env::temp_dir().join(format!("equitor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("job.json");
    std::fs::write(&path, EXAMPLE).unwrap();
    let out = equitor(&[path.to_str().unwrap(), "--task", "dual"], "");
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dual generators: (3,3,3), (4,4,0), (inf,1,0)\n"));
}

#[test]
fn json_output_round_trips() {
    let out = equitor(&["--format", "json", "--task", "betti", "--task", "reg-pdim", "-"], EXAMPLE);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.n, 3);
    assert_eq!(report.field, FieldSpec::RATIONALS);
    match &report.results[1] {
        TaskResult::RegPdim { reg_quotient, pdim_quotient, .. } => assert_eq!((*reg_quotient, *pdim_quotient), (9, 3)),
        other => panic!("unexpected {other:?}"),
    }
    let again = equitor(&["--format", "json", "--task", "betti", "--task", "reg-pdim"], EXAMPLE);
    assert_eq!(again.stdout, out.stdout);
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = equitor(&["--task", "verify", "--threads", "2"], EXAMPLE);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS Tor_2<(5,5,1)>: formula 3 oracle 3\n"), "{text}");
    assert!(text.contains("verify: PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn propagate_task() {
    let job = r#"{"n":2,"generators":[[5,1],[2,2]],"tasks":["propagate:4"]}"#;
    let out = equitor(&[], job);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("gamma_1^{(5,2,2,2),(0,2)} = 1\n"), "{text}");
    assert!(text.contains("total: 18 32 19 4\n"));
}

#[test]
fn input_errors_exit_one() {
    for bad in [
        "not json",
        r#"{"n":3,"generators":[[1,2]]}"#,
        r#"{"n":3,"generators":[[1,1,1]],"characteristic":6}"#,
        r#"{"n":3,"generators":[[1,1,1]],"tasks":["nope"]}"#,
        r#"{"n":2,"generators":[],"tasks":["betti"]}"#,
    ] {
        let out = equitor(&[], bad);
        assert_eq!(out.status.code(), Some(1), "{bad}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "), "{bad}");
    }
    let out = equitor(&["--task", "propagate:x"], EXAMPLE);
    assert_eq!(out.status.code(), Some(1));
    let out = equitor(&["/nonexistent/job.json"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reorder_and_modular_warnings() {
    let out = equitor(&[], r#"{"n":3,"generators":[[0,1,1]],"characteristic":3,"tasks":["equivariant"]}"#);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("warning: generator [0, 1, 1] reordered to (1,1,0)\n"), "{text}");
    assert!(text.contains("(associated graded only)\n"));
}

#[test]
fn failed_verification_is_reported() {
    let report = Report {
        n: 1,
        field: FieldSpec::RATIONALS,
        generators: vec![],
        warnings: vec![],
        results: vec![TaskResult::Verify { compared: 1, checks: vec![], all_pass: false }],
    };
    assert!(!report.verified());
    assert!(report.render_text().contains("verify: FAIL"));
}
