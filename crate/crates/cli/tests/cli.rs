use std::io::Write;
use std::process::{Command, Output, Stdio};

fn srl(args: &[&str]) -> Output {
    srl_with_input(args, None)
}

fn srl_with_input(args: &[&str], input: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_srl"))
        .args(args)
        .env_remove("SRL_MAX_ORDER")
        .env_remove("SRL_TIME_BUDGET_SECS")
        .env_remove("SRL_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut stdin = child.stdin.take().unwrap();
        if let Some(text) = input {
            stdin.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn constructed_partition_verifies_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8zp5.txt");
    let out = srl(&[
        "construct",
        "d8zp",
        "--p",
        "5",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("rank=19"));
    let out = srl(&[
        "verify",
        "--group",
        "D8xC5",
        "--partition",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid=true group=D8xC5 rank=19\n");
}

#[test]
fn piped_partition_verifies() {
    let built = srl(&["construct", "q8zp-l6", "--p", "7"]);
    let out = srl_with_input(&["verify", "--group", "Q8xC7"], Some(&stdout(&built)));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rank=9"));
}

#[test]
fn invalid_partition_is_a_verdict_failure() {
    let out = srl_with_input(&["verify", "--group", "D8"], Some("0\n1 2\n3 4 5 6 7\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("valid=false"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = srl_with_input(&["verify", "--group", "D8"], Some("0\n1 seven\n"));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert_eq!(
        srl(&["construct", "d8zp", "--p", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        srl(&["construct", "q8zp-l4", "--p", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        srl(&["construct", "nope", "--p", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(srl(&["group", "X9"]).status.code(), Some(2));
}

#[test]
fn schurity_reports_a_split_witness() {
    let out = srl(&[
        "schurity", "--group", "D8xC5", "--family", "d8zp", "--p", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("schurian=false"));
    assert!(text.contains("split_class="));
    let expect = |v: &str| {
        srl(&["schurity", "--family", "d8zp", "--p", "5", "--expect", v])
            .status
            .code()
    };
    assert_eq!(expect("nonschurian"), Some(0));
    assert_eq!(expect("schurian"), Some(1));
    let wrong_group = srl(&[
        "schurity", "--group", "D8xC7", "--family", "d8zp", "--p", "5",
    ]);
    assert_eq!(wrong_group.status.code(), Some(2));
}

#[test]
fn caps_exit_with_three() {
    let out = srl(&[
        "schurity",
        "--family",
        "q8zp-l4",
        "--p",
        "13",
        "--max-order",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_srl"))
        .args(["group", "D8xC13"])
        .env("SRL_MAX_ORDER", "64")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // enumeration beyond order 12 is refused
    assert_eq!(srl(&["census", "--group", "C16"]).status.code(), Some(3));
}

#[test]
fn census_of_q8_is_schur() {
    let out = srl(&["census", "--group", "Q8", "--expect-schur"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("group=Q8 order=8 total=26 schurian=26 nonschurian=0\n"));
}

#[test]
fn json_mirror_parses() {
    let out = srl(&[
        "--json",
        "autgroup",
        "--family",
        "d8zp-quotient",
        "--p",
        "5",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["records"][0]["stabilizer_order"], "2");
    let out = srl(&["--json", "group", "C3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["table"][1], serde_json::json!([1, 2, 0]));
}

#[test]
fn cyclotomy_lines_per_prime() {
    let out = srl(&["cyclotomy", "--l", "4", "--pmax", "60"]);
    assert_eq!(out.status.code(), Some(0));
    // 5 13 17 29 37 41 53
    assert_eq!(stdout(&out).lines().count(), 7);
    assert_eq!(
        srl(&["cyclotomy", "--l", "5", "--pmax", "60"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let a = srl(&["--threads", "1", "census", "--group", "D8"]);
    let b = srl(&["--threads", "4", "census", "--group", "D8"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s1 = srl(&["paper-suite", "--only", "4"]);
    let s2 = srl(&["paper-suite", "--only", "4"]);
    assert_eq!(s1.stdout, s2.stdout);
    assert!(stdout(&s1).contains("passed=true"));
}

#[test]
fn constants_list_nonzero_entries() {
    let out = srl_with_input(&["constants", "--group", "C4"], Some("0\n1 3\n2\n"));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("group=C4 rank=3\n"));
    // {1,3}{1,3} = 2e + 2a^2
    assert!(text.contains("x=1 y=1 z=0 c=2\n"));
    assert!(text.contains("x=1 y=1 z=2 c=2\n"));
}
