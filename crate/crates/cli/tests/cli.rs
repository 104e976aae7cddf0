use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn compare_witness() {
    assert_eq!(stdout(&["compare", "-k", "2", "ab", "aab"]), ">\n");
    assert_eq!(stdout(&["compare", "-k", "2", "a", "aa"]), "<\n");
    assert_eq!(stdout(&["compare", "-k", "3", "cB", "cB"]), "=\n");
    assert_eq!(stdout(&["compare", "-k", "3", "1,2", "1,1,2"]), ">\n");
    assert_eq!(stdout(&["compare", "-k", "3", "-1,1,2", "2"]), "=\n");
}

#[test]
fn orbit_values() {
    assert_eq!(stdout(&["orbit", "-k", "3", ""]), "0\n");
    assert_eq!(stdout(&["orbit", "-k", "3", "cB"]), "4/9\n");
    assert_eq!(stdout(&["orbit", "-k", "3", "-1"]), "-1/42\n");
}

#[test]
fn weight_and_sign() {
    assert_eq!(stdout(&["weight", "-k", "3", "cB"]), "0.5\n");
    assert_eq!(stdout(&["weight", "-k", "3", "Ca"]), "-0.5\n");
    assert_eq!(stdout(&["weight", "-k", "3", "--fraction", "cBcA"]), "3/2\n");
    assert_eq!(stdout(&["sign", "-k", "3", "A"]), "-\n");
    assert_eq!(stdout(&["sign", "-k", "3", "aA"]), "0\n");
    assert_eq!(stdout(&["sign", "-k", "3", "a b"]), "+\n");
}

#[test]
fn sort_small_ball() {
    let out = stdout(&["sort", "-k", "2", "-r", "1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    let pos = |w: &str| lines.iter().position(|l| *l == w).unwrap();
    assert!(pos("") < pos("a") && pos("a") < pos("b"));
    assert!(pos("B") < pos("A") && pos("A") < pos(""));
    assert_eq!(out, stdout(&["sort", "-k", "2", "-r", "1"]));
}

#[test]
fn verify_summary() {
    let out = stdout(&["verify", "-k", "3", "-r", "3"]);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("k=3 r=3 words=187 mismatches=0 elapsed="), "{first}");
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn pingpong_report() {
    let out = stdout(&["pingpong", "-k", "3"]);
    assert!(out.starts_with("k=3 inclusions=6 passed=6\n"), "{out}");
    assert!(out.contains("a [0,6/7) -> [1/7,2/7) in a' [1/7,2/7) ok"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["weight", "-k", "3", "d"][..],
        &["weight", "-k", "1", "a"],
        &["compare", "-k", "3", "a"],
        &["orbit", "-k", "3", "1,0"],
        &["frobnicate"],
        &["sort", "-k", "x", "-r", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
