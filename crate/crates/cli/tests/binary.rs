use std::io::Write;
use std::process::{Command, Output, Stdio};

fn goldroot(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_goldroot"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn substitution_prints_nested_roots() {
    let o = goldroot(&["solve", "x^4-3x^2+1=0", "--method", "substitution"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "method: substitution\n\
         x1 = sqrt((3+sqrt(5))/2)  ~ 1.6180339887\n\
         x2 = -sqrt((3+sqrt(5))/2)  ~ -1.6180339887\n\
         x3 = sqrt((3-sqrt(5))/2)  ~ 0.6180339887\n\
         x4 = -sqrt((3-sqrt(5))/2)  ~ -0.6180339887\n"
    );
    assert!(o.stderr.is_empty());
}

#[test]
fn equation_from_stdin() {
    let o = goldroot(&["solve", "-", "--digits", "3"], "  t^2 - 2 = 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "method: quadratic\nt1 = sqrt(2)  ~ 1.414\nt2 = -sqrt(2)  ~ -1.414\n"
    );
}

#[test]
fn leading_minus_is_an_argument() {
    let o = goldroot(&["solve", "-x^2 + 9"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("x1 = 3"));
}

#[test]
fn equal_answers_true() {
    let o = goldroot(&["equal", "sqrt((3+sqrt(5))/2)", "(1+sqrt(5))/2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");
    let o = goldroot(&["equal", "sqrt((3+sqrt(5))/2)", "(1-sqrt(5))/2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn trace_lists_numbered_steps() {
    let o = goldroot(&["solve", "x^4-3x^2+1=0", "--trace"], "");
    let out = stdout(&o);
    assert!(out.contains("  3. PerfectSquare: (x^2 - 1)^2 = x^2\n"), "{out}");
    assert!(out.contains("  5. Rewrite: x^2 - x - 1 = 0\n"));
    assert!(out.contains("  6. Rewrite: x^2 + x - 1 = 0\n"));
}

#[test]
fn exit_codes_by_error_class() {
    let parse = goldroot(&["solve", "x^2 +* 1"], "");
    assert_eq!(parse.status.code(), Some(1));
    assert!(stderr(&parse).contains("at byte 5"), "{}", stderr(&parse));
    assert!(parse.stdout.is_empty());

    let domain = goldroot(&["eval", "sqrt(1-sqrt(5))"], "");
    assert_eq!(domain.status.code(), Some(2));

    let negative = goldroot(&["solve", "x^4 + x^2 + 1"], "");
    assert_eq!(negative.status.code(), Some(2), "{}", stderr(&negative));

    let scope = goldroot(&["solve", "x^3 - 2"], "");
    assert_eq!(scope.status.code(), Some(3));
    assert!(stderr(&scope).contains("out of scope"));

    let general = goldroot(&["solve", "x^4 + x + 1"], "");
    assert_eq!(general.status.code(), Some(3));

    let deep = goldroot(&["denest", "sqrt(sqrt(2+sqrt(3)))"], "");
    assert_eq!(deep.status.code(), Some(3));

    let golden = goldroot(&["golden", "--n", "65"], "");
    assert_eq!(golden.status.code(), Some(3));
}

#[test]
fn bad_verbs_and_flags_are_usage_errors() {
    for args in [
        &["frobnicate"][..],
        &["solve", "x", "--frob"],
        &["solve", "x", "--digits", "0"],
        &["solve", "x", "--method", "cardano"],
        &["solve"],
        &[],
    ] {
        let o = goldroot(args, "");
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    let help = goldroot(&["--help"], "");
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("charpoly"));
}

#[test]
fn golden_representations() {
    let o = goldroot(&["golden"], "");
    assert_eq!(
        stdout(&o),
        "rho = sqrt((3+sqrt(5))/2)\ncheck: exact, holds\nroot: 1.6180339887\nrho:  1.6180339887\n"
    );
    let o = goldroot(&["golden", "--n", "6", "--digits", "30"], "");
    let out = stdout(&o);
    assert!(out.starts_with("rho = root(6, 9+4*sqrt(5))\ncheck: 30 digits, holds\n"), "{out}");
}

#[test]
fn charpoly_and_denest() {
    let o = goldroot(&["charpoly", "0,1,0,0; 1,0,1,0; 0,1,0,1; 0,0,1,0"], "");
    assert_eq!(stdout(&o), "x^4 - 3x^2 + 1\n");
    let o = goldroot(&["denest", "sqrt(2+sqrt(5))", "--digits", "7"], "");
    assert_eq!(stdout(&o), "sqrt(2+sqrt(5)) does not denest over its field\n~ 2.0581710\n");
    let o = goldroot(&["eval", "2/(1+sqrt(5))", "--digits", "7"], "");
    assert_eq!(stdout(&o), "(-1+sqrt(5))/2\n~ 0.6180339\n");
}
