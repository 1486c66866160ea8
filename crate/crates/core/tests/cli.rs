//! The installed binary: exit codes, stream separation and round trips.

use std::process::{Command, Output};

use concatset::oracle::enumerate_sets;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_concatset")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decode_of_encode_reproduces_every_small_set() {
    for s in enumerate_sets(2, 2) {
        let text = s.to_string();
        let enc = run(&["encode", "--set", &text]);
        assert_eq!(enc.status.code(), Some(0));
        let code = stdout(&enc).trim().to_string();
        let dec = run(&["decode", &code]);
        assert_eq!(dec.status.code(), Some(0));
        assert_eq!(stdout(&dec).trim(), text);
    }
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&run(&["encode", "--set", "{a,b}"])), "baaabbababb\n");
    assert_eq!(stdout(&run(&["decode", "aa"])), "{}\n");
    let check = run(&["check", "--suite", "qt", "--max-len", "6"]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).contains("8/8 hold"));
}

#[test]
fn diagnostics_go_to_stderr_with_status_2() {
    for args in [
        &["decode", "abc"][..],
        &["decode", "bab"],
        &["encode", "--set", "{a,"],
        &["adjoin", "ab", "a"],
        &["translate", "--map", "star", "--formula", "x in"],
        &["check", "--suite", "nope"],
        &["num", "--from", "0"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn failing_suite_reports_counterexample() {
    let o = run(&["check", "--suite", "qt", "--max-len", "3", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unknown"));
}

#[test]
fn membership_answers_by_status() {
    assert_eq!(run(&["member", "ab", "bbaababb"]).status.code(), Some(0));
    assert_eq!(run(&["member", "ba", "bbaababb"]).status.code(), Some(1));
}
