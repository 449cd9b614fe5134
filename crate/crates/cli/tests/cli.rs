use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn moorekit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_moorekit"))
        .args(args)
        .env_remove("MOOREKIT_SEED")
        .env_remove("MOOREKIT_BUDGET")
        .env_remove("MOOREKIT_EXHAUSTIVE_BOUND")
        .env_remove("MOOREKIT_CHAR")
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

fn lines(o: &Output) -> Vec<Value> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("single-line JSON"))
        .collect()
}

fn corpus() -> String {
    let o = moorekit(&["corpus"], "");
    assert_eq!(o.status.code(), Some(0));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn sset_four_lists_sixteen_in_order() {
    let o = moorekit(&["sset", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    let ls = lines(&o);
    let list: Vec<&str> = ls[0]["s_set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(
        list,
        [
            "∅4",
            "(3)",
            "(2)",
            "(3,2)",
            "(1)",
            "(3,1)",
            "(2,1)",
            "(3,2,1)",
            "(0)",
            "(3,0)",
            "(2,0)",
            "(3,2,0)",
            "(1,0)",
            "(3,1,0)",
            "(2,1,0)",
            "(3,2,1,0)"
        ]
    );
    assert_eq!(ls.last().unwrap()["summary"], "sset");
}

#[test]
fn pset_sizes() {
    for (n, len) in [(2, 1), (3, 6), (4, 25)] {
        let o = moorekit(&["pset", &n.to_string()], "");
        assert_eq!(lines(&o)[0]["p_set"].as_array().unwrap().len(), len);
    }
}

#[test]
fn corpus_pipes_into_verify_xmod() {
    let c = corpus();
    let o = moorekit(&["verify-xmod", "ideal-pair"], &c);
    assert_eq!(o.status.code(), Some(0));
    let ls = lines(&o);
    let last = ls.last().unwrap();
    assert_eq!(last["exit"], 0);
    assert_eq!(last["records"].as_u64().unwrap() as usize, ls.len() - 1);

    let o = moorekit(&["verify-xmod", "cm2-mutant"], &c);
    assert_eq!(o.status.code(), Some(1));
    let cm2 = lines(&o).into_iter().find(|l| l["check"] == "CM2").unwrap();
    assert_eq!(cm2["status"], "fail");
    assert!(!cm2["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn to_3xmod_then_verify_reports_all_sixteen_axioms() {
    let c = corpus();
    let built = moorekit(&["to-3xmod", "ideal-pair"], &c);
    assert_eq!(built.status.code(), Some(0));
    let o = moorekit(
        &["verify-3xmod", "ideal-pair"],
        &String::from_utf8(built.stdout).unwrap(),
    );
    let ls = lines(&o);
    for i in 1..=16 {
        let name = format!("3CM{i}");
        assert!(
            ls.iter().any(|l| l["check"]
                .as_str()
                .is_some_and(|c| c == name || c.starts_with(&format!("{name}: ")))),
            "{name} missing"
        );
    }
    assert!(matches!(o.status.code(), Some(0 | 2)));
}

#[test]
fn unknown_names_exit_65() {
    let o = moorekit(&["moore", "no-such-object"], &corpus());
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-object"));
    let last = lines(&o).pop().unwrap();
    assert_eq!(last["exit"], 65);

    let doc = r#"{"morphisms":{"f":{"source":"a","target":"b","matrix":[]}}}"#;
    let o = moorekit(&["validate"], doc);
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("morphisms.f.source"));
}

#[test]
fn malformed_input_exits_65() {
    for doc in [
        "{",
        r#"{"algebras":{"a":{"p":4,"dim":1,"structure":[]}}}"#,
        r#"{"colour":1}"#,
    ] {
        let o = moorekit(&["validate"], doc);
        assert_eq!(o.status.code(), Some(65), "{doc}");
    }
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["bogus"][..],
        &["sset", "9"],
        &["pset"],
        &["tables", "5", "x"],
        &["corpus", "--seed", "x"],
    ] {
        assert_eq!(moorekit(args, "").status.code(), Some(64), "{args:?}");
    }
    let c = corpus();
    let o = moorekit(&["to-2xmod", "ideal-pair", "--convention", "sideways"], &c);
    assert_eq!(o.status.code(), Some(64));
    assert_eq!(moorekit(&["--help"], "").status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let c = corpus();
    assert_eq!(c, corpus());
    for args in [
        &["table1", "ideal-pair"][..],
        &["to-3xmod", "ideal-pair"],
        &["lie-verify", "heisenberg-chain-mutant"],
    ] {
        let a = moorekit(args, &c);
        let b = moorekit(args, &c);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn seed_flag_and_env_agree() {
    let built = moorekit(&["to-3xmod", "ideal-pair"], &corpus());
    let c = String::from_utf8(built.stdout).unwrap();
    let a = moorekit(
        &["verify-3xmod", "ideal-pair", "--seed", "7", "--budget", "5"],
        &c,
    );
    let mut child = Command::new(env!("CARGO_BIN_EXE_moorekit"))
        .args(["verify-3xmod", "ideal-pair"])
        .env("MOOREKIT_SEED", "7")
        .env("MOOREKIT_BUDGET", "5")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(c.as_bytes()).unwrap();
    let b = child.wait_with_output().unwrap();
    assert!(matches!(a.status.code(), Some(0 | 2)));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_file_flag() {
    let path = std::env::temp_dir().join(format!("moorekit-cli-{}.json", std::process::id()));
    std::fs::write(&path, corpus()).unwrap();
    let p = path.to_str().unwrap();
    let o = moorekit(&["--input", p, "lie-verify", "heisenberg"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = moorekit(&["-i", p, "lie-verify", "alternating-mutant"], "");
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn several_characteristics_share_one_document() {
    let o = moorekit(&["--char", "2,3", "corpus"], "");
    let c = String::from_utf8(o.stdout).unwrap();
    for name in ["ideal-pair@2", "ideal-pair@3"] {
        assert_eq!(
            moorekit(&["verify-xmod", name], &c).status.code(),
            Some(0),
            "{name}"
        );
    }
    let o = moorekit(&["--char", "2,3", "roundtrip", "1"], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn human_output_is_text() {
    let o = moorekit(&["--human", "verify-xmod", "cm2-mutant"], &corpus());
    assert_eq!(o.status.code(), Some(1));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("FAIL") && l.contains("CM2")));
    assert!(text.contains("witness:"));
    assert!(text.trim_end().ends_with("exit 1"));
}
