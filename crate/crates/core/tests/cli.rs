use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: Option<&str>) -> (i32, Value, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zm-forms"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    let Output { status, stdout, stderr } = child.wait_with_output().unwrap();
    let text = String::from_utf8(stdout).unwrap();
    let value = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {text}"));
    (status.code().unwrap(), value, String::from_utf8(stderr).unwrap())
}

fn el(m: usize, c: &[i64]) -> Value {
    let mut full = vec![0; m];
    full[..c.len()].copy_from_slice(c);
    json!({ "m": m, "coeffs": full })
}

#[test]
fn ring_commands() {
    let input = json!([el(4, &[1, 1]), el(4, &[1, -1])]).to_string();
    let (code, v, _) = run(&["--json", "ring", "mul", "--m", "4"], Some(&input));
    assert_eq!(code, 0);
    assert_eq!(v, el(4, &[1, 0, -1]));

    let (_, v, _) = run(&["--json", "ring", "conj", "--m", "4"], Some(&el(4, &[1, 2]).to_string()));
    assert_eq!(v, el(4, &[1, 0, 0, 2]));

    let input = json!([el(5, &[2]), el(5, &[1, -1])]).to_string();
    let (code, v, _) = run(&["--json", "ring", "normalize", "--m", "5"], Some(&input));
    assert_eq!(code, 0);
    assert_eq!(v["l"], 2);
    assert_eq!(v["u"], el(5, &[1, 1]));

    let (code, v, _) = run(&["--json", "ring", "mul", "--m", "3"], Some(&el(4, &[1]).to_string()));
    assert_eq!(code, 1);
    assert!(v["error"].is_string());
}

#[test]
fn form_commands() {
    let (m, z) = (3, el(3, &[]));
    let pair = json!([[el(m, &[1]), z, z, z], [z, z, el(m, &[1]), z]]).to_string();
    let base = ["--json", "form", "eval", "--m", "3", "--rank", "2", "--sign", "-1", "--param", "TILDE"];
    let (code, v, _) = run(&base, Some(&pair));
    assert_eq!(code, 0);
    assert_eq!(v, el(m, &[1]));

    let s = el(m, &[1, 1, 1]);
    let one = el(m, &[1]);
    let good = json!({
        "s": [[one, z, z, z], [z, one, s, z]],
        "u": [[z, z, one, z], [z, z, z, one]],
    });
    let verify = ["--json", "form", "verify", "--m", "3", "--rank", "2", "--sign", "-1", "--param", "TILDE"];
    let (code, _, _) = run(&verify, Some(&good.to_string()));
    assert_eq!(code, 0);
    let bad = json!({
        "s": [[one, z, z, z], [z, one, s, z]],
        "u": [[z, one, z, z], [z, z, z, one]],
    });
    let (code, _, _) = run(&verify, Some(&bad.to_string()));
    assert_eq!(code, 1);

    let (code, _, _) = run(&["--json", "form", "eval", "--m", "3", "--rank", "2", "--sign", "1", "--param", "TILDE"], Some(&pair));
    assert_eq!(code, 1, "(+1, TILDE) is rejected");
}

#[test]
fn lagrangian_commands() {
    let spec = json!({ "a1": el(5, &[]), "a2": el(5, &[1]), "b2": el(5, &[]) }).to_string();
    let (code, v, _) = run(&["--json", "lagrangian", "solve", "--branch", "odd-m", "--m", "5", "--spec", &spec], None);
    assert_eq!(code, 0);
    assert_eq!(v["u"].as_array().unwrap().len(), 2);
    assert!(v["certificate"]["det"].is_object());

    let (code, v, _) = run(&["--json", "--seed", "3", "lagrangian", "sweep", "--m", "4", "--count", "10"], None);
    assert_eq!(code, 0);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2, "even-m and even-n both accept m = 4");
    for r in reports {
        assert_eq!(r["not_complement"], 0);
        assert_eq!(r["seed"], 3);
    }

    let (code, _, _) = run(&["--json", "lagrangian", "solve", "--branch", "odd-m", "--m", "4", "--spec", &spec], None);
    assert_eq!(code, 1);
}

#[test]
fn ahss_commands() {
    let (code, v, _) = run(&["--json", "ahss", "report", "--m", "2"], None);
    assert_eq!(code, 0);
    assert_eq!(v["conclusion"], "zero");
    assert_eq!(v["provenance"], "PAPER_CITED");
    let (_, v, _) = run(&["--json", "ahss", "report", "--m", "6", "--twisted"], None);
    assert_eq!(v["provenance"], "COMPUTED");

    let (code, v, _) = run(&["--json", "ahss", "sq", "--m", "2", "--k", "2", "--class", "x^3"], None);
    assert_eq!(code, 0);
    assert_eq!(v["result"], "x^5");
    let (_, v, _) = run(&["--json", "ahss", "sq", "--m", "4", "--k", "2", "--class", "xy"], None);
    assert_eq!(v["result"], "xy^2");
}

#[test]
fn census_exit_codes() {
    let (code, v, stderr) = run(&["census", "--n", "3", "--m", "2", "--g", "3"], None);
    assert_eq!(code, 0);
    assert_eq!(v["class_count"]["count"], 2);
    assert!(!stderr.is_empty(), "human summary goes to stderr");
    let (code, v, _) = run(&["--json", "census", "--n", "3", "--m", "2", "--g", "2"], None);
    assert_eq!(code, 2);
    assert_eq!(v["exists"], false);
    let (code, v, _) = run(&["--json", "census", "--n", "4", "--m", "6", "--g", "5"], None);
    assert_eq!(code, 3);
    assert_eq!(v["class_count"]["kind"], "OUT_OF_RANGE");
    let (code, v, _) = run(&["--json", "census", "--n", "5", "--m", "7", "--g", "8", "--pontryagin", "4"], None);
    assert_eq!(code, 0);
    assert_eq!(v["class_count"]["count"], 7);
    assert!(v["selected_class"].as_str().unwrap().contains("(4)"));
}

#[test]
fn selftest_is_reproducible() {
    let (code, a, _) = run(&["--json", "--seed", "5", "selftest", "--scope", "census"], None);
    assert_eq!(code, 0);
    let (_, b, _) = run(&["--json", "--seed", "5", "selftest", "--scope", "census"], None);
    assert_eq!(a["fail"], 0);
    let strip = |mut v: Value| {
        v["elapsed_ms"] = json!(0);
        v
    };
    assert_eq!(strip(a), strip(b));
}
