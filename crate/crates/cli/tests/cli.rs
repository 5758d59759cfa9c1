use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_glyndon")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1, "{text}");
    (serde_json::from_str(lines[0]).unwrap(), out.status.code().unwrap())
}

#[test]
fn galois_word_example() {
    let (v, code) = run(&["is-lyndon", "01000010", "--order", "alternating", "--alphabet", "0,1"]);
    assert_eq!(v["is_gl"], true);
    assert_eq!(v["word"], "01000010");
    assert!(v.get("witness_rotation").is_none());
    assert_eq!(code, 0);
}

#[test]
fn non_lyndon_word_has_witness() {
    let (v, code) = run(&["is-lyndon", "0101", "--order", "alternating"]);
    assert_eq!(v["is_gl"], false);
    assert_eq!(v["witness_rotation"], "0101");
    assert_eq!(code, 1);
    let (v, code) = run(&["is-lyndon", "(01)^w", "--order", "alternating"]);
    assert_eq!((v["is_gl"].clone(), v["witness_suffix"].clone(), code), (Value::Bool(false), 3.into(), 1));
    let (v, code) = run(&["is-lyndon", "010000100(1)^w", "--order", "alternating"]);
    assert_eq!((v["is_gl"].clone(), code), (Value::Bool(true), 0));
}

#[test]
fn periodic_factorization_example() {
    let (v, code) = run(&["factorize", "(01)^w", "--order", "alternating", "--alphabet", "0,1"]);
    assert_eq!(v["head"], serde_json::json!([]));
    assert_eq!(v["tail"], serde_json::json!({"kind": "periodic", "value": "01"}));
    assert_eq!(code, 0);
}

#[test]
fn opposite_comparison_example() {
    let (v, _) = run(&["compare", "0", "1", "--order", "opposite", "--alphabet", "0,1"]);
    assert_eq!(v["ordering"], "GT");
    assert_eq!(v["decision_index"], 1);
    let (v, _) = run(&["compare", "01", "(01)^w"]);
    assert_eq!(v["ordering"], "LT");
    assert_eq!(v["decision_index"], Value::Null);
}

#[test]
fn factors_round_trip() {
    let word = "b,c,a,a,b,c,c,a,b";
    let (v, _) = run(&["factorize", word, "--alphabet", "a,b,c", "--order", "alternating"]);
    let factors: Vec<&str> = v["factors"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
    assert_eq!(factors.concat(), word.replace(',', ""));
    for f in factors {
        let (r, code) = run(&["is-lyndon", f, "--alphabet", "a,b,c", "--order", "alternating"]);
        assert_eq!((r["word"].as_str().unwrap(), code), (f, 0));
    }
    let (v, _) = run(&["factorize", "x2,x1(x1,x2)^w", "--alphabet", "x1,x2"]);
    let tail = v["tail"]["value"].as_str().unwrap();
    let (r, code) = run(&["is-lyndon", tail, "--alphabet", "x1,x2"]);
    assert_eq!((r["word"].as_str().unwrap(), code), (tail, 0));
    assert_eq!(v["word"], "x2,x1(x1,x2)^w");
}

#[test]
fn census_and_stream_reports() {
    let (v, _) = run(&["census", "(01)^w", "--budget", "9", "--order", "alternating"]);
    assert_eq!(v["gl_prefix_lengths"], serde_json::json!([1, 2, 3, 5, 7, 9]));
    let (v, _) = run(&["census", "thue_morse", "--budget", "512"]);
    assert_eq!(v["verdict"], "LIKELY_NOT_GL");
    let (v, code) = run(&["factorize-stream", "fibonacci_word", "--budget", "256"]);
    let head: usize = v["head"].as_array().unwrap().iter().map(|f| f.as_str().unwrap().len()).sum();
    assert_eq!(v["tail"]["kind"], "open");
    assert_eq!(v["tail"]["residual_index"], head + 1);
    assert_eq!(code, 0);
}

#[test]
fn morphism_file_stream() {
    let dir = std::env::temp_dir().join(format!("glyndon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fib.json");
    std::fs::write(&path, r#"{ "seed": "0", "rules": { "0": "01", "1": "0" } }"#).unwrap();
    let arg = format!("@{}", path.display());
    let (file, _) = run(&["census", &arg, "--budget", "200"]);
    let (builtin, _) = run(&["census", "fibonacci_word", "--budget", "200"]);
    assert_eq!(file["gl_prefix_lengths"], builtin["gl_prefix_lengths"]);
}

#[test]
fn check_suite_is_deterministic() {
    let a = run(&["check", "uniqueness", "--trials", "30", "--seed", "7"]);
    let b = run(&["check", "uniqueness", "--trials", "30", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.0["passed"], 30);
    assert_eq!(a.1, 0);
}

#[test]
fn conjecture_reports_witness() {
    let (v, _) = run(&["conjecture", "01000010", "--order", "alternating"]);
    assert_eq!(v["status"], "witness");
    let w = v["witness"].as_str().unwrap();
    assert!(w.starts_with("01000010"));
    let (r, code) = run(&["is-lyndon", w, "--order", "alternating"]);
    assert_eq!((r["is_gl"].clone(), code), (Value::Bool(true), 0));
    let (v, _) = run(&["conjecture", "01", "--max-period", "0", "--order", "alternating"]);
    assert_eq!(v["status"], "inconclusive");
}

#[test]
fn errors_are_structured() {
    let (v, code) = run(&["is-lyndon", "01x"]);
    assert_eq!((v["error"].as_str().unwrap(), v["position"].clone(), code), ("parse", 2.into(), 2));
    let (v, code) = run(&["factorize", "0(1)"]);
    assert_eq!((v["error"].as_str().unwrap(), code), ("parse", 2));
    let (v, code) = run(&["is-lyndon", "01", "--order", "sideways"]);
    assert_eq!((v["error"].as_str().unwrap(), code), ("usage", 2));
    let (v, code) = run(&["conjecture", "10"]);
    assert_eq!((v["error"].as_str().unwrap(), code), ("usage", 2));
}

#[test]
fn schedule_file_order() {
    let dir = std::env::temp_dir().join(format!("glyndon-order-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("alt.json");
    std::fs::write(&path, r#"{"alphabet":["0","1"],"preperiod":[],"period":[["0","1"],["1","0"]]}"#).unwrap();
    let arg = format!("@{}", path.display());
    let (v, code) = run(&["is-lyndon", "01000010", "--order", &arg]);
    assert_eq!((v["is_gl"].clone(), code), (Value::Bool(true), 0));
}
