//! End-to-end checks against the compiled binary: output shapes, exit
//! codes, and byte-level determinism of the JSON emitters.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintinomial"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

fn parse_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout should be one JSON object")
}

#[test]
fn classify_text_reports_the_cyclic_quartic() {
    let out = run(&["classify", "2", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("# seed=0 budget=4194304"), "missing header: {text}");
    assert!(text.contains("disc = 125"), "missing disc: {text}");
    assert!(text.contains("Monogenic"), "missing verdict: {text}");
    assert!(text.contains("C4"), "missing galois label: {text}");
}

#[test]
fn classify_json_roundtrips() {
    let out = run(&["classify", "2", "1", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = parse_json(&out);
    assert_eq!(v["verdict"]["status"], "Monogenic");
    assert_eq!(v["galois"]["label"], "C4");
    // Serialize -> reparse must be lossless.
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
}

#[test]
fn classify_accepts_negative_positionals() {
    let out = run(&["classify", "2", "-3", "-3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("W1=5 W2=-7 W3=29"), "bad invariants: {text}");
    assert!(text.contains("Monogenic"), "missing verdict: {text}");
}

#[test]
fn classify_splits_the_family_octic() {
    let out = run(&["classify", "3", "1", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("irreducible: no"), "expected reducible: {text}");
    assert!(text.contains("x^4 + x^3 + x^2 - x + 1"), "missing factor: {text}");
    assert!(text.contains("x^4 - x^3 + x^2 + x + 1"), "missing factor: {text}");
    assert!(text.contains("NotWreath"), "missing galois: {text}");
}

#[test]
fn classify_flags_the_wreath_octic() {
    let out = run(&["classify", "3", "9", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("irreducible: yes"), "expected irreducible: {text}");
    assert!(text.contains("NotMonogenic"), "missing verdict: {text}");
    assert!(text.contains("WreathC2sqC2"), "missing galois label: {text}");
}

#[test]
fn search_stream_is_deterministic() {
    let args = [
        "search", "2", "--a-min", "-11", "--a-max", "13", "--b-min", "-11", "--b-max", "13",
    ];
    let text = run(&args);
    assert_eq!(text.status.code(), Some(0));
    let body = stdout_str(&text);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("# seed=0 budget=4194304"));
    assert_eq!(
        lines.next(),
        Some("n,a,b,w1,w2,w3,status,obstruction_primes,galois,field_disc")
    );

    let mut json_args = args.to_vec();
    json_args.push("--json");
    let first = run(&json_args);
    let second = run(&json_args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "search --json must be byte-stable");

    // JSONL: a stream header, then one record object per line.
    let body = stdout_str(&first);
    let mut lines = body.lines();
    let header: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(header["seed"], 0);
    assert_eq!(header["budget"], 4194304);
    let mut records = 0usize;
    for line in lines {
        let rec: Value = serde_json::from_str(line).expect("each record line is JSON");
        assert!(rec["params"]["n"].is_u64(), "record missing params: {rec}");
        records += 1;
    }
    assert!(records > 0, "search produced no records");
}

#[test]
fn pell_table_pins_the_square_row() {
    let out = run(&["pell", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(
        text.contains("4\t29\t13\t29\t61\tW2 = 121 = L(5)^2"),
        "missing frozen row: {text}"
    );

    let json = parse_json(&run(&["pell", "--max-n", "6", "--json"]));
    let row = &json["rows"][3];
    assert_eq!(row["n"], 4);
    assert_eq!(row["a"], "29");
    assert_eq!(row["b"], "61");
    assert_eq!(row["square"], "W2 = 121 = L(5)^2");
    // Even-step rows have no (A, B) attached.
    assert!(json["rows"][1]["a"].is_null());
}

#[test]
fn density_example_has_no_obstruction() {
    let ascii = run(&["density", "--factors", "-1,4|5,12|5,-8,16", "--X", "2000", "--json"]);
    assert_eq!(ascii.status.code(), Some(0));
    let v = parse_json(&ascii);
    assert_eq!(v["report"]["scan"]["obstructed"], Value::Array(vec![]), "obstructed: {v}");
    assert_eq!(v["report"]["ng"]["undecided"], 0);
    assert_eq!(v["report"]["cg"]["vanishes"], false);

    // The Unicode minus sign is accepted and yields the same bytes.
    let unicode = run(&[
        "density", "--factors", "\u{2212}1,4|5,12|5,\u{2212}8,16", "--X", "2000", "--json",
    ]);
    assert_eq!(unicode.status.code(), Some(0));
    assert_eq!(ascii.stdout, unicode.stdout);
}

#[test]
fn exit_codes_follow_the_contract() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    // Semiprime W1 beyond the trial-division bound with a starved budget:
    // the verdict stays Undecided and the exit code signals exhaustion.
    let starved = run(&["classify", "2", "1", "1000036000099", "--budget", "1"]);
    assert_eq!(starved.status.code(), Some(2));
    assert!(stdout_str(&starved).contains("Undecided"));
}

#[test]
fn verify_suite_passes_and_is_deterministic() {
    let first = run(&["verify", "--json"]);
    assert_eq!(first.status.code(), Some(0));
    let v = parse_json(&first);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["criteria"].as_array().map(Vec::len), Some(12));

    let second = run(&["verify", "--json"]);
    assert_eq!(first.stdout, second.stdout, "verify --json must be byte-stable");
}
