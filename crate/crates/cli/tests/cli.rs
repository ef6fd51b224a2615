//! End-to-end checks of the `arrange` binary: the documented command
//! examples, the exit-code contract, JSON canonical form and schema
//! conformance, and the CSV header round trip.

mod common;

use common::{arrange, arrange_with_env, code, json, stderr_str, stdout_str};
use serde_json::Value;

/// Big integers in payloads are decimal strings, optionally negative.
fn assert_decimal(s: &Value) {
    let s = s.as_str().expect("decimal string");
    let digits = s.strip_prefix('-').unwrap_or(s);
    assert!(!digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()), "not decimal: {s}");
}

#[test]
fn charpoly_reports_documented_polynomials() {
    let out = arrange(&["charpoly", "--family", "eq1:a=2,3", "--n", "2", "--format", "json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let v = json(&out);
    assert_eq!(v["coeffs"], serde_json::json!(["6", "-7", "1"]));
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["samples"].as_array().unwrap().len(), 3);
    assert!(v["validation_prime"].as_u64().unwrap() > 100);
    for sample in v["samples"].as_array().unwrap() {
        assert_decimal(&sample["count"]);
    }

    let out = arrange(&["charpoly", "--family", "catalan", "--n", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["coeffs"], serde_json::json!(["0", "20", "-9", "1"]));

    let out = arrange(&["charpoly", "--family", "eq1:a=2,3", "--n", "0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["coeffs"], serde_json::json!(["1"]));
}

#[test]
fn charpoly_honors_prime_floor() {
    let out = arrange(&[
        "charpoly", "--family", "eq1:a=2", "--n", "1", "--prime-floor", "150", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["validation_prime"].as_u64().unwrap() > 150);
    assert!(v["samples"][0]["q"].as_u64().unwrap() > 150);
}

#[test]
fn count_reports_documented_values() {
    let out = arrange(&["count", "--graph", "G:a=2,3;k=22", "--n", "3", "--format", "json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    assert_eq!(json(&out)["counts"], serde_json::json!(["792"]));

    let out = arrange(&["count", "--graph", "F:a=1;k=5", "--n", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["counts"], serde_json::json!(["5"]));

    let union = "G:a=2,3;k=22+F:a=1;k=5";
    let out = arrange(&["count", "--graph", union, "--n", "0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["counts"], serde_json::json!(["1"]));

    // Sizes past the vertex count are honest zeros, not errors.
    let out = arrange(&["count", "--graph", "F:a=1;k=5", "--n", "6", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["counts"], serde_json::json!(["0"]));

    let out = arrange(&["count", "--graph", union, "--all", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["n"].is_null());
    let counts = v["counts"].as_array().unwrap();
    assert_eq!(counts.len(), 28, "s_0..s_27 for 22 + 5 vertices, plus s_27 = 0 tail");
    assert_eq!(counts[0], Value::String("1".into()));
    assert_eq!(counts[1], Value::String("27".into()));
}

#[test]
fn union_counts_multiply_component_polynomials() {
    // s_2 of a disjoint union: pairs within each part plus cross pairs.
    let single = |g: &str| -> i64 {
        let out = arrange(&["count", "--graph", g, "--all", "--format", "json"]);
        assert_eq!(code(&out), 0);
        json(&out)["counts"][1].as_str().unwrap().parse().unwrap()
    };
    let f5 = single("F:a=1;k=5");
    let f7 = single("F:a=1;k=7");
    let out = arrange(&["count", "--graph", "F:a=1;k=5+F:a=1;k=7", "--n", "2", "--format", "json"]);
    let both: i64 = json(&out)["counts"][0].as_str().unwrap().parse().unwrap();
    let s2 = |k: i64| k * (k - 3) / 2;
    assert_eq!(both, s2(5) + s2(7) + f5 * f7);
    assert_eq!((f5, f7), (5, 7));
}

#[test]
fn exit_codes_follow_the_documented_contract() {
    let ok = arrange(&["charpoly", "--family", "braid", "--n", "1"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(code(&arrange(&["--help"])), 0);
    assert_eq!(code(&arrange(&["--version"])), 0);

    // 1: anything the parser or the model rejects.
    let parse_failures: &[&[&str]] = &[
        &["charpoly", "--family", "eq9:a=2", "--n", "2"],
        &["charpoly", "--family", "eq1:a=2", "--n", "2", "--prime-floor", "200000"],
        &["charpoly", "--family", "ratio:a=2;b=2", "--n", "2"],
        &["count", "--graph", "F:a=9;k=9", "--n", "1"],
        &["count", "--graph", "G:a=2", "--n", "1"],
        &["count", "--graph", "Q:a=2;k=5", "--n", "1"],
        &["count", "--graph", "G:a=2;k=22", "--n", "1", "--frobnicate"],
        &["verify", "nonsense"],
        &["verify", "thm3.1", "--a", "2,3", "--parts", "30,32", "--nmax", "3"],
        &["--threads", "0", "charpoly", "--family", "braid", "--n", "1"],
        &["--budget-nodes", "0", "charpoly", "--family", "braid", "--n", "1"],
    ];
    for args in parse_failures {
        let out = arrange(args);
        assert_eq!(code(&out), 1, "args: {args:?}");
        assert!(!stderr_str(&out).is_empty(), "args: {args:?}");
    }

    // 3: the node budget ran out mid-enumeration.
    let out = arrange(&[
        "--budget-nodes", "10", "count", "--graph", "G:a=2,3;k=22", "--n", "3",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stderr_str(&out).contains("budget"));
    let out = arrange(&["--budget-nodes", "10", "charpoly", "--family", "eq1:a=2", "--n", "2"]);
    assert_eq!(code(&out), 3);

    // 4: a verification ran to completion and found a divergence.
    let out = arrange(&[
        "verify", "thm3.4", "--a", "1,3", "--parts", "10,12", "--format", "json",
    ]);
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["pass"], Value::Bool(false));
}

#[test]
fn thread_env_is_a_fallback_for_the_flag() {
    let args = &["charpoly", "--family", "braid", "--n", "1"];
    assert_eq!(code(&arrange_with_env(args, "ARRANGE_THREADS", "2")), 0);
    assert_eq!(code(&arrange_with_env(args, "ARRANGE_THREADS", "abc")), 1);
    let flagged = &["--threads", "1", "charpoly", "--family", "braid", "--n", "1"];
    assert_eq!(code(&arrange_with_env(flagged, "ARRANGE_THREADS", "abc")), 0);
}

#[test]
fn dependent_multipliers_agree_at_dimension_two() {
    // The weight-3 relation 2^2 = 4 cannot bite with only two coordinates:
    // {2,4} yields the same seven hyperplanes in R^2 as any independent
    // pair, so the "dependent set differs" leg honestly fails at n = 2.
    let out = arrange(&["verify", "thm2.1", "--n", "2", "--format", "json"]);
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["pass"], Value::Bool(false));
}

#[test]
fn union_agreement_inside_regime_reports_null_divergence() {
    let out = arrange(&[
        "verify", "thm3.1", "--a", "2,3", "--parts", "30,36", "--nmax", "3", "--format", "json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let v = json(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    assert!(v["first_divergence"].is_null());
    assert_eq!(v["in_regime"], Value::Bool(true));
}

#[test]
fn probe_stays_observational() {
    // No partitions: an empty report, not an error.
    let out = arrange(&["probe", "conj5.2", "--a", "2", "--b", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["experimental"], Value::Bool(true));
    assert_eq!(v["reports"], serde_json::json!([]));

    // A partition the family rejects is reported and skipped, still exit 0.
    let out = arrange(&[
        "probe", "conj5.1", "--a", "1,3", "--parts", "5,7;10,12", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let reports = json(&out)["reports"].as_array().unwrap().clone();
    assert_eq!(reports.len(), 2);
    assert!(reports[0]["error"].is_string());
    assert!(reports[1]["agree"].is_boolean());

    let text = arrange(&["probe", "conj5.1", "--a", "1,3", "--parts", "10,12"]);
    assert_eq!(code(&text), 0);
    assert!(stdout_str(&text).contains("EXPERIMENTAL"));
}

#[test]
fn json_payloads_are_compact_and_sorted() {
    // One line, keys in byte order: reserializing the parsed value must
    // reproduce stdout exactly.
    let invocations: &[&[&str]] = &[
        &["charpoly", "--family", "eq1:a=2,3", "--n", "2", "--format", "json"],
        &["count", "--graph", "G:a=2,3;k=22", "--all", "--format", "json"],
        &["table1", "--q", "23", "--format", "json"],
        &["verify", "thm2.1", "--n", "3", "--format", "json"],
        &["probe", "conj5.2", "--a", "2", "--b", "3", "--parts", "3,4", "--format", "json"],
    ];
    for args in invocations {
        let out = arrange(args);
        let raw = stdout_str(&out);
        assert_eq!(raw.lines().count(), 1, "args: {args:?}");
        let parsed: Value = serde_json::from_str(raw.trim()).unwrap();
        assert_eq!(raw.trim(), parsed.to_string(), "args: {args:?}");
    }
}

#[test]
fn json_payloads_match_the_shipped_schema() {
    let schema_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/output-schema.json");
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).expect("schema file"))
            .expect("schema parses");

    let invocations: &[&[&str]] = &[
        &["charpoly", "--family", "eq1:a=2,3", "--n", "2", "--format", "json"],
        &["charpoly", "--family", "braid", "--n", "0", "--format", "json"],
        &["count", "--graph", "G:a=2,3;k=22", "--n", "3", "--format", "json"],
        &["count", "--graph", "G:a=2,3;k=22+F:a=1;k=5", "--all", "--format", "json"],
        &["table1", "--q", "23,29", "--format", "json"],
        &["verify", "thm2.1", "--n", "3", "--format", "json"],
        &["verify", "thm2.2", "--a", "2", "--nmax", "2", "--format", "json"],
        &["verify", "thm4.1", "--a", "2", "--n", "2", "--format", "json"],
        &["verify", "eq2", "--a", "2", "--n", "2", "--format", "json"],
        &["verify", "thm3.1", "--a", "2,3", "--parts", "30,36", "--nmax", "2", "--format", "json"],
        &["verify", "thm3.4", "--a", "1,3", "--parts", "10,12", "--format", "json"],
        &["verify", "cor3.5", "--a", "2", "--b", "1", "--parts", "6,8;7,7", "--format", "json"],
        &["verify", "oracles", "--count", "5", "--format", "json"],
        &["probe", "conj5.1", "--a", "1,3", "--parts", "5,7;10,12", "--format", "json"],
        &["probe", "conj5.2", "--a", "2", "--b", "3", "--format", "json"],
    ];
    for args in invocations {
        let out = arrange(args);
        let c = code(&out);
        assert!(c == 0 || c == 4, "args: {args:?}, stderr: {}", stderr_str(&out));
        let payload = json(&out);
        if let Err(e) = validate(&schema, &payload, "$") {
            panic!("schema violation for {args:?}: {e}\npayload: {payload}");
        }
    }
}

/// Validates the subset of JSON Schema the shipped schema uses: oneOf,
/// const, type (single name or list), required, properties with
/// additionalProperties: false, and a single items schema.
fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        let mut errors = Vec::new();
        for (i, option) in options.iter().enumerate() {
            match validate(option, value, path) {
                Ok(()) => return Ok(()),
                Err(e) => errors.push(format!("[{i}] {e}")),
            }
        }
        return Err(format!("{path}: no oneOf branch matched ({})", errors.join("; ")));
    }
    if let Some(expected) = schema.get("const") {
        if value != expected {
            return Err(format!("{path}: expected const {expected}, got {value}"));
        }
    }
    if let Some(ty) = schema.get("type") {
        let names: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(list) => list.iter().filter_map(Value::as_str).collect(),
            _ => return Err(format!("{path}: malformed type keyword")),
        };
        if !names.iter().any(|t| type_matches(t, value)) {
            return Err(format!("{path}: expected type {names:?}, got {value}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        let obj = value
            .as_object()
            .ok_or_else(|| format!("{path}: required applies to an object"))?;
        for key in required.iter().filter_map(Value::as_str) {
            if !obj.contains_key(key) {
                return Err(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        if let Some(obj) = value.as_object() {
            let closed = schema.get("additionalProperties") == Some(&Value::Bool(false));
            for (key, sub) in obj {
                match props.get(key) {
                    Some(subschema) => validate(subschema, sub, &format!("{path}.{key}"))?,
                    None if closed => return Err(format!("{path}: unexpected key {key}")),
                    None => {}
                }
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(list) = value.as_array() {
            for (i, item) in list.iter().enumerate() {
                validate(items, item, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn type_matches(name: &str, value: &Value) -> bool {
    match name {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        "integer" => value.as_i64().is_some() || value.as_u64().is_some(),
        "number" => value.is_number(),
        _ => false,
    }
}

#[test]
fn csv_outputs_round_trip_through_documented_headers() {
    let out = arrange(&["charpoly", "--family", "eq1:a=2,3", "--n", "2", "--format", "csv"]);
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("power,coefficient"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows, ["0,6", "1,-7", "2,1"]);

    let out = arrange(&["count", "--graph", "G:a=2,3;k=22", "--n", "3", "--format", "csv"]);
    let text = stdout_str(&out);
    assert_eq!(text.lines().collect::<Vec<_>>(), ["n,count", "3,792"]);

    let out = arrange(&["table1", "--q", "23", "--format", "csv"]);
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a1,a2,23"));
    assert_eq!(lines.next(), Some("2,3,216"));

    let out = arrange(&[
        "verify", "thm3.4", "--a", "1,3", "--parts", "10,12", "--nmax", "2", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0, "n <= 2 sits inside the regime");
    let text = stdout_str(&out);
    assert_eq!(text.lines().next(), Some("n,union_count,single_count"));
    assert!(text.lines().any(|l| l == "2,187,187"));

    let out = arrange(&["probe", "conj5.1", "--a", "1,3", "--parts", "10,12", "--format", "csv"]);
    let text = stdout_str(&out);
    assert_eq!(text.lines().next(), Some("partition,n,union_count,single_count"));

    let out = arrange(&["verify", "thm2.1", "--n", "3", "--format", "csv"]);
    let text = stdout_str(&out);
    assert_eq!(text.lines().next(), Some("field,value"));
}

#[test]
fn text_output_reads_as_sentences() {
    let out = arrange(&["charpoly", "--family", "eq1:a=2,3", "--n", "2"]);
    assert!(stdout_str(&out).contains("chi(t) ="));

    let out = arrange(&["count", "--graph", "G:a=2,3;k=22", "--n", "3"]);
    assert!(stdout_str(&out).contains("s_3 = 792"));

    let out = arrange(&["verify", "thm2.1", "--n", "3"]);
    assert!(stdout_str(&out).contains("result: PASS"));

    let out = arrange(&["verify", "thm3.4", "--a", "1,3", "--parts", "10,12"]);
    assert_eq!(code(&out), 4);
    let text = stdout_str(&out);
    assert!(text.contains("result: FAIL"));
    assert!(text.contains("<- differs"));
}
