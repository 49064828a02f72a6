//! End-to-end tests of the pretzel binary: the documented request/response
//! examples, validation exit codes, and acceptance criterion 10
//! (byte-identical repeated output, text round-trips for every emitted slope
//! and rational).

use std::process::Command;

use pretzel_core::polygon::parse_rational;
use pretzel_core::slopes::Slope;

struct Output {
    stdout: Vec<u8>,
    stderr: String,
    code: i32,
}

fn pretzel(args: &[&str]) -> Output {
    pretzel_with_env(args, &[])
}

fn pretzel_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pretzel"));
    cmd.args(args);
    for (key, value) in env {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("binary runs");
    Output {
        stdout: out.stdout,
        stderr: String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        code: out.status.code().expect("no signal"),
    }
}

fn run_ok(args: &[&str]) -> String {
    let out = pretzel(args);
    assert_eq!(out.code, 0, "{:?} failed: {}", args, out.stderr);
    String::from_utf8(out.stdout).expect("stdout is UTF-8")
}

fn json_ok(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&run_ok(args)).expect("valid JSON")
}

#[test]
fn norm_example_k7() {
    let value = json_ok(&["norm", "--n", "7", "--slope", "17/1"]);
    assert_eq!(value["total"].as_i64(), Some(20));
    assert_eq!(value["slope"].as_str(), Some("17/1"));
}

#[test]
fn system_example_k9() {
    let value = json_ok(&["system", "--n", "9"]);
    assert_eq!(value["S"].as_i64(), Some(18));
    assert_eq!(value["curves"][0]["s"].as_i64(), Some(16));
    assert_eq!(value["curves"][1]["s"].as_i64(), Some(2));
    assert_eq!(value["curves"][1]["kind"].as_str(), Some("r_curve"));
}

#[test]
fn validation_exit_codes() {
    let out = pretzel(&["norm", "--n", "4", "--slope", "1/0"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stderr.contains("odd"), "{}", out.stderr);

    let out = pretzel(&["system", "--n", "5"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("torus"), "{}", out.stderr);

    let out = pretzel(&["norm", "--n", "7", "--slope", "x/2"]);
    assert_eq!(out.code, 2);

    let out = pretzel(&["norm", "--n", "7", "--slope", "0/0"]);
    assert_eq!(out.code, 2);

    let out = pretzel(&["polygon", "--n", "3", "--kind", "newton"]);
    assert_eq!(out.code, 2);

    let out = pretzel(&["polygon", "--n", "7", "--kind", "newton", "--scale", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("fundamental"), "{}", out.stderr);

    let out = pretzel(&["nonsense"]);
    assert_eq!(out.code, 2);

    let out = pretzel(&["sweep", "--n-start", "9", "--n-end", "7"]);
    assert_eq!(out.code, 2);
}

#[test]
fn torus_override_only_for_alexander() {
    assert_eq!(pretzel(&["alexander", "--n", "3"]).code, 2);
    let value = json_ok(&["alexander", "--n", "3", "--allow-torus"]);
    assert_eq!(value["n"].as_i64(), Some(3));
    // Norm data stays undefined for torus members.
    assert!(value.get("dihedral_characters").is_none());
    assert_eq!(pretzel(&["surgeries", "--n", "3"]).code, 2);
}

#[test]
fn alexander_output_k9() {
    let value = json_ok(&["alexander", "--n", "9"]);
    assert_eq!(value["value_at_minus_one"].as_i64(), Some(-3));
    assert_eq!(value["dihedral_characters"].as_i64(), Some(1));
    assert_eq!(value["cyclotomic_roots"][0].as_i64(), Some(6));
    assert_eq!(value["low_exponent"].as_i64(), Some(0));
    let text = run_ok(&["alexander", "--n", "7", "--format", "text"]);
    assert_eq!(text, "1 - t + t^3 - t^4 + t^5 - t^6 + t^7 - t^9 + t^10\n");
}

#[test]
fn characters_output() {
    let value = json_ok(&["characters", "--triangle", "2,3,7"]);
    assert_eq!(value["total"].as_i64(), Some(4));
    assert_eq!(value["reducible"].as_i64(), Some(1));
    assert_eq!(value["irreducible"].as_i64(), Some(3));
    assert_eq!(pretzel(&["characters", "--triangle", "2,3"]).code, 2);
    assert_eq!(pretzel(&["characters", "--triangle", "2,0,7"]).code, 2);
}

#[test]
fn surgeries_tables() {
    let value = json_ok(&["surgeries", "--n", "7"]);
    let verdicts = value["verdicts"].as_array().unwrap();
    let statuses: Vec<(&str, &str)> = verdicts
        .iter()
        .map(|v| (v["slope"].as_str().unwrap(), v["status"].as_str().unwrap()))
        .collect();
    assert_eq!(
        statuses,
        vec![
            ("1/0", "trivial"),
            ("17/1", "realized_finite"),
            ("18/1", "realized_cyclic"),
            ("19/1", "realized_cyclic"),
            ("20/1", "excluded"),
            ("37/2", "excluded"),
        ]
    );
    let csv = run_ok(&["surgeries", "--n", "9", "--format", "csv"]);
    assert!(csv.starts_with("slope,norm_curve,r_curve,total,status,reason\n"));
    assert!(csv.contains("21/1,32,6,38,excluded,odd_dihedral_exclusion\n"));
}

#[test]
fn polygon_outputs() {
    let csv = run_ok(&[
        "polygon", "--n", "-1", "--kind", "newton", "--format", "csv",
    ]);
    assert_eq!(csv, "0,0\n10,1\n14,2\n14,3\n4,2\n0,1\n");
    let csv = run_ok(&[
        "polygon",
        "--n",
        "7",
        "--kind",
        "fundamental",
        "--format",
        "csv",
    ]);
    assert!(csv.contains("12,3/5"));
    let svg = run_ok(&[
        "polygon",
        "--n",
        "7",
        "--kind",
        "fundamental",
        "--format",
        "svg",
    ]);
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<path").count(), 1);
    let value = json_ok(&[
        "polygon",
        "--n",
        "9",
        "--kind",
        "fundamental",
        "--scale",
        "2",
    ]);
    assert_eq!(value["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn sweep_rows() {
    let csv = run_ok(&["sweep", "--n-start", "-9", "--n-end", "9"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,S,s0,s1,surgeries");
    assert!(lines.contains(&"-9,30,28,2,"));
    assert!(
        lines.contains(&"7,12,12,,17/1=realized_finite;18/1=realized_cyclic;19/1=realized_cyclic")
    );
    assert!(lines.contains(&"9,18,16,2,22/1=realized_finite;23/1=realized_finite"));
    // Torus and even members are skipped, so rows run -9,-7,...,-1,7,9.
    assert_eq!(lines.len(), 1 + 7);
}

fn collect_slope_strings(value: &serde_json::Value, out: &mut Vec<String>) {
    match value {
        serde_json::Value::Object(map) => {
            for (key, inner) in map {
                if key == "slope" || key == "boundary" {
                    out.push(inner.as_str().unwrap().to_string());
                } else if key == "boundary_slopes" {
                    for s in inner.as_array().unwrap() {
                        out.push(s.as_str().unwrap().to_string());
                    }
                } else {
                    collect_slope_strings(inner, out);
                }
            }
        }
        serde_json::Value::Array(items) => {
            for inner in items {
                collect_slope_strings(inner, out);
            }
        }
        _ => {}
    }
}

#[test]
fn criterion_10_determinism_and_round_trip() {
    let invocations: Vec<Vec<&str>> = vec![
        vec!["system", "--n", "9"],
        vec!["system", "--n", "-7"],
        vec!["norm", "--n", "7", "--slope", "17/1"],
        vec!["norm", "--n", "9", "--slope", "-72/7", "--per-curve"],
        vec!["alexander", "--n", "35"],
        vec!["alexander", "--n", "-7", "--format", "text"],
        vec!["characters", "--triangle", "3,5,15"],
        vec![
            "polygon",
            "--n",
            "7",
            "--kind",
            "fundamental",
            "--format",
            "svg",
        ],
        vec![
            "polygon",
            "--n",
            "7",
            "--kind",
            "fundamental",
            "--format",
            "csv",
        ],
        vec![
            "polygon", "--n", "-7", "--kind", "newton", "--format", "json",
        ],
        vec![
            "polygon",
            "--n",
            "9",
            "--kind",
            "fundamental",
            "--scale",
            "14/6",
        ],
        vec!["surgeries", "--n", "9"],
        vec!["surgeries", "--n", "13", "--format", "csv"],
        vec!["sweep", "--n-start", "-21", "--n-end", "21"],
        vec![
            "sweep",
            "--n-start",
            "-21",
            "--n-end",
            "21",
            "--format",
            "json",
        ],
    ];
    for args in &invocations {
        let first = pretzel(args);
        assert_eq!(first.code, 0, "{args:?}: {}", first.stderr);
        let second = pretzel(args);
        assert_eq!(
            first.stdout, second.stdout,
            "non-deterministic output for {args:?}"
        );
    }

    // Every slope printed by a JSON subcommand reparses to an equal slope.
    let mut slopes = Vec::new();
    for args in [
        vec!["system", "--n", "-7"],
        vec!["system", "--n", "9"],
        vec!["norm", "--n", "9", "--slope", "44/2", "--per-curve"],
        vec!["surgeries", "--n", "7"],
        vec![
            "sweep",
            "--n-start",
            "7",
            "--n-end",
            "9",
            "--format",
            "json",
        ],
    ] {
        collect_slope_strings(&json_ok(&args), &mut slopes);
    }
    assert!(slopes.len() > 20);
    for text in &slopes {
        let slope: Slope = text.parse().expect("printed slopes reparse");
        assert_eq!(&slope.to_string(), text, "round trip failed");
    }

    // Every rational coordinate in polygon CSV output round-trips.
    for args in [
        [
            "polygon",
            "--n",
            "9",
            "--kind",
            "fundamental",
            "--format",
            "csv",
        ],
        [
            "polygon", "--n", "-7", "--kind", "newton", "--format", "csv",
        ],
    ] {
        let csv = run_ok(&args);
        for line in csv.lines() {
            let (x, y) = line.split_once(',').unwrap();
            for coord in [x, y] {
                let value = parse_rational(coord).expect("coordinates reparse");
                let rendered = if value.denom() == &num_bigint::BigInt::from(1) {
                    value.numer().to_string()
                } else {
                    format!("{}/{}", value.numer(), value.denom())
                };
                assert_eq!(rendered, coord, "round trip failed");
            }
        }
    }

    // Sweep output does not depend on the degree of parallelism.
    let serial = pretzel_with_env(
        &["sweep", "--n-start", "-33", "--n-end", "33"],
        &[("RAYON_NUM_THREADS", "1")],
    );
    let parallel = pretzel_with_env(
        &["sweep", "--n-start", "-33", "--n-end", "33"],
        &[("RAYON_NUM_THREADS", "8")],
    );
    assert_eq!(serial.code, 0);
    assert_eq!(parallel.code, 0);
    assert_eq!(serial.stdout, parallel.stdout);

    println!("acceptance criterion 10 (serialization determinism): PASS");
}
