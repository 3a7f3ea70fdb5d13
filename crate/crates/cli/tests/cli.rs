// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/paper_vectors.json")
}

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kuttaka-kit"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .expect("binary should run")
}

fn kit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kuttaka-kit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary should spawn");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn solve_worked_example() {
    let o = kit(&["solve", "-a", "137", "-b", "60", "-c", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x_min=10 y_min=23"));
    assert!(stderr(&o).is_empty());
}

#[test]
fn solve_trace_shows_the_array() {
    let o = kit(&["solve", "-a", "137", "-b", "60", "-c", "10", "--trace"]);
    let out = stdout(&o);
    assert!(out.contains("mati: 1 x 18 - 10 = 8 x 1"), "{out}");
    assert!(out.contains("    2   2   2   2 297\n"), "{out}");
    assert!(out.contains("    3   3   3 130 130\n"), "{out}");

    let v = json(&kit(&[
        "--json", "--trace", "solve", "-a", "137", "-b", "60", "-c", "10",
    ]));
    let cols: Vec<Vec<i64>> = serde_json::from_value(v["steps"]["valli_columns"].clone()).unwrap();
    assert_eq!(
        cols,
        vec![
            vec![2, 3, 1, 1, 18, 1],
            vec![2, 3, 1, 19, 18],
            vec![2, 3, 37, 19],
            vec![2, 130, 37],
            vec![297, 130],
        ]
    );
}

#[test]
fn solve_trivial_and_unsolvable() {
    let o = kit(&["solve", "-a", "5", "-b", "7", "-c", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("x_min=0 y_min=0 "));

    let o = kit(&["solve", "-a", "6", "-b", "4", "-c", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no solution: gcd 2 does not divide 3"));
    assert!(stdout(&o).is_empty());

    let v = json(&kit(&["solve", "-a", "6", "-b", "4", "-c", "3", "--json"]));
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "no_solution");
    assert!(v.get("result").is_none());
}

#[test]
fn out_of_range_and_bad_numbers_exit_three() {
    assert_eq!(
        kit(&["solve", "-a", "0", "-b", "4", "-c", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        kit(&["solve", "-a", "1000000000000000001", "-b", "4", "-c", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        kit(&["solve", "-a", "x", "-b", "4", "-c", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        kit(&["inverse", "-a", "-3", "-m", "4"]).status.code(),
        Some(3)
    );
}

#[test]
fn inverse_and_congruences() {
    assert_eq!(stdout(&kit(&["inverse", "-a", "137", "-m", "60"])), "53\n");
    assert_eq!(stdout(&kit(&["inverse", "-a", "60", "-m", "137"])), "16\n");
    assert_eq!(
        kit(&["inverse", "-a", "6", "-m", "4"]).status.code(),
        Some(2)
    );

    let o = kit(&["congruence", "-r", "0", "-m", "60", "-r", "10", "-m", "137"]);
    assert!(stdout(&o).starts_with("1380"));
    let v = json(&kit(&[
        "--json",
        "congruence",
        "-r",
        "5",
        "-m",
        "60",
        "-r",
        "15",
        "-m",
        "137",
    ]));
    assert_eq!(v["result"]["value"], 1385);
    assert_eq!(v["result"]["combined_modulus"], 8220);

    let o = kit(&[
        "--json",
        "congruence",
        "-r",
        "1",
        "-m",
        "4",
        "-r",
        "2",
        "-m",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "inconsistent_system");
}

#[test]
fn codecs() {
    assert_eq!(
        stdout(&kit(&["decode", "--code", "aryabhata", "kavajiyi"])),
        "3861\n"
    );
    assert_eq!(stdout(&kit(&["encode", "3861"])), "yijivaka\n");
    assert_eq!(
        stdout(&kit(&["encode", "--ascending", "3861"])),
        "kavajiyi\n"
    );
    assert_eq!(stdout(&kit(&["katapayadi", "mule", "dana"])), "5380\n");
    assert_eq!(
        stdout(&kit(&[
            "katapayadi",
            "--table",
            "english",
            "fog base game bin rip bone nod"
        ])),
        "45155011421113\n"
    );
    assert_eq!(
        stdout(&kit(&[
            "katapayadi",
            "--table",
            "english",
            "--encode",
            "45"
        ])),
        "fog\n"
    );
    assert_eq!(
        stdout(&kit(&["decode", "--code", "katapayadi", "kava sira"])),
        "1472\n"
    );
    assert_eq!(
        stdout(&kit(&["encode", "--code", "katapayadi-english", "45"])),
        "fog\n"
    );
    assert_eq!(stdout(&kit(&["mula", "a"])), "k\n");
    assert_eq!(stdout(&kit_stdin(&["mula"], "ka, ta!\n")), "ak, pk!\n");
    assert_eq!(stdout(&kit_stdin(&["decode"], "yivakaji")), "3861\n");
}

#[test]
fn codec_errors_carry_positions() {
    let o = kit(&["--json", "decode", "kaxa"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["position"], 3);

    assert_eq!(kit(&["mula", "ka-ta"]).status.code(), Some(0));
    let o = kit(&["--json", "--strict", "mula", "ka-ta"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["error"]["position"], 3);

    assert_eq!(kit(&["katapayadi", "mu-le"]).status.code(), Some(0));
    assert_eq!(
        kit(&["--strict", "katapayadi", "mu-le"]).status.code(),
        Some(3)
    );
    assert_eq!(kit(&["decode"]).status.code(), Some(3));
}

#[test]
fn json_is_byte_stable() {
    let cases: &[&[&str]] = &[
        &[
            "--json", "--trace", "solve", "-a", "137", "-b", "60", "-c", "10",
        ],
        &["--json", "inverse", "-a", "137", "-m", "60"],
        &["--json", "decode", "yijivaka"],
        &["--json", "solve", "-a", "6", "-b", "4", "-c", "3"],
    ];
    for args in cases {
        let first = kit(args).stdout;
        assert_eq!(first, kit(args).stdout, "{args:?}");
        assert_eq!(first.iter().filter(|&&b| b == b'\n').count(), 1);
    }
}

#[test]
fn selftest_paths() {
    let path = fixtures();
    let o = kit(&["selftest", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    let o = kit(&["selftest", "--fixtures", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("no vectors"));

    let missing = dir.path().join("missing.json");
    assert_eq!(
        kit(&["selftest", "--fixtures", missing.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"[{"id": "wrong-inverse", "op": "mod_inverse", "inputs": {"a": 137, "m": 60}, "expected": 54}]"#,
    )
    .unwrap();
    let o = kit(&["selftest", "--fixtures", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("wrong-inverse"));
    assert!(stdout(&o).contains("FAIL wrong-inverse"));
}

#[test]
fn bench_paths() {
    let o = kit(&["bench", "--trials", "1", "-a", "137", "-m", "60"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("kuttaka=53 euclid=53"));

    let v = json(&kit(&[
        "--json", "--seed", "7", "bench", "--trials", "10000", "--bits", "32",
    ]));
    assert_eq!(v["result"]["mismatches"], 0);
    assert_eq!(v["result"]["trials"], 10000);

    assert_eq!(kit(&["bench", "--trials", "0"]).status.code(), Some(3));
    assert_eq!(kit(&["bench", "--bits", "64"]).status.code(), Some(3));
    assert_eq!(kit(&["bench", "-a", "6", "-m", "4"]).status.code(), Some(2));
}

#[test]
fn help_and_usage() {
    let o = kit(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("selftest"));
    assert_eq!(kit(&[]).status.code(), Some(3));
    assert_eq!(kit(&["frobnicate"]).status.code(), Some(3));
}
