// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixture vectors: a JSON array of `{id, op, inputs, expected}` objects.
//!
//! An expected object matches when every key it lists is present in the
//! actual output with an equal value; any other expected value must match
//! exactly.

use std::path::Path;

use kuttaka::codecs::{
    aryabhata_decode, aryabhata_encode, katapayadi_decode, katapayadi_encode, Chooser,
    KatapayadiTable, Order, ReciprocalCipher,
};
use kuttaka::{
    choose_mati, extended_euclid, mutual_division, reduce_valli, solve, solve_pair, solve_system,
    Congruence, Equation, Parity, Valli,
};
use serde_json::{json, Value};

use crate::envelope::{num, nums};

#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    pub id: String,
    pub op: String,
    pub inputs: Value,
    pub expected: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    Fail { actual: Result<Value, String> },
}

pub fn load(path: &Path) -> Result<Vec<Vector>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse(&text)
}

/// Blank input counts as an empty list.
pub fn parse(text: &str) -> Result<Vec<Vector>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let value: Value =
        serde_json::from_str(text).map_err(|e| format!("invalid fixture JSON: {e}"))?;
    let items = value
        .as_array()
        .ok_or("fixture file must hold a JSON array of vectors")?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let field = |name: &str| {
                item.get(name)
                    .cloned()
                    .ok_or_else(|| format!("vector #{} has no {name:?}", i + 1))
            };
            let text_field = |name: &str| -> Result<String, String> {
                field(name)?
                    .as_str()
                    .map(str::to_string)
                    .ok_or_else(|| format!("vector #{}: {name:?} must be a string", i + 1))
            };
            Ok(Vector {
                id: text_field("id")?,
                op: text_field("op")?,
                inputs: field("inputs")?,
                expected: field("expected")?,
            })
        })
        .collect()
}

pub fn check(vector: &Vector) -> Outcome {
    let actual = evaluate(&vector.op, &vector.inputs);
    match &actual {
        Ok(v) if matches(&vector.expected, v) => Outcome::Pass,
        _ => Outcome::Fail { actual },
    }
}

fn matches(expected: &Value, actual: &Value) -> bool {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => e
            .iter()
            .all(|(k, ev)| a.get(k).is_some_and(|av| matches(ev, av))),
        _ => expected == actual,
    }
}

fn int(inputs: &Value, name: &str) -> Result<i64, String> {
    inputs
        .get(name)
        .and_then(Value::as_i64)
        .ok_or_else(|| format!("input {name:?} must be an integer"))
}

fn uint(inputs: &Value, name: &str) -> Result<u64, String> {
    inputs
        .get(name)
        .and_then(Value::as_u64)
        .ok_or_else(|| format!("input {name:?} must be a nonnegative integer"))
}

fn text<'a>(inputs: &'a Value, name: &str) -> Result<&'a str, String> {
    inputs
        .get(name)
        .and_then(Value::as_str)
        .ok_or_else(|| format!("input {name:?} must be a string"))
}

fn congruence(v: &Value) -> Result<Congruence, String> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([r, m]) => {
            let (r, m) = (r.as_u64(), m.as_u64());
            match (r, m) {
                (Some(r), Some(m)) => Congruence::new(r, m).map_err(|e| e.to_string()),
                _ => Err("congruence must be [residue, modulus]".into()),
            }
        }
        _ => Err("congruence must be [residue, modulus]".into()),
    }
}

pub fn table_named(name: &str) -> Result<KatapayadiTable, String> {
    match name {
        "sanskrit" => Ok(KatapayadiTable::sanskrit()),
        "english" => Ok(KatapayadiTable::english()),
        other => Err(format!("unknown table {other:?}")),
    }
}

pub fn chooser_named(name: &str) -> Result<Chooser, String> {
    match name {
        "first" => Ok(Chooser::FirstRow),
        "cycle" => Ok(Chooser::Cycle),
        other => other
            .strip_prefix("row")
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(|n| Chooser::Row(n - 1))
            .ok_or_else(|| format!("unknown chooser {other:?} (first, cycle, row1, row2, ...)")),
    }
}

pub fn evaluate(op: &str, inputs: &Value) -> Result<Value, String> {
    let err = |e: kuttaka::Error| e.to_string();
    match op {
        "mutual_division" => {
            let chain =
                mutual_division(int(inputs, "a")?.into(), int(inputs, "b")?.into()).map_err(err)?;
            Ok(json!({
                "quotients": nums(&chain.quotients),
                "remainders": nums(&chain.remainders),
                "gcd": num(chain.gcd),
            }))
        }
        "choose_mati" => {
            let parity = match text(inputs, "parity")? {
                "even" => Parity::Even,
                "odd" => Parity::Odd,
                other => return Err(format!("parity must be even or odd, got {other:?}")),
            };
            let (mati, q) = choose_mati(
                int(inputs, "r_last")?.into(),
                int(inputs, "d_prev")?.into(),
                int(inputs, "c")?.into(),
                parity,
            )
            .map_err(err)?;
            Ok(json!({ "mati": num(mati), "q": num(q) }))
        }
        "reduce_valli" => {
            let entries = inputs
                .get("entries")
                .and_then(Value::as_array)
                .ok_or("input \"entries\" must be an array")?
                .iter()
                .map(|v| {
                    v.as_i64()
                        .map(i128::from)
                        .ok_or("valli entries must be integers")
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (top, second) = reduce_valli(&Valli::new(entries).map_err(err)?).map_err(err)?;
            Ok(json!({ "top": num(top), "second": num(second) }))
        }
        "solve" => {
            let eq = Equation::new(int(inputs, "a")?, int(inputs, "c")?, int(inputs, "b")?)
                .map_err(err)?;
            let s = solve(&eq).map_err(err)?;
            Ok(json!({
                "x_raw": num(s.x_raw),
                "y_raw": num(s.y_raw),
                "x_min": num(s.x_min),
                "y_min": num(s.y_min),
                "period_x": num(s.period_x),
                "period_y": num(s.period_y),
            }))
        }
        "extended_euclid" => {
            let b = int(inputs, "b")?;
            let (g, s, t) = extended_euclid(int(inputs, "a")?.into(), b.into()).map_err(err)?;
            Ok(json!({
                "g": num(g),
                "s": num(s),
                "t": num(t),
                "s_mod_b": num(s.rem_euclid(b.into())),
            }))
        }
        "mod_inverse" => {
            let v = kuttaka::mod_inverse(uint(inputs, "a")?, uint(inputs, "m")?).map_err(err)?;
            Ok(json!(v))
        }
        "solve_pair" => {
            let first = congruence(inputs.get("first").unwrap_or(&Value::Null))?;
            let second = congruence(inputs.get("second").unwrap_or(&Value::Null))?;
            let s = solve_pair(first, second).map_err(err)?;
            Ok(json!({ "value": s.value, "combined_modulus": s.combined_modulus }))
        }
        "solve_system" => {
            let cs = inputs
                .get("congruences")
                .and_then(Value::as_array)
                .ok_or("input \"congruences\" must be an array")?
                .iter()
                .map(congruence)
                .collect::<Result<Vec<_>, _>>()?;
            let s = solve_system(&cs).map_err(err)?;
            Ok(json!({ "value": s.value, "combined_modulus": s.combined_modulus }))
        }
        "aryabhata_decode" => Ok(json!(aryabhata_decode(text(inputs, "text")?).map_err(err)?)),
        "aryabhata_encode" => {
            let order = match inputs
                .get("order")
                .and_then(Value::as_str)
                .unwrap_or("descending")
            {
                "descending" => Order::Descending,
                "ascending" => Order::Ascending,
                other => {
                    return Err(format!(
                        "order must be ascending or descending, got {other:?}"
                    ))
                }
            };
            Ok(json!(
                aryabhata_encode(uint(inputs, "n")?, order).map_err(err)?
            ))
        }
        "katapayadi_decode" => {
            let table = table_named(text(inputs, "table")?)?;
            Ok(json!(
                katapayadi_decode(text(inputs, "word")?, &table).map_err(err)?
            ))
        }
        "katapayadi_encode" => {
            let table = table_named(text(inputs, "table")?)?;
            let mut options = table.default_options();
            if let Some(v) = inputs.get("vowel").and_then(Value::as_str) {
                options.vowel = v.to_string();
            }
            if let Some(c) = inputs.get("chooser").and_then(Value::as_str) {
                options.chooser = chooser_named(c)?;
            }
            if let Some(t) = inputs.get("trailing_vowel").and_then(Value::as_bool) {
                options.trailing_vowel = t;
            }
            Ok(json!(katapayadi_encode(
                text(inputs, "digits")?,
                &table,
                &options
            )
            .map_err(err)?))
        }
        "mula_apply" => {
            let cipher = ReciprocalCipher::muladeviya();
            Ok(json!(cipher
                .apply_text(text(inputs, "text")?, false)
                .map_err(err)?))
        }
        other => Err(format!("unknown op {other:?}")),
    }
}
