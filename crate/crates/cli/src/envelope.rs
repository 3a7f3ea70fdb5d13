// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! The JSON envelope printed with `--json`. Field names are frozen in
//! `docs/cli.md`.

use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_NO_SOLUTION: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    pub position: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Ok { result: Value, steps: Option<Value> },
    Err(ErrorBody),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    pub payload: Payload,
    /// Human-oriented rendering for plain mode.
    pub plain: String,
    pub exit_code: i32,
}

impl Envelope {
    pub fn ok(result: Value, plain: impl Into<String>) -> Self {
        Envelope {
            payload: Payload::Ok {
                result,
                steps: None,
            },
            plain: plain.into(),
            exit_code: EXIT_OK,
        }
    }

    pub fn with_steps(mut self, steps: Value) -> Self {
        if let Payload::Ok { steps: s, .. } = &mut self.payload {
            *s = Some(steps);
        }
        self
    }

    pub fn error(
        kind: &str,
        message: impl Into<String>,
        position: Option<usize>,
        exit_code: i32,
    ) -> Self {
        let message = message.into();
        Envelope {
            payload: Payload::Err(ErrorBody {
                kind: kind.to_string(),
                message: message.clone(),
                position,
            }),
            plain: message,
            exit_code,
        }
    }

    /// Selftest or bench failure; `message` names what failed.
    pub fn check_failed(message: impl Into<String>, plain: impl Into<String>) -> Self {
        Envelope {
            payload: Payload::Err(ErrorBody {
                kind: "check_failed".into(),
                message: message.into(),
                position: None,
            }),
            plain: plain.into(),
            exit_code: EXIT_CHECK_FAILED,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        match &self.payload {
            Payload::Ok { result, steps } => {
                map.insert("status".into(), json!("ok"));
                map.insert("result".into(), result.clone());
                if let Some(steps) = steps {
                    map.insert("steps".into(), steps.clone());
                }
            }
            Payload::Err(e) => {
                map.insert("status".into(), json!("error"));
                let mut err = Map::new();
                err.insert("kind".into(), json!(e.kind));
                err.insert("message".into(), json!(e.message));
                if let Some(p) = e.position {
                    err.insert("position".into(), json!(p));
                }
                map.insert("error".into(), Value::Object(err));
            }
        }
        Value::Object(map)
    }
}

impl From<kuttaka::Error> for Envelope {
    fn from(e: kuttaka::Error) -> Self {
        use kuttaka::Error::*;
        let code = match e {
            NoSolution { .. } | NotCoprime { .. } | InconsistentSystem { .. } => EXIT_NO_SOLUTION,
            _ => EXIT_USAGE,
        };
        Envelope::error(e.kind(), e.to_string(), e.position(), code)
    }
}

/// Integers that fit `i64` are JSON numbers; larger ones are decimal strings.
pub fn num(v: i128) -> Value {
    match i64::try_from(v) {
        Ok(v) => json!(v),
        Err(_) => json!(v.to_string()),
    }
}

pub fn nums(vs: &[i128]) -> Value {
    Value::Array(vs.iter().map(|&v| num(v)).collect())
}
