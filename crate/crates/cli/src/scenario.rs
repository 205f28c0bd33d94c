//! Bundled worked examples, each replayed through [`dispatch`] and compared
//! with its recorded output.

use serde_json::{json, Value};

use crate::commands::{dispatch, Options};
use crate::error::{malformed, CliError};
use crate::json::field;

pub const CORPUS: &str = include_str!("../scenarios.json");

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub command: String,
    pub input: Value,
    pub options: Options,
    pub expected: Value,
}

impl Scenario {
    /// The command's output, or its error object when it fails.
    pub fn run(&self) -> Value {
        dispatch(&self.command, &self.input, &self.options).unwrap_or_else(|e| e.to_json())
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<Scenario>, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| malformed(format!("scenario corpus: {}", e)))?;
    let list = v.as_array().ok_or_else(|| malformed("scenario corpus must be an array"))?;
    list.iter()
        .map(|s| {
            let string = |k: &str| {
                field(s, k)?.as_str().map(String::from).ok_or_else(|| malformed(format!("{} must be a string", k)))
            };
            let opts = s.get("options");
            let options = Options {
                seed: opts.and_then(|o| o.get("seed")).and_then(Value::as_u64).unwrap_or(0),
                degree_bound: opts.and_then(|o| o.get("degree_bound")).and_then(Value::as_u64).map(|d| d as u32),
            };
            Ok(Scenario {
                name: string("name")?,
                command: string("command")?,
                input: field(s, "input")?.clone(),
                options,
                expected: field(s, "expected")?.clone(),
            })
        })
        .collect()
}

pub fn corpus() -> Vec<Scenario> {
    parse_corpus(CORPUS).expect("bundled corpus is valid")
}

/// Runs every scenario in order. Failures carry the actual output.
pub fn run_all(scenarios: &[Scenario]) -> Value {
    let mut passed = 0;
    let results: Vec<Value> = scenarios
        .iter()
        .map(|s| {
            let got = s.run();
            if got == s.expected {
                passed += 1;
                json!({ "name": s.name, "status": "pass" })
            } else {
                json!({ "name": s.name, "status": "fail", "got": got })
            }
        })
        .collect();
    json!({ "passed": passed, "failed": scenarios.len() - passed, "results": results })
}
