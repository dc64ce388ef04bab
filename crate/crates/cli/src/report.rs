use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NEGATIVE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const COUNTEREXAMPLE: i32 = 3;
}

/// One JSON document per run on stdout.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: Value,
    pub result: Value,
    pub elapsed_ms: u128,
    pub version: &'static str,
}

/// What a command hands back to `main`.
pub struct Outcome {
    pub result: Value,
    pub exit_code: i32,
}

impl Outcome {
    pub fn new(result: impl Serialize, exit_code: i32) -> Self {
        Outcome {
            result: serde_json::to_value(result).expect("result serializes"),
            exit_code,
        }
    }
}

pub fn emit(command: String, params: Value, result: Value, started: Instant) {
    let report = RunReport {
        command,
        params,
        result,
        elapsed_ms: started.elapsed().as_millis(),
        version: VERSION,
    };
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
}
