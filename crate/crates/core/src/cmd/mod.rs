pub mod ahss;
pub mod census;
pub mod form;
pub mod lagrangian;
pub mod ring;
pub mod selftest;

use std::io::{Read, Write};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

pub type CmdResult = Result<u8, String>;

pub struct Output {
    pub json_only: bool,
}

impl Output {
    /// Writes `value` to stdout and `human` to stderr.
    pub fn emit<T: Serialize>(&self, value: &T, human: impl FnOnce() -> String) {
        // ignore closed pipes
        let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string(value).expect("serializable"));
        if !self.json_only {
            let _ = writeln!(std::io::stderr(), "{}", human());
        }
    }

    pub fn error(&self, message: &str) {
        let _ = writeln!(std::io::stdout(), "{}", json!({ "error": message }));
        let _ = writeln!(std::io::stderr(), "error: {message}");
    }
}

pub fn read_stdin_json<T: DeserializeOwned>() -> Result<T, String> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("cannot read stdin: {e}"))?;
    serde_json::from_str(&buf).map_err(|e| format!("invalid JSON input: {e}"))
}

/// Reads JSON from a literal string, `@path` or `-` for stdin.
pub fn read_json_arg<T: DeserializeOwned>(arg: &str) -> Result<T, String> {
    if arg == "-" {
        return read_stdin_json();
    }
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| format!("invalid JSON: {e}"))
}

pub fn check_modulus(expected: usize, got: usize) -> Result<(), String> {
    if expected != got {
        return Err(format!("input has modulus {got} but --m is {expected}"));
    }
    Ok(())
}
