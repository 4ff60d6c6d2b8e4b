//! Argument decoding: inline JSON or file paths, quaternions, key=value lists.

use crate::error::CliError;
use quatalg::field::{Field, Rationals};
use quatalg::quaternion::Quaternion;
use serde_json::Value;
use std::io::Read;

pub type Rat = <Rationals as Field>::Elem;

/// Inline JSON when the argument looks like JSON, `-` for standard input,
/// otherwise a file path.
pub fn read_json(arg: &str) -> Result<Value, CliError> {
    let text = match arg.trim_start().chars().next() {
        Some('{') | Some('[') | Some('"') => arg.to_string(),
        _ if arg == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(e.to_string()))?;
            s
        }
        _ => std::fs::read_to_string(arg).map_err(|e| CliError::Input(format!("{arg}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("bad JSON: {e}")))
}

pub fn quaternion(arg: &str) -> Result<Quaternion, CliError> {
    let v = if arg.trim_start().starts_with(['{', '[']) { read_json(arg)? } else { Value::String(arg.to_string()) };
    Ok(Quaternion::from_json(&v)?)
}

pub fn rational(arg: &str) -> Result<Rat, CliError> {
    Ok(Rationals.from_json(&Value::String(arg.to_string()))?)
}

/// A field element given as JSON or as a bare string such as `3` or `-1/2`.
pub fn element<F: Field>(field: &F, s: &str) -> Result<F::Elem, CliError> {
    let v = if s.trim_start().starts_with(['{', '[', '"']) { read_json(s)? } else { Value::String(s.to_string()) };
    Ok(field.from_json(&v)?)
}

/// Splits `a=1,b={"p":"2",...}` at top-level commas.
pub fn key_values(s: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut parts = Vec::new();
    let (mut depth, mut cur) = (0i32, String::new());
    for ch in s.chars() {
        match ch {
            '{' | '[' => depth += 1,
            '}' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        parts.push(cur);
    }
    parts
        .into_iter()
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| CliError::Input(format!("expected key=value, got {p}")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

pub fn u64_of(v: &Value, key: &str) -> Result<u64, CliError> {
    let x = v.get(key).ok_or_else(|| CliError::Input(format!("missing {key}")))?;
    match x {
        Value::Number(n) => n.as_u64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
    .ok_or_else(|| CliError::Input(format!("bad {key}")))
}
