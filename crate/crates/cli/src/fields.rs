//! Runtime choice of coefficient field from a JSON descriptor.

use crate::error::CliError;
use crate::input::u64_of;
use quatalg::field::{CyclotomicField, FiniteField, RationalFunctionField, Rationals};
use serde_json::Value;

pub enum AnyField {
    Rational(Rationals),
    Cyclotomic(CyclotomicField),
    Finite(FiniteField),
    RatFnFinite(RationalFunctionField<FiniteField>),
    RatFnRational(RationalFunctionField<Rationals>),
}

/// Runs `$body` with `$f` bound to the concrete field.
macro_rules! with_field {
    ($any:expr, $f:ident => $body:expr) => {
        match $any {
            $crate::fields::AnyField::Rational($f) => $body,
            $crate::fields::AnyField::Cyclotomic($f) => $body,
            $crate::fields::AnyField::Finite($f) => $body,
            $crate::fields::AnyField::RatFnFinite($f) => $body,
            $crate::fields::AnyField::RatFnRational($f) => $body,
        }
    };
}
pub(crate) use with_field;

/// `{"kind":"rational"}`, `{"kind":"cyclotomic","d":..}`, `{"kind":"finite","p":..,"k":..}`
/// or `{"kind":"ratfunc","base":..}` over a rational or finite base.
pub fn parse_field(v: &Value) -> Result<AnyField, CliError> {
    let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| CliError::Input("field needs a kind".into()))?;
    match kind {
        "rational" => Ok(AnyField::Rational(Rationals)),
        "cyclotomic" => Ok(AnyField::Cyclotomic(CyclotomicField::new(u64_of(v, "d")?)?)),
        "finite" => Ok(AnyField::Finite(finite(v)?)),
        "ratfunc" => {
            let base = v.get("base").ok_or_else(|| CliError::Input("ratfunc needs a base".into()))?;
            match base.get("kind").and_then(Value::as_str) {
                Some("finite") => Ok(AnyField::RatFnFinite(RationalFunctionField::new(finite(base)?))),
                Some("rational") => Ok(AnyField::RatFnRational(RationalFunctionField::new(Rationals))),
                _ => Err(CliError::Input("ratfunc base must be rational or finite".into())),
            }
        }
        _ => Err(CliError::Input(format!("unknown field kind {kind}"))),
    }
}

fn finite(v: &Value) -> Result<FiniteField, CliError> {
    Ok(FiniteField::new(u64_of(v, "p")?, u64_of(v, "k")? as usize)?)
}

/// The field a degree-d construction defaults to: Q for d = 2, Q(ρ_d) otherwise.
pub fn default_root_field(d: u64) -> Result<AnyField, CliError> {
    if d == 2 {
        Ok(AnyField::Rational(Rationals))
    } else {
        Ok(AnyField::Cyclotomic(CyclotomicField::new(d)?))
    }
}
