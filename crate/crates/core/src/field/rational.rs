use super::{Field, FieldError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Decode(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Exact rational `k`-th root, if it exists.
pub(crate) fn rational_root(q: &BigRational, k: u32) -> Option<BigRational> {
    let n = exact_root(q.numer(), k)?;
    let d = exact_root(q.denom(), k)?;
    Some(BigRational::new(n, d))
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn contains(&self, _a: &BigRational) -> bool {
        true
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=5);
        BigRational::new(n.into(), d.into())
    }
    fn to_json(&self, a: &BigRational) -> Value {
        Value::String(rational_to_string(a))
    }
    fn from_json(&self, v: &Value) -> Result<BigRational, FieldError> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(self.from_int(n.as_i64().unwrap())),
            _ => Err(FieldError::Decode(format!("expected a rational string, got {v}"))),
        }
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "rational"})
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn nth_root(&self, a: &BigRational, n: u64) -> Option<BigRational> {
        rational_root(a, n as u32)
    }
}
