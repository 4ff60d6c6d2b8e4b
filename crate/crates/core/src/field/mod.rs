//! Exact coefficient fields behind one element interface.
//!
//! A field is a small context value (`Rationals`, `CyclotomicField`, ...)
//! and its elements are plain data; every operation goes through the
//! context so generic code never needs to know which field it runs over.

mod cyclotomic;
mod finite;
mod ratfunc;
mod rational;
pub mod upoly;

pub use cyclotomic::{Cyc, CyclotomicField};
pub use finite::{FfElem, FiniteField};
pub use ratfunc::{RatFn, RationalFunctionField};
pub use rational::{parse_rational, rational_to_string, Rationals};

use rand::Rng;
use serde_json::Value;
use std::fmt::Debug;
use std::hash::Hash;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operand is not an element of {0}")]
    MixedFieldOperands(String),
    #[error("cannot decode field element: {0}")]
    Decode(String),
    #[error("invalid field parameters: {0}")]
    BadParameters(String),
}

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Structural membership test, used to reject elements of other fields.
    fn contains(&self, a: &Self::Elem) -> bool;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn to_json(&self, a: &Self::Elem) -> Value;
    fn from_json(&self, v: &Value) -> Result<Self::Elem, FieldError>;
    /// JSON descriptor of the field itself, e.g. `{"kind":"rational"}`.
    fn descriptor(&self) -> Value;
    fn name(&self) -> String;

    /// A primitive `d`-th root of unity, if the field has one.
    fn root_of_unity(&self, d: u64) -> Option<Self::Elem> {
        match d {
            1 => Some(self.one()),
            2 if self.characteristic() != 2 => Some(self.from_int(-1)),
            _ => None,
        }
    }

    /// Some `n`-th root of `a` inside the field, when one is easy to find.
    fn nth_root(&self, a: &Self::Elem, n: u64) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        if n == 1 || self.is_one(a) {
            return Some(if n == 1 { a.clone() } else { self.one() });
        }
        None
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn check(&self, a: &Self::Elem) -> Result<(), FieldError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(FieldError::MixedFieldOperands(self.name()))
        }
    }

    fn try_add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    fn try_sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    fn try_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    fn try_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        self.check(a)?;
        self.check(b)?;
        self.div(a, b)
    }

    fn try_inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        self.check(a)?;
        self.inv(a)
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn format(&self, a: &Self::Elem) -> String {
        match self.to_json(a) {
            Value::String(s) => s,
            v => v.to_string(),
        }
    }
}

/// Reads a JSON scalar that may be a string or an integer literal.
pub(crate) fn json_int(v: &Value) -> Option<i64> {
    match v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}
