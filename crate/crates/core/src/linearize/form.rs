use super::LinearizeError;
use crate::field::Field;
use serde_json::{Map, Value};
use std::collections::BTreeMap;

/// Σ c_{d_1…d_n} a_1^{d_1} ⋯ a_n^{d_n} with every exponent vector summing to d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousForm<E> {
    pub d: u32,
    pub n: usize,
    coeffs: BTreeMap<Vec<u32>, E>,
}

impl<E: Clone> HomogeneousForm<E> {
    pub fn new<F: Field<Elem = E>>(
        field: &F,
        d: u32,
        n: usize,
        items: impl IntoIterator<Item = (Vec<u32>, E)>,
    ) -> Result<Self, LinearizeError> {
        let mut coeffs: BTreeMap<Vec<u32>, E> = BTreeMap::new();
        for (idx, c) in items {
            if idx.len() != n || idx.iter().sum::<u32>() != d {
                return Err(LinearizeError::BadIndex(idx));
            }
            field.check(&c)?;
            let e = coeffs.entry(idx).or_insert_with(|| field.zero());
            *e = field.add(e, &c);
        }
        coeffs.retain(|_, c| !field.is_zero(c));
        Ok(HomogeneousForm { d, n, coeffs })
    }

    pub fn zero(d: u32, n: usize) -> Self {
        HomogeneousForm { d, n, coeffs: BTreeMap::new() }
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Vec<u32>, &E)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, idx: &[u32]) -> Option<&E> {
        self.coeffs.get(idx)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.coeffs.keys().all(|k| is_pure_power(k))
    }

    /// Keeps only the pure powers a_k^d.
    pub fn diagonal_part(&self) -> Self {
        let coeffs = self.coeffs.iter().filter(|(k, _)| is_pure_power(k)).map(|(k, c)| (k.clone(), c.clone())).collect();
        HomogeneousForm { coeffs, ..*self }
    }

    /// Coefficients that are not pure powers.
    pub fn off_diagonal(&self) -> Vec<(Vec<u32>, E)> {
        self.coeffs.iter().filter(|(k, _)| !is_pure_power(k)).map(|(k, c)| (k.clone(), c.clone())).collect()
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, a: &[E]) -> E {
        let mut acc = field.zero();
        for (k, c) in &self.coeffs {
            let mut t = c.clone();
            for (x, e) in a.iter().zip(k) {
                t = field.mul(&t, &field.pow(x, *e as u64));
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// `{"d": "3", "n": "2", "coeffs": {"3,0": …}}`
    pub fn to_json<F: Field<Elem = E>>(&self, field: &F) -> Value {
        let mut m = Map::new();
        for (k, c) in &self.coeffs {
            let key: Vec<String> = k.iter().map(u32::to_string).collect();
            m.insert(key.join(","), field.to_json(c));
        }
        serde_json::json!({"d": self.d.to_string(), "n": self.n.to_string(), "coeffs": Value::Object(m)})
    }

    pub fn from_json<F: Field<Elem = E>>(field: &F, v: &Value) -> Result<Self, LinearizeError> {
        let int = |key: &str| -> Result<u64, LinearizeError> {
            let x = v.get(key).ok_or_else(|| LinearizeError::Parse(format!("missing {key}")))?;
            crate::field::json_int(x)
                .and_then(|i| u64::try_from(i).ok())
                .ok_or_else(|| LinearizeError::Parse(format!("bad {key}")))
        };
        let d = int("d")? as u32;
        let n = int("n")? as usize;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| LinearizeError::Parse("coeffs must be an object".into()))?;
        let mut items = Vec::new();
        for (k, c) in coeffs {
            let idx = k
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| LinearizeError::Parse(format!("bad exponent key {k}")))?;
            items.push((idx, field.from_json(c)?));
        }
        Self::new(field, d, n, items)
    }
}

fn is_pure_power(k: &[u32]) -> bool {
    k.iter().filter(|e| **e > 0).count() <= 1
}
