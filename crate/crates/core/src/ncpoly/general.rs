use super::{NcError, StandardPoly, DEGREE_CAP};
use crate::field::rational_to_string;
use crate::quaternion::{basis_mul, Quaternion, BASIS_NAMES};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in z where z commutes only with rational scalars.
///
/// Canonical form: a rational combination of basis words
/// e_0 z e_1 z … z e_m with each e in {1, i, j, ij}; a word is stored as
/// its basis indices `[e_0, …, e_m]` (length = degree + 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneralPoly {
    terms: BTreeMap<Vec<u8>, BigRational>,
}

fn quat_terms(q: &Quaternion) -> impl Iterator<Item = (u8, BigRational)> + '_ {
    q.coords().into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as u8, c.clone()))
}

impl GeneralPoly {
    pub fn zero() -> Self {
        GeneralPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(&Quaternion::one())
    }

    pub fn constant(q: &Quaternion) -> Self {
        let terms = quat_terms(q).map(|(i, c)| (vec![i], c)).collect();
        GeneralPoly { terms }
    }

    /// The variable z.
    pub fn z() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0, 0], BigRational::one());
        GeneralPoly { terms }
    }

    /// The word q_0 z q_1 z … z q_m.
    pub fn word(qs: &[Quaternion]) -> Result<Self, NcError> {
        if qs.is_empty() {
            return Ok(Self::zero());
        }
        if qs.len() - 1 > DEGREE_CAP {
            return Err(NcError::DegreeCap(qs.len() - 1));
        }
        let mut acc: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
        acc.insert(Vec::new(), BigRational::one());
        for q in qs {
            let mut next = BTreeMap::new();
            for (k, c) in &acc {
                for (i, qc) in quat_terms(q) {
                    let mut key = k.clone();
                    key.push(i);
                    *next.entry(key).or_insert_with(BigRational::zero) += c * &qc;
                }
            }
            acc = next;
        }
        Ok(Self::from_map(acc))
    }

    /// Builds a polynomial from (basis word, coefficient) pairs, summing repeats.
    pub fn from_terms(items: impl IntoIterator<Item = (Vec<u8>, BigRational)>) -> Self {
        let mut m = BTreeMap::new();
        for (k, c) in items {
            assert!(!k.is_empty() && k.iter().all(|e| *e < 4), "bad basis word");
            *m.entry(k).or_insert_with(BigRational::zero) += c;
        }
        Self::from_map(m)
    }

    fn from_map(mut m: BTreeMap<Vec<u8>, BigRational>) -> Self {
        m.retain(|_, c| !c.is_zero());
        GeneralPoly { terms: m }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.len() - 1).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut m = self.terms.clone();
        for (k, c) in &o.terms {
            *m.entry(k.clone()).or_insert_with(BigRational::zero) += c;
        }
        Self::from_map(m)
    }

    pub fn neg(&self) -> Self {
        GeneralPoly { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_map(self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect())
    }

    pub fn mul(&self, o: &Self) -> Result<Self, NcError> {
        if let (Some(a), Some(b)) = (self.degree(), o.degree()) {
            if a + b > DEGREE_CAP {
                return Err(NcError::DegreeCap(a + b));
            }
        }
        let mut m: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let (s, mid) = basis_mul(*k1.last().unwrap() as usize, k2[0] as usize);
                let mut key = Vec::with_capacity(k1.len() + k2.len() - 1);
                key.extend_from_slice(&k1[..k1.len() - 1]);
                key.push(mid as u8);
                key.extend_from_slice(&k2[1..]);
                let c = c1 * c2;
                let e = m.entry(key).or_insert_with(BigRational::zero);
                if s > 0 {
                    *e += c;
                } else {
                    *e -= c;
                }
            }
        }
        Ok(Self::from_map(m))
    }

    pub fn left_mul(&self, q: &Quaternion) -> Self {
        Self::constant(q).mul(self).expect("degree unchanged")
    }

    pub fn right_mul(&self, q: &Quaternion) -> Self {
        self.mul(&Self::constant(q)).expect("degree unchanged")
    }

    /// Substitution z ↦ z0, a ring homomorphism on this ring.
    pub fn eval(&self, z0: &Quaternion) -> Quaternion {
        let mut acc = Quaternion::zero();
        for (k, c) in &self.terms {
            let mut w = Quaternion::basis(k[0] as usize);
            for e in &k[1..] {
                w = &(&w * z0) * &Quaternion::basis(*e as usize);
            }
            acc = acc + w.scale(c);
        }
        acc
    }

    /// Image in H_L[z]: q_0 z q_1 … z q_m ↦ (q_0 q_1 … q_m) z^m.
    pub fn to_standard(&self) -> StandardPoly {
        let deg = self.degree().unwrap_or(0);
        let mut coeffs = vec![Quaternion::zero(); deg + 1];
        for (k, c) in &self.terms {
            let (mut sign, mut idx) = (1i8, k[0] as usize);
            for e in &k[1..] {
                let (s, n) = basis_mul(idx, *e as usize);
                sign *= s;
                idx = n;
            }
            let mut v = c.clone();
            if sign < 0 {
                v = -v;
            }
            let m = k.len() - 1;
            coeffs[m] = &coeffs[m] + &Quaternion::basis(idx).scale(&v);
        }
        StandardPoly::new(coeffs)
    }

    /// Lift of a standard polynomial: a_k z^k as the word a_k z … z.
    pub fn from_standard(f: &StandardPoly) -> Self {
        let mut acc = Self::zero();
        for (k, a) in f.coeffs().iter().enumerate() {
            let mut w = vec![a.clone()];
            w.extend(std::iter::repeat_n(Quaternion::one(), k));
            acc = acc.add(&Self::word(&w).expect("within cap"));
        }
        acc
    }

    /// Conjugate polynomial: evaluates to the conjugate of the value at every point.
    pub fn conjugate(&self) -> Self {
        let zbar = Self::z_bar();
        let mut acc = Self::zero();
        for (k, c) in &self.terms {
            let mut w = Self::constant(&Quaternion::basis(*k.last().unwrap() as usize).conj());
            for e in k[..k.len() - 1].iter().rev() {
                w = w.mul(&zbar).expect("degree unchanged");
                w = w.right_mul(&Quaternion::basis(*e as usize).conj());
            }
            acc = acc.add(&w.scale(c));
        }
        acc
    }

    /// z̄ = −½(z + i z i + j z j + ij z ij)
    pub fn z_bar() -> Self {
        let h = BigRational::new((-1).into(), 2.into());
        let mut items = vec![(vec![0u8, 0u8], h.clone())];
        for e in 1..4u8 {
            items.push((vec![e, e], h.clone()));
        }
        Self::from_terms(items)
    }

    /// Words as `[q_0, "z", q_1, …]` with the rational coefficient folded into q_0.
    pub fn to_json(&self) -> Value {
        let words: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut w = vec![Quaternion::basis(k[0] as usize).scale(c).to_json()];
                for e in &k[1..] {
                    w.push(json!("z"));
                    w.push(Quaternion::basis(*e as usize).to_json());
                }
                Value::Array(w)
            })
            .collect();
        json!({ "words": words })
    }

    /// Reads `{"words": [[q, "z", q, …], …]}`; adjacent coefficients multiply
    /// and a missing coefficient between two `"z"` is 1.
    pub fn from_json(v: &Value) -> Result<Self, NcError> {
        let words = v
            .get("words")
            .and_then(Value::as_array)
            .ok_or_else(|| NcError::Parse("expected {\"words\": [...]}".into()))?;
        let mut acc = Self::zero();
        for w in words {
            let items = w.as_array().ok_or_else(|| NcError::Parse("word must be an array".into()))?;
            let mut qs = vec![Quaternion::one()];
            for it in items {
                if it.as_str() == Some("z") {
                    qs.push(Quaternion::one());
                } else {
                    let q = Quaternion::from_json(it)?;
                    let last = qs.last_mut().unwrap();
                    *last = &*last * &q;
                }
            }
            acc = acc.add(&Self::word(&qs)?);
        }
        Ok(acc)
    }
}

impl fmt::Display for GeneralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut toks: Vec<String> = Vec::new();
            let mag = c.abs();
            if !mag.is_one() {
                toks.push(format!("({})", rational_to_string(&mag)));
            }
            for (n, e) in k.iter().enumerate() {
                if n > 0 {
                    toks.push("z".into());
                }
                if *e != 0 {
                    toks.push(BASIS_NAMES[*e as usize].into());
                }
            }
            if toks.is_empty() {
                toks.push("1".into());
            }
            write!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}
