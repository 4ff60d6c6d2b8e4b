use super::{json_int, Field, FieldError};
use rand::Rng;
use serde_json::{json, Value};

/// F_{p^k} as F_p[x]/(m), where m is the first monic irreducible of degree k
/// when monic polynomials are ordered by the integer Σ c_i p^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Monic modulus, ascending, length k+1.
    modulus: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FfElem {
    pub p: u64,
    pub coords: Vec<u64>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

// Small polynomial helpers over F_p, ascending, trimmed.
fn ptrim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pmod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = ptrim(a.to_vec());
    let dm = m.len() - 1;
    let li = inv_mod_p(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r.last().unwrap() * li % p;
        for (i, mc) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mc % p) % p;
        }
        r = ptrim(r);
    }
    r
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    ptrim(out)
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (ptrim(a.to_vec()), ptrim(b.to_vec()));
    while !b.is_empty() {
        let r = pmod(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin-style test: m has no factor of degree ≤ deg/2.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..k / 2 {
        // xp <- xp^p mod m
        let mut acc = vec![1u64];
        for _ in 0..p {
            acc = pmod(&pmul(&acc, &xp, p), m, p);
        }
        xp = acc;
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if pgcd(m, &ptrim(diff), p).len() > 1 {
            return false;
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u64, k: usize) -> Result<Self, FieldError> {
        if !is_prime(p) || p > 65_521 {
            return Err(FieldError::BadParameters(format!("{p} is not a supported prime")));
        }
        if k == 0 || (p as f64).powi(k as i32) > 1e12 {
            return Err(FieldError::BadParameters(format!("unsupported degree {k}")));
        }
        let mut code: u64 = 0;
        loop {
            let mut m = Vec::with_capacity(k + 1);
            let mut c = code;
            for _ in 0..k {
                m.push(c % p);
                c /= p;
            }
            m.push(1);
            if is_irreducible(&m, p) {
                return Ok(FiniteField { p, k, modulus: m });
            }
            code += 1;
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn from_coords(&self, coords: &[u64]) -> FfElem {
        self.pad(pmod(&coords.iter().map(|c| c % self.p).collect::<Vec<_>>(), &self.modulus, self.p))
    }

    /// The class of x, a generator of the field over F_p.
    pub fn gen(&self) -> FfElem {
        self.from_coords(&[0, 1])
    }

    /// All field elements, in the order of their integer codes.
    pub fn elements(&self) -> Vec<FfElem> {
        (0..self.order())
            .map(|mut c| {
                let coords = (0..self.k)
                    .map(|_| {
                        let r = c % self.p;
                        c /= self.p;
                        r
                    })
                    .collect();
                FfElem { p: self.p, coords }
            })
            .collect()
    }

    fn pad(&self, mut r: Vec<u64>) -> FfElem {
        r.resize(self.k, 0);
        FfElem { p: self.p, coords: r }
    }

    fn multiplicative_order(&self, a: &FfElem) -> u64 {
        let q1 = self.order() - 1;
        let mut best = q1;
        for e in 1..=q1 {
            if q1.is_multiple_of(e) && self.is_one(&self.pow(a, e)) {
                best = e;
                break;
            }
        }
        best
    }
}

impl Field for FiniteField {
    type Elem = FfElem;

    fn zero(&self) -> FfElem {
        self.pad(Vec::new())
    }
    fn one(&self) -> FfElem {
        self.pad(vec![1])
    }
    fn from_int(&self, n: i64) -> FfElem {
        let r = n.rem_euclid(self.p as i64) as u64;
        self.pad(vec![r])
    }
    fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        let p = self.p;
        FfElem { p, coords: a.coords.iter().zip(&b.coords).map(|(x, y)| (x + y) % p).collect() }
    }
    fn neg(&self, a: &FfElem) -> FfElem {
        let p = self.p;
        FfElem { p, coords: a.coords.iter().map(|x| (p - x) % p).collect() }
    }
    fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        self.pad(pmod(&pmul(&ptrim(a.coords.clone()), &ptrim(b.coords.clone()), self.p), &self.modulus, self.p))
    }
    fn inv(&self, a: &FfElem) -> Result<FfElem, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(a, self.order() - 2))
    }
    fn is_zero(&self, a: &FfElem) -> bool {
        a.coords.iter().all(|c| *c == 0)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn contains(&self, a: &FfElem) -> bool {
        a.p == self.p && a.coords.len() == self.k && a.coords.iter().all(|c| *c < self.p)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FfElem {
        let coords = (0..self.k).map(|_| rng.gen_range(0..self.p)).collect();
        FfElem { p: self.p, coords }
    }
    fn to_json(&self, a: &FfElem) -> Value {
        json!({
            "p": self.p.to_string(),
            "k": self.k.to_string(),
            "coords": a.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
    fn from_json(&self, v: &Value) -> Result<FfElem, FieldError> {
        match v {
            Value::String(_) | Value::Number(_) => {
                let n = json_int(v).ok_or_else(|| FieldError::Decode(format!("bad integer {v}")))?;
                Ok(self.from_int(n))
            }
            Value::Object(m) => {
                let p = m.get("p").and_then(json_int);
                let k = m.get("k").and_then(json_int);
                if p != Some(self.p as i64) || k != Some(self.k as i64) {
                    return Err(FieldError::MixedFieldOperands(self.name()));
                }
                let coords = m
                    .get("coords")
                    .and_then(Value::as_array)
                    .ok_or_else(|| FieldError::Decode("missing coords".into()))?
                    .iter()
                    .map(|c| json_int(c).map(|n| n.rem_euclid(self.p as i64) as u64))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| FieldError::Decode("bad coordinate".into()))?;
                if coords.len() > self.k {
                    return Err(FieldError::Decode("too many coordinates".into()));
                }
                Ok(self.pad(coords))
            }
            _ => Err(FieldError::Decode(format!("bad finite-field element {v}"))),
        }
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "finite", "p": self.p.to_string(), "k": self.k.to_string()})
    }
    fn name(&self) -> String {
        if self.k == 1 {
            format!("F_{}", self.p)
        } else {
            format!("F_{}", self.order())
        }
    }
    fn root_of_unity(&self, d: u64) -> Option<FfElem> {
        let q1 = self.order() - 1;
        if d == 0 || !q1.is_multiple_of(d) {
            return None;
        }
        let g = self.elements().into_iter().find(|a| !self.is_zero(a) && self.multiplicative_order(a) == q1)?;
        Some(self.pow(&g, q1 / d))
    }
    fn nth_root(&self, a: &FfElem, n: u64) -> Option<FfElem> {
        if n == 1 {
            return Some(a.clone());
        }
        self.elements().into_iter().find(|x| self.pow(x, n) == *a)
    }
    fn format(&self, a: &FfElem) -> String {
        let mut parts = Vec::new();
        for (i, c) in a.coords.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "w".into(),
                _ => format!("w^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
