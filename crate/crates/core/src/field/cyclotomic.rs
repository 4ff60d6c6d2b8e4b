use super::rational::{parse_rational, rational_root};
use super::{json_int, upoly, Field, FieldError, Rationals};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

/// Q(ρ_d), stored in the power basis of ρ modulo the cyclotomic polynomial Φ_d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicField {
    d: u64,
    modulus: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyc {
    pub d: u64,
    pub coords: Vec<BigRational>,
}

pub(crate) fn cyclotomic_poly(d: u64) -> Vec<BigRational> {
    let q = Rationals;
    let mut p = vec![BigRational::zero(); d as usize + 1];
    p[0] = -BigRational::one();
    p[d as usize] = BigRational::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = upoly::divrem(&q, &p, &cyclotomic_poly(e)).unwrap().0;
        }
    }
    p
}

impl CyclotomicField {
    pub fn new(d: u64) -> Result<Self, FieldError> {
        if d == 0 {
            return Err(FieldError::BadParameters("cyclotomic order must be >= 1".into()));
        }
        Ok(CyclotomicField { d, modulus: cyclotomic_poly(d) })
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    /// φ(d), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: Vec<BigRational>) -> Cyc {
        let r = upoly::divrem(&Rationals, &p, &self.modulus).unwrap().1;
        self.pad(r)
    }

    fn pad(&self, mut r: Vec<BigRational>) -> Cyc {
        r.resize(self.degree(), BigRational::zero());
        Cyc { d: self.d, coords: r }
    }

    pub fn from_rational(&self, q: BigRational) -> Cyc {
        self.pad(upoly::trim(&Rationals, vec![q]))
    }

    /// The distinguished primitive root ρ.
    pub fn rho(&self) -> Cyc {
        self.reduce(vec![BigRational::zero(), BigRational::one()])
    }

    /// The element as a rational number, if it lies in Q.
    pub fn as_rational(&self, a: &Cyc) -> Option<BigRational> {
        a.coords[1..].iter().all(Zero::is_zero).then(|| a.coords[0].clone())
    }
}

impl Field for CyclotomicField {
    type Elem = Cyc;

    fn zero(&self) -> Cyc {
        self.pad(Vec::new())
    }
    fn one(&self) -> Cyc {
        self.from_rational(BigRational::one())
    }
    fn from_int(&self, n: i64) -> Cyc {
        self.from_rational(BigRational::from_integer(n.into()))
    }
    fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc { d: self.d, coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect() }
    }
    fn sub(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc { d: self.d, coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect() }
    }
    fn neg(&self, a: &Cyc) -> Cyc {
        Cyc { d: self.d, coords: a.coords.iter().map(|x| -x).collect() }
    }
    fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        if self.degree() == 1 {
            return Cyc { d: self.d, coords: vec![&a.coords[0] * &b.coords[0]] };
        }
        self.reduce(upoly::mul(&Rationals, &a.coords, &b.coords))
    }
    fn inv(&self, a: &Cyc) -> Result<Cyc, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        let a = upoly::trim(&Rationals, a.coords.clone());
        let r = upoly::inv_mod(&Rationals, &a, &self.modulus).ok_or(FieldError::DivisionByZero)?;
        Ok(self.pad(r))
    }
    fn is_zero(&self, a: &Cyc) -> bool {
        a.coords.iter().all(Zero::is_zero)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn contains(&self, a: &Cyc) -> bool {
        a.d == self.d && a.coords.len() == self.degree()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Cyc {
        let coords = (0..self.degree()).map(|_| Rationals.random(rng)).collect();
        Cyc { d: self.d, coords }
    }
    fn to_json(&self, a: &Cyc) -> Value {
        json!({"d": self.d.to_string(), "coords": a.coords.iter().map(|c| Rationals.to_json(c)).collect::<Vec<_>>()})
    }
    fn from_json(&self, v: &Value) -> Result<Cyc, FieldError> {
        match v {
            Value::String(s) => Ok(self.from_rational(parse_rational(s)?)),
            Value::Number(_) => Ok(self.from_rational(Rationals.from_json(v)?)),
            Value::Object(m) => {
                let d = m.get("d").and_then(json_int);
                if d != Some(self.d as i64) {
                    return Err(FieldError::MixedFieldOperands(self.name()));
                }
                let coords = m
                    .get("coords")
                    .and_then(Value::as_array)
                    .ok_or_else(|| FieldError::Decode("missing coords".into()))?
                    .iter()
                    .map(|c| Rationals.from_json(c))
                    .collect::<Result<Vec<_>, _>>()?;
                if coords.len() > self.degree() {
                    return Err(FieldError::Decode("too many coordinates".into()));
                }
                Ok(self.pad(coords))
            }
            _ => Err(FieldError::Decode(format!("bad cyclotomic element {v}"))),
        }
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "cyclotomic", "d": self.d.to_string()})
    }
    fn name(&self) -> String {
        format!("Q(rho_{})", self.d)
    }
    fn root_of_unity(&self, e: u64) -> Option<Cyc> {
        if e == 0 {
            return None;
        }
        if self.d.is_multiple_of(e) {
            return Some(self.pow(&self.rho(), self.d / e));
        }
        // Q(ρ_d) = Q(ρ_2d) for odd d.
        if self.d % 2 == 1 && (2 * self.d).is_multiple_of(e) {
            let minus_rho = self.neg(&self.rho());
            return Some(self.pow(&minus_rho, 2 * self.d / e));
        }
        None
    }
    fn nth_root(&self, a: &Cyc, n: u64) -> Option<Cyc> {
        let q = self.as_rational(a)?;
        rational_root(&q, n as u32).map(|r| self.from_rational(r))
    }
    fn format(&self, a: &Cyc) -> String {
        let mut parts = Vec::new();
        for (i, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = super::rational_to_string(c);
            parts.push(match i {
                0 => c,
                1 => format!("{c}*r"),
                _ => format!("{c}*r^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
