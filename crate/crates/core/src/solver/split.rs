use super::algebraic::qlift;
use super::SolveError;
use crate::ncpoly::StandardPoly;
use crate::quaternion::{Quat, Quaternion};
use crate::realpoly::RealPoly;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in commuting real variables r, N with quaternion coefficients;
/// keys are (power of r, power of N).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Quaternion>,
}

impl BiPoly {
    fn from_real(p: &BTreeMap<(u32, u32), BigRational>, q: &Quaternion) -> Self {
        let terms = p.iter().map(|(k, c)| (*k, q.scale(c))).filter(|(_, v)| !v.is_zero()).collect();
        BiPoly { terms }
    }

    fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &o.terms {
            let e = terms.entry(*k).or_default();
            *e = &*e + v;
        }
        terms.retain(|_, v| !v.is_zero());
        BiPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Quaternion)> {
        self.terms.iter()
    }

    pub fn eval(&self, r: &BigRational, n: &BigRational) -> Quaternion {
        self.terms.iter().fold(Quaternion::zero(), |acc, ((a, b), c)| {
            acc + c.scale(&(num_traits::pow(r.clone(), *a as usize) * num_traits::pow(n.clone(), *b as usize)))
        })
    }

    /// Specialize r and keep N as the variable.
    pub fn at_r(&self, r: &BigRational) -> Quat<RealPoly> {
        let mut acc: Quat<RealPoly> = Quat::zero();
        for ((a, b), c) in &self.terms {
            let mut mono = vec![BigRational::zero(); *b as usize + 1];
            mono[*b as usize] = num_traits::pow(r.clone(), *a as usize);
            acc = acc + qlift(c).scale(&RealPoly::new(mono));
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, b), c)| json!({"r": a.to_string(), "N": b.to_string(), "coeff": c.to_json()}))
            .collect();
        json!({ "terms": terms })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((a, b), c)| {
                let mut s = String::new();
                for (v, e) in [("r", *a), ("N", *b)] {
                    match e {
                        0 => {}
                        1 => s.push_str(v),
                        _ => s.push_str(&format!("{v}^{e}")),
                    }
                }
                match (s.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => s,
                    (false, false) => format!("({c}){s}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// f(z0) = g(r0, N0)·x0 + h(r0, N0) for z0 = r0 + x0 with x0 pure imaginary, N0 = −x0².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    pub g: BiPoly,
    pub h: BiPoly,
}

impl SplitPair {
    pub fn to_json(&self) -> Value {
        json!({"g": self.g.to_json(), "h": self.h.to_json()})
    }
}

type Real2 = BTreeMap<(u32, u32), BigRational>;

fn real2_add(a: &Real2, b: &Real2, sign: i32) -> Real2 {
    let mut m = a.clone();
    for (k, v) in b {
        let e = m.entry(*k).or_insert_with(BigRational::zero);
        if sign > 0 {
            *e += v;
        } else {
            *e -= v;
        }
    }
    m.retain(|_, v| !v.is_zero());
    m
}

fn real2_shift(a: &Real2, dr: u32, dn: u32) -> Real2 {
    a.iter().map(|((x, y), v)| ((x + dr, y + dn), v.clone())).collect()
}

/// z^k = G_k x + H_k with z = r + x and x² = −N:
/// G_{k+1} = r G_k + H_k, H_{k+1} = r H_k − N G_k.
pub fn split_gh(f: &StandardPoly) -> SplitPair {
    let mut gk: Real2 = BTreeMap::new();
    let mut hk: Real2 = BTreeMap::from([((0, 0), BigRational::one())]);
    let (mut g, mut h) = (BiPoly::default(), BiPoly::default());
    for c in f.coeffs() {
        g = g.add(&BiPoly::from_real(&gk, c));
        h = h.add(&BiPoly::from_real(&hk, c));
        let g_next = real2_add(&real2_shift(&gk, 1, 0), &hk, 1);
        let h_next = real2_add(&real2_shift(&hk, 1, 0), &real2_shift(&gk, 0, 1), -1);
        gk = g_next;
        hk = h_next;
    }
    SplitPair { g, h }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCondition {
    /// g and h both vanish: every z = r0 + x with N(x) = N0 is a root.
    BothVanish,
    /// The unique imaginary part x0 = −g⁻¹h satisfies Re(x0) = 0 and N(x0) = N0.
    NormEqHolds { x0: Quaternion },
    NotARoot,
}

impl RootCondition {
    pub fn to_json(&self) -> Value {
        match self {
            RootCondition::BothVanish => json!({"verdict": "both_vanish"}),
            RootCondition::NormEqHolds { x0 } => json!({"verdict": "norm_eq_holds", "x0": x0.to_json()}),
            RootCondition::NotARoot => json!({"verdict": "not_a_root"}),
        }
    }
}

pub fn check_root_condition(pair: &SplitPair, r0: &BigRational, n0: &BigRational) -> Result<RootCondition, SolveError> {
    if n0.is_negative() {
        return Err(SolveError::NegativeNorm);
    }
    let g = pair.g.eval(r0, n0);
    let h = pair.h.eval(r0, n0);
    if g.is_zero() {
        return Ok(if h.is_zero() { RootCondition::BothVanish } else { RootCondition::NotARoot });
    }
    let x0 = -(g.inv().expect("nonzero") * h);
    if x0.re().is_zero() && &x0.norm() == n0 {
        Ok(RootCondition::NormEqHolds { x0 })
    } else {
        Ok(RootCondition::NotARoot)
    }
}

