use super::{NcError, DEGREE_CAP};
use crate::quaternion::Quaternion;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::fmt;

/// Left-coefficient polynomial Σ a_k z^k with z central.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StandardPoly {
    coeffs: Vec<Quaternion>,
}

impl StandardPoly {
    pub fn new(mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        StandardPoly { coeffs }
    }

    /// Parses each coefficient with `Quaternion::from_str`, ascending degree.
    pub fn parse(coeffs: &[&str]) -> Result<Self, NcError> {
        let c = coeffs.iter().map(|s| s.parse()).collect::<Result<Vec<Quaternion>, _>>()?;
        Ok(Self::new(c))
    }

    pub fn zero() -> Self {
        StandardPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Quaternion) -> Self {
        Self::new(vec![c])
    }

    /// z - a
    pub fn linear(a: &Quaternion) -> Self {
        Self::new(vec![-a.clone(), Quaternion::one()])
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Quaternion {
        self.coeffs.get(k).cloned().unwrap_or_else(Quaternion::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// a_n z0^n + … + a_1 z0 + a_0
    pub fn eval(&self, z0: &Quaternion) -> Quaternion {
        let mut pw = Quaternion::one();
        let mut acc = Quaternion::zero();
        for c in &self.coeffs {
            acc = acc + c * &pw;
            pw = &pw * z0;
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    /// Product in H_L[z] (z commutes with coefficients).
    pub fn mul(&self, o: &Self) -> Result<Self, NcError> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        let deg = self.coeffs.len() + o.coeffs.len() - 2;
        if deg > DEGREE_CAP {
            return Err(NcError::DegreeCap(deg));
        }
        let mut c = vec![Quaternion::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Ok(Self::new(c))
    }

    pub fn left_scale(&self, q: &Quaternion) -> Self {
        Self::new(self.coeffs.iter().map(|c| q * c).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({"coeffs": self.coeffs.iter().map(Quaternion::to_json).collect::<Vec<_>>()})
    }

    pub fn from_json(v: &Value) -> Result<Self, NcError> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| NcError::Parse("expected {\"coeffs\": [...]}".into()))?;
        let c = arr.iter().map(Quaternion::from_json).collect::<Result<Vec<_>, _>>()?;
        if c.len() > DEGREE_CAP + 1 {
            return Err(NcError::DegreeCap(c.len() - 1));
        }
        Ok(Self::new(c))
    }
}

impl fmt::Display for StandardPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let zs = match k {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{k}"),
            };
            let cs = c.to_string();
            parts.push(if k > 0 && c.is_one() {
                zs
            } else if k == 0 {
                format!("({cs})")
            } else {
                format!("({cs}){zs}")
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Returns p with f = p·(z − a), when a is a root of f.
pub fn wedderburn_factor(f: &StandardPoly, a: &Quaternion) -> Result<StandardPoly, NcError> {
    let Some(n) = f.degree() else {
        return Err(NcError::NotARoot);
    };
    if n == 0 {
        return Err(NcError::NotARoot);
    }
    let mut p = vec![Quaternion::zero(); n];
    p[n - 1] = f.coeff(n);
    for i in (1..n).rev() {
        p[i - 1] = f.coeff(i) + &p[i] * a;
    }
    let rem = f.coeff(0) + &p[0] * a;
    if !rem.is_zero() {
        return Err(NcError::NotARoot);
    }
    Ok(StandardPoly::new(p))
}

/// For f = g·h with f(z0) = 0 and h(z0) ≠ 0, the root h(z0) z0 h(z0)⁻¹ of g.
pub fn wedderburn_transport(g: &StandardPoly, h: &StandardPoly, z0: &Quaternion) -> Result<Quaternion, NcError> {
    let f = g.mul(h)?;
    if !f.eval(z0).is_zero() {
        return Err(NcError::NotARoot);
    }
    let hz = h.eval(z0);
    if hz.is_zero() {
        return Err(NcError::RootOfRightFactor);
    }
    Ok(&(&hz * z0) * &hz.inv()?)
}
