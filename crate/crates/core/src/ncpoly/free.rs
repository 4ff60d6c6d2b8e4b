use super::{GeneralPoly, NcError, DEGREE_CAP};
use crate::quaternion::{basis_mul, Quaternion};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Element of H⟨x_1, …, x_4⟩: the x's commute with quaternion scalars but
/// not with each other. Words store variable indices 0..4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeMonoidPoly {
    terms: BTreeMap<Vec<u8>, Quaternion>,
}

impl FreeMonoidPoly {
    pub fn zero() -> Self {
        FreeMonoidPoly { terms: BTreeMap::new() }
    }

    /// The variable x_{k+1} for k in 0..4.
    pub fn var(k: usize) -> Self {
        Self::monomial(vec![k as u8], Quaternion::one())
    }

    pub fn monomial(word: Vec<u8>, c: Quaternion) -> Self {
        Self::from_terms([(word, c)])
    }

    pub fn from_terms(items: impl IntoIterator<Item = (Vec<u8>, Quaternion)>) -> Self {
        let mut m: BTreeMap<Vec<u8>, Quaternion> = BTreeMap::new();
        for (k, c) in items {
            assert!(k.iter().all(|x| *x < 4), "variable index out of range");
            let e = m.entry(k).or_default();
            *e = &*e + &c;
        }
        m.retain(|_, c| !c.is_zero());
        FreeMonoidPoly { terms: m }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Quaternion)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> Quaternion {
        self.terms.get(word).cloned().unwrap_or_else(Quaternion::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_terms(self.terms.clone().into_iter().chain(o.terms.clone()))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_terms(self.terms.clone().into_iter().chain(o.terms.iter().map(|(k, c)| (k.clone(), -c.clone()))))
    }

    pub fn mul(&self, o: &Self) -> Result<Self, NcError> {
        if let (Some(a), Some(b)) = (self.degree(), o.degree()) {
            if a + b > DEGREE_CAP {
                return Err(NcError::DegreeCap(a + b));
            }
        }
        let mut items = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                items.push((k, c1 * c2));
            }
        }
        Ok(Self::from_terms(items))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"word": k.iter().map(|x| format!("x{}", x + 1)).collect::<Vec<_>>(), "coeff": c.to_json()}))
            .collect();
        json!({ "terms": terms })
    }
}

impl fmt::Display for FreeMonoidPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let w: Vec<String> = k.iter().map(|x| format!("x{}", x + 1)).collect();
                if k.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}) {}", w.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// h: H_G[z] → H⟨x⟩, z ↦ x_1 + i x_2 + j x_3 + ij x_4.
pub fn h_iso(f: &GeneralPoly) -> FreeMonoidPoly {
    // accumulate per (x-word, basis index) before building quaternions
    let mut acc: BTreeMap<(Vec<u8>, usize), BigRational> = BTreeMap::new();
    for (k, c) in f.terms() {
        // Expand e_0 h(z) e_1 … h(z) e_m: choose a variable per z.
        let mut partial: Vec<(Vec<u8>, i8, usize)> = vec![(Vec::new(), 1, k[0] as usize)];
        for e in &k[1..] {
            let mut next = Vec::with_capacity(partial.len() * 4);
            for (w, s, idx) in &partial {
                for a in 0..4usize {
                    let (s1, i1) = basis_mul(*idx, a);
                    let (s2, i2) = basis_mul(i1, *e as usize);
                    let mut w2 = w.clone();
                    w2.push(a as u8);
                    next.push((w2, s * s1 * s2, i2));
                }
            }
            partial = next;
        }
        for (w, s, idx) in partial {
            let e = acc.entry((w, idx)).or_insert_with(BigRational::zero);
            if s > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
    }
    let mut terms: BTreeMap<Vec<u8>, Quaternion> = BTreeMap::new();
    for ((w, idx), c) in acc {
        if !c.is_zero() {
            let q = terms.entry(w).or_default();
            match idx {
                0 => q.c1 = c,
                1 => q.ci = c,
                2 => q.cj = c,
                _ => q.ck = c,
            }
        }
    }
    FreeMonoidPoly { terms }
}

/// Closed form h⁻¹(x_a) = ¼ Σ_c ē_c ē_a z e_c.
pub fn h_inv_var(a: usize) -> GeneralPoly {
    let quarter = BigRational::new(1.into(), 4.into());
    let ea_bar = Quaternion::basis(a).conj();
    let mut acc = GeneralPoly::zero();
    for c in 0..4 {
        let ec = Quaternion::basis(c);
        let w = GeneralPoly::word(&[&ec.conj() * &ea_bar, ec]).expect("degree 1");
        acc = acc.add(&w);
    }
    acc.scale(&quarter)
}

/// Expands c·x_{a_1}⋯x_{a_m} through the closed form: each x_a contributes
/// ē_c ē_a on the left of its z and e_c on the right, summed over c.
pub fn h_inv(g: &FreeMonoidPoly) -> Result<GeneralPoly, NcError> {
    if let Some(d) = g.degree() {
        if d > DEGREE_CAP {
            return Err(NcError::DegreeCap(d));
        }
    }
    let bar = |e: usize| if e == 0 { 1i8 } else { -1 };
    let mut items: Vec<(Vec<u8>, BigRational)> = Vec::new();
    for (w, coef) in g.terms() {
        let scale = BigRational::new(1.into(), (1u64 << (2 * w.len())).into());
        // (finished basis indices, sign, coordinate, basis index still open on the right)
        let mut partial: Vec<(Vec<u8>, i8, &BigRational, usize)> = coef
            .coords()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Vec::new(), 1, c, e))
            .collect();
        for a in w {
            let a = *a as usize;
            let mut next = Vec::with_capacity(partial.len() * 4);
            for (word, s, c0, open) in &partial {
                for c in 0..4 {
                    let (s1, i1) = basis_mul(*open, c);
                    let (s2, i2) = basis_mul(i1, a);
                    let mut w2 = word.clone();
                    w2.push(i2 as u8);
                    next.push((w2, s * s1 * s2 * bar(c) * bar(a), *c0, c));
                }
            }
            partial = next;
        }
        for (mut word, s, c0, open) in partial {
            word.push(open as u8);
            let v = c0 * &scale;
            items.push((word, if s > 0 { v } else { -v }));
        }
    }
    Ok(GeneralPoly::from_terms(items))
}

/// Finds p with h(p) = x_k (k in 1..=4) by repeated annihilation, starting
/// from p = z and removing one unwanted monomial per round.
pub fn coimage_algorithm(k: usize) -> Result<GeneralPoly, NcError> {
    if !(1..=4).contains(&k) {
        return Err(NcError::BadIndex(k));
    }
    let target = vec![(k - 1) as u8];
    let mut p = GeneralPoly::z();
    for _ in 0..8 {
        let img = h_iso(&p);
        let c = img.coeff(&target);
        let others: Vec<Quaternion> =
            img.terms().filter(|(w, _)| **w != target).map(|(_, q)| q.clone()).collect();
        if others.is_empty() {
            let cinv = c.inv()?;
            return Ok(p.left_mul(&cinv));
        }
        // first of i, j, ij that moves c but fixes some other coefficient
        let conj = (1..4)
            .map(Quaternion::basis)
            .find(|a| !a.commutes_with(&c) && others.iter().any(|o| a.commutes_with(o)));
        let next = if let Some(a) = conj {
            p.left_mul(&a).right_mul(&a.inv()?).sub(&p)
        } else {
            // c is central in what remains: p ↦ b a p b⁻¹ a⁻¹ − p flips c and kills b
            let b = &others[0];
            let w = &c * &b.inv()?;
            let a = (1..4)
                .map(Quaternion::basis)
                .find(|a| !a.commutes_with(&w))
                .ok_or(NcError::CoimageStuck)?;
            let ba = b * &a;
            let inv = &b.inv()? * &a.inv()?;
            p.left_mul(&ba).right_mul(&inv).sub(&p)
        };
        p = next;
    }
    Err(NcError::CoimageStuck)
}
