use super::structure::{symbol_algebra, tensor_product};
use super::{AlgElement, AlgebraError, StructureAlgebra};
use crate::field::Field;
use crate::linearize::HomogeneousForm;
use rand::Rng;
use serde_json::{json, Value};
use std::collections::HashMap;

/// All exponent vectors of length n summing to d, in lexicographically decreasing order.
pub fn multi_indices(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, d, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Number of distinct words with the given letter multiplicities.
pub fn star_word_count(mults: &[u32]) -> u128 {
    let mut total = 0u32;
    let mut acc: u128 = 1;
    for &m in mults {
        for i in 1..=m {
            total += 1;
            acc = acc * total as u128 / i as u128;
        }
    }
    acc
}

/// v_1^{d_1} * … * v_n^{d_n}: the sum of every distinct word with those multiplicities.
pub fn star_product<F: Field>(alg: &StructureAlgebra<F>, factors: &[(AlgElement<F::Elem>, u32)]) -> AlgElement<F::Elem> {
    let letters: Vec<&AlgElement<F::Elem>> = factors.iter().map(|(v, _)| v).collect();
    let mults: Vec<u32> = factors.iter().map(|(_, m)| *m).collect();
    let mut memo = HashMap::new();
    star_rec(alg, &letters, &mults, &mut memo)
}

fn star_rec<F: Field>(
    alg: &StructureAlgebra<F>,
    letters: &[&AlgElement<F::Elem>],
    mults: &[u32],
    memo: &mut HashMap<Vec<u32>, AlgElement<F::Elem>>,
) -> AlgElement<F::Elem> {
    if mults.iter().all(|m| *m == 0) {
        return alg.one();
    }
    if let Some(v) = memo.get(mults) {
        return v.clone();
    }
    // every word starts with some letter i followed by a word of the rest
    let mut acc = alg.zero();
    let mut rest = mults.to_vec();
    for i in 0..mults.len() {
        if mults[i] == 0 {
            continue;
        }
        rest[i] -= 1;
        let tail = star_rec(alg, letters, &rest, memo);
        acc = alg.add(&acc, &alg.mul(letters[i], &tail));
        rest[i] += 1;
    }
    memo.insert(mults.to_vec(), acc.clone());
    acc
}

/// All star products of total degree d over `basis`, sharing one memo table.
fn all_star_products<F: Field>(
    alg: &StructureAlgebra<F>,
    basis: &[AlgElement<F::Elem>],
    d: u32,
) -> Vec<(Vec<u32>, AlgElement<F::Elem>)> {
    let letters: Vec<&AlgElement<F::Elem>> = basis.iter().collect();
    let mut memo = HashMap::new();
    multi_indices(basis.len(), d)
        .into_iter()
        .map(|m| {
            let v = star_rec(alg, &letters, &m, &mut memo);
            (m, v)
        })
        .collect()
}

/// v^d is central and no v^k with 1 ≤ k < d is.
pub fn is_d_central_element<F: Field>(alg: &StructureAlgebra<F>, v: &AlgElement<F::Elem>, d: u64) -> bool {
    let mut p = v.clone();
    for _ in 1..d {
        if alg.is_central(&p) {
            return false;
        }
        p = alg.mul(&p, v);
    }
    alg.is_central(&p)
}

#[derive(Debug, Clone, PartialEq)]
pub enum DCentralWitness<E> {
    /// A star product of total degree d that is not central.
    StarProduct { exponents: Vec<u32>, value: AlgElement<E> },
    /// Coefficients whose combination has a central k-th power with k < d.
    LowerPower { coeffs: Vec<E>, k: u64 },
    Dependent,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DCentralVerdict<E> {
    pub holds: bool,
    pub witness: Option<DCentralWitness<E>>,
}

impl<E> DCentralVerdict<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, alg: &StructureAlgebra<F>) -> Value {
        let f = alg.field();
        let witness = match &self.witness {
            None => Value::Null,
            Some(DCentralWitness::StarProduct { exponents, value }) => json!({
                "kind": "star_product",
                "exponents": exponents.iter().map(u32::to_string).collect::<Vec<_>>(),
                "value": alg.element_to_json(value),
            }),
            Some(DCentralWitness::LowerPower { coeffs, k }) => json!({
                "kind": "lower_power",
                "coeffs": coeffs.iter().map(|c| f.to_json(c)).collect::<Vec<_>>(),
                "k": k.to_string(),
            }),
            Some(DCentralWitness::Dependent) => json!({"kind": "dependent"}),
        };
        json!({"d_central": self.holds, "witness": witness})
    }
}

const LOWER_POWER_SAMPLES: usize = 20;

/// Exact on the d-th power through star products; the lower-power clause is sampled.
pub fn is_d_central_space<F: Field, R: Rng + ?Sized>(
    alg: &StructureAlgebra<F>,
    basis: &[AlgElement<F::Elem>],
    d: u32,
    rng: &mut R,
) -> DCentralVerdict<F::Elem> {
    let fail = |w| DCentralVerdict { holds: false, witness: Some(w) };
    if basis.is_empty() || alg.rank_of(basis) != basis.len() {
        return fail(DCentralWitness::Dependent);
    }
    for (exponents, value) in all_star_products(alg, basis, d) {
        if !alg.is_central(&value) {
            return fail(DCentralWitness::StarProduct { exponents, value });
        }
    }
    let f = alg.field();
    for _ in 0..LOWER_POWER_SAMPLES {
        let coeffs: Vec<F::Elem> = basis.iter().map(|_| f.random(rng)).collect();
        let v = combine(alg, basis, &coeffs);
        if alg.is_zero(&v) {
            continue;
        }
        let mut p = v.clone();
        for k in 1..d as u64 {
            if alg.is_central(&p) {
                return fail(DCentralWitness::LowerPower { coeffs, k });
            }
            p = alg.mul(&p, &v);
        }
    }
    DCentralVerdict { holds: true, witness: None }
}

fn combine<F: Field>(alg: &StructureAlgebra<F>, basis: &[AlgElement<F::Elem>], coeffs: &[F::Elem]) -> AlgElement<F::Elem> {
    basis.iter().zip(coeffs).fold(alg.zero(), |acc, (v, c)| alg.add(&acc, &alg.scale(v, c)))
}

/// Every nonzero combination with coefficients from `samples` is d-central.
pub fn brute_force_d_central<F: Field>(
    alg: &StructureAlgebra<F>,
    basis: &[AlgElement<F::Elem>],
    d: u64,
    samples: &[F::Elem],
) -> bool {
    let n = basis.len();
    let total = samples.len().pow(n as u32);
    (0..total).all(|mut idx| {
        let coeffs: Vec<F::Elem> = (0..n)
            .map(|_| {
                let c = samples[idx % samples.len()].clone();
                idx /= samples.len();
                c
            })
            .collect();
        let v = combine(alg, basis, &coeffs);
        alg.is_zero(&v) || is_d_central_element(alg, &v, d)
    })
}

/// f(a) = (Σ a_i v_i)^d, read off from the scalar parts of the star products.
pub fn exponentiation_form<F: Field>(
    alg: &StructureAlgebra<F>,
    basis: &[AlgElement<F::Elem>],
    d: u32,
) -> Result<HomogeneousForm<F::Elem>, AlgebraError> {
    let mut items = Vec::new();
    for (m, v) in all_star_products(alg, basis, d) {
        let c = alg.scalar_value(&v).ok_or(AlgebraError::NotDCentral)?;
        items.push((m, c));
    }
    Ok(HomogeneousForm::new(alg.field(), d, basis.len(), items)?)
}

/// (α_1,β_1)_d ⊗ … ⊗ (α_n,β_n)_d with the generators of each factor embedded.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolTensor<F: Field> {
    pub algebra: StructureAlgebra<F>,
    pub d: u64,
    pub rho: F::Elem,
    pub xs: Vec<AlgElement<F::Elem>>,
    pub ys: Vec<AlgElement<F::Elem>>,
    pub params: Vec<(F::Elem, F::Elem)>,
}

pub fn symbol_tensor<F: Field>(
    field: &F,
    d: u64,
    rho: &F::Elem,
    params: &[(F::Elem, F::Elem)],
) -> Result<SymbolTensor<F>, AlgebraError> {
    if params.is_empty() {
        return Err(AlgebraError::BadParameters("need at least one factor".into()));
    }
    let factors =
        params.iter().map(|(a, b)| symbol_algebra(field, d, rho, a, b)).collect::<Result<Vec<_>, _>>()?;
    let mut algebra = factors[0].algebra.clone();
    for s in &factors[1..] {
        algebra = tensor_product(&algebra, &s.algebra)?;
    }
    // factor i sits at position i of the nested tensor; its generators are 1⊗…⊗g⊗…⊗1
    let n = params.len();
    let dd = (d * d) as usize;
    let embed = |i: usize, local: usize| {
        let mut idx = 0;
        for j in 0..n {
            idx = idx * dd + if j == i { local } else { 0 };
        }
        algebra.basis(idx)
    };
    let xs = (0..n).map(|i| embed(i, d as usize)).collect();
    let ys = (0..n).map(|i| embed(i, 1)).collect();
    Ok(SymbolTensor { algebra, d, rho: rho.clone(), xs, ys, params: params.to_vec() })
}

/// Standard basis of V_k: x_i^j y_i x_{i+1} ⋯ x_k for 1 ≤ i ≤ k, 0 ≤ j < d, and x_1 ⋯ x_k.
pub fn build_vk<F: Field>(st: &SymbolTensor<F>, k: usize) -> Result<Vec<AlgElement<F::Elem>>, AlgebraError> {
    if k == 0 || k > st.xs.len() {
        return Err(AlgebraError::IndexOutOfRange);
    }
    let alg = &st.algebra;
    let mut out = Vec::with_capacity(st.d as usize * k + 1);
    for i in 0..k {
        let tail = alg.mul_all(&st.xs[i + 1..k]);
        for j in 0..st.d {
            let head = alg.mul(&alg.pow(&st.xs[i], j), &st.ys[i]);
            out.push(alg.mul(&head, &tail));
        }
    }
    out.push(alg.mul_all(&st.xs[..k]));
    Ok(out)
}

/// F[x^{p^e}] y + F[y^{p^{k−e}}] x inside a symbol algebra of degree p^k.
pub fn build_family_space<F: Field>(
    alg: &StructureAlgebra<F>,
    x: &AlgElement<F::Elem>,
    y: &AlgElement<F::Elem>,
    degree: u64,
    p: u64,
    k: u32,
    e: u32,
) -> Result<Vec<AlgElement<F::Elem>>, AlgebraError> {
    if p < 2 || k == 0 || e >= k || p.checked_pow(k) != Some(degree) {
        return Err(AlgebraError::BadParameters(format!("need 0 ≤ e < k and p^k = {degree}")));
    }
    let xe = alg.pow(x, p.pow(e));
    let ye = alg.pow(y, p.pow(k - e));
    let mut out = Vec::new();
    for j in 0..p.pow(k - e) {
        out.push(alg.mul(&alg.pow(&xe, j), y));
    }
    for j in 0..p.pow(e) {
        out.push(alg.mul(&alg.pow(&ye, j), x));
    }
    Ok(out)
}
