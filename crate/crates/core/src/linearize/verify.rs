use super::form::HomogeneousForm;
use super::rep::{Case, GradedMatrixRep, DENSE_CAP};
use super::sparse::Sparse;
use crate::algebra::multi_indices;
use crate::field::Field;
use crate::linalg::{self, Mat};
use rand::Rng;
use serde_json::{json, Value};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMethod {
    /// Star products of the full matrices, compared with c·I monomial by monomial.
    Expansion,
    /// Star products inside each factor, plus the pairwise twisted commutation
    /// that makes every mixed term between different factors vanish.
    Factorwise,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LinWitness<E> {
    /// The star product for this monomial is not c·I with c the form's coefficient.
    Monomial(Vec<u32>),
    /// A piece of `factor` for variable `var` fails P W = ρ W P against its own twist.
    Commutation { factor: usize, var: usize },
    /// The twist of `factor` does not have W^d = 1.
    Twist { factor: usize },
    /// Pointwise failure at this coefficient vector.
    Point(Vec<E>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinVerdict<E> {
    pub method: VerifyMethod,
    pub symbolic: bool,
    pub sampled: bool,
    pub samples: usize,
    pub witness: Option<LinWitness<E>>,
}

impl<E> LinVerdict<E> {
    pub fn passes(&self) -> bool {
        self.symbolic && self.sampled
    }

    pub fn to_json<F: Field<Elem = E>>(&self, field: &F) -> Value {
        let idx = |m: &[u32]| m.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let witness = match &self.witness {
            None => Value::Null,
            Some(LinWitness::Monomial(m)) => json!({"kind": "monomial", "index": idx(m)}),
            Some(LinWitness::Commutation { factor, var }) => {
                json!({"kind": "commutation", "factor": factor.to_string(), "var": var.to_string()})
            }
            Some(LinWitness::Twist { factor }) => json!({"kind": "twist", "factor": factor.to_string()}),
            Some(LinWitness::Point(a)) => {
                json!({"kind": "point", "at": a.iter().map(|c| field.to_json(c)).collect::<Vec<_>>()})
            }
        };
        json!({
            "method": match self.method { VerifyMethod::Expansion => "expansion", VerifyMethod::Factorwise => "factorwise" },
            "symbolic": self.symbolic,
            "sampled": self.sampled,
            "samples": self.samples.to_string(),
            "passes": self.passes(),
            "witness": witness,
        })
    }
}

/// Checks (Σ a_k X_k)^d = f(a)·I symbolically and at `samples` random points.
/// Expansion is used up to [`DENSE_CAP`], the factorwise argument above it.
pub fn verify_linearization<F: Field, R: Rng + ?Sized>(
    field: &F,
    rep: &GradedMatrixRep<F::Elem>,
    f: &HomogeneousForm<F::Elem>,
    samples: usize,
    rng: &mut R,
) -> LinVerdict<F::Elem> {
    let method = if rep.dim() <= DENSE_CAP { VerifyMethod::Expansion } else { VerifyMethod::Factorwise };
    verify_with(field, rep, f, samples, rng, method)
}

pub fn verify_with<F: Field, R: Rng + ?Sized>(
    field: &F,
    rep: &GradedMatrixRep<F::Elem>,
    f: &HomogeneousForm<F::Elem>,
    samples: usize,
    rng: &mut R,
    method: VerifyMethod,
) -> LinVerdict<F::Elem> {
    if rep.d != f.d || rep.n != f.n {
        return LinVerdict { method, symbolic: false, sampled: false, samples: 0, witness: None };
    }
    let symbolic_witness = match method {
        VerifyMethod::Expansion => expansion_check(field, rep, f),
        VerifyMethod::Factorwise => factorwise_check(field, rep, f),
    };
    let mut witness = symbolic_witness.clone();
    let mut sampled = true;
    for _ in 0..samples {
        let a: Vec<F::Elem> = (0..f.n).map(|_| field.from_int(rng.gen_range(-4..=4))).collect();
        let ok = if method == VerifyMethod::Expansion {
            point_check_full(field, rep, f, &a)
        } else {
            let col: Vec<usize> = rep.factor_sizes().iter().map(|s| rng.gen_range(0..*s)).collect();
            point_check_column(field, rep, f, &a, &col)
        };
        if !ok {
            sampled = false;
            witness.get_or_insert(LinWitness::Point(a));
            break;
        }
    }
    LinVerdict { method, symbolic: symbolic_witness.is_none(), sampled, samples, witness }
}

/// Star products v_1^{m_1} * … * v_n^{m_n} for every |m| = d, sharing one memo table.
fn star_table<E: Clone + PartialEq>(
    n: usize,
    d: u32,
    one: &Sparse<E>,
    letters: &[Sparse<E>],
    mul: &dyn Fn(&Sparse<E>, &Sparse<E>) -> Sparse<E>,
    add: &dyn Fn(&mut Sparse<E>, &Sparse<E>),
) -> Vec<(Vec<u32>, Sparse<E>)> {
    fn rec<E: Clone + PartialEq>(
        m: &mut Vec<u32>,
        one: &Sparse<E>,
        letters: &[Sparse<E>],
        mul: &dyn Fn(&Sparse<E>, &Sparse<E>) -> Sparse<E>,
        add: &dyn Fn(&mut Sparse<E>, &Sparse<E>),
        memo: &mut HashMap<Vec<u32>, Sparse<E>>,
    ) -> Sparse<E> {
        if m.iter().all(|e| *e == 0) {
            return one.clone();
        }
        if let Some(v) = memo.get(m.as_slice()) {
            return v.clone();
        }
        let mut acc = Sparse::zero(one.n);
        for i in 0..m.len() {
            if m[i] == 0 {
                continue;
            }
            m[i] -= 1;
            let tail = rec(m, one, letters, mul, add, memo);
            m[i] += 1;
            add(&mut acc, &mul(&letters[i], &tail));
        }
        memo.insert(m.clone(), acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    multi_indices(n, d)
        .into_iter()
        .map(|mut m| {
            let v = rec(&mut m, one, letters, mul, add, &mut memo);
            (m, v)
        })
        .collect()
}

fn stars<F: Field>(field: &F, letters: &[Sparse<F::Elem>], d: u32) -> Vec<(Vec<u32>, Sparse<F::Elem>)> {
    let size = letters[0].n;
    let one = Sparse::identity(field, size);
    let unit = field.one();
    star_table(letters.len(), d, &one, letters, &|a, b| a.mul(field, b), &|acc, x| acc.add_scaled(field, x, &unit))
}

fn expansion_check<F: Field>(
    field: &F,
    rep: &GradedMatrixRep<F::Elem>,
    f: &HomogeneousForm<F::Elem>,
) -> Option<LinWitness<F::Elem>> {
    let xs = rep.sparse_matrices(field);
    let zero = field.zero();
    for (m, s) in stars(field, &xs, f.d) {
        let want = f.coeff(&m).unwrap_or(&zero);
        if s.scalar_value(field).as_ref() != Some(want) {
            return Some(LinWitness::Monomial(m));
        }
    }
    None
}

fn factorwise_check<F: Field>(
    field: &F,
    rep: &GradedMatrixRep<F::Elem>,
    f: &HomogeneousForm<F::Elem>,
) -> Option<LinWitness<F::Elem>> {
    let q = match rep.case {
        Case::Graded => rep.rho.clone(),
        Case::Characteristic => field.one(),
    };
    if rep.case == Case::Characteristic && field.characteristic() != f.d as u64 {
        return Some(LinWitness::Twist { factor: 0 });
    }
    // a piece of a later factor must satisfy P W = q W P with its own twist W,
    // and every twist that sits to the right of some piece needs W^d = 1
    for (g, fac) in rep.factors.iter().enumerate().skip(1) {
        let w = &fac.twist;
        let wd = (1..f.d).fold(w.clone(), |acc, _| linalg::mat_mul(field, &acc, w));
        if wd != linalg::identity(field, fac.size()) {
            return Some(LinWitness::Twist { factor: g });
        }
        for (k, p) in fac.pieces.iter().enumerate() {
            let lhs = linalg::mat_mul(field, p, w);
            let rhs: Mat<F::Elem> =
                linalg::mat_mul(field, w, p).iter().map(|r| r.iter().map(|x| field.mul(x, &q)).collect()).collect();
            if lhs != rhs {
                return Some(LinWitness::Commutation { factor: g, var: k });
            }
        }
    }
    // then (Σ_f U_f)^d = Σ_f U_f^d, and each U_f^d must be scalar inside its own factor
    let mut total: HashMap<Vec<u32>, F::Elem> = HashMap::new();
    for fac in &rep.factors {
        let letters: Vec<Sparse<F::Elem>> = fac.pieces.iter().map(|p| Sparse::from_dense(field, p)).collect();
        for (m, s) in stars(field, &letters, f.d) {
            let Some(c) = s.scalar_value(field) else {
                return Some(LinWitness::Monomial(m));
            };
            let e = total.entry(m).or_insert_with(|| field.zero());
            *e = field.add(e, &c);
        }
    }
    let zero = field.zero();
    for m in multi_indices(f.n, f.d) {
        let got = total.get(&m).unwrap_or(&zero);
        if got != f.coeff(&m).unwrap_or(&zero) {
            return Some(LinWitness::Monomial(m));
        }
    }
    None
}

fn point_check_full<F: Field>(
    field: &F,
    rep: &GradedMatrixRep<F::Elem>,
    f: &HomogeneousForm<F::Elem>,
    a: &[F::Elem],
) -> bool {
    let xs = rep.sparse_matrices(field);
    let mut z = Sparse::zero(rep.dim());
    for (x, c) in xs.iter().zip(a) {
        z.add_scaled(field, x, c);
    }
    let mut p = z.clone();
    for _ in 1..f.d {
        p = p.mul(field, &z);
    }
    p.scalar_value(field) == Some(f.eval(field, a))
}

/// Column `col` (a multi-index over the factors) of (Σ a_k X_k)^d, without forming the matrices.
fn point_check_column<F: Field>(
    field: &F,
    rep: &GradedMatrixRep<F::Elem>,
    f: &HomogeneousForm<F::Elem>,
    a: &[F::Elem],
    col: &[usize],
) -> bool {
    let blocks: Vec<Mat<F::Elem>> = rep
        .factors
        .iter()
        .map(|fac| {
            let s = fac.size();
            (0..s)
                .map(|r| {
                    (0..s)
                        .map(|c| field.sum(fac.pieces.iter().zip(a).map(|(p, ak)| field.mul(&p[r][c], ak)).collect::<Vec<_>>().iter()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let column = |m: &Mat<F::Elem>, j: usize| -> Vec<(usize, F::Elem)> {
        m.iter().enumerate().filter(|(_, r)| !field.is_zero(&r[j])).map(|(i, r)| (i, r[j].clone())).collect()
    };
    let mut v: HashMap<Vec<usize>, F::Elem> = HashMap::from([(col.to_vec(), field.one())]);
    for _ in 0..f.d {
        let mut next: HashMap<Vec<usize>, F::Elem> = HashMap::new();
        for (idx, c) in &v {
            for (fi, block) in blocks.iter().enumerate() {
                // 1 ⊗ … ⊗ B_f ⊗ W ⊗ … ⊗ W applied to the basis vector idx
                let mut partial: Vec<(Vec<usize>, F::Elem)> = vec![(idx[..fi].to_vec(), c.clone())];
                for (g, fac) in rep.factors.iter().enumerate().skip(fi) {
                    let m = if g == fi { block } else { &fac.twist };
                    let entries = column(m, idx[g]);
                    partial = partial
                        .iter()
                        .flat_map(|(pre, pc)| {
                            entries.iter().map(move |(i, e)| {
                                let mut p = pre.clone();
                                p.push(*i);
                                (p, field.mul(pc, e))
                            })
                        })
                        .collect();
                }
                for (p, pc) in partial {
                    let e = next.entry(p).or_insert_with(|| field.zero());
                    *e = field.add(e, &pc);
                }
            }
        }
        next.retain(|_, c| !field.is_zero(c));
        v = next;
    }
    let want = f.eval(field, a);
    if field.is_zero(&want) {
        v.is_empty()
    } else {
        v.len() == 1 && v.get(col) == Some(&want)
    }
}
