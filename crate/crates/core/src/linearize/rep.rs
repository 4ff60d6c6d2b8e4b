use super::form::HomogeneousForm;
use super::sparse::Sparse;
use super::LinearizeError;
use crate::field::Field;
use crate::linalg::{self, Mat};
use serde_json::{json, Value};

/// Above this ambient dimension matrices stay in factored form.
pub const DENSE_CAP: usize = 256;

/// Which hypothesis makes the cross terms vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// ρ_d lies in the field; factors are joined by the Z_d-graded tensor product.
    Graded,
    /// The characteristic equals d, a prime; factors are joined by the plain tensor product.
    Characteristic,
}

impl Case {
    pub fn from_number(c: u32) -> Result<Case, LinearizeError> {
        match c {
            1 => Ok(Case::Graded),
            2 => Ok(Case::Characteristic),
            _ => Err(LinearizeError::CaseMismatch(format!("case must be 1 or 2, got {c}"))),
        }
    }

    pub fn number(self) -> u32 {
        match self {
            Case::Graded => 1,
            Case::Characteristic => 2,
        }
    }
}

/// One tensor factor: the piece contributed to each X_k, and the twist it puts on
/// pieces of earlier factors (the inverse grading operator in the graded case).
#[derive(Debug, Clone, PartialEq)]
pub struct TensorFactor<E> {
    pub pieces: Vec<Mat<E>>,
    pub grading: Mat<E>,
    pub twist: Mat<E>,
}

impl<E> TensorFactor<E> {
    pub fn size(&self) -> usize {
        self.twist.len()
    }
}

/// X_k = Σ_f 1 ⊗ … ⊗ 1 ⊗ P_{k,f} ⊗ W_{f+1} ⊗ … ⊗ W_last, kept factored.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedMatrixRep<E> {
    pub d: u32,
    pub n: usize,
    pub case: Case,
    /// ρ in the graded case, 1 otherwise.
    pub rho: E,
    pub factors: Vec<TensorFactor<E>>,
}

fn case_root<F: Field>(field: &F, d: u32, case: Case) -> Result<F::Elem, LinearizeError> {
    match case {
        Case::Graded => {
            let rho = field
                .root_of_unity(d as u64)
                .ok_or_else(|| LinearizeError::CaseMismatch(format!("no primitive {d}-th root of unity in {}", field.name())))?;
            Ok(rho)
        }
        Case::Characteristic => {
            let p = field.characteristic();
            if p != d as u64 || !(2..d).all(|q| !d.is_multiple_of(q)) {
                return Err(LinearizeError::CaseMismatch(format!(
                    "case 2 needs characteristic {d} and d prime, field has characteristic {p}"
                )));
            }
            Ok(field.one())
        }
    }
}

/// diag(1, ρ^{−1}, …, ρ^{−(d−1)}); conjugation by it multiplies e_{k,k+j} by ρ^j.
pub fn grading_operator<F: Field>(field: &F, d: usize, rho: &F::Elem) -> Mat<F::Elem> {
    let inv = field.inv(rho).expect("root of unity is nonzero");
    diag(field, (0..d).map(|i| field.pow(&inv, i as u64)).collect())
}

fn diag<F: Field>(field: &F, entries: Vec<F::Elem>) -> Mat<F::Elem> {
    let n = entries.len();
    let mut m = vec![vec![field.zero(); n]; n];
    for (i, e) in entries.into_iter().enumerate() {
        m[i][i] = e;
    }
    m
}

fn zero_mat<F: Field>(field: &F, n: usize) -> Mat<F::Elem> {
    vec![vec![field.zero(); n]; n]
}

fn inverse<F: Field>(field: &F, m: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    let n = m.len();
    let aug: Mat<F::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let (r, pivots) = linalg::rref(field, &aug);
    (pivots.len() >= n && pivots[..n].iter().enumerate().all(|(i, p)| *p == i))
        .then(|| r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// The matrix x_{k;idx}: a weighted cyclic shift whose d-th power is c·a^{idx}.
/// The coefficient sits in the (d,1) corner.
pub fn offdiagonal_block<F: Field>(field: &F, k: usize, idx: &[u32], c: &F::Elem) -> Result<Mat<F::Elem>, LinearizeError> {
    let d: u32 = idx.iter().sum();
    if k >= idx.len() || d == 0 || field.is_zero(c) {
        return Err(LinearizeError::BadIndex(idx.to_vec()));
    }
    let n = d as usize;
    let mut m = zero_mat(field, n);
    let dk = idx[k] as usize;
    if dk == 0 {
        return Ok(m);
    }
    let before: usize = idx[..k].iter().map(|e| *e as usize).sum();
    if before == 0 {
        m[n - 1][0] = c.clone();
        for r in 1..dk {
            m[r - 1][r] = field.one();
        }
    } else {
        // 1-based entries (s, s+1), …, (s+d_k−1, s+d_k) with s = d_1 + … + d_{k−1}
        for r in before..before + dk {
            m[r - 1][r] = field.one();
        }
    }
    Ok(m)
}

impl<E: Clone + PartialEq> GradedMatrixRep<E> {
    /// A single-factor representation from explicit matrices Y_1, …, Y_n.
    /// In the graded case `grading` must satisfy G Y_k G^{−1} = ρ Y_k.
    pub fn from_matrices<F: Field<Elem = E>>(
        field: &F,
        d: u32,
        case: Case,
        matrices: Vec<Mat<E>>,
        grading: Option<Mat<E>>,
    ) -> Result<Self, LinearizeError> {
        let rho = case_root(field, d, case)?;
        let size = matrices.first().map(Vec::len).ok_or_else(|| LinearizeError::Parse("no matrices".into()))?;
        if matrices.iter().any(|m| m.len() != size || m.iter().any(|r| r.len() != size)) {
            return Err(LinearizeError::Parse("matrices must be square of one size".into()));
        }
        let grading = match (case, grading) {
            (Case::Characteristic, _) => linalg::identity(field, size),
            (Case::Graded, Some(g)) => g,
            (Case::Graded, None) => return Err(LinearizeError::CaseMismatch("case 1 needs a grading operator".into())),
        };
        let twist = inverse(field, &grading).ok_or_else(|| LinearizeError::Parse("grading operator is singular".into()))?;
        let n = matrices.len();
        let rep = GradedMatrixRep { d, n, case, rho, factors: vec![TensorFactor { pieces: matrices, grading, twist }] };
        if !rep.pieces_have_grade_one(field) {
            return Err(LinearizeError::CaseMismatch("matrices are not homogeneous of grade 1".into()));
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(TensorFactor::size).product()
    }

    /// Sizes of the tensor factors, in order.
    pub fn factor_sizes(&self) -> Vec<usize> {
        self.factors.iter().map(TensorFactor::size).collect()
    }

    /// G_f P_{k,f} = ρ P_{k,f} G_f for every piece, so each X_k has grade 1.
    pub fn pieces_have_grade_one<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.factors.iter().all(|fac| {
            fac.pieces.iter().all(|p| {
                let lhs = linalg::mat_mul(field, &fac.grading, p);
                let rhs = linalg::mat_mul(field, p, &fac.grading);
                lhs == scale(field, &rhs, &self.rho)
            })
        })
    }

    fn push_factor(&mut self, fac: TensorFactor<E>) {
        self.factors.push(fac);
    }

    pub(crate) fn sparse_matrices<F: Field<Elem = E>>(&self, field: &F) -> Vec<Sparse<E>> {
        (0..self.n)
            .map(|k| {
                let mut total = Sparse::zero(self.dim());
                let one = field.one();
                for (f, fac) in self.factors.iter().enumerate() {
                    let mut term = Sparse::identity(field, 1);
                    for (g, other) in self.factors.iter().enumerate() {
                        let m = match g.cmp(&f) {
                            std::cmp::Ordering::Less => Sparse::identity(field, other.size()),
                            std::cmp::Ordering::Equal => Sparse::from_dense(field, &fac.pieces[k]),
                            std::cmp::Ordering::Greater => Sparse::from_dense(field, &other.twist),
                        };
                        term = term.kron(field, &m);
                    }
                    total.add_scaled(field, &term, &one);
                }
                total
            })
            .collect()
    }

    /// Dense X_1, …, X_n; refuses above [`DENSE_CAP`].
    pub fn matrices<F: Field<Elem = E>>(&self, field: &F) -> Result<Vec<Mat<E>>, LinearizeError> {
        if self.dim() > DENSE_CAP {
            return Err(LinearizeError::TooLarge(self.dim()));
        }
        Ok(self.sparse_matrices(field).iter().map(|m| m.to_dense(field)).collect())
    }

    pub fn to_json<F: Field<Elem = E>>(&self, field: &F) -> Value {
        let mat = |m: &Mat<E>| -> Value {
            Value::Array(m.iter().map(|r| Value::Array(r.iter().map(|c| field.to_json(c)).collect())).collect())
        };
        let factors: Vec<Value> = self
            .factors
            .iter()
            .map(|fac| json!({"pieces": fac.pieces.iter().map(mat).collect::<Vec<_>>(), "grading": mat(&fac.grading)}))
            .collect();
        let dense = match self.matrices(field) {
            Ok(ms) => Value::Array(ms.iter().map(mat).collect()),
            Err(_) => Value::Null,
        };
        json!({
            "d": self.d.to_string(),
            "n": self.n.to_string(),
            "case": self.case.number().to_string(),
            "field": field.descriptor(),
            "dim": self.dim().to_string(),
            "factors": factors,
            "matrices": dense,
        })
    }
}

fn scale<F: Field>(field: &F, m: &Mat<F::Elem>, c: &F::Elem) -> Mat<F::Elem> {
    m.iter().map(|r| r.iter().map(|x| field.mul(x, c)).collect()).collect()
}

/// Realizes a diagonal form as a tensor product of companion blocks of x^d = α_k.
/// In the graded quadratic case a leading pair with a square first coefficient shares one 2×2 block.
pub fn diagonal_linearization<F: Field>(
    field: &F,
    g: &HomogeneousForm<F::Elem>,
    case: Case,
) -> Result<GradedMatrixRep<F::Elem>, LinearizeError> {
    if !g.is_diagonal() {
        return Err(LinearizeError::CaseMismatch("form is not diagonal".into()));
    }
    let rho = case_root(field, g.d, case)?;
    let (d, n) = (g.d as usize, g.n);
    let mut rep = GradedMatrixRep { d: g.d, n, case, rho: rho.clone(), factors: Vec::new() };
    let grading = match case {
        Case::Graded => grading_operator(field, d, &rho),
        Case::Characteristic => linalg::identity(field, d),
    };
    let twist = inverse(field, &grading).expect("diagonal with unit entries");
    let nonzero: Vec<(usize, F::Elem)> = (0..n)
        .filter_map(|k| {
            let mut idx = vec![0; n];
            idx[k] = g.d;
            g.coeff(&idx).map(|c| (k, c.clone()))
        })
        .collect();
    let mut rest = &nonzero[..];
    if let (Case::Graded, 2, [(k, alpha), (l, beta), ..]) = (case, d, &nonzero[..]) {
        if let Some(fac) = split_quaternion_pair(field, n, (*k, alpha), (*l, beta)) {
            rep.push_factor(fac);
            rest = &nonzero[2..];
        }
    }
    for (k, alpha) in rest {
        let mut idx = vec![0; n];
        idx[*k] = g.d;
        let mut pieces = vec![zero_mat(field, d); n];
        pieces[*k] = offdiagonal_block(field, *k, &idx, alpha)?;
        rep.push_factor(TensorFactor { pieces, grading: grading.clone(), twist: twist.clone() });
    }
    if rep.factors.is_empty() {
        // g = 0: the base field with every Y_k = 0
        let one = vec![vec![field.one()]];
        rep.push_factor(TensorFactor { pieces: vec![vec![vec![field.zero()]]; n], grading: one.clone(), twist: one });
    }
    Ok(rep)
}

/// For d = 2 and α = s², the pair α a_k² + β a_l² fits in one 2×2 factor:
/// Y_k = s·[[0,1],[1,0]], Y_l = [[p,q],[−q,−p]] with p² − q² = β, graded by Y_k Y_l.
fn split_quaternion_pair<F: Field>(
    field: &F,
    n: usize,
    (k, alpha): (usize, &F::Elem),
    (l, beta): (usize, &F::Elem),
) -> Option<TensorFactor<F::Elem>> {
    let s = field.nth_root(alpha, 2)?;
    let half = field.inv(&field.from_int(2)).ok()?;
    let p = field.mul(&field.add(beta, &field.one()), &half);
    let q = field.mul(&field.sub(beta, &field.one()), &half);
    let mut pieces = vec![zero_mat(field, 2); n];
    pieces[k] = vec![vec![field.zero(), s.clone()], vec![s, field.zero()]];
    pieces[l] = vec![vec![p.clone(), q.clone()], vec![field.neg(&q), field.neg(&p)]];
    let grading = linalg::mat_mul(field, &pieces[k], &pieces[l]);
    let twist = inverse(field, &grading)?;
    Some(TensorFactor { pieces, grading, twist })
}

/// Adjoins one d×d block per off-diagonal coefficient of f to a representation of its diagonal part.
pub fn extend_linearization<F: Field>(
    field: &F,
    base: &GradedMatrixRep<F::Elem>,
    f: &HomogeneousForm<F::Elem>,
) -> Result<GradedMatrixRep<F::Elem>, LinearizeError> {
    if base.d != f.d || base.n != f.n {
        return Err(LinearizeError::CaseMismatch(format!(
            "representation has (d, n) = ({}, {}), form has ({}, {})",
            base.d, base.n, f.d, f.n
        )));
    }
    let d = f.d as usize;
    let grading = match base.case {
        Case::Graded => grading_operator(field, d, &base.rho),
        Case::Characteristic => linalg::identity(field, d),
    };
    let twist = inverse(field, &grading).expect("diagonal with unit entries");
    let mut rep = base.clone();
    for (idx, c) in f.off_diagonal() {
        let pieces = (0..f.n).map(|k| offdiagonal_block(field, k, &idx, &c)).collect::<Result<Vec<_>, _>>()?;
        rep.push_factor(TensorFactor { pieces, grading: grading.clone(), twist: twist.clone() });
    }
    Ok(rep)
}

pub fn linearize<F: Field>(
    field: &F,
    f: &HomogeneousForm<F::Elem>,
    case: Case,
) -> Result<GradedMatrixRep<F::Elem>, LinearizeError> {
    let base = diagonal_linearization(field, &f.diagonal_part(), case)?;
    extend_linearization(field, &base, f)
}
