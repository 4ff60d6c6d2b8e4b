use super::matrix::{Gauss, QuatMatrix};
use super::EigenError;
use crate::ncpoly::{h_inv, FreeMonoidPoly, GeneralPoly};
use crate::quaternion::{Quat, Quaternion};
use crate::realpoly::RealPoly;
use crate::solver::{qlift, solve_quadratic, vanishes_at, AlgebraicQuaternion, QuatRoot, RootFamily};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};

/// A left eigenvalue with an eigenvector (v_1, v_2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPair {
    pub value: QuatRoot,
    pub vector: [QuatRoot; 2],
}

/// λ = d − cμ with eigenvector (−μ, 1), for every μ on the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenFamily {
    pub mu: RootFamily,
    pub c: Quaternion,
    pub d: Quaternion,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EigenReport {
    pub pairs: Vec<EigenPair>,
    pub families: Vec<EigenFamily>,
}

impl EigenReport {
    pub fn exact_values(&self) -> Vec<Quaternion> {
        self.pairs.iter().filter_map(|p| p.value.exact().cloned()).collect()
    }

    pub fn to_json(&self, width: &BigRational) -> Value {
        json!({
            "eigenvalues": self.pairs.iter().map(|p| json!({
                "value": p.value.to_json(width),
                "vector": [p.vector[0].to_json(width), p.vector[1].to_json(width)],
            })).collect::<Vec<_>>(),
            "families": self.families.iter().map(|f| json!({
                "lambda": "d - c*mu",
                "vector": ["-mu", "1"],
                "mu": f.mu.to_json(),
                "c": f.c.to_json(),
                "d": f.d.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn check_2x2(a: &QuatMatrix) -> Result<(), EigenError> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(EigenError::NonConformant);
    }
    Ok(())
}

fn exact_pair(a: &QuatMatrix, lambda: Quaternion, v: [Quaternion; 2]) -> Option<EigenPair> {
    let av = a.apply(&v).ok()?;
    let ok = av.iter().zip(&v).all(|(x, y)| (x - &(&lambda * y)).is_zero()) && !(v[0].is_zero() && v[1].is_zero());
    ok.then(|| EigenPair { value: QuatRoot::Exact(lambda), vector: v.map(QuatRoot::Exact) })
}

/// Exact check that (V/den, 1) is an eigenvector for λ = L/den at the parameter.
fn algebraic_residual_vanishes(a: &QuatMatrix, l: &AlgebraicQuaternion, v: &Quat<RealPoly>) -> bool {
    let den = qlift(&Quaternion::one()).scale(&l.den);
    let comps = [v.clone(), den.clone()];
    (0..2).all(|i| {
        let row = qlift(a.get(i, 0)) * comps[0].clone() + qlift(a.get(i, 1)) * comps[1].clone();
        let res = row * den.clone() - l.num.clone() * comps[i].clone();
        res.into_coords().iter().all(|p| vanishes_at(&p.divrem(&l.param.poly).1, &l.param))
    })
}

/// Left eigenvalues λ (Av = λv) of a 2×2 quaternion matrix.
pub fn left_eigenvalues_2x2(a: &QuatMatrix) -> Result<EigenReport, EigenError> {
    check_2x2(a)?;
    let (qa, qb, qc, qd) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let mut report = EigenReport::default();
    if qc.is_zero() {
        // triangular: v_2 = 0 forces λ = a, otherwise λ = d
        report.pairs.extend(exact_pair(a, qa.clone(), [Quaternion::one(), Quaternion::zero()]));
        if qd != qa {
            let v1 = -(&(qa - qd).inv()? * qb);
            report.pairs.extend(exact_pair(a, qd.clone(), [v1, Quaternion::one()]));
        }
        return Ok(report);
    }
    // μ = c⁻¹(d − λ): μ² + c⁻¹(a − d)μ − c⁻¹b = 0, λ = d − cμ, v = (−μ, 1)
    let cinv = qc.inv()?;
    let mu = solve_quadratic(&(&cinv * &(qa - qd)), &-(&cinv * qb));
    for m in mu.roots {
        match m {
            QuatRoot::Exact(m) => {
                let lambda = qd - &(qc * &m);
                if let Some(p) = exact_pair(a, lambda, [-m, Quaternion::one()]) {
                    report.pairs.push(p);
                }
            }
            QuatRoot::Algebraic(m) => {
                let num = qlift(qd).scale(&m.den) - qlift(qc) * m.num.clone();
                let Some(lambda) = AlgebraicQuaternion::new(m.param.clone(), num, m.den.clone()) else {
                    continue;
                };
                let v1 = -m.num.clone();
                if !algebraic_residual_vanishes(a, &lambda, &v1) {
                    continue;
                }
                let v1 = AlgebraicQuaternion::new(m.param.clone(), v1, m.den.clone()).expect("same denominator");
                report.pairs.push(EigenPair {
                    value: QuatRoot::Algebraic(lambda),
                    vector: [QuatRoot::Algebraic(v1), QuatRoot::Exact(Quaternion::one())],
                });
            }
        }
    }
    report.families = mu.families.into_iter().map(|f| EigenFamily { mu: f, c: qc.clone(), d: qd.clone() }).collect();
    Ok(report)
}

/// Elimination oracle: λ is a left eigenvalue iff A − λI has a nonzero right kernel.
pub fn is_left_eigenvalue(a: &QuatMatrix, lambda: &Quaternion) -> Result<bool, EigenError> {
    let m = a.sub_scalar(lambda)?;
    Ok(m.rank() < m.rows())
}

type PolyMat = Vec<Vec<GeneralPoly>>;

fn pmat(m: &QuatMatrix) -> PolyMat {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| GeneralPoly::constant(m.get(i, j))).collect()).collect()
}

fn pmat_minus_z(m: &QuatMatrix) -> PolyMat {
    let mut p = pmat(m);
    for (i, row) in p.iter_mut().enumerate() {
        row[i] = row[i].sub(&GeneralPoly::z());
    }
    p
}

fn pmat_mul(a: &PolyMat, b: &PolyMat) -> Result<PolyMat, EigenError> {
    let mut out = vec![vec![GeneralPoly::zero(); b[0].len()]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for j in 0..b[0].len() {
            for (k, x) in row.iter().enumerate() {
                out[i][j] = out[i][j].add(&x.mul(&b[k][j])?);
            }
        }
    }
    Ok(out)
}

/// e, f, g, h of C(A − zI)C⁻¹(D − zI) − CB = [e f; g h] and the condition
/// e ē h − g ē f, all as polynomials in λ = z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCondition {
    pub e: GeneralPoly,
    pub f: GeneralPoly,
    pub g: GeneralPoly,
    pub h: GeneralPoly,
    pub condition: GeneralPoly,
}

pub fn block_condition(m: &QuatMatrix) -> Result<BlockCondition, EigenError> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(EigenError::NonConformant);
    }
    let (a, b, c, d) = (m.block(0, 0, 2, 2), m.block(0, 2, 2, 2), m.block(2, 0, 2, 2), m.block(2, 2, 2, 2));
    let cinv = c.inverse().map_err(|_| EigenError::CNotInvertible)?;
    let left = pmat_mul(&pmat_mul(&pmat(&c), &pmat_minus_z(&a))?, &pmat(&cinv))?;
    let prod = pmat_mul(&left, &pmat_minus_z(&d))?;
    let cb = pmat(&c.mul(&b)?);
    let e = prod[0][0].sub(&cb[0][0]);
    let f = prod[0][1].sub(&cb[0][1]);
    let g = prod[1][0].sub(&cb[1][0]);
    let h = prod[1][1].sub(&cb[1][1]);
    let ebar = e.conjugate();
    let condition = e.mul(&ebar)?.mul(&h)?.sub(&g.mul(&ebar)?.mul(&f)?);
    Ok(BlockCondition { e, f, g, h, condition })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check4 {
    pub verdict: bool,
    pub e_vanishes: bool,
    pub condition_value: Quaternion,
    /// Rank of M − λI over the quaternions.
    pub rank: usize,
}

impl Check4 {
    /// Whether the characterization agrees with elimination.
    pub fn agrees(&self) -> bool {
        self.verdict == (self.rank < 4)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "e_vanishes": self.e_vanishes,
            "condition_value": self.condition_value.to_json(),
            "elimination_rank": self.rank.to_string(),
            "agrees_with_elimination": self.agrees(),
        })
    }
}

/// e, f, g, h evaluated at λ. Substitution is a ring homomorphism, so this
/// equals evaluating the polynomials of [`block_condition`].
pub fn block_values(m: &QuatMatrix, lambda: &Quaternion) -> Result<[Quaternion; 4], EigenError> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(EigenError::NonConformant);
    }
    let (a, b, c, d) = (m.block(0, 0, 2, 2), m.block(0, 2, 2, 2), m.block(2, 0, 2, 2), m.block(2, 2, 2, 2));
    let cinv = c.inverse().map_err(|_| EigenError::CNotInvertible)?;
    let left = c.mul(&a.sub_scalar(lambda)?)?.mul(&cinv)?;
    let e = left.mul(&d.sub_scalar(lambda)?)?.sub(&c.mul(&b)?)?;
    Ok([e.get(0, 0).clone(), e.get(0, 1).clone(), e.get(1, 0).clone(), e.get(1, 1).clone()])
}

fn verdict(v: &[Quaternion; 4]) -> (bool, Quaternion) {
    let [e, f, g, h] = v;
    let ebar = e.conj();
    let cond = &(&(e * &ebar) * h) - &(&(g * &ebar) * f);
    let ok = if e.is_zero() { (f * g).is_zero() } else { cond.is_zero() };
    (ok, cond)
}

impl BlockCondition {
    pub fn check(&self, lambda: &Quaternion) -> bool {
        verdict(&[self.e.eval(lambda), self.f.eval(lambda), self.g.eval(lambda), self.h.eval(lambda)]).0
    }
}

/// Left-eigenvalue test for a 4×4 matrix through its 2×2 block structure,
/// reported together with the elimination rank.
pub fn eigen_condition_4x4(m: &QuatMatrix, lambda: &Quaternion) -> Result<Check4, EigenError> {
    let v = block_values(m, lambda)?;
    let (ok, cond) = verdict(&v);
    Ok(Check4 { verdict: ok, e_vanishes: v[0].is_zero(), condition_value: cond, rank: m.sub_scalar(lambda)?.rank() })
}

/// Candidates with integer coordinates in [−bound, bound] that are real or
/// pure imaginary, kept when the block condition holds.
pub fn search_4x4(m: &QuatMatrix, bound: i64) -> Result<Vec<Quaternion>, EigenError> {
    let r = -bound..=bound;
    let mut cands: Vec<Quaternion> = r.clone().map(|x| Quaternion::from_ints(x, 0, 0, 0)).collect();
    for x in r.clone() {
        for y in r.clone() {
            for z in r.clone() {
                if (x, y, z) != (0, 0, 0) {
                    cands.push(Quaternion::from_ints(0, x, y, z));
                }
            }
        }
    }
    let mut out = Vec::new();
    for q in cands {
        if verdict(&block_values(m, &q)?).0 {
            out.push(q);
        }
    }
    Ok(out)
}

/// Commutative polynomial in x_1..x_4 over Q(i), keyed by exponent vectors.
type MPoly = BTreeMap<[u8; 4], Gauss>;

fn mp_add(a: &MPoly, b: &MPoly, sign: bool) -> MPoly {
    let mut out = a.clone();
    for (k, c) in b {
        let e = out.entry(*k).or_insert_with(Gauss::zero);
        *e = if sign { e.clone() + c.clone() } else { e.clone() - c.clone() };
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn mp_mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let k = [ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]];
            let e = out.entry(k).or_insert_with(Gauss::zero);
            *e = e.clone() + ca.clone() * cb.clone();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Determinant by cofactor expansion along rows, memoized on the set of used columns.
fn mp_det(m: &[Vec<MPoly>]) -> MPoly {
    fn go(m: &[Vec<MPoly>], row: usize, used: u32, memo: &mut HashMap<u32, MPoly>) -> MPoly {
        let n = m.len();
        if row == n {
            return MPoly::from([([0; 4], Gauss::one())]);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = MPoly::new();
        let mut seen = 0;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            if !m[row][col].is_empty() {
                let minor = go(m, row + 1, used | (1 << col), memo);
                acc = mp_add(&acc, &mp_mul(&m[row][col], &minor), seen % 2 == 0);
            }
            seen += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(m, 0, 0, &mut HashMap::new())
}

pub const CHARPOLY_MAX_SIZE: usize = 3;

/// h⁻¹ of det of the complex embedding of A − λI, λ = x_1 + i x_2 + j x_3 + ij x_4.
/// Vanishes exactly at the left eigenvalues; degree 2k for a k×k matrix.
pub fn characteristic_general_poly(a: &QuatMatrix) -> Result<GeneralPoly, EigenError> {
    if !a.is_square() {
        return Err(EigenError::NonSquare);
    }
    let k = a.rows();
    if k > CHARPOLY_MAX_SIZE {
        return Err(EigenError::SizeCap(k));
    }
    let var = |v: usize, c: Gauss| {
        let mut e = [0u8; 4];
        e[v] = 1;
        (e, c)
    };
    let one = Gauss::one();
    let unit = Gauss::new(BigRational::zero(), BigRational::one());
    // B − (x_1 + i x_2) on the diagonal, C − (x_3 + i x_4)
    let emb = super::ComplexEmbedding::of(a);
    let mut big = vec![vec![MPoly::new(); 2 * k]; 2 * k];
    for r in 0..k {
        for c in 0..k {
            let konst = |z: &Gauss| -> MPoly {
                if z.is_zero() {
                    MPoly::new()
                } else {
                    MPoly::from([([0; 4], z.clone())])
                }
            };
            let mut b = konst(&emb.b[r][c]);
            let mut cc = konst(&emb.c[r][c]);
            if r == c {
                let lb = MPoly::from([var(0, one.clone()), var(1, unit.clone())]);
                let lc = MPoly::from([var(2, one.clone()), var(3, unit.clone())]);
                b = mp_add(&b, &lb, false);
                cc = mp_add(&cc, &lc, false);
            }
            let conj = |p: &MPoly| -> MPoly { p.iter().map(|(e, z)| (*e, z.conj())).collect() };
            big[r][c] = b.clone();
            big[r][k + c] = mp_add(&MPoly::new(), &cc, false);
            big[k + r][c] = conj(&cc);
            big[k + r][k + c] = conj(&b);
        }
    }
    let det = mp_det(&big);
    let mut terms = Vec::with_capacity(det.len());
    for (e, z) in det {
        debug_assert!(z.im.is_zero(), "determinant of the doubled matrix is real");
        let word: Vec<u8> = (0..4u8).flat_map(|v| std::iter::repeat_n(v, e[v as usize] as usize)).collect();
        terms.push((word, Quaternion::scalar(z.re)));
    }
    Ok(h_inv(&FreeMonoidPoly::from_terms(terms))?)
}
