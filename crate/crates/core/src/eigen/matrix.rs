use super::EigenError;
use crate::quaternion::Quaternion;
use crate::realpoly::{isolate_real_roots, IsolatedRoot, RealPoly};
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub type Gauss = Complex<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Quaternion>) -> Result<Self, EigenError> {
        if entries.len() != rows * cols {
            return Err(EigenError::NonConformant);
        }
        Ok(QuatMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self, EigenError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(EigenError::NonConformant);
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QuatMatrix { rows, cols, entries: vec![Quaternion::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Quaternion::one())
    }

    /// q·I
    pub fn scalar(n: usize, q: &Quaternion) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, q.clone());
        }
        m
    }

    pub fn diagonal(d: &[Quaternion]) -> Self {
        let mut m = Self::zero(d.len(), d.len());
        for (i, q) in d.iter().enumerate() {
            m.set(i, i, q.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, q: Quaternion) {
        self.entries[i * self.cols + j] = q;
    }

    pub fn add(&self, o: &Self) -> Result<Self, EigenError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(EigenError::NonConformant);
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect();
        Ok(QuatMatrix { entries, ..*self })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, EigenError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(EigenError::NonConformant);
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect();
        Ok(QuatMatrix { entries, ..*self })
    }

    pub fn mul(&self, o: &Self) -> Result<Self, EigenError> {
        if self.cols != o.rows {
            return Err(EigenError::NonConformant);
        }
        let mut m = Self::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Quaternion::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k) * o.get(k, j);
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    /// Entrywise λ·a from the left.
    pub fn left_scale(&self, q: &Quaternion) -> Self {
        QuatMatrix { entries: self.entries.iter().map(|a| q * a).collect(), ..*self }
    }

    /// A − λI
    pub fn sub_scalar(&self, lambda: &Quaternion) -> Result<Self, EigenError> {
        if !self.is_square() {
            return Err(EigenError::NonSquare);
        }
        self.sub(&Self::scalar(self.rows, lambda))
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        m
    }

    /// [[a, b], [c, d]] from four blocks of matching shapes.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, EigenError> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(EigenError::NonConformant);
        }
        let mut m = Self::zero(a.rows + c.rows, a.cols + b.cols);
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for i in 0..blk.rows {
                for j in 0..blk.cols {
                    m.set(r0 + i, c0 + j, blk.get(i, j).clone());
                }
            }
        }
        Ok(m)
    }

    /// A·v for a column vector v.
    pub fn apply(&self, v: &[Quaternion]) -> Result<Vec<Quaternion>, EigenError> {
        if v.len() != self.cols {
            return Err(EigenError::NonConformant);
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).fold(Quaternion::zero(), |acc, k| acc + self.get(i, k) * &v[k]))
            .collect())
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| Value::Array((0..self.cols).map(|j| self.get(i, j).to_json()).collect()))
            .collect();
        Value::Array(rows)
    }

    pub fn from_json(v: &Value) -> Result<Self, EigenError> {
        let rows = v.as_array().ok_or_else(|| EigenError::Parse("matrix must be an array of rows".into()))?;
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let r = r.as_array().ok_or_else(|| EigenError::Parse("row must be an array".into()))?;
            out.push(r.iter().map(Quaternion::from_json).collect::<Result<Vec<_>, _>>()?);
        }
        Self::from_rows(out)
    }

    /// Row reduction by left multiplications; returns the reduced matrix and
    /// pivot columns. The right kernel {v : Av = 0} is preserved.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for j in 0..a.cols {
                let v = &inv * a.get(r, j);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..a.cols {
                    let v = a.get(i, j) - &(&f * a.get(r, j));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Rank as a right module map; A is invertible iff the rank is full.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : Av = 0}.
    pub fn right_nullspace(&self) -> Vec<Vec<Quaternion>> {
        let (r, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut v = vec![Quaternion::zero(); self.cols];
                v[f] = Quaternion::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// Two-sided inverse by Gauss-Jordan on [A | I].
    pub fn inverse(&self) -> Result<Self, EigenError> {
        if !self.is_square() {
            return Err(EigenError::NonSquare);
        }
        let n = self.rows;
        let aug = Self::from_blocks(self, &Self::identity(n), &Self::zero(0, n), &Self::zero(0, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(EigenError::Singular);
        }
        Ok(r.block(0, n, n, n))
    }
}

/// A = B + C·j with B, C over Q(i); i ↦ the complex unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexEmbedding {
    pub b: Vec<Vec<Gauss>>,
    pub c: Vec<Vec<Gauss>>,
}

impl ComplexEmbedding {
    pub fn of(a: &QuatMatrix) -> Self {
        let grid = |f: &dyn Fn(&Quaternion) -> Gauss| -> Vec<Vec<Gauss>> {
            (0..a.rows).map(|i| (0..a.cols).map(|j| f(a.get(i, j))).collect()).collect()
        };
        ComplexEmbedding {
            b: grid(&|q| Complex::new(q.c1.clone(), q.ci.clone())),
            c: grid(&|q| Complex::new(q.cj.clone(), q.ck.clone())),
        }
    }

    /// B + C j; (x + y i) j = x j + y ij.
    pub fn reconstruct(&self) -> QuatMatrix {
        let rows: Vec<Vec<Quaternion>> = self
            .b
            .iter()
            .zip(&self.c)
            .map(|(rb, rc)| {
                rb.iter()
                    .zip(rc)
                    .map(|(b, c)| Quaternion::new(b.re.clone(), b.im.clone(), c.re.clone(), c.im.clone()))
                    .collect()
            })
            .collect();
        QuatMatrix::from_rows(rows).expect("rectangular")
    }

    /// The doubled matrix [B −C; C̄ B̄], multiplicative in A.
    pub fn doubled(&self) -> Vec<Vec<Gauss>> {
        let n = self.b.len();
        let m = self.b.first().map_or(0, Vec::len);
        let mut out = vec![vec![Gauss::zero(); 2 * m]; 2 * n];
        for i in 0..n {
            for j in 0..m {
                out[i][j] = self.b[i][j].clone();
                out[i][m + j] = -self.c[i][j].clone();
                out[n + i][j] = self.c[i][j].conj();
                out[n + i][m + j] = self.b[i][j].conj();
            }
        }
        out
    }
}

pub fn gauss_det(m: &[Vec<Gauss>]) -> Gauss {
    let n = m.len();
    let mut a = m.to_vec();
    let mut acc = Gauss::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Gauss::zero();
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        acc *= a[c][c].clone();
        let inv = Gauss::one() / a[c][c].clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * inv.clone();
            for j in c..n {
                let t = f.clone() * a[c][j].clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
    }
    acc
}

/// Determinant of the doubled complex matrix. Always real and nonnegative.
pub fn study_determinant(a: &QuatMatrix) -> Result<Gauss, EigenError> {
    if !a.is_square() {
        return Err(EigenError::NonSquare);
    }
    let d = gauss_det(&ComplexEmbedding::of(a).doubled());
    debug_assert!(d.im.is_zero() && !d.re.is_negative());
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dieudonne {
    Exact(BigRational),
    /// The positive root of t² − study.
    Algebraic(IsolatedRoot),
}

impl Dieudonne {
    pub fn is_zero(&self) -> bool {
        matches!(self, Dieudonne::Exact(x) if x.is_zero())
    }

    pub fn to_json(&self) -> Value {
        match self {
            Dieudonne::Exact(x) => json!({"kind": "exact", "value": crate::field::rational_to_string(x)}),
            Dieudonne::Algebraic(r) => json!({"kind": "interval", "root": r.to_json()}),
        }
    }
}

fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let s = x.sqrt();
    (&s * &s == *x).then_some(s)
}

pub fn dieudonne_determinant(a: &QuatMatrix) -> Result<Dieudonne, EigenError> {
    let s = study_determinant(a)?.re;
    if let (Some(n), Some(d)) = (exact_sqrt(s.numer()), exact_sqrt(s.denom())) {
        return Ok(Dieudonne::Exact(BigRational::new(n, d)));
    }
    let p = RealPoly::new(vec![-s, BigRational::zero(), BigRational::one()]);
    let root = isolate_real_roots(&p)
        .expect("nonzero polynomial")
        .into_iter()
        .find(|r| r.sign() > 0)
        .expect("positive study determinant has a positive square root");
    Ok(Dieudonne::Algebraic(root))
}
