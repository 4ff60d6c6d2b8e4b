//! Dense linear algebra over an arbitrary [`Field`] by Gaussian elimination.

use crate::field::Field;

pub type Mat<E> = Vec<Vec<E>>;

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = f.zero();
                    for k in 0..inner {
                        if !f.is_zero(&row[k]) && !f.is_zero(&b[k][j]) {
                            acc = f.add(&acc, &f.mul(&row[k], &b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(f: &F, m: &Mat<F::Elem>) -> (Mat<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(&a[r][c]).unwrap();
        a[r] = a[r].iter().map(|x| f.mul(x, &inv)).collect();
        for i in 0..rows {
            if i != r && !f.is_zero(&a[i][c]) {
                let factor = a[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(f: &F, m: &Mat<F::Elem>) -> usize {
    rref(f, m).1.len()
}

/// Basis of the right kernel {v : m v = 0}.
pub fn nullspace<F: Field>(f: &F, m: &Mat<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&r[row][fc]);
            }
            v
        })
        .collect()
}

/// Some solution of m x = b, if the system is consistent.
pub fn solve<F: Field>(f: &F, m: &Mat<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: Mat<F::Elem> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(f, &aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[row][cols].clone();
    }
    Some(x)
}

pub fn det<F: Field>(f: &F, m: &Mat<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut acc = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(&a[i][c])) else {
            return f.zero();
        };
        if p != c {
            a.swap(p, c);
            acc = f.neg(&acc);
        }
        acc = f.mul(&acc, &a[c][c]);
        let inv = f.inv(&a[c][c]).unwrap();
        for i in c + 1..n {
            if f.is_zero(&a[i][c]) {
                continue;
            }
            let factor = f.mul(&a[i][c], &inv);
            for j in c..n {
                let t = f.mul(&factor, &a[c][j]);
                a[i][j] = f.sub(&a[i][j], &t);
            }
        }
    }
    acc
}
