//! Row-sparse square matrices, enough for exact powers and star products.

use crate::field::Field;
use crate::linalg::Mat;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Sparse<E> {
    pub n: usize,
    pub rows: Vec<BTreeMap<usize, E>>,
}

impl<E: Clone + PartialEq> Sparse<E> {
    pub fn zero(n: usize) -> Self {
        Sparse { n, rows: vec![BTreeMap::new(); n] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zero(n);
        for (i, r) in m.rows.iter_mut().enumerate() {
            r.insert(i, f.one());
        }
        m
    }

    pub fn from_dense<F: Field<Elem = E>>(f: &F, m: &Mat<E>) -> Self {
        let rows = m
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(j, c)| (j, c.clone())).collect())
            .collect();
        Sparse { n: m.len(), rows }
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, f: &F) -> Mat<E> {
        self.rows
            .iter()
            .map(|r| (0..self.n).map(|j| r.get(&j).cloned().unwrap_or_else(|| f.zero())).collect())
            .collect()
    }

    pub fn add_scaled<F: Field<Elem = E>>(&mut self, f: &F, other: &Self, c: &E) {
        for (r, o) in self.rows.iter_mut().zip(&other.rows) {
            for (j, v) in o {
                let e = r.entry(*j).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(v, c));
            }
            r.retain(|_, v| !f.is_zero(v));
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out: BTreeMap<usize, E> = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &other.rows[*k] {
                        let e = out.entry(*j).or_insert_with(|| f.zero());
                        *e = f.add(e, &f.mul(a, b));
                    }
                }
                out.retain(|_, v| !f.is_zero(v));
                out
            })
            .collect();
        Sparse { n: self.n, rows }
    }

    /// Some c with self = c·I.
    pub fn scalar_value<F: Field<Elem = E>>(&self, f: &F) -> Option<E> {
        let c = self.rows.first()?.get(&0).cloned().unwrap_or_else(|| f.zero());
        let ok = self.rows.iter().enumerate().all(|(i, r)| {
            if f.is_zero(&c) {
                r.is_empty()
            } else {
                r.len() == 1 && r.get(&i) == Some(&c)
            }
        });
        ok.then_some(c)
    }

    pub fn kron<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.n * other.n;
        let mut rows = Vec::with_capacity(n);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut out = BTreeMap::new();
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        out.insert(ja * other.n + jb, f.mul(a, b));
                    }
                }
                rows.push(out);
            }
        }
        Sparse { n, rows }
    }
}
