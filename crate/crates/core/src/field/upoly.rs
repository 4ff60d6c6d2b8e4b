//! Dense univariate polynomials over any [`Field`], coefficients ascending.
//! A polynomial is trimmed when it has no trailing zero coefficient; the
//! zero polynomial is the empty vector.

use super::{Field, FieldError};

pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> Poly<F::Elem> {
    trim(f, vec![c])
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, out)
}

pub fn neg<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    add(f, a, &neg(f, b))
}

pub fn scale<F: Field>(f: &F, a: &[F::Elem], c: &F::Elem) -> Poly<F::Elem> {
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub fn eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    p.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn divrem<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<(Poly<F::Elem>, Poly<F::Elem>), FieldError> {
    let Some(db) = degree(b) else {
        return Err(FieldError::DivisionByZero);
    };
    let lead_inv = f.inv(&b[db])?;
    let mut r = trim(f, a.to_vec());
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![f.zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - 1 - db;
        let c = f.mul(r.last().unwrap(), &lead_inv);
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bc));
        }
        q[shift] = c;
        r.pop();
        r = trim(f, r);
    }
    Ok((trim(f, q), r))
}

pub fn monic<F: Field>(f: &F, p: &[F::Elem]) -> Poly<F::Elem> {
    match p.last() {
        None => Vec::new(),
        Some(l) => {
            let li = f.inv(l).expect("trimmed polynomial has nonzero lead");
            scale(f, p, &li)
        }
    }
}

pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let mut a = trim(f, a.to_vec());
    let mut b = trim(f, b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(f, &a, &b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn inv_mod<F: Field>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Option<Poly<F::Elem>> {
    let (mut r0, mut r1) = (trim(f, m.to_vec()), divrem(f, a, m).ok()?.1);
    let (mut s0, mut s1): (Poly<F::Elem>, Poly<F::Elem>) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1).ok()?;
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = f.inv(&r0[0]).ok()?;
    Some(divrem(f, &scale(f, &s0, &c), m).ok()?.1)
}

pub fn derivative<F: Field>(f: &F, p: &[F::Elem]) -> Poly<F::Elem> {
    let out = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(c, &f.from_int(i as i64)))
        .collect();
    trim(f, out)
}
