use super::algebraic::{qlift, AlgebraicQuaternion};
use super::{QuatRoot, RootFamily, RootReport};
use crate::ncpoly::StandardPoly;
use crate::quaternion::{Quat, Quaternion};
use crate::realpoly::{isolate_real_roots, IsolatedRoot, RealPoly, RootLocation};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn poly(c: &[BigRational]) -> RealPoly {
    RealPoly::new(c.to_vec())
}

/// p(t)·q as a quaternion with polynomial coordinates.
fn tq(p: RealPoly, q: &Quaternion) -> Quat<RealPoly> {
    qlift(q).scale(&p)
}

fn scalar(p: RealPoly) -> Quat<RealPoly> {
    Quat::scalar(p)
}

/// Candidate roots num(t)/den(t) over the real roots t of `param` kept by `keep`.
fn candidates(
    param: &RealPoly,
    num: &Quat<RealPoly>,
    den: &RealPoly,
    keep: impl Fn(&IsolatedRoot) -> bool,
    out: &mut Vec<QuatRoot>,
) {
    if param.is_zero() {
        return;
    }
    for r in isolate_real_roots(param).expect("nonzero") {
        if !keep(&r) {
            continue;
        }
        let Some(a) = AlgebraicQuaternion::new(r, num.clone(), den.clone()) else {
            continue;
        };
        out.push(match a.to_exact() {
            Some(q) => QuatRoot::Exact(q),
            None => QuatRoot::Algebraic(a),
        });
    }
}

fn nonzero(r: &IsolatedRoot) -> bool {
    r.sign() != 0
}

fn nonnegative(r: &IsolatedRoot) -> bool {
    r.sign() >= 0
}

fn any(_: &IsolatedRoot) -> bool {
    true
}

/// All roots of z² + a z + b.
///
/// With z = w − Re(a)/2 the equation becomes w² + a'w + b' with a' pure
/// imaginary. Write b' = m + n a' + d with d ⊥ a', A = N(a'), D = N(d).
/// The root w = r + x is found through a real equation in one parameter.
pub fn solve_quadratic(a: &Quaternion, b: &Quaternion) -> RootReport {
    let f = StandardPoly::new(vec![b.clone(), a.clone(), Quaternion::one()]);
    let half = BigRational::new(1.into(), 2.into());
    let s = a.re() * &half;
    let a1 = a.im();
    let b1 = b - &a.scale(&s) + Quaternion::scalar(&s * &s);
    let mut cands: Vec<QuatRoot> = Vec::new();
    let mut families: Vec<RootFamily> = Vec::new();
    let t = || RealPoly::x();

    if a1.is_zero() {
        // w² = c
        let c = -b1;
        let rc = c.re();
        if c.is_real() {
            if rc.is_negative() {
                let norm = IsolatedRoot { location: RootLocation::Exact(-rc.clone()), multiplicity: 1, poly: poly(&[rc.clone(), rat(1)]) };
                families.push(RootFamily { re: -s.clone(), norm });
            } else {
                candidates(&poly(&[-rc, rat(0), rat(1)]), &scalar(t()), &RealPoly::one(), any, &mut cands);
            }
        } else {
            // w = p + Im(c)/(2p) with 4p⁴ − 4Re(c)p² − N(Im c) = 0
            let ic = c.im();
            let param = poly(&[-ic.norm(), rat(0), -rat(4) * &rc, rat(0), rat(4)]);
            let num = scalar(poly(&[rat(0), rat(0), rat(2)])) + qlift(&ic);
            candidates(&param, &num, &poly(&[rat(0), rat(2)]), nonzero, &mut cands);
        }
    } else {
        let big_a = a1.norm();
        let m = b1.re();
        let ib = b1.im();
        let n = (&ib.ci * &a1.ci + &ib.cj * &a1.cj + &ib.ck * &a1.ck) / &big_a;
        let d = &ib - &a1.scale(&n);
        let big_d = d.norm();
        if d.is_zero() {
            if n.is_zero() {
                // w = s' a': A s'² + A s' − m = 0
                let param = poly(&[-m.clone(), big_a.clone(), big_a.clone()]);
                candidates(&param, &tq(t(), &a1), &RealPoly::one(), any, &mut cands);
                // w = r − a'/2: r² = −A/4 − m
                let param = poly(&[&big_a / rat(4) + &m, rat(0), rat(1)]);
                let num = scalar(t()) - qlift(&a1.scale(&half));
                candidates(&param, &num, &RealPoly::one(), any, &mut cands);
            } else {
                // 4r⁴ + (A + 4m)r² − A n² = 0, w = (2r² − (n + r)a')/(2r)
                let param = poly(&[-(&big_a * &n * &n), rat(0), &big_a + rat(4) * &m, rat(0), rat(4)]);
                let num = scalar(poly(&[rat(0), rat(0), rat(2)])) - tq(poly(&[n.clone(), rat(1)]), &a1);
                candidates(&param, &num, &poly(&[rat(0), rat(2)]), nonzero, &mut cands);
            }
        } else if !n.is_zero() {
            // sextic in r; x = −(2r − a')(a'(r + n)(2r + a') + 2r d) / (2r(4r² + A))
            let param = poly(&[
                -(&big_a * &big_a * &n * &n),
                rat(0),
                &big_a * (rat(4) * &m + &big_a) - rat(4) * &big_a * &n * &n - rat(4) * &big_d,
                rat(0),
                rat(8) * &big_a + rat(16) * &m,
                rat(0),
                rat(16),
            ]);
            let two_r_minus_a = scalar(poly(&[rat(0), rat(2)])) - qlift(&a1);
            let two_r_plus_a = scalar(poly(&[rat(0), rat(2)])) + qlift(&a1);
            let inner = tq(poly(&[n.clone(), rat(1)]), &a1) * two_r_plus_a + tq(poly(&[rat(0), rat(2)]), &d);
            let x_num = -(two_r_minus_a * inner);
            let den = poly(&[rat(0), rat(2) * &big_a, rat(0), rat(8)]);
            let num = scalar(t() * den.clone()) + x_num;
            candidates(&param, &num, &den, nonzero, &mut cands);
        } else {
            // r = 0: N² − (A + 2m)N + m² + D = 0, x = a'(m + d − N)/A
            let param = poly(&[&m * &m + &big_d, -(&big_a + rat(2) * &m), rat(1)]);
            let num = qlift(&(&a1 * &(Quaternion::scalar(m.clone()) + d.clone()))) - tq(t(), &a1);
            candidates(&param, &num, &RealPoly::constant(big_a.clone()), nonnegative, &mut cands);
            // r ≠ 0: 16r⁴ + (8A + 16m)r² + A(4m + A) − 4D = 0,
            // x = −(2r − a')(a'(2r + a') + 2d) / (2(4r² + A))
            let param = poly(&[
                &big_a * (rat(4) * &m + &big_a) - rat(4) * &big_d,
                rat(0),
                rat(8) * &big_a + rat(16) * &m,
                rat(0),
                rat(16),
            ]);
            let two_r_minus_a = scalar(poly(&[rat(0), rat(2)])) - qlift(&a1);
            let two_r_plus_a = scalar(poly(&[rat(0), rat(2)])) + qlift(&a1);
            let inner = qlift(&a1) * two_r_plus_a + qlift(&d.scale(&rat(2)));
            let x_num = -(two_r_minus_a * inner);
            let den = poly(&[rat(2) * &big_a, rat(0), rat(8)]);
            let num = scalar(t() * den.clone()) + x_num;
            candidates(&param, &num, &den, nonzero, &mut cands);
        }
    }

    // undo the shift z = w − s
    let shift = |r: QuatRoot| match r {
        QuatRoot::Exact(q) => QuatRoot::Exact(q - Quaternion::scalar(s.clone())),
        QuatRoot::Algebraic(mut al) => {
            al.num = al.num.clone() - Quat::scalar(al.den.scale(&s));
            QuatRoot::Algebraic(al)
        }
    };
    let cands = cands.into_iter().map(shift).collect();
    RootReport::from_candidates(&f, cands, families)
}
