use super::algebraic::{qlift, vanishes_at, AlgebraicQuaternion};
use super::split::split_gh;
use super::{QuatRoot, RootFamily, RootReport, SolveError};
use crate::ncpoly::StandardPoly;
use crate::quaternion::{Quat, Quaternion};
use crate::realpoly::{isolate_real_roots, RealPoly};
use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Pure imaginary roots of f with the data that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImaginaryRoots {
    pub report: RootReport,
    /// g(0, N) and h(0, N).
    pub g: Quat<RealPoly>,
    pub h: Quat<RealPoly>,
    /// Monic N(h) − N·N(g): the norm of any pure imaginary root is a root.
    pub norm_poly: RealPoly,
    /// Monic gcd of the coordinates of g and h; its positive roots are the spheres.
    pub common: RealPoly,
}

impl ImaginaryRoots {
    pub fn to_json(&self, width: &BigRational) -> Value {
        let coords = |q: &Quat<RealPoly>| q.coords().map(|p| p.to_json());
        json!({
            "g": coords(&self.g),
            "h": coords(&self.h),
            "norm_poly": self.norm_poly.to_json(),
            "common": self.common.to_json(),
            "report": self.report.to_json(width),
        })
    }
}

fn gcd_all<'a>(ps: impl Iterator<Item = &'a RealPoly>) -> RealPoly {
    ps.filter(|p| !p.is_zero()).fold(RealPoly::zero(), |acc, p| if acc.is_zero() { p.monic() } else { acc.gcd(p) })
}

/// z0 = x0 pure imaginary is a root iff g(N0)x0 = −h(N0) with N0 = N(x0).
/// Both g and h vanishing at some N0 > 0 gives the whole sphere of norm N0.
pub fn pure_imaginary_roots(f: &StandardPoly) -> Result<ImaginaryRoots, SolveError> {
    if f.is_zero() {
        return Err(SolveError::ZeroPolynomial);
    }
    let pair = split_gh(f);
    let zero = BigRational::zero();
    let g = pair.g.at_r(&zero);
    let h = pair.h.at_r(&zero);
    let common = gcd_all(g.coords().into_iter().chain(h.coords()));

    let mut families = Vec::new();
    let mut cands = Vec::new();
    if common.degree().unwrap_or(0) > 0 {
        for r in isolate_real_roots(&common).expect("nonzero") {
            match r.sign() {
                1 => families.push(RootFamily { re: zero.clone(), norm: r }),
                0 => cands.push(QuatRoot::Exact(Quaternion::zero())),
                _ => {}
            }
        }
    }

    let nvar = RealPoly::x();
    let norm_poly = h.norm() - nvar * g.norm();
    let re_poly = (g.conj() * h.clone()).re();
    let cand_poly = if re_poly.is_zero() { norm_poly.clone() } else { norm_poly.gcd(&re_poly) };
    if cand_poly.degree().unwrap_or(0) > 0 {
        for r in isolate_real_roots(&cand_poly).expect("nonzero") {
            if r.sign() < 0 || vanishes_at(&common, &r) {
                continue;
            }
            // x0 = −ḡh / N(g)
            let num = -(g.conj() * h.clone());
            if let Some(a) = AlgebraicQuaternion::new(r, num, g.norm()) {
                cands.push(match a.to_exact() {
                    Some(q) => QuatRoot::Exact(q),
                    None => QuatRoot::Algebraic(a),
                });
            }
        }
    }
    let cands = cands
        .into_iter()
        .filter(|c| match c {
            QuatRoot::Exact(q) => q.is_pure_imaginary(),
            QuatRoot::Algebraic(a) => vanishes_at(&a.num.c1, &a.param),
        })
        .collect();
    let report = RootReport::from_candidates(f, cands, families);
    Ok(ImaginaryRoots { report, g, h, norm_poly: norm_poly.monic(), common })
}

/// Some x with x pure imaginary and N(x) = n, when n is a sum of three
/// rational squares small enough for a direct search.
pub fn rational_point_on_sphere(n: &BigRational) -> Option<Quaternion> {
    if !n.is_positive() {
        return None;
    }
    // x² + y² + z² = p q with integers, then divide by q
    let target = (n.numer() * n.denom()).to_i64()?;
    if target > 1_000_000 {
        return None;
    }
    let q = BigRational::from_integer(n.denom().clone());
    let lim = target.sqrt();
    for x in (0..=lim).rev() {
        let r1 = target - x * x;
        let ylim = r1.sqrt().min(x);
        for y in (0..=ylim).rev() {
            let r2 = r1 - y * y;
            let z = r2.sqrt();
            if z * z == r2 && z <= y {
                let c = |v: i64| BigRational::from_integer(BigInt::from(v)) / &q;
                return Some(Quat::new(BigRational::zero(), c(x), c(y), c(z)));
            }
        }
    }
    None
}

/// Pure imaginary z with z² + a z b + c = 0 satisfy z = a⁻¹(N − c)b⁻¹,
/// so (a⁻¹(N − c)b⁻¹)² + N = 0 with N = N(z). The four coordinates of the
/// left side are real quadratics in N; their monic gcd is returned.
pub fn two_sided_imaginary_norms(a: &Quaternion, b: &Quaternion, c: &Quaternion) -> Result<RealPoly, SolveError> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(SolveError::ZeroCoefficient);
    }
    let ai = qlift(&a.inv().expect("nonzero"));
    let bi = qlift(&b.inv().expect("nonzero"));
    let n_minus_c = Quat::scalar(RealPoly::x()) - qlift(c);
    let z = ai * n_minus_c * bi;
    let lhs = z.clone() * z + Quat::scalar(RealPoly::x());
    Ok(gcd_all(lhs.coords().into_iter()))
}

