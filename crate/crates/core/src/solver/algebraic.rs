use crate::ncpoly::StandardPoly;
use crate::quaternion::Quat;
use crate::quaternion::Quaternion;
use crate::realpoly::{refine_root, Interval, IsolatedRoot, RealPoly, RootLocation};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

pub fn qlift(q: &Quaternion) -> Quat<RealPoly> {
    q.map(|c| RealPoly::constant(c.clone()))
}

pub fn qeval(q: &Quat<RealPoly>, t: &BigRational) -> Quaternion {
    q.map(|p| p.eval(t))
}

fn qeval_interval(q: &Quat<RealPoly>, t: &Interval) -> Quat<Interval> {
    q.map(|p| Interval::eval_poly(p, t))
}

/// z = num(t) / den(t) at a real root t of `param.poly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicQuaternion {
    pub param: IsolatedRoot,
    pub num: Quat<RealPoly>,
    pub den: RealPoly,
}

impl AlgebraicQuaternion {
    /// Reduces num and den modulo the parameter's polynomial. Returns None if
    /// den vanishes at the parameter.
    pub fn new(param: IsolatedRoot, num: Quat<RealPoly>, den: RealPoly) -> Option<Self> {
        let m = &param.poly;
        let num = num.map(|p| p.divrem(m).1);
        let den = den.divrem(m).1;
        if vanishes_at(&den, &param) {
            return None;
        }
        Some(AlgebraicQuaternion { param, num, den })
    }

    /// The exact value, when the parameter is rational.
    pub fn to_exact(&self) -> Option<Quaternion> {
        let t = self.param.exact()?;
        Some(qeval(&self.num, t).scale(&self.den.eval(t).recip()))
    }

    /// Coordinate enclosures with the parameter refined to `width`.
    pub fn enclosure(&self, width: &BigRational) -> Quat<Interval> {
        let r = refine_root(&self.param, width).expect("positive width");
        let (lo, hi) = r.bounds();
        let t = Interval::new(lo, hi);
        let d = Interval::eval_poly(&self.den, &t).recip();
        let n = qeval_interval(&self.num, &t);
        match d {
            Some(dinv) => n.map(|c| c.clone() * dinv.clone()),
            // den is nonzero at the root, so a narrower bracket excludes zero
            None => self.enclosure(&(width / BigRational::from_integer(1024.into()))),
        }
    }

    /// Exact check: every coordinate of den^n · f(num/den) vanishes at the
    /// parameter, tested through gcd with its square-free polynomial.
    pub fn certify(&self, f: &StandardPoly) -> bool {
        let n = f.degree().unwrap_or(0);
        let mut acc: Quat<RealPoly> = Quat::zero();
        let mut num_pow: Quat<RealPoly> = Quat::one();
        for k in 0..=n {
            let mut den_pow = RealPoly::one();
            for _ in k..n {
                den_pow = den_pow * self.den.clone();
            }
            acc = acc + qlift(&f.coeff(k)) * num_pow.clone().scale(&den_pow);
            num_pow = (num_pow * self.num.clone()).map(|p| p.divrem(&self.param.poly).1);
        }
        acc.into_coords().iter().all(|c| vanishes_at(c, &self.param))
    }

    /// Largest coordinate magnitude of f evaluated on the enclosure at `width`.
    pub fn residual_bound(&self, f: &StandardPoly, width: &BigRational) -> BigRational {
        let z = self.enclosure(width);
        let mut acc: Quat<Interval> = Quat::zero();
        let mut pw: Quat<Interval> = Quat::one();
        for c in f.coeffs() {
            acc = acc + c.map(|x| Interval::point(x.clone())) * pw.clone();
            pw = pw * z.clone();
        }
        acc.into_coords().iter().map(Interval::magnitude).max().unwrap_or_else(BigRational::zero)
    }

    /// Same parameter root and the same value there.
    pub fn same_point(&self, o: &Self) -> bool {
        if self.param.poly != o.param.poly || !overlaps(&self.param, &o.param) {
            return false;
        }
        let diff = self.num.clone().scale(&o.den) - o.num.clone().scale(&self.den);
        diff.into_coords().iter().all(|c| vanishes_at(c, &self.param))
    }

    pub fn to_json(&self, width: &BigRational) -> Value {
        let e = self.enclosure(width);
        json!({
            "kind": "interval",
            "param": self.param.to_json(),
            "num": self.num.coords().map(|p| p.to_json()),
            "den": self.den.to_json(),
            "enclosure": {"c1": e.c1.to_json(), "ci": e.ci.to_json(), "cj": e.cj.to_json(), "ck": e.ck.to_json()},
        })
    }
}

fn overlaps(a: &IsolatedRoot, b: &IsolatedRoot) -> bool {
    let (alo, ahi) = a.bounds();
    let (blo, bhi) = b.bounds();
    alo <= bhi && blo <= ahi
}

/// Whether p vanishes at the root described by `r`.
pub(crate) fn vanishes_at(p: &RealPoly, r: &IsolatedRoot) -> bool {
    if p.is_zero() {
        return true;
    }
    match &r.location {
        RootLocation::Exact(x) => p.eval(x).is_zero(),
        RootLocation::Interval { lo, hi } => {
            let g = p.gcd(&r.poly);
            g.degree().unwrap_or(0) > 0 && g.count_roots(lo, hi) > 0
        }
    }
}
