use super::algebraic::{qlift, AlgebraicQuaternion};
use super::imaginary::{pure_imaginary_roots, rational_point_on_sphere, ImaginaryRoots};
use super::quadratic::solve_quadratic;
use super::{QuatRoot, RootFamily, RootReport, SolveError};
use crate::ncpoly::{wedderburn_factor, StandardPoly};
use crate::quaternion::{Quat, Quaternion};
use crate::realpoly::{isolate_real_roots, IsolatedRoot, RealPoly, RootLocation};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicReport {
    pub imaginary: ImaginaryRoots,
    /// All roots found for f.
    pub report: RootReport,
    /// The root a used for f = p·(z − a).
    pub chosen: Option<Quaternion>,
    pub cofactor: Option<StandardPoly>,
    /// [c, b, a] with f = (z − c)(z − b)(z − a).
    pub factorization: Option<Vec<Quaternion>>,
    /// Set when some root could only be described, not transported.
    pub partial: bool,
}

impl CubicReport {
    pub fn to_json(&self, width: &BigRational) -> Value {
        json!({
            "imaginary": self.imaginary.to_json(width),
            "report": self.report.to_json(width),
            "chosen": self.chosen.as_ref().map(Quaternion::to_json),
            "cofactor": self.cofactor.as_ref().map(StandardPoly::to_json),
            "factorization": self.factorization.as_ref().map(|v| v.iter().map(Quaternion::to_json).collect::<Vec<_>>()),
            "factorization_text": self.factorization.as_ref().map(|v| factor_text(v)),
            "partial": self.partial,
        })
    }
}

pub(crate) fn factor_text(v: &[Quaternion]) -> String {
    v.iter().map(|c| if c.is_zero() { "(z)".to_string() } else { format!("(z - ({c}))") }).collect()
}

fn is_real_poly(f: &StandardPoly) -> bool {
    f.coeffs().iter().all(Quaternion::is_real)
}

/// For p(b) = 0 with f = p·(z − a), the root of f over b is
/// u b u⁻¹ with u = b − ā (u = 0 means b = ā).
fn transport(a: &Quaternion, b: &QuatRoot) -> Option<QuatRoot> {
    match b {
        QuatRoot::Exact(b) => {
            let u = b - &a.conj();
            let ui = u.inv().ok()?;
            Some(QuatRoot::Exact(&(&u * b) * &ui))
        }
        QuatRoot::Algebraic(al) => {
            // b = B/d, u = (B − ā d)/d, u b u⁻¹ = U B Ū / (d N(U))
            let big_u = al.num.clone() - qlift(&a.conj()).scale(&al.den);
            let num = big_u.clone() * al.num.clone() * big_u.conj();
            let den = al.den.clone() * big_u.norm();
            AlgebraicQuaternion::new(al.param.clone(), num, den).map(QuatRoot::Algebraic)
        }
    }
}

fn smallest_exact(r: &RootReport) -> Option<Quaternion> {
    // roots are sorted by norm already
    r.exact_roots().into_iter().next()
}

fn family_point(families: &[RootFamily]) -> Option<Quaternion> {
    families.iter().find_map(|fam| {
        let n = fam.norm.exact()?;
        rational_point_on_sphere(n).map(|x| x + Quaternion::scalar(fam.re.clone()))
    })
}

/// Quaternion roots of a real cubic: its real roots and one sphere per
/// complex-conjugate pair.
fn real_cubic(f: &StandardPoly, imaginary: ImaginaryRoots) -> CubicReport {
    let coeffs: Vec<BigRational> = f.coeffs().iter().map(Quaternion::re).collect();
    let rp = RealPoly::new(coeffs);
    let roots = isolate_real_roots(&rp).expect("nonzero");
    let mut cands = Vec::new();
    let mut linear = Vec::new();
    let mut rest = rp.clone();
    for r in &roots {
        match r.exact() {
            Some(t) => {
                cands.push(QuatRoot::Exact(Quaternion::scalar(t.clone())));
                for _ in 0..r.multiplicity {
                    rest = rest.divrem(&RealPoly::new(vec![-t.clone(), BigRational::one()])).0;
                    linear.push(Quaternion::scalar(t.clone()));
                }
            }
            None => {
                let num = Quat::scalar(RealPoly::x());
                if let Some(a) = AlgebraicQuaternion::new(r.clone(), num, RealPoly::one()) {
                    cands.push(QuatRoot::Algebraic(a));
                }
            }
        }
    }
    let mut families = Vec::new();
    let mut partial = false;
    if rest.degree() == Some(2) {
        let rest = rest.monic();
        let (p, q) = (rest.coeff(1), rest.coeff(0));
        let half = BigRational::new(1.into(), 2.into());
        let re = -(&p * &half);
        let n0 = &q - &re * &re;
        if n0 > BigRational::zero() {
            let norm_poly = RealPoly::new(vec![-n0.clone(), BigRational::one()]);
            families.push(RootFamily { re, norm: IsolatedRoot { location: RootLocation::Exact(n0), multiplicity: 1, poly: norm_poly } });
        }
    } else if roots.len() == 1 && roots[0].exact().is_none() {
        // the conjugate pair has an irrational real part
        partial = true;
    }
    let report = RootReport::from_candidates(f, cands, families);
    let factorization = (linear.len() == 3).then(|| {
        linear.reverse();
        linear
    });
    CubicReport { imaginary, report, chosen: None, cofactor: None, factorization, partial }
}

/// Finds a pure imaginary root a, splits f = p·(z − a), solves p, and carries
/// each root of p back to a root of f.
pub fn solve_cubic_with_imaginary_root(f: &StandardPoly) -> Result<CubicReport, SolveError> {
    if f.degree() != Some(3) {
        return Err(SolveError::NotCubic(f.degree()));
    }
    let lead_inv = f.coeff(3).inv().expect("nonzero lead");
    let f = f.left_scale(&lead_inv);
    let imaginary = pure_imaginary_roots(&f)?;
    if is_real_poly(&f) {
        return Ok(real_cubic(&f, imaginary));
    }
    let a = match smallest_exact(&imaginary.report).or_else(|| family_point(&imaginary.report.families)) {
        Some(a) => a,
        None => return Err(SolveError::NoImaginaryRootFound(Box::new(imaginary))),
    };
    let p = wedderburn_factor(&f, &a)?;
    let pr = solve_quadratic(&p.coeff(1), &p.coeff(0));

    let mut cands = vec![QuatRoot::Exact(a.clone())];
    let mut families = pr.families.clone();
    families.extend(imaginary.report.families.iter().cloned());
    for b in &pr.roots {
        match transport(&a, b) {
            Some(z) => cands.push(z),
            None => {
                // b = ā: (z − ā)(z − a) is real, so its whole sphere through a is a root set
                let n0 = a.im().norm();
                let norm = IsolatedRoot {
                    location: RootLocation::Exact(n0.clone()),
                    multiplicity: 1,
                    poly: RealPoly::new(vec![-n0, BigRational::one()]),
                };
                families.push(RootFamily { re: a.re(), norm });
            }
        }
    }
    let report = RootReport::from_candidates(&f, cands, families);

    let b1 = smallest_exact(&pr).or_else(|| family_point(&pr.families));
    let factorization = b1.and_then(|b1| {
        let q = wedderburn_factor(&p, &b1).ok()?;
        Some(vec![-q.coeff(0), b1, a.clone()])
    });
    let partial = factorization.is_none();
    Ok(CubicReport { imaginary, report, chosen: Some(a), cofactor: Some(p), factorization, partial })
}
