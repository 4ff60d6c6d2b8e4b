//! Roots of quaternion polynomials: the (r, N) split, quadratics, pure
//! imaginary roots and their infinitude test, cubics with an imaginary root,
//! and the norm bound for two-sided quadratics.

mod algebraic;
mod cubic;
mod imaginary;
mod quadratic;
mod split;

pub use algebraic::{qeval, qlift, AlgebraicQuaternion};
pub(crate) use algebraic::vanishes_at;
pub use cubic::{solve_cubic_with_imaginary_root, CubicReport};
pub use imaginary::{pure_imaginary_roots, rational_point_on_sphere, two_sided_imaginary_norms, ImaginaryRoots};
pub use quadratic::solve_quadratic;
pub use split::{check_root_condition, split_gh, BiPoly, RootCondition, SplitPair};

use crate::field::rational_to_string;
use crate::ncpoly::{NcError, StandardPoly};
use crate::quaternion::Quaternion;
use crate::realpoly::IsolatedRoot;
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Debug, Clone, thiserror::Error)]
pub enum SolveError {
    #[error("norm must be nonnegative")]
    NegativeNorm,
    #[error("no pure imaginary root found")]
    NoImaginaryRootFound(Box<ImaginaryRoots>),
    #[error("coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("expected a cubic, got degree {0:?}")]
    NotCubic(Option<usize>),
    #[error(transparent)]
    Nc(#[from] NcError),
}

/// A root: exact, or algebraic over an isolated real parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuatRoot {
    Exact(Quaternion),
    Algebraic(AlgebraicQuaternion),
}

impl QuatRoot {
    pub fn exact(&self) -> Option<&Quaternion> {
        match self {
            QuatRoot::Exact(q) => Some(q),
            QuatRoot::Algebraic(_) => None,
        }
    }

    pub fn to_json(&self, width: &BigRational) -> Value {
        match self {
            QuatRoot::Exact(q) => json!({"kind": "exact", "value": q.to_json()}),
            QuatRoot::Algebraic(a) => a.to_json(width),
        }
    }
}

/// The sphere {re + x : x pure imaginary, N(x) = norm}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFamily {
    pub re: BigRational,
    pub norm: IsolatedRoot,
}

impl RootFamily {
    pub fn to_json(&self) -> Value {
        json!({"re": rational_to_string(&self.re), "norm": self.norm.to_json()})
    }
}

/// Verification outcome for one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    /// f(z) for exact roots.
    pub value: Option<Quaternion>,
    /// Exact algebraic certificate (always the residual test for exact roots).
    pub certified: bool,
    /// Largest coordinate magnitude of the interval residual, for algebraic roots.
    pub bound: Option<BigRational>,
}

impl Residual {
    fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        if let Some(v) = &self.value {
            m.insert("value".into(), v.to_json());
        }
        m.insert("certified".into(), json!(self.certified));
        if let Some(b) = &self.bound {
            m.insert("bound".into(), json!(rational_to_string(b)));
        }
        Value::Object(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootReport {
    pub roots: Vec<QuatRoot>,
    pub families: Vec<RootFamily>,
    /// One entry per root, same order.
    pub residuals: Vec<Residual>,
}

/// Width used for interval residuals unless the caller asks otherwise.
pub fn default_width() -> BigRational {
    BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(12))
}

impl RootReport {
    pub fn exact_roots(&self) -> Vec<Quaternion> {
        self.roots.iter().filter_map(|r| r.exact().cloned()).collect()
    }

    /// True if some family's norm is the rational `n`.
    pub fn has_family_with_norm(&self, n: &BigRational) -> bool {
        self.families.iter().any(|fam| fam.norm.exact() == Some(n))
    }

    /// Keeps the candidates that pass verification against `f`, deduplicated
    /// and in a fixed order, and records their residuals.
    pub(crate) fn from_candidates(f: &StandardPoly, cands: Vec<QuatRoot>, families: Vec<RootFamily>) -> Self {
        let mut exact: Vec<Quaternion> = Vec::new();
        let mut alg: Vec<AlgebraicQuaternion> = Vec::new();
        for c in cands {
            match c {
                QuatRoot::Exact(q) => {
                    if f.eval(&q).is_zero() && !exact.contains(&q) {
                        exact.push(q);
                    }
                }
                QuatRoot::Algebraic(a) => {
                    if a.certify(f) && !alg.iter().any(|b| b.same_point(&a)) {
                        alg.push(a);
                    }
                }
            }
        }
        exact.sort_by_key(|a| (a.norm(), a.to_string()));
        let width = default_width();
        let mut residuals: Vec<Residual> = exact
            .iter()
            .map(|q| Residual { value: Some(f.eval(q)), certified: true, bound: None })
            .collect();
        residuals.extend(alg.iter().map(|a| Residual {
            value: None,
            certified: true,
            bound: Some(a.residual_bound(f, &width)),
        }));
        let mut families_dedup: Vec<RootFamily> = Vec::new();
        for fam in families {
            if !families_dedup.contains(&fam) {
                families_dedup.push(fam);
            }
        }
        let roots = exact.into_iter().map(QuatRoot::Exact).chain(alg.into_iter().map(QuatRoot::Algebraic)).collect();
        RootReport { roots, families: families_dedup, residuals }
    }

    pub fn to_json(&self, width: &BigRational) -> Value {
        json!({
            "roots": self.roots.iter().map(|r| r.to_json(width)).collect::<Vec<_>>(),
            "infinite_families": self.families.iter().map(RootFamily::to_json).collect::<Vec<_>>(),
            "residuals": self.residuals.iter().map(Residual::to_json).collect::<Vec<_>>(),
        })
    }
}
