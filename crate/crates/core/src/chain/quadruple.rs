use super::symbol::{step_symbol_char2, step_symbol_pair, BiquaternionSymbol, PairStep, QuaternionSymbol};
use super::ChainError;
use crate::algebra::{cyclic_charp_algebra, tensor_product, AlgElement, AlgebraError, StructureAlgebra};
use crate::field::Field;
use serde_json::{json, Value};
use std::fmt;

type El<F> = AlgElement<<F as Field>::Elem>;

/// Generators of [α,β) ⊗ [γ,δ) inside a 16-dimensional structure algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorQuadruple<F: Field> {
    pub algebra: StructureAlgebra<F>,
    /// The parameters the algebra was built from.
    pub params: [F::Elem; 4],
    pub x: El<F>,
    pub y: El<F>,
    pub z: El<F>,
    pub u: El<F>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    XArtinSchreier,
    YSquare,
    ZArtinSchreier,
    USquare,
    XY,
    XZ,
    XU,
    YZ,
    YU,
    ZU,
}

impl Relation {
    pub const ALL: [Relation; 10] = [
        Relation::XArtinSchreier,
        Relation::YSquare,
        Relation::ZArtinSchreier,
        Relation::USquare,
        Relation::XY,
        Relation::XZ,
        Relation::XU,
        Relation::YZ,
        Relation::YU,
        Relation::ZU,
    ];

    pub fn text(self) -> &'static str {
        match self {
            Relation::XArtinSchreier => "x²+x=α",
            Relation::YSquare => "y²=β",
            Relation::ZArtinSchreier => "z²+z=γ",
            Relation::USquare => "u²=δ",
            Relation::XY => "xy+yx=y",
            Relation::XZ => "xz=zx",
            Relation::XU => "xu=ux",
            Relation::YZ => "yz=zy",
            Relation::YU => "yu=uy",
            Relation::ZU => "zu+uz=u",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
    Z,
    U,
}

impl Generator {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "x" => Some(Generator::X),
            "y" => Some(Generator::Y),
            "z" => Some(Generator::Z),
            "u" => Some(Generator::U),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadStep<E> {
    Pair(PairStep<E>),
    /// One generator changes by a quaternion chain step inside its own factor:
    /// x ↦ x + a + b·y, y ↦ (a + b·x)y, z ↦ z + a + b·u, u ↦ (a + b·z)u.
    Lambda { gen: Generator, a: E, b: E },
}

impl<E: Clone> QuadStep<E> {
    pub fn kind(&self) -> &'static str {
        match self {
            QuadStep::Pair(PairStep::OmegaS { .. }) => "omega_s",
            QuadStep::Pair(PairStep::OmegaI { .. }) => "omega_i",
            QuadStep::Pair(PairStep::OmegaC { .. }) => "omega_c",
            QuadStep::Lambda { .. } => "lambda1",
        }
    }

    /// Builds a step from its kind name and a parameter lookup; missing
    /// parameters default to zero.
    pub fn from_parts<F: Field<Elem = E>>(
        field: &F,
        kind: &str,
        gen: Option<&str>,
        param: impl Fn(&str) -> Option<Result<E, ChainError>>,
    ) -> Result<Self, ChainError> {
        let get = |k: &str| param(k).unwrap_or_else(|| Ok(field.zero()));
        match kind {
            "omega_s" => Ok(QuadStep::Pair(PairStep::OmegaS { a: get("a")?, b: get("b")? })),
            "omega_i" => Ok(QuadStep::Pair(PairStep::OmegaI { a: get("a")? })),
            "omega_c" => Ok(QuadStep::Pair(PairStep::OmegaC { b: get("b")? })),
            "lambda1" => {
                let g = gen.unwrap_or("y");
                let gen = Generator::parse(g).ok_or_else(|| ChainError::Parse(format!("unknown generator {g}")))?;
                Ok(QuadStep::Lambda { gen, a: get("a")?, b: get("b")? })
            }
            _ => Err(ChainError::Parse(format!("unknown step kind {kind}"))),
        }
    }
}

/// Embeds a 4-dimensional factor element into the left or right tensor slot.
fn embed<F: Field>(field: &F, e: &El<F>, left: bool) -> El<F> {
    let mut coords = vec![field.zero(); 16];
    for (i, c) in e.coords.iter().enumerate() {
        coords[if left { i * 4 } else { i }] = c.clone();
    }
    AlgElement { coords }
}

/// The quadruple (x⊗1, y⊗1, 1⊗x, 1⊗y) of [α,β) ⊗ [γ,δ).
pub fn canonical_quadruple<F: Field>(
    field: &F,
    alpha: &F::Elem,
    beta: &F::Elem,
    gamma: &F::Elem,
    delta: &F::Elem,
) -> Result<GeneratorQuadruple<F>, ChainError> {
    if field.characteristic() != 2 {
        return Err(ChainError::WrongCharacteristic);
    }
    let a = cyclic_charp_algebra(field, 2, alpha, beta)?;
    let b = cyclic_charp_algebra(field, 2, gamma, delta)?;
    let algebra = tensor_product(&a.algebra, &b.algebra)?;
    Ok(GeneratorQuadruple {
        x: embed(field, &a.x, true),
        y: embed(field, &a.y, true),
        z: embed(field, &b.x, false),
        u: embed(field, &b.y, false),
        params: [alpha.clone(), beta.clone(), gamma.clone(), delta.clone()],
        algebra,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadVerdict<E> {
    pub failing: Option<Relation>,
    /// The scalars x²+x, y², z²+z, u², when all relations hold.
    pub symbol: Option<BiquaternionSymbol<E>>,
}

impl<E: Clone> QuadVerdict<E> {
    pub fn holds(&self) -> bool {
        self.failing.is_none()
    }

    pub fn to_json<F: Field<Elem = E>>(&self, field: &F) -> Value {
        json!({
            "holds": self.holds(),
            "failing_relation": self.failing.map(|r| r.text()),
            "symbol": self.symbol.as_ref().map(|s| s.to_json(field)),
        })
    }
}

/// Checks the ten defining relations in order and reads off the symbol.
pub fn verify_quadruple<F: Field>(q: &GeneratorQuadruple<F>) -> QuadVerdict<F::Elem> {
    let alg = &q.algebra;
    let f = alg.field();
    let (x, y, z, u) = (&q.x, &q.y, &q.z, &q.u);
    let as_sq = |e: &El<F>| alg.scalar_value(&alg.add(&alg.mul(e, e), e));
    let sq = |e: &El<F>| alg.scalar_value(&alg.mul(e, e));
    let anti = |a: &El<F>, b: &El<F>| alg.add(&alg.mul(a, b), &alg.mul(b, a)) == *b;
    let mut scalars = Vec::with_capacity(4);
    let fail = |r| QuadVerdict { failing: Some(r), symbol: None };
    for (r, v) in [
        (Relation::XArtinSchreier, as_sq(x)),
        (Relation::YSquare, sq(y)),
        (Relation::ZArtinSchreier, as_sq(z)),
        (Relation::USquare, sq(u)),
    ] {
        match v {
            Some(c) => scalars.push(c),
            None => return fail(r),
        }
    }
    let checks: [(Relation, bool); 6] = [
        (Relation::XY, anti(x, y)),
        (Relation::XZ, alg.commutes(x, z)),
        (Relation::XU, alg.commutes(x, u)),
        (Relation::YZ, alg.commutes(y, z)),
        (Relation::YU, alg.commutes(y, u)),
        (Relation::ZU, anti(z, u)),
    ];
    if let Some((r, _)) = checks.iter().find(|(_, ok)| !ok) {
        return fail(*r);
    }
    let sym = |a: &F::Elem, b: &F::Elem| QuaternionSymbol { char2: f.characteristic() == 2, alpha: a.clone(), beta: b.clone() };
    QuadVerdict {
        failing: None,
        symbol: Some(BiquaternionSymbol { first: sym(&scalars[0], &scalars[1]), second: sym(&scalars[2], &scalars[3]) }),
    }
}

/// The symbol the step should produce, from the closed-form rewrites.
pub fn expected_symbol<F: Field>(
    field: &F,
    bq: &BiquaternionSymbol<F::Elem>,
    step: &QuadStep<F::Elem>,
) -> Result<BiquaternionSymbol<F::Elem>, ChainError> {
    match step {
        QuadStep::Pair(p) => step_symbol_pair(field, bq, p),
        QuadStep::Lambda { gen, a, b } => {
            let mut out = bq.clone();
            match gen {
                Generator::X => out.first = step_symbol_char2(field, &bq.first, 1, a, b)?,
                Generator::Y => out.first = step_symbol_char2(field, &bq.first, 2, a, b)?,
                Generator::Z => out.second = step_symbol_char2(field, &bq.second, 1, a, b)?,
                Generator::U => out.second = step_symbol_char2(field, &bq.second, 2, a, b)?,
            }
            Ok(out)
        }
    }
}

/// Applies the step in the algebra and re-verifies every relation.
pub fn quadruple_step<F: Field>(
    q: &GeneratorQuadruple<F>,
    step: &QuadStep<F::Elem>,
) -> Result<GeneratorQuadruple<F>, ChainError> {
    let alg = &q.algebra;
    let f = alg.field();
    if f.characteristic() != 2 {
        return Err(ChainError::WrongCharacteristic);
    }
    let mut out = q.clone();
    match step {
        QuadStep::Pair(PairStep::OmegaS { a, b }) => {
            let m = alg.add(&alg.scalar(a), &alg.scale(&alg.add(&q.x, &q.z), b));
            out.y = alg.mul(&m, &q.y);
            out.u = alg.mul(&m, &q.u);
        }
        QuadStep::Pair(PairStep::OmegaI { a }) => {
            let ayu = alg.scale(&alg.mul(&q.y, &q.u), a);
            out.x = alg.add(&q.x, &ayu);
            out.z = alg.add(&q.z, &ayu);
        }
        QuadStep::Pair(PairStep::OmegaC { b }) => {
            let w = alg.add(&alg.one(), &alg.scale(&q.y, b));
            let w_inv = alg.inverse(&w).map_err(|e| match e {
                AlgebraError::NotInvertible => ChainError::NotInvertible,
                e => e.into(),
            })?;
            let shift = alg.scale(&alg.mul_all([&q.y, &w_inv, &q.z]), b);
            out.x = alg.add(&q.x, &shift);
            out.u = alg.mul(&w, &q.u);
        }
        QuadStep::Lambda { gen, a, b } => {
            let (pa, pb) = match gen {
                Generator::X | Generator::Y => (&q.x, &q.y),
                Generator::Z | Generator::U => (&q.z, &q.u),
            };
            match gen {
                Generator::X | Generator::Z => {
                    let new = alg.add(pa, &alg.add(&alg.scalar(a), &alg.scale(pb, b)));
                    if *gen == Generator::X {
                        out.x = new;
                    } else {
                        out.z = new;
                    }
                }
                Generator::Y | Generator::U => {
                    let m = alg.add(&alg.scalar(a), &alg.scale(pa, b));
                    let new = alg.mul(&m, pb);
                    if *gen == Generator::Y {
                        out.y = new;
                    } else {
                        out.u = new;
                    }
                }
            }
        }
    }
    let v = verify_quadruple(&out);
    if let Some(r) = v.failing {
        return Err(ChainError::RelationViolation(r));
    }
    // A zero y² or u² presents no quaternion algebra.
    if let Some(s) = &v.symbol {
        if f.is_zero(&s.first.beta) || f.is_zero(&s.second.beta) {
            return Err(ChainError::DegenerateResult);
        }
    }
    Ok(out)
}

impl<F: Field> GeneratorQuadruple<F> {
    pub fn to_json(&self) -> Value {
        let f = self.algebra.field();
        let names = ["alpha", "beta", "gamma", "delta"];
        let params: serde_json::Map<String, Value> =
            names.iter().zip(&self.params).map(|(n, p)| (n.to_string(), f.to_json(p))).collect();
        json!({
            "field": f.descriptor(),
            "params": params,
            "x": self.algebra.element_to_json(&self.x),
            "y": self.algebra.element_to_json(&self.y),
            "z": self.algebra.element_to_json(&self.z),
            "u": self.algebra.element_to_json(&self.u),
        })
    }

    /// Rebuilds the algebra from the stored parameters. Generators default to
    /// the canonical ones when absent.
    pub fn from_json(field: &F, v: &Value) -> Result<Self, ChainError> {
        let param = |n: &str| -> Result<F::Elem, ChainError> {
            let p = v.get("params").and_then(|p| p.get(n)).ok_or_else(|| ChainError::Parse(format!("missing {n}")))?;
            Ok(field.from_json(p)?)
        };
        let mut q = canonical_quadruple(field, &param("alpha")?, &param("beta")?, &param("gamma")?, &param("delta")?)?;
        for (name, slot) in [("x", &mut q.x), ("y", &mut q.y), ("z", &mut q.z), ("u", &mut q.u)] {
            if let Some(e) = v.get(name) {
                *slot = q.algebra.element_from_json(e)?;
            }
        }
        Ok(q)
    }

    pub fn symbol(&self) -> Option<BiquaternionSymbol<F::Elem>> {
        verify_quadruple(self).symbol
    }
}
