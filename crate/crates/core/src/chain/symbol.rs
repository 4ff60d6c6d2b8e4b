use super::ChainError;
use crate::field::Field;
use serde_json::{json, Value};

/// (α, β) away from characteristic 2, or [α, β) in characteristic 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionSymbol<E> {
    pub char2: bool,
    pub alpha: E,
    pub beta: E,
}

impl<E: Clone> QuaternionSymbol<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, alpha: E, beta: E) -> Result<Self, ChainError> {
        let char2 = field.characteristic() == 2;
        if field.is_zero(&beta) || (!char2 && field.is_zero(&alpha)) {
            return Err(ChainError::DegenerateResult);
        }
        Ok(QuaternionSymbol { char2, alpha, beta })
    }

    pub fn to_json<F: Field<Elem = E>>(&self, field: &F) -> Value {
        json!({
            "char": if self.char2 { "2" } else { "not2" },
            "alpha": field.to_json(&self.alpha),
            "beta": field.to_json(&self.beta),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiquaternionSymbol<E> {
    pub first: QuaternionSymbol<E>,
    pub second: QuaternionSymbol<E>,
}

impl<E: Clone> BiquaternionSymbol<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, alpha: E, beta: E, gamma: E, delta: E) -> Result<Self, ChainError> {
        Ok(BiquaternionSymbol {
            first: QuaternionSymbol::new(field, alpha, beta)?,
            second: QuaternionSymbol::new(field, gamma, delta)?,
        })
    }

    pub fn to_json<F: Field<Elem = E>>(&self, field: &F) -> Value {
        json!({"first": self.first.to_json(field), "second": self.second.to_json(field)})
    }
}

fn nonzero<F: Field>(field: &F, e: F::Elem) -> Result<F::Elem, ChainError> {
    if field.is_zero(&e) {
        Err(ChainError::DegenerateResult)
    } else {
        Ok(e)
    }
}

/// Slot 1: ((a² − b²β)α, β). Slot 2: (α, (a² − b²α)β).
pub fn step_symbol_not2<F: Field>(
    field: &F,
    s: &QuaternionSymbol<F::Elem>,
    slot: u8,
    a: &F::Elem,
    b: &F::Elem,
) -> Result<QuaternionSymbol<F::Elem>, ChainError> {
    if field.characteristic() == 2 || s.char2 {
        return Err(ChainError::WrongCharacteristic);
    }
    let a2 = field.mul(a, a);
    let b2 = field.mul(b, b);
    match slot {
        1 => {
            let alpha = field.mul(&field.sub(&a2, &field.mul(&b2, &s.beta)), &s.alpha);
            Ok(QuaternionSymbol { alpha: nonzero(field, alpha)?, ..s.clone() })
        }
        2 => {
            let beta = field.mul(&field.sub(&a2, &field.mul(&b2, &s.alpha)), &s.beta);
            Ok(QuaternionSymbol { beta: nonzero(field, beta)?, ..s.clone() })
        }
        _ => Err(ChainError::BadSlot),
    }
}

/// Slot 1: [α + a² + a + b²β, β). Slot 2: [α, (a² + ab + b²α)β).
pub fn step_symbol_char2<F: Field>(
    field: &F,
    s: &QuaternionSymbol<F::Elem>,
    slot: u8,
    a: &F::Elem,
    b: &F::Elem,
) -> Result<QuaternionSymbol<F::Elem>, ChainError> {
    if field.characteristic() != 2 {
        return Err(ChainError::WrongCharacteristic);
    }
    let a2 = field.mul(a, a);
    let b2 = field.mul(b, b);
    match slot {
        1 => {
            let alpha = field.sum([s.alpha.clone(), a2, a.clone(), field.mul(&b2, &s.beta)].iter());
            Ok(QuaternionSymbol { alpha, ..s.clone() })
        }
        2 => {
            let n = field.sum([a2, field.mul(a, b), field.mul(&b2, &s.alpha)].iter());
            Ok(QuaternionSymbol { beta: nonzero(field, field.mul(&n, &s.beta))?, ..s.clone() })
        }
        _ => Err(ChainError::BadSlot),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairStep<E> {
    /// Multiplies both second slots by a² + ab + b²(α + γ).
    OmegaS { a: E, b: E },
    /// Adds a²βδ to both first slots.
    OmegaI { a: E },
    /// [α + b²βγ/(1 + b²β), β) ⊗ [γ, δ(1 + b²β)).
    OmegaC { b: E },
}

pub fn step_symbol_pair<F: Field>(
    field: &F,
    bq: &BiquaternionSymbol<F::Elem>,
    step: &PairStep<F::Elem>,
) -> Result<BiquaternionSymbol<F::Elem>, ChainError> {
    if field.characteristic() != 2 {
        return Err(ChainError::WrongCharacteristic);
    }
    let (alpha, beta) = (&bq.first.alpha, &bq.first.beta);
    let (gamma, delta) = (&bq.second.alpha, &bq.second.beta);
    let sym = |a: F::Elem, b: F::Elem| QuaternionSymbol { char2: true, alpha: a, beta: b };
    match step {
        PairStep::OmegaS { a, b } => {
            let n = field.sum(
                [field.mul(a, a), field.mul(a, b), field.mul(&field.mul(b, b), &field.add(alpha, gamma))].iter(),
            );
            let n = nonzero(field, n)?;
            Ok(BiquaternionSymbol {
                first: sym(alpha.clone(), field.mul(&n, beta)),
                second: sym(gamma.clone(), field.mul(&n, delta)),
            })
        }
        PairStep::OmegaI { a } => {
            let shift = field.mul(&field.mul(a, a), &field.mul(beta, delta));
            Ok(BiquaternionSymbol {
                first: sym(field.add(alpha, &shift), beta.clone()),
                second: sym(field.add(gamma, &shift), delta.clone()),
            })
        }
        PairStep::OmegaC { b } => {
            let b2beta = field.mul(&field.mul(b, b), beta);
            let t = field.add(&field.one(), &b2beta);
            if field.is_zero(&t) {
                return Err(ChainError::DenominatorZero);
            }
            let frac = field.div(&field.mul(&b2beta, gamma), &t)?;
            Ok(BiquaternionSymbol {
                first: sym(field.add(alpha, &frac), beta.clone()),
                second: sym(gamma.clone(), field.mul(delta, &t)),
            })
        }
    }
}
