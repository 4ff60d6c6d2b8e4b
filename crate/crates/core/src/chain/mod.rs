//! Chain steps on quaternion and biquaternion presentations: symbol rewrites in
//! both characteristics and the characteristic 2 generator quadruple steps.

mod quadruple;
mod symbol;

pub use quadruple::{
    canonical_quadruple, expected_symbol, quadruple_step, verify_quadruple, GeneratorQuadruple, Generator, QuadStep,
    QuadVerdict, Relation,
};
pub use symbol::{
    step_symbol_char2, step_symbol_not2, step_symbol_pair, BiquaternionSymbol, PairStep, QuaternionSymbol,
};

use crate::algebra::AlgebraError;
use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("the step makes a symbol entry zero")]
    DegenerateResult,
    #[error("1 + b²β vanishes")]
    DenominatorZero,
    #[error("relation {0} fails")]
    RelationViolation(Relation),
    #[error("1 + b·y is not invertible")]
    NotInvertible,
    #[error("wrong characteristic for this step")]
    WrongCharacteristic,
    #[error("slot must be 1 or 2")]
    BadSlot,
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[cfg(test)]
mod tests;
