//! Homogeneous forms and their finite linearizations by graded matrices.

mod form;
mod rep;
mod sparse;
mod verify;

pub use form::HomogeneousForm;
pub use rep::{
    diagonal_linearization, extend_linearization, grading_operator, linearize, offdiagonal_block, Case,
    GradedMatrixRep, TensorFactor, DENSE_CAP,
};
pub use verify::{verify_linearization, verify_with, LinVerdict, LinWitness, VerifyMethod};

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearizeError {
    #[error("bad exponent index {0:?}")]
    BadIndex(Vec<u32>),
    #[error("{0}")]
    CaseMismatch(String),
    #[error("{0}")]
    Parse(String),
    #[error("ambient dimension {0} is too large for dense matrices")]
    TooLarge(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}
