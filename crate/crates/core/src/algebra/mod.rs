//! Finite-dimensional associative algebras given by structure constants,
//! symbol algebras, d-central spaces and decompositions.

mod central;
mod decompose;
mod structure;

pub use central::{
    brute_force_d_central, build_family_space, build_vk, exponentiation_form, is_d_central_element,
    is_d_central_space, multi_indices, star_product, star_word_count, symbol_tensor, DCentralVerdict,
    DCentralWitness, SymbolTensor,
};
pub use decompose::{
    artin_schreier_decomposition, edge_label, edge_weight, eigenvector_decomposition, pcentral_charp_decomposition,
    three_central_graph_check, GraphVerdict,
};
pub use structure::{
    check_grading, cyclic_charp_algebra, graded_tensor_product, matrix_algebra, matrix_grading, symbol_algebra,
    tensor_product, AlgElement, StructureAlgebra, SymbolAlgebra, DIM_CAP, EXHAUSTIVE_ASSOC_CAP,
};

use crate::field::FieldError;
use crate::linearize::LinearizeError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("root of unity does not have order {0}")]
    BadRootOrder(u64),
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("field characteristic must be {0}")]
    WrongCharacteristic(u64),
    #[error("grading violated by basis product ({0}, {1})")]
    GradingViolation(usize, usize),
    #[error("dimension {0} exceeds the cap")]
    DimensionCap(usize),
    #[error("not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit is not a two-sided identity")]
    BadUnit,
    #[error("element has the wrong length or field")]
    NonConformant,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("x is not an invertible element with central d-th power")]
    XNotDCentralUnit,
    #[error("element {0} is not 3-central")]
    NotThreeCentralElement(usize),
    #[error("space is not d-central")]
    NotDCentral,
    #[error("spanning set is linearly dependent")]
    DependentBasis,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("{0}")]
    BadParameters(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Form(#[from] LinearizeError),
}

#[cfg(test)]
mod tests;
