//! Matrices over the quaternions: the complex embedding, Study and Dieudonné
//! determinants, elimination, and left eigenvalues.

mod left;
mod matrix;

pub use left::{
    block_condition, block_values, characteristic_general_poly, eigen_condition_4x4, is_left_eigenvalue, left_eigenvalues_2x2,
    search_4x4, BlockCondition, Check4, EigenFamily, EigenPair, EigenReport, CHARPOLY_MAX_SIZE,
};
pub use matrix::{dieudonne_determinant, gauss_det, study_determinant, ComplexEmbedding, Dieudonne, Gauss, QuatMatrix};

use crate::ncpoly::NcError;
use crate::quaternion::QuatError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EigenError {
    #[error("matrix is not square")]
    NonSquare,
    #[error("dimensions do not match")]
    NonConformant,
    #[error("matrix is singular")]
    Singular,
    #[error("lower-left block is not invertible")]
    CNotInvertible,
    #[error("size {0} exceeds the supported maximum")]
    SizeCap(usize),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Quat(#[from] QuatError),
    #[error(transparent)]
    Nc(#[from] NcError),
}
