use quatalg::algebra::AlgebraError;
use quatalg::chain::ChainError;
use quatalg::eigen::EigenError;
use quatalg::field::FieldError;
use quatalg::linearize::LinearizeError;
use quatalg::ncpoly::NcError;
use quatalg::quaternion::QuatError;
use quatalg::solver::SolveError;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Quat(#[from] QuatError),
    #[error(transparent)]
    Poly(#[from] NcError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Linearize(#[from] LinearizeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Field(_) => "field",
            CliError::Quat(_) => "quaternion",
            CliError::Poly(_) => "polynomial",
            CliError::Solve(_) => "solve",
            CliError::Eigen(_) => "eigen",
            CliError::Linearize(_) => "linearize",
            CliError::Algebra(_) => "algebra",
            CliError::Chain(_) => "chain",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind(), "message": self.to_string(), "detail": format!("{self:?}")}})
    }
}
