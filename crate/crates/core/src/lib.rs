pub mod algebra;
pub mod chain;
pub mod eigen;
pub mod field;
pub mod linalg;
pub mod linearize;
pub mod ncpoly;
pub mod quaternion;
pub mod realpoly;
pub mod solver;
