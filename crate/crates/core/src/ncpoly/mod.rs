//! Quaternion polynomials: standard (left coefficients), general (words),
//! and the free-monoid ring with the isomorphism between the last two.

mod free;
mod general;
mod standard;

pub use free::{coimage_algorithm, h_inv, h_inv_var, h_iso, FreeMonoidPoly};
pub use general::GeneralPoly;
pub use standard::{wedderburn_factor, wedderburn_transport, StandardPoly};

use crate::quaternion::QuatError;

/// Largest degree any polynomial operation will produce.
pub const DEGREE_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcError {
    #[error("degree {0} exceeds the cap of {DEGREE_CAP}")]
    DegreeCap(usize),
    #[error("not a root")]
    NotARoot,
    #[error("point is a root of the right factor")]
    RootOfRightFactor,
    #[error("variable index {0} out of range 1..=4")]
    BadIndex(usize),
    #[error("co-image iteration did not isolate the variable")]
    CoimageStuck,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Quat(#[from] QuatError),
}

#[cfg(test)]
mod tests;
