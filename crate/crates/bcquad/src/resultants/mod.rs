//! Homogeneous Sylvester matrices and their determinants, determinant
//! polynomials, sequence resultants, subresultants and Bezout certificates.

pub mod det;
mod matrix;
mod sequence;
mod sylvester;

use thiserror::Error;

use crate::coeffs::CoeffError;
use crate::qalgebra::AlgebraError;

pub use det::{det_bareiss, det_cofactor, determinant, last_column_cofactors};
pub use matrix::{determinant_polynomial, expansion_matrix, sequence_matrix, PolyMatrix};
pub use sequence::{
    bezout_certificate, resultant_sequence, subresultant, Certificate, SequenceResultant,
};
pub use sylvester::{
    resultant_homogeneous, resultant_homogeneous_elems, sylvester_homogeneous, SylvesterMatrix,
};

pub(crate) use matrix::render_grid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResultantError {
    #[error("zero input polynomial")]
    ZeroInput,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("bad matrix shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
