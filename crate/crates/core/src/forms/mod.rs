//! Dense homogeneous polynomials and the elimination machinery built on them.
//!
//! Coefficient vectors follow graded-lex order with x0 > x1 > ... ; for a fixed
//! degree this is plain lex order, so `x0^d` comes first and `x_{n-1}^d` last.

mod form;
pub mod linalg;
pub mod monomial;
mod plane;
mod resultant;
mod smooth;
mod types;
mod unipoly;

pub use form::Form;
pub use linalg::Matrix;
pub use plane::{intersect_plane_curves, IntersectionPoint, PlaneIntersection, RootCluster};
pub use resultant::{macaulay_resultant, sylvester_resultant};
pub use smooth::{is_smooth_hypersurface, SmoothnessVerdict};
pub use types::{ProjPoint, SymMatrix3};
pub use unipoly::UniPoly;


use crate::exactfield::FieldError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("no exact quotient exists")]
    NotDivisible,
    #[error("zero form where a nonzero one is required")]
    ZeroForm,
    #[error("the curves share a component")]
    CommonComponent,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}
