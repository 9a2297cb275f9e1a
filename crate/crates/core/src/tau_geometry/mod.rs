//! The involution τ : (x0 : x1 : x2 : x3 : x4) ↦ (−x0 : −x1 : x2 : x3 : x4), its
//! fixed loci, invariant linear series, instance sampling and the statements
//! about invariant cubics and quadrics that can be checked mechanically.

mod fixed;
mod instance;
mod lemmas;

pub use fixed::{
    check_pencil_condition, fixed_points_on_s, line_roots, FixedPointsOnSurface, LinePoint,
    PencilVerdict, PrimeProbe,
};
pub use instance::{
    genericity_gate, sample_instance, Gate, Sampler, TauInstance, TauQuadric, DEFAULT_PRIMES,
    PLANE_VARS, SAMPLER_RETRY_CAP,
};
pub use lemmas::{
    cubic_through_points, invariant_cubic_quotient, random_point_on_surface, sym2_eigensplit, verify_base_locus,
    BaseLocusVerdict, CubicThroughPoints, Sym2Split,
};

use serde::{Deserialize, Serialize};

use crate::exactfield::Scalar;
use crate::forms::{monomial, Form, FormError, Matrix, ProjPoint};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("invariant series are only provided in degrees 2 and 3, not {0}")]
    UnsupportedDegree(u32),
    #[error("no instance passed the genericity gate in {attempts} attempts (last failure: {last_gate})")]
    GenericityExhausted { attempts: usize, last_gate: String },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("point {0} is not on the surface")]
    NotOnSurface(String),
    #[error("point {0} is not on the fixed line")]
    NotOnLine(String),
    #[error("the quadric's binary part vanishes identically on the fixed line")]
    DegenerateOnLine,
    #[error("the plane curves share a component")]
    CommonComponent,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(transparent)]
    Form(#[from] FormError),
}

/// The involution as a coordinate matrix.
pub fn tau_matrix() -> Matrix {
    Matrix::diagonal(&[-1, -1, 1, 1, 1].map(Scalar::from))
}

/// `f ∘ τ`.
pub fn apply_tau(f: &Form) -> Form {
    f.substitute_linear(&tau_matrix()).expect("tau is invertible")
}

/// The two components of the fixed locus, as index sets of vanishing coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLoci {
    /// `l_τ : x2 = x3 = x4 = 0`.
    pub line: Vec<usize>,
    /// `Π_τ : x0 = x1 = 0`.
    pub plane: Vec<usize>,
}

impl Default for FixedLoci {
    fn default() -> Self {
        FixedLoci { line: vec![2, 3, 4], plane: vec![0, 1] }
    }
}

impl FixedLoci {
    pub fn contains(&self, p: &ProjPoint) -> bool {
        is_on_line(p) || is_on_plane(p)
    }
}

pub fn is_on_line(p: &ProjPoint) -> bool {
    p.coords()[2..].iter().all(Scalar::is_zero)
}

pub fn is_on_plane(p: &ProjPoint) -> bool {
    p.coords()[..2].iter().all(Scalar::is_zero)
}

/// Whether `τ(p) = p` as projective points.
pub fn is_fixed(p: &ProjPoint) -> bool {
    let moved = tau_matrix().mul_vec(p.coords());
    ProjPoint::new(moved).is_ok_and(|q| &q == p)
}

/// Monomial basis of the τ-invariant forms of degree 2 or 3 on P^4.
pub fn invariant_basis(degree: u32) -> Result<Vec<Form>, GeometryError> {
    if !(2..=3).contains(&degree) {
        return Err(GeometryError::UnsupportedDegree(degree));
    }
    Ok(monomial::basis(5, degree)
        .iter()
        .filter(|e| (e[0] + e[1]) % 2 == 0)
        .map(|e| Form::monomial(e, Scalar::one()))
        .collect())
}
