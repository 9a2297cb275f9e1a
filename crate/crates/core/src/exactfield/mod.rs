//! Exact coefficient domains.
//!
//! Three kinds of scalars share one enum: rationals, elements of a prime field
//! F_p, and elements of a quadratic extension K(sqrt D) of either. The rationals
//! act as a universal prime subfield: a rational meeting an F_p element is
//! reduced mod p, and a base scalar meeting an extension element is embedded.
//! Mixing two different prime fields, or two non-isomorphic quadratic
//! extensions, is a programming error and panics.
//!
//! Every value is immutable once built.

mod prime;
mod quadext;
mod rational;
mod scalar;

pub use prime::{check_admitted_prime, is_prime, least_nonresidue, PrimeFieldElem};
pub use quadext::QuadExtElem;
pub use rational::Rational;
pub use scalar::{quad_sqrt, reduce_mod_prime, BaseField, FieldKind, Scalar};

pub(crate) use prime::{inv_mod, mul_mod};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("prime {0} is not admitted (need an odd prime > 3 that divides no denominator)")]
    BadPrime(u64),
    #[error("square root of zero requested")]
    ZeroInput,
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible fields: {0}")]
    FieldMismatch(String),
    #[error("the square root does not exist without a second quadratic extension")]
    TowerRejected,
    #[error("radicand {0} is already a square in the base field")]
    SquareRadicand(String),
    #[error("parse error: {0}")]
    Parse(String),
}
