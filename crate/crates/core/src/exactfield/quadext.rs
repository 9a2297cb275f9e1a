use std::fmt;

use super::{FieldError, Scalar};

/// `a + b*sqrt(d)` with `a`, `b`, `d` in a base field (Q or F_p) and `d` a non-square there.
#[derive(Clone, PartialEq)]
pub struct QuadExtElem {
    pub(crate) a: Scalar,
    pub(crate) b: Scalar,
    pub(crate) d: Scalar,
}

impl QuadExtElem {
    /// Validating constructor. Rejects towers and square radicands.
    pub fn new(a: Scalar, b: Scalar, d: Scalar) -> Result<Self, FieldError> {
        if a.is_quad() || b.is_quad() || d.is_quad() {
            return Err(FieldError::TowerRejected);
        }
        if d.is_zero() || d.is_square_in_base() {
            return Err(FieldError::SquareRadicand(d.to_string()));
        }
        // the three parts must share a base field
        let _ = a.field().join(&b.field())?.join(&d.field())?;
        Ok(QuadExtElem { a, b, d })
    }

    pub(crate) fn raw(a: Scalar, b: Scalar, d: Scalar) -> Self {
        QuadExtElem { a, b, d }
    }

    pub fn real_part(&self) -> &Scalar {
        &self.a
    }

    pub fn sqrt_part(&self) -> &Scalar {
        &self.b
    }

    pub fn radicand(&self) -> &Scalar {
        &self.d
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        QuadExtElem::raw(self.a.clone(), -&self.b, self.d.clone())
    }

    /// Field norm `a^2 - d b^2`, an element of the base field.
    pub fn norm(&self) -> Scalar {
        &(&self.a * &self.a) - &(&self.d * &(&self.b * &self.b))
    }

    pub(crate) fn add(&self, o: &Self) -> Self {
        QuadExtElem::raw(&self.a + &o.a, &self.b + &o.b, self.d.clone())
    }

    pub(crate) fn sub(&self, o: &Self) -> Self {
        QuadExtElem::raw(&self.a - &o.a, &self.b - &o.b, self.d.clone())
    }

    pub(crate) fn mul(&self, o: &Self) -> Self {
        let a = &(&self.a * &o.a) + &(&self.d * &(&self.b * &o.b));
        let b = &(&self.a * &o.b) + &(&self.b * &o.a);
        QuadExtElem::raw(a, b, self.d.clone())
    }

    pub(crate) fn neg(&self) -> Self {
        QuadExtElem::raw(-&self.a, -&self.b, self.d.clone())
    }

    pub(crate) fn inv(&self) -> Result<Self, FieldError> {
        let n = self.norm();
        let ninv = n.inv()?;
        let c = self.conjugate();
        Ok(QuadExtElem::raw(&c.a * &ninv, &c.b * &ninv, self.d.clone()))
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({}))", self.a, self.b, self.d)
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
