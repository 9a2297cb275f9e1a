use std::fmt;

use serde::{Deserialize, Serialize};

use super::linalg::Matrix;
use super::{Form, FormError};
use crate::exactfield::{FieldKind, Scalar};

/// Point of projective space, scaled so that its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
    field: String,
}

impl ProjPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self, FormError> {
        let Some(first) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(FormError::InvalidInput("the zero vector is not a projective point".into()));
        };
        let inv = coords[first].inv()?;
        let coords: Vec<Scalar> = coords.iter().map(|c| c * &inv).collect();
        let mut k = FieldKind::Rationals;
        for c in &coords {
            k = k.join(&c.field())?;
        }
        Ok(ProjPoint { coords, field: k.label() })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, FormError> {
        ProjPoint::new(coords.iter().map(|&x| Scalar::from(x)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Field label: `Q`, `Q(sqrt D)`, `Fp` or `Fp(sqrt D)`.
    pub fn field_label(&self) -> &str {
        &self.field
    }

    pub fn lies_on(&self, f: &Form) -> Result<bool, FormError> {
        Ok(f.evaluate(&self.coords)?.is_zero())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Symmetric 3x3 Gram matrix with `q(v) = v^T M v`; off-diagonal entries carry
/// half the mixed coefficient.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct SymMatrix3 {
    entries: [[Scalar; 3]; 3],
}

impl SymMatrix3 {
    pub fn new(entries: [[Scalar; 3]; 3]) -> Result<Self, FormError> {
        for (i, row) in entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x != &entries[j][i] {
                    return Err(FormError::InvalidInput("matrix is not symmetric".into()));
                }
            }
        }
        Ok(SymMatrix3 { entries })
    }

    /// Gram matrix of a ternary quadratic form.
    pub fn from_quadratic(q: &Form) -> Result<Self, FormError> {
        if q.nvars() != 3 || q.degree() != 2 {
            return Err(FormError::InvalidInput("need a ternary quadratic form".into()));
        }
        let half = Scalar::rational(1, 2).expect("nonzero");
        let mut m: [[Scalar; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let mut e = [0u32; 3];
                e[i] += 1;
                e[j] += 1;
                let c = q.coeff(&e).clone();
                m[i][j] = if i == j { c } else { &c * &half };
            }
        }
        Ok(SymMatrix3 { entries: m })
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.entries.iter().map(|r| r.to_vec()).collect())
    }

    pub fn to_form(&self) -> Form {
        let mut q = Form::zero(3, 2);
        for i in 0..3 {
            for j in i..3 {
                let mut e = [0u32; 3];
                e[i] += 1;
                e[j] += 1;
                let c = if i == j {
                    self.entries[i][i].clone()
                } else {
                    &self.entries[i][j] * &Scalar::from(2)
                };
                q.set_coeff(&e, c);
            }
        }
        q
    }

    pub fn det(&self) -> Scalar {
        self.to_matrix().det()
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }
}

impl fmt::Debug for SymMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_roundtrip() {
        let q = Form::parse(3, "2*x0^2 - x1^2 + 3*x0*x1 + 5*x2^2").unwrap();
        let g = SymMatrix3::from_quadratic(&q).unwrap();
        assert_eq!(g.get(0, 1), &Scalar::rational(3, 2).unwrap());
        assert_eq!(g.to_form(), q);
        // det = 5 * (2*(-1) - 9/4)
        assert_eq!(g.det(), Scalar::rational(-85, 4).unwrap());
    }

    #[test]
    fn points_normalize() {
        let p = ProjPoint::from_i64(&[0, 2, -4]).unwrap();
        assert_eq!(p.coords(), &[Scalar::zero(), Scalar::one(), Scalar::from(-2)]);
        assert_eq!(p.field_label(), "Q");
        assert!(ProjPoint::from_i64(&[0, 0]).is_err());
    }
}
