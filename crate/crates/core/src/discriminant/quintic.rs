use serde::{Deserialize, Serialize};

use super::DiscriminantError;
use crate::exactfield::Scalar;
use crate::forms::{intersect_plane_curves, Form, FormError, Matrix, PlaneIntersection, SymMatrix3};
use crate::tau_geometry::TauInstance;

/// One entry of `C2 ∩ C3`.
///
/// Over a prime field `pt` holds the coordinates of a rational point. Over Q
/// the points generally live in a number field, so an entry stands for a
/// Galois orbit of `degree` conjugate points and `pt` is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntersectionEntry {
    pub pt: Vec<Scalar>,
    pub mult: u32,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

/// The quintic discriminant `f3 · (4 l00 l11 − l01^2)` of the conic bundle over
/// the fixed plane.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscriminantData {
    pub quintic: Form,
    /// `[conic_part, f3]`.
    pub factors: [Form; 2],
    pub intersection: Vec<IntersectionEntry>,
    /// Number of intersection points counted with multiplicity (6 for a generic instance).
    pub total: usize,
    pub distinct: usize,
    pub transversal: bool,
    /// Exact division of the quintic by the conic returns `f3`.
    pub factorization_verified: bool,
}

impl DiscriminantData {
    pub fn conic(&self) -> &Form {
        &self.factors[0]
    }

    pub fn cubic(&self) -> &Form {
        &self.factors[1]
    }
}

/// Determinant of a 3x3 matrix of forms by cofactor expansion. Entries in one
/// term may have different degrees as long as every product has the same one.
pub fn form_det3(m: &[[Form; 3]; 3]) -> Form {
    let minor = |a: &Form, b: &Form, c: &Form, d: &Form| a.mul(b).sub(&c.mul(d));
    let t0 = m[0][0].mul(&minor(&m[1][1], &m[2][2], &m[1][2], &m[2][1]));
    let t1 = m[0][1].mul(&minor(&m[1][0], &m[2][2], &m[1][2], &m[2][0]));
    let t2 = m[0][2].mul(&minor(&m[1][0], &m[2][1], &m[1][1], &m[2][0]));
    t0.sub(&t1).add(&t2)
}

/// `4 · det` of the Gram matrix of the fiber conic, with `P` left symbolic.
pub fn gram_family_det(inst: &TauInstance) -> Form {
    let half = Scalar::rational(1, 2).expect("nonzero");
    let h = inst.l01.scale(&half);
    let z = || Form::zero(3, 1);
    let det = form_det3(&[
        [inst.l00.clone(), h.clone(), z()],
        [h, inst.l11.clone(), z()],
        [z(), z(), inst.f3.clone()],
    ]);
    det.scale(&Scalar::from(4))
}

fn gradients_independent(f: &Form, g: &Form, pt: &[Scalar]) -> Result<bool, FormError> {
    let row = |h: &Form| -> Result<Vec<Scalar>, FormError> {
        h.gradient().iter().map(|d| d.evaluate(pt)).collect()
    };
    Ok(Matrix::from_rows(vec![row(f)?, row(g)?]).rank() == 2)
}

pub fn discriminant_quintic(inst: &TauInstance) -> Result<DiscriminantData, DiscriminantError> {
    let conic = inst.conic_part();
    if conic.is_zero() || SymMatrix3::from_quadratic(&conic)?.rank() < 3 {
        return Err(DiscriminantError::DegenerateConicPart);
    }
    let quintic = inst.f3.mul(&conic);
    let factorization_verified = matches!(quintic.exact_divide(&conic), Ok(q) if q == inst.f3);
    let inter: PlaneIntersection = match intersect_plane_curves(&conic, &inst.f3) {
        Err(FormError::CommonComponent) => return Err(DiscriminantError::CommonComponent),
        other => other?,
    };
    let label = inst.field()?.label();
    let mut transversal = inter.transversal;
    let mut intersection = Vec::new();
    for ip in &inter.points {
        transversal &= ip.multiplicity == 1 && gradients_independent(&conic, &inst.f3, ip.point.coords())?;
        intersection.push(IntersectionEntry {
            pt: ip.point.coords().to_vec(),
            mult: ip.multiplicity,
            field: ip.point.field_label().to_string(),
            degree: None,
        });
    }
    // points without explicit coordinates: everything over Q, non-rational points over F_p
    let mut by_mult: std::collections::BTreeMap<u32, usize> = std::collections::BTreeMap::new();
    for c in &inter.clusters {
        *by_mult.entry(c.multiplicity).or_default() += c.degree;
    }
    for ip in &inter.points {
        if let Some(n) = by_mult.get_mut(&ip.multiplicity) {
            *n = n.saturating_sub(1);
        }
    }
    for (mult, degree) in by_mult {
        if degree > 0 {
            intersection.push(IntersectionEntry { pt: Vec::new(), mult, field: label.clone(), degree: Some(degree) });
        }
    }
    Ok(DiscriminantData {
        quintic,
        factors: [conic, inst.f3.clone()],
        intersection,
        total: inter.total,
        distinct: inter.distinct,
        transversal,
        factorization_verified,
    })
}
