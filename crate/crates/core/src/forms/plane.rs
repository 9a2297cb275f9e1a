use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::linalg::Matrix;
use super::resultant::{random_unimodular, sylvester_resultant};
use super::types::ProjPoint;
use super::unipoly::UniPoly;
use super::{Form, FormError};
use crate::exactfield::{FieldKind, Scalar};

/// A point of `f = g = 0` with its intersection multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntersectionPoint {
    pub point: ProjPoint,
    pub multiplicity: u32,
}

/// A Galois-stable group of intersection points: `degree` conjugate points
/// sharing one multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootCluster {
    pub degree: usize,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneIntersection {
    /// `deg f * deg g`.
    pub total: usize,
    /// Number of distinct intersection points over the algebraic closure.
    pub distinct: usize,
    pub transversal: bool,
    pub clusters: Vec<RootCluster>,
    /// Explicit points; filled over prime fields for the points defined there.
    pub points: Vec<IntersectionPoint>,
}

const SHEAR_ATTEMPTS: usize = 24;

struct Projection {
    shear: Matrix,
    fs: Form,
    gs: Form,
    /// `u(t) = Res(t, 1)` and the multiplicity of the root at `(1:0)`.
    affine: UniPoly,
    at_infinity: u32,
    squarefree: Vec<(UniPoly, u32)>,
    distinct: usize,
}

/// Intersects two plane curves given by ternary forms without a common component.
///
/// The curves are moved by a coordinate change (identity first, then random
/// unimodular shears) and projected from `(1:0:0)` by eliminating the first
/// variable. The projection keeping the most distinct roots is used; when the
/// centre lies on neither curve and separates all points, root multiplicities of
/// the resultant are the intersection multiplicities.
pub fn intersect_plane_curves(f: &Form, g: &Form) -> Result<PlaneIntersection, FormError> {
    if f.nvars() != 3 || g.nvars() != 3 {
        return Err(FormError::InvalidInput("plane curves need three variables".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(FormError::ZeroForm);
    }
    let field = f.field()?.join(&g.field()?)?;
    let total = (f.degree() * g.degree()) as usize;
    let p = field.base().characteristic();
    if p != 0 && total as u64 >= p {
        return Err(FormError::Inconclusive(format!(
            "F{p} is too small for multiplicities of {total} intersection points"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x504c_414e);
    let mut best: Option<Projection> = None;
    for attempt in 0..=SHEAR_ATTEMPTS {
        let shear = if attempt == 0 {
            Matrix::identity(3)
        } else {
            random_unimodular(3, &mut rng, &field)
        };
        let Some(proj) = project(f, g, shear)? else {
            continue;
        };
        let done = proj.distinct == total;
        if best.as_ref().is_none_or(|b| proj.distinct > b.distinct) {
            best = Some(proj);
        }
        if done {
            break;
        }
    }
    let Some(best) = best else {
        return Err(FormError::Inconclusive("no admissible projection centre".into()));
    };
    let mut clusters: Vec<RootCluster> = best
        .squarefree
        .iter()
        .map(|(h, m)| RootCluster { degree: h.degree().unwrap_or(0), multiplicity: *m })
        .collect();
    if best.at_infinity > 0 {
        clusters.push(RootCluster { degree: 1, multiplicity: best.at_infinity });
    }
    let points = match field {
        FieldKind::Prime(_) => explicit_points(&best)?,
        _ => Vec::new(),
    };
    Ok(PlaneIntersection {
        total,
        distinct: best.distinct,
        transversal: best.distinct == total,
        clusters,
        points,
    })
}

fn project(f: &Form, g: &Form, shear: Matrix) -> Result<Option<Projection>, FormError> {
    let centre = shear.column(0);
    if f.evaluate(&centre)?.is_zero() || g.evaluate(&centre)?.is_zero() {
        return Ok(None);
    }
    let fs = f.substitute_linear_unchecked(&shear)?;
    let gs = g.substitute_linear_unchecked(&shear)?;
    let r = sylvester_resultant(&fs, &gs, 0)?;
    if r.is_zero() {
        return Err(FormError::CommonComponent);
    }
    let n = r.degree() as usize;
    // coefficient of y1^k y2^(n-k) sits at index n-k
    let affine = UniPoly::new((0..=n).map(|k| r.coeffs()[n - k].clone()).collect());
    let at_infinity = (n - affine.degree().unwrap_or(0)) as u32;
    let squarefree = affine.squarefree_decomposition();
    let distinct = squarefree.iter().map(|(h, _)| h.degree().unwrap_or(0)).sum::<usize>()
        + usize::from(at_infinity > 0);
    Ok(Some(Projection { shear, fs, gs, affine, at_infinity, squarefree, distinct }))
}

fn fiber(form: &Form, y1: &Scalar, y2: &Scalar) -> Result<UniPoly, FormError> {
    let parts = form.coefficients_in(0);
    let coeffs = parts
        .iter()
        .map(|c| c.evaluate(&[y1.clone(), y2.clone()]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(coeffs))
}

fn explicit_points(proj: &Projection) -> Result<Vec<IntersectionPoint>, FormError> {
    let mut bases: Vec<(Scalar, Scalar, u32)> = Vec::new();
    let one = proj.affine.lc().map(|c| c.like(1)).unwrap_or_else(Scalar::one);
    let zero = one.like(0);
    for (h, m) in &proj.squarefree {
        for t in h.roots_in_prime_field() {
            bases.push((t, one.clone(), *m));
        }
    }
    if proj.at_infinity > 0 {
        bases.push((one.clone(), zero.clone(), proj.at_infinity));
    }
    let mut out = Vec::new();
    for (y1, y2, m) in bases {
        let common = fiber(&proj.fs, &y1, &y2)?.gcd(&fiber(&proj.gs, &y1, &y2)?);
        for y0 in common.roots_in_prime_field() {
            let y = [y0, y1.clone(), y2.clone()];
            let x = proj.shear.mul_vec(&y);
            out.push(IntersectionPoint { point: ProjPoint::new(x)?, multiplicity: m });
        }
    }
    Ok(out)
}
