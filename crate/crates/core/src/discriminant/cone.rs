use rand::Rng;
use serde::{Deserialize, Serialize};

use super::sampling::random_curve_points;
use super::DiscriminantError;
use crate::exactfield::{quad_sqrt, FieldKind, Scalar};
use crate::forms::{macaulay_resultant, Form, Matrix, ProjPoint};
use crate::tau_geometry::{line_roots, LinePoint, TauInstance, PLANE_VARS};

/// The quadric cone `K = {4 l00 l11 − l01^2 = 0}` in P^4 and its intersection
/// `Y` with one of the invariant quadrics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeReport {
    /// `K` as a form on P^4.
    pub cone: Form,
    /// `∂K/∂x0 = ∂K/∂x1 = 0` and the remaining partials only vanish together
    /// on the fixed line, so `Sing K` is exactly that line.
    pub singular_locus_is_fixed_line: bool,
    /// `Y ∩ l_τ`, the roots of the quadric's binary part.
    pub y_on_fixed_line: Vec<LinePoint>,
    /// Points of `Y ∩ l_τ` at which `dK` vanishes, so the Jacobian of `(K, F)` drops rank.
    pub singular_points: Vec<ProjPoint>,
    pub prime: u64,
    pub probes: usize,
    /// Probed F_p-points of `Y` off the fixed line where the Jacobian has rank below 2.
    pub singular_probes: Vec<ProjPoint>,
}

fn jacobian_rank(forms: &[&Form], pt: &[Scalar]) -> Result<usize, DiscriminantError> {
    let mut rows = Vec::new();
    for f in forms {
        rows.push(f.gradient().iter().map(|d| d.evaluate(pt)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(rows).rank())
}

/// Builds `K`, checks that its singular locus is the fixed line, and that
/// `Y = K ∩ {F = 0}` is singular at the two points of `Y ∩ l_τ` and (on
/// `probes` random F_p-points) nowhere else.
pub fn cone_and_singular_member(
    inst: &TauInstance,
    quadric_index: usize,
    p: u64,
    probes: usize,
    rng: &mut impl Rng,
) -> Result<ConeReport, DiscriminantError> {
    let quad = inst
        .quadrics
        .get(quadric_index)
        .ok_or_else(|| DiscriminantError::InvalidPoint(format!("no quadric {quadric_index}")))?;
    let conic = inst.conic_part();
    if conic.is_zero() {
        return Err(DiscriminantError::DegenerateConicPart);
    }
    let cone = conic.embed(5, &PLANE_VARS);
    let grad = cone.gradient();
    let plane_partials: Vec<Form> = grad[2..].iter().map(|g| g.restrict_vanishing(&[0, 1])).collect();
    let singular_locus_is_fixed_line = grad[0].is_zero()
        && grad[1].is_zero()
        && !macaulay_resultant(&plane_partials)?.is_zero();

    let y_on_fixed_line = line_roots(&quad.a00, &quad.a11, &quad.a01)?;
    let f = quad.form();
    let mut singular_points = Vec::new();
    for lp in &y_on_fixed_line {
        let c = lp.point.coords();
        if jacobian_rank(&[&cone, &f], c)? < 2 {
            singular_points.push(lp.point.clone());
        }
    }

    // F_p-points of Y: (x0, x1, s P) with P on C2 and s^2 f2(P) = −B(x0, x1)
    let local = match inst.field()? {
        FieldKind::Prime(q) if q == p => inst.clone(),
        _ => inst.reduce_mod(p)?,
    };
    let lq = &local.quadrics[quadric_index];
    let lcone = local.conic_part().embed(5, &PLANE_VARS);
    let lf = lq.form();
    let fp = |x: u64| Scalar::prime(x as i64, p).expect("admitted prime");
    let base = random_curve_points(&local.conic_part(), p, probes.max(1) * 2, rng)?;
    let mut tested = 0;
    let mut singular_probes = Vec::new();
    let mut attempts = 0;
    while !base.is_empty() && tested < probes && attempts < 64 * probes.max(1) {
        attempts += 1;
        let pp = &base[attempts % base.len()];
        let e = lq.f2.evaluate(pp.coords())?;
        if e.is_zero() {
            continue;
        }
        let (x0, x1) = (fp(1), fp(rng.gen_range(0..p)));
        let b = &(&(&lq.a00 * &(&x0 * &x0)) + &(&lq.a01 * &(&x0 * &x1))) + &(&lq.a11 * &(&x1 * &x1));
        if b.is_zero() {
            continue;
        }
        let Ok(s) = quad_sqrt(&(&(-&b) / &e)) else { continue };
        if s.is_quad() {
            continue;
        }
        let c = pp.coords();
        let pt = vec![x0, x1, &s * &c[0], &s * &c[1], &s * &c[2]];
        debug_assert!(lcone.evaluate(&pt)?.is_zero() && lf.evaluate(&pt)?.is_zero());
        tested += 1;
        if jacobian_rank(&[&lcone, &lf], &pt)? < 2 {
            singular_probes.push(ProjPoint::new(pt)?);
        }
    }
    Ok(ConeReport {
        cone,
        singular_locus_is_fixed_line,
        y_on_fixed_line,
        singular_points,
        prime: p,
        probes: tested,
        singular_probes,
    })
}
