use serde::{Deserialize, Serialize};

use super::instance::TauInstance;
use super::GeometryError;
use crate::exactfield::{quad_sqrt, Scalar};
use crate::forms::{
    intersect_plane_curves, sylvester_resultant, Form, FormError, PlaneIntersection, ProjPoint,
    SymMatrix3, UniPoly,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinePoint {
    pub point: ProjPoint,
    pub multiplicity: u32,
}

/// Points of the surface `{Φ = F = 0}` fixed by τ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedPointsOnSurface {
    /// Roots of the binary quadratic on the fixed line.
    pub on_line: Vec<LinePoint>,
    /// `{f2 = 0} ∩ {f3 = 0}` inside the fixed plane.
    pub on_plane: PlaneIntersection,
    /// Count with multiplicity.
    pub total: usize,
    pub all_distinct: bool,
}

/// Roots of `a00 x0^2 + a01 x0 x1 + a11 x1^2` on the fixed line, as points of P^4.
pub fn line_roots(a00: &Scalar, a11: &Scalar, a01: &Scalar) -> Result<Vec<LinePoint>, GeometryError> {
    if a00.is_zero() && a11.is_zero() && a01.is_zero() {
        return Err(GeometryError::DegenerateOnLine);
    }
    let pt = |x0: Scalar, x1: Scalar| -> Result<ProjPoint, GeometryError> {
        let z = x0.like(0);
        Ok(ProjPoint::new(vec![x0, x1, z.clone(), z.clone(), z])?)
    };
    let one = a00.like(1);
    let zero = a00.like(0);
    if a11.is_zero() {
        // x0 (a00 x0 + a01 x1)
        if a01.is_zero() {
            return Ok(vec![LinePoint { point: pt(zero, one)?, multiplicity: 2 }]);
        }
        return Ok(vec![
            LinePoint { point: pt(zero, one.clone())?, multiplicity: 1 },
            LinePoint { point: pt(a01.clone(), -a00)?, multiplicity: 1 },
        ]);
    }
    // x0 = 1: a11 t^2 + a01 t + a00 = 0
    let disc = &(a01 * a01) - &(&Scalar::from(4) * &(a00 * a11));
    let two_a = &Scalar::from(2) * a11;
    if disc.is_zero() {
        let t = &(-a01) / &two_a;
        return Ok(vec![LinePoint { point: pt(one, t)?, multiplicity: 2 }]);
    }
    let r = quad_sqrt(&disc).map_err(FormError::from)?;
    let t1 = &(&(-a01) + &r) / &two_a;
    let t2 = &(&(-a01) - &r) / &two_a;
    Ok(vec![
        LinePoint { point: pt(one.clone(), t1)?, multiplicity: 1 },
        LinePoint { point: pt(one, t2)?, multiplicity: 1 },
    ])
}

/// The fixed points of τ on the surface cut by the cubic and quadric `quadric_index`:
/// two on the fixed line and six in the fixed plane, counted with multiplicity.
pub fn fixed_points_on_s(
    inst: &TauInstance,
    quadric_index: usize,
) -> Result<FixedPointsOnSurface, GeometryError> {
    let q = inst
        .quadrics
        .get(quadric_index)
        .ok_or_else(|| GeometryError::InvalidInstance(format!("no quadric {quadric_index}")))?;
    let on_line = line_roots(&q.a00, &q.a11, &q.a01)?;
    let on_plane = match intersect_plane_curves(&q.f2, &inst.f3) {
        Err(FormError::CommonComponent) => return Err(GeometryError::CommonComponent),
        other => other?,
    };
    let line_total: u32 = on_line.iter().map(|p| p.multiplicity).sum();
    let plane_total: usize = on_plane.clusters.iter().map(|c| c.degree * c.multiplicity as usize).sum();
    let all_distinct = on_line.iter().all(|p| p.multiplicity == 1) && on_plane.transversal;
    Ok(FixedPointsOnSurface {
        total: line_total as usize + plane_total,
        on_line,
        on_plane,
        all_distinct,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeProbe {
    pub prime: u64,
    /// Distinct roots of the pencil discriminant modulo the prime.
    pub pencil_roots: usize,
}

/// Both sides of the pencil criterion for `F0 = x0^2 + g2`, `F1 = x1^2 + h2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PencilVerdict {
    /// g2 and h2 are smooth conics meeting in four distinct points.
    pub rhs_holds: bool,
    pub rhs_reason: String,
    /// `Y` misses the fixed line (exact resultant check).
    pub misses_line: bool,
    /// Distinct roots of `det(λ A0 + μ A1)`, a binary quintic; five means `Y` is smooth.
    pub pencil_roots: usize,
    pub probes: Vec<PrimeProbe>,
    pub lhs_holds: bool,
    pub agree: bool,
}

fn binary_distinct_roots(r: &Form) -> usize {
    let n = r.degree() as usize;
    let u = UniPoly::new((0..=n).map(|k| r.coeffs()[n - k].clone()).collect());
    let at_inf = usize::from(u.degree().unwrap_or(0) < n);
    u.distinct_root_count() + at_inf
}

/// `det(λ A0 + μ A1)` for the Gram matrices of the two pencil generators, as a
/// binary form in (λ, μ).
fn pencil_discriminant(g2: &Form, h2: &Form) -> Result<Form, GeometryError> {
    let g = SymMatrix3::from_quadratic(g2)?;
    let h = SymMatrix3::from_quadratic(h2)?;
    let lam = Form::var(2, 0);
    let mu = Form::var(2, 1);
    let entry = |i: usize, j: usize| lam.scale(g.get(i, j)).add(&mu.scale(h.get(i, j)));
    let e = |i, j| entry(i, j);
    let det3 = e(0, 0).mul(&e(1, 1).mul(&e(2, 2)).sub(&e(1, 2).mul(&e(2, 1))))
        .sub(&e(0, 1).mul(&e(1, 0).mul(&e(2, 2)).sub(&e(1, 2).mul(&e(2, 0)))))
        .add(&e(0, 2).mul(&e(1, 0).mul(&e(2, 1)).sub(&e(1, 1).mul(&e(2, 0)))));
    Ok(lam.mul(&mu).mul(&det3))
}

/// Evaluates the pencil criterion from both sides: the conic condition on
/// `g2, h2` and, independently, the geometry of `Y = {F0 = F1 = 0}`.
pub fn check_pencil_condition(g2: &Form, h2: &Form, primes: &[u64]) -> Result<PencilVerdict, GeometryError> {
    for f in [g2, h2] {
        if f.nvars() != 3 || f.degree() != 2 {
            return Err(GeometryError::InvalidInstance("g2 and h2 must be ternary quadrics".into()));
        }
    }
    let (rhs_holds, rhs_reason) = {
        let rg = SymMatrix3::from_quadratic(g2)?.rank();
        let rh = SymMatrix3::from_quadratic(h2)?.rank();
        if rg < 3 || rh < 3 {
            (false, format!("conic ranks {rg} and {rh}; both must be 3"))
        } else {
            match intersect_plane_curves(g2, h2) {
                Err(FormError::CommonComponent) => (false, "the conics share a component".into()),
                Err(e) => return Err(e.into()),
                Ok(r) if r.transversal => (true, "4 distinct transversal intersection points".into()),
                Ok(r) => (false, format!("{} distinct intersection points", r.distinct)),
            }
        }
    };
    // Y ∩ l_τ: on x2 = x3 = x4 = 0 the generators become x0^2 and x1^2
    let x0sq = Form::parse(2, "x0^2").expect("literal");
    let x1sq = Form::parse(2, "x1^2").expect("literal");
    let misses_line = !sylvester_resultant(&x0sq, &x1sq, 0)?.is_zero();
    let disc = pencil_discriminant(g2, h2)?;
    let pencil_roots = if disc.is_zero() { 0 } else { binary_distinct_roots(&disc) };
    let mut probes = Vec::new();
    for &p in primes {
        let dp = disc.reduce_mod(p)?;
        let roots = if dp.is_zero() || (p as usize) <= 5 { 0 } else { binary_distinct_roots(&dp) };
        probes.push(PrimeProbe { prime: p, pencil_roots: roots });
    }
    let lhs_holds = misses_line && pencil_roots == 5;
    Ok(PencilVerdict {
        rhs_holds,
        rhs_reason,
        misses_line,
        pencil_roots,
        probes,
        lhs_holds,
        agree: lhs_holds == rhs_holds,
    })
}
