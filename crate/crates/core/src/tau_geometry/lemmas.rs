use rand::Rng;
use serde::{Deserialize, Serialize};

use super::instance::TauInstance;
use super::{invariant_basis, is_on_line, tau_matrix, GeometryError};
use crate::exactfield::{quad_sqrt, Scalar};
use crate::forms::{Form, Matrix, ProjPoint};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaseLocusVerdict {
    /// Every basis form restricts to the zero form on the fixed line.
    pub vanishes_on_line: bool,
    /// Indices of basis forms that do not vanish on the line.
    pub nonvanishing_on_line: Vec<usize>,
    pub witnesses_checked: usize,
    /// Witnesses off the fixed line at which every basis form vanishes.
    pub witnesses_in_base_locus: Vec<ProjPoint>,
    pub holds: bool,
}

/// Checks that the fixed line lies in the base locus of `basis` and that each
/// witness off the line is not a base point.
pub fn verify_base_locus(basis: &[Form], witnesses: &[ProjPoint]) -> BaseLocusVerdict {
    let nonvanishing: Vec<usize> = basis
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.restrict_vanishing(&[2, 3, 4]).is_zero())
        .map(|(i, _)| i)
        .collect();
    let mut bad = Vec::new();
    let mut checked = 0;
    for w in witnesses {
        if is_on_line(w) {
            continue;
        }
        checked += 1;
        let all_zero = basis
            .iter()
            .all(|f| f.evaluate(w.coords()).map(|v| v.is_zero()).unwrap_or(false));
        if all_zero {
            bad.push(w.clone());
        }
    }
    BaseLocusVerdict {
        vanishes_on_line: nonvanishing.is_empty(),
        holds: nonvanishing.is_empty() && bad.is_empty(),
        nonvanishing_on_line: nonvanishing,
        witnesses_checked: checked,
        witnesses_in_base_locus: bad,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicThroughPoints {
    pub cubic: Form,
    /// Dimension of the span of the cubic and the quadric times linear invariants.
    pub w_dim: usize,
    /// Dimension of the invariant cubics modulo that span.
    pub quotient_dim: usize,
    /// Vector-space dimension of the quotient cubics through both points.
    pub solution_dim: usize,
    /// Projective dimension of the same space.
    pub solution_proj_dim: usize,
}

/// Coordinates of `f` in the invariant cubic monomial basis.
fn basis_coords(f: &Form, basis: &[Form]) -> Vec<Scalar> {
    basis
        .iter()
        .map(|m| {
            let (e, _) = m.terms().into_iter().next().expect("monomial basis element");
            f.coeff(&e).clone()
        })
        .collect()
}

/// `Φ, F x2, F x3, F x4` in coordinates of the invariant cubic monomial basis.
fn w_matrix(inst: &TauInstance, quadric_index: usize) -> Result<(Matrix, Vec<Form>), GeometryError> {
    let phi = inst.cubic();
    let f = inst.quadric(quadric_index)?;
    let basis = invariant_basis(3)?;
    let mut w_rows = vec![basis_coords(&phi, &basis)];
    for v in 2..5 {
        w_rows.push(basis_coords(&f.mul(&Form::var(5, v)), &basis));
    }
    Ok((Matrix::from_rows(w_rows), basis))
}

/// `(dim W, dim S3+ / W)` for the span `W` of `Φ, F x2, F x3, F x4`.
pub fn invariant_cubic_quotient(inst: &TauInstance, quadric_index: usize) -> Result<(usize, usize), GeometryError> {
    let (w, basis) = w_matrix(inst, quadric_index)?;
    let r = w.rank();
    Ok((r, basis.len() - r))
}

/// A τ-invariant cubic through `p` and `q` that is not in the span `W` of
/// `Φ, F x2, F x3, F x4` (with `F` the quadric `quadric_index`).
pub fn cubic_through_points(
    inst: &TauInstance,
    quadric_index: usize,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<CubicThroughPoints, GeometryError> {
    let phi = inst.cubic();
    let f = inst.quadric(quadric_index)?;
    for pt in [p, q] {
        if !phi.evaluate(pt.coords())?.is_zero() || !f.evaluate(pt.coords())?.is_zero() {
            return Err(GeometryError::NotOnSurface(pt.to_string()));
        }
    }
    let (w, basis) = w_matrix(inst, quadric_index)?;
    let w_dim = w.rank();
    // complement of W: basis monomials that are not pivots of W's echelon form
    let pivots = w.pivot_columns();
    let complement: Vec<&Form> =
        basis.iter().enumerate().filter(|(i, _)| !pivots.contains(i)).map(|(_, m)| m).collect();
    let quotient_dim = complement.len();
    let conditions = Matrix::from_rows(
        [p, q]
            .iter()
            .map(|pt| {
                complement
                    .iter()
                    .map(|m| m.evaluate(pt.coords()).expect("five coordinates"))
                    .collect()
            })
            .collect(),
    );
    let kernel = conditions.kernel();
    let solution_dim = kernel.len();
    if solution_dim < 13 {
        return Err(GeometryError::NoSolution(format!(
            "only {solution_dim} independent quotient cubics pass through both points"
        )));
    }
    let v = &kernel[0];
    let mut cubic = Form::zero(5, 3);
    for (c, m) in v.iter().zip(&complement) {
        cubic = cubic.add(&m.scale(c));
    }
    Ok(CubicThroughPoints {
        cubic,
        w_dim,
        quotient_dim,
        solution_dim,
        solution_proj_dim: solution_dim - 1,
    })
}

/// A random F_p-point of `{Φ = 0} ∩ {F = 0}` off both fixed loci, or `None`
/// after `tries` failed draws. `inst` must already be defined over F_p.
pub fn random_point_on_surface(
    inst: &TauInstance,
    quadric_index: usize,
    p: u64,
    rng: &mut impl Rng,
    tries: usize,
) -> Result<Option<ProjPoint>, GeometryError> {
    let quad = inst
        .quadrics
        .get(quadric_index)
        .ok_or_else(|| GeometryError::InvalidInstance(format!("no quadric {quadric_index}")))?;
    let fp = |x: i64| Scalar::prime(x, p).expect("admitted prime");
    for _ in 0..tries {
        let base: Vec<Scalar> = (0..3).map(|_| fp(rng.gen_range(0..p as i64))).collect();
        if base.iter().all(Scalar::is_zero) {
            continue;
        }
        // on the plane over `base`: s = 1, and both equations are binary quadratics plus constants
        let al = inst.l00.evaluate(&base)?;
        let be = inst.l11.evaluate(&base)?;
        let ga = inst.l01.evaluate(&base)?;
        let de = inst.f3.evaluate(&base)?;
        let ep = quad.f2.evaluate(&base)?;
        let (a00, a11, a01) = (&quad.a00, &quad.a11, &quad.a01);
        // eps*(al x0^2 + ...) - de*(a00 x0^2 + ...) vanishes on the direction (x0 : x1)
        let c0 = &(&ep * &al) - &(&de * a00);
        let c1 = &(&ep * &ga) - &(&de * a01);
        let c2 = &(&ep * &be) - &(&de * a11);
        let t = fp(rng.gen_range(0..p as i64));
        // try direction (1 : t) with c0 + c1 t + c2 t^2 = 0
        let val = &(&c0 + &(&c1 * &t)) + &(&c2 * &(&t * &t));
        let dir = if val.is_zero() {
            [fp(1), t]
        } else {
            let disc = &(&c1 * &c1) - &(&Scalar::from(4) * &(&c0 * &c2));
            if c2.is_zero() || disc.is_zero() {
                continue;
            }
            let Ok(r) = quad_sqrt(&disc) else {
                continue;
            };
            if r.is_quad() {
                continue;
            }
            let sign = if rng.gen_bool(0.5) { fp(1) } else { fp(-1) };
            let root = &(&(-&c1) + &(&sign * &r)) / &(&Scalar::from(2) * &c2);
            [fp(1), root]
        };
        let bq = &(&(a00 * &(&dir[0] * &dir[0])) + &(a01 * &(&dir[0] * &dir[1])))
            + &(a11 * &(&dir[1] * &dir[1]));
        if bq.is_zero() || ep.is_zero() {
            continue;
        }
        // lambda^2 * bq + ep = 0
        let lam2 = &(-&ep) / &bq;
        let Ok(lam) = quad_sqrt(&lam2) else {
            continue;
        };
        if lam.is_quad() {
            continue;
        }
        let coords = vec![
            &lam * &dir[0],
            &lam * &dir[1],
            base[0].clone(),
            base[1].clone(),
            base[2].clone(),
        ];
        let pt = ProjPoint::new(coords)?;
        let phi = inst.cubic();
        let f = quad.form();
        if phi.evaluate(pt.coords())?.is_zero() && f.evaluate(pt.coords())?.is_zero() {
            return Ok(Some(pt));
        }
    }
    Ok(None)
}

/// Dimensions of the τ-eigenspaces of quadratic forms on P^4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sym2Split {
    /// Sym^2 of the anti-invariant coordinates x0, x1.
    pub sym2_minus: usize,
    /// Products of one anti-invariant and one invariant coordinate.
    pub mixed: usize,
    /// Sym^2 of the invariant coordinates x2, x3, x4.
    pub sym2_plus: usize,
    pub invariant_total: usize,
    pub anti_invariant_total: usize,
    pub total: usize,
}

/// Classifies every quadratic monomial by the sign τ puts on it.
pub fn sym2_eigensplit() -> Sym2Split {
    let tau = tau_matrix();
    let mut split = Sym2Split {
        sym2_minus: 0,
        mixed: 0,
        sym2_plus: 0,
        invariant_total: 0,
        anti_invariant_total: 0,
        total: 0,
    };
    for e in crate::forms::monomial::basis(5, 2).iter() {
        let m = Form::monomial(e, Scalar::one());
        let moved = m.substitute_linear(&tau).expect("tau is invertible");
        let minus = e[0] + e[1];
        match minus {
            2 => split.sym2_minus += 1,
            1 => split.mixed += 1,
            _ => split.sym2_plus += 1,
        }
        if moved == m {
            split.invariant_total += 1;
        } else if moved == m.neg() {
            split.anti_invariant_total += 1;
        }
        split.total += 1;
    }
    split
}
