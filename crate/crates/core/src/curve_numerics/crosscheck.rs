use std::collections::HashSet;

use rand::Rng;

use crate::exactfield::{quad_sqrt, FieldKind, Scalar};
use crate::forms::monomial::{basis, monomial_count};
use crate::forms::{Form, Matrix, ProjPoint};
use crate::tau_geometry::{random_point_on_surface, GeometryError, TauInstance};

/// `#monomials − rank` of the matrix of degree-`d` monomials evaluated at
/// `points`: the dimension of degree-`d` forms vanishing on all of them.
pub fn evaluation_rank_deficiency(points: &[ProjPoint], d: u32) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let n = first.coords().len();
    let mons = basis(n, d);
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            mons.iter()
                .map(|e| {
                    let mut acc = p.coords()[0].like(1);
                    for (c, &k) in p.coords().iter().zip(e) {
                        acc = &acc * &c.pow(k);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    mons.len() - Matrix::from_rows(rows).rank()
}

/// Dimension of the Jacobian ring `S / (∂f)` in degree `k`.
pub fn jacobian_ring_dimension(f: &Form, k: u32) -> usize {
    let n = f.nvars();
    let total = monomial_count(n, k);
    let dd = f.degree().saturating_sub(1);
    if f.degree() == 0 || k < dd {
        return total;
    }
    let mons = basis(n, k - dd);
    let mut rows = Vec::new();
    for g in f.gradient() {
        for e in mons.iter() {
            rows.push(g.mul(&Form::monomial(e, Scalar::one())).coeffs().to_vec());
        }
    }
    total - Matrix::from_rows(rows).rank()
}

fn over_prime(inst: &TauInstance, p: u64) -> Result<TauInstance, GeometryError> {
    match inst.field()? {
        FieldKind::Prime(q) if q == p => Ok(inst.clone()),
        _ => inst.reduce_mod(p),
    }
}

/// Up to `count` distinct F_p-points of `{Φ = F = 0}`.
pub fn points_on_surface(
    inst: &TauInstance,
    quadric_index: usize,
    p: u64,
    count: usize,
    rng: &mut impl Rng,
) -> Result<Vec<ProjPoint>, GeometryError> {
    let local = over_prime(inst, p)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..count * 8 {
        if out.len() >= count {
            break;
        }
        if let Some(pt) = random_point_on_surface(&local, quadric_index, p, rng, 64)? {
            if seen.insert(pt.to_string()) {
                out.push(pt);
            }
        }
    }
    out.truncate(count);
    Ok(out)
}

/// Up to `count` distinct F_p-points of the curve `{Φ = F0 = F1 = 0}`, found by
/// drawing points `P` of the fixed plane and solving for `(x0 : x1)` on the
/// plane through `P` and the fixed line. Gives up after `200 p` draws.
pub fn points_on_curve_z(
    inst: &TauInstance,
    p: u64,
    count: usize,
    rng: &mut impl Rng,
) -> Result<Vec<ProjPoint>, GeometryError> {
    if inst.quadrics.len() < 2 {
        return Err(GeometryError::InvalidInstance("the curve needs two quadrics".into()));
    }
    let local = over_prime(inst, p)?;
    let (q0, q1) = (&local.quadrics[0], &local.quadrics[1]);
    let phi = local.cubic();
    let (f0, f1) = (q0.form(), q1.form());
    let fp = |x: u64| Scalar::prime(x as i64, p).expect("admitted prime");
    let binary = |a: &Scalar, b: &Scalar, c: &Scalar, x: &Scalar, y: &Scalar| {
        &(&(a * &(x * x)) + &(c * &(x * y))) + &(b * &(y * y))
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..200 * p {
        if out.len() >= count {
            break;
        }
        let base: Vec<Scalar> = (0..3).map(|_| fp(rng.gen_range(0..p))).collect();
        if base.iter().all(Scalar::is_zero) {
            continue;
        }
        let e0 = q0.f2.evaluate(&base)?;
        let e1 = q1.f2.evaluate(&base)?;
        // e1 a_0(x) − e0 a_1(x) = 0 fixes the direction (x0 : x1)
        let c0 = &(&e1 * &q0.a00) - &(&e0 * &q1.a00);
        let c1 = &(&e1 * &q0.a01) - &(&e0 * &q1.a01);
        let c2 = &(&e1 * &q0.a11) - &(&e0 * &q1.a11);
        let mut dirs = Vec::new();
        if c2.is_zero() {
            if !c1.is_zero() {
                dirs.push([fp(1), &(-&c0) / &c1]);
            }
            if c0.is_zero() && c1.is_zero() {
                continue;
            }
            dirs.push([fp(0), fp(1)]);
        } else {
            let disc = &(&c1 * &c1) - &(&fp(4) * &(&c0 * &c2));
            if disc.is_zero() {
                dirs.push([fp(1), &(-&c1) / &(&fp(2) * &c2)]);
            } else if let Ok(r) = quad_sqrt(&disc) {
                if r.is_quad() {
                    continue;
                }
                for s in [&r, &-&r] {
                    dirs.push([fp(1), &(&(-&c1) + s) / &(&fp(2) * &c2)]);
                }
            }
        }
        for [x, y] in dirs {
            let (a, e) = {
                let a0 = binary(&q0.a00, &q0.a11, &q0.a01, &x, &y);
                if !a0.is_zero() {
                    (a0, e0.clone())
                } else {
                    (binary(&q1.a00, &q1.a11, &q1.a01, &x, &y), e1.clone())
                }
            };
            if a.is_zero() {
                continue;
            }
            let Ok(lam) = quad_sqrt(&(&(-&e) / &a)) else { continue };
            if lam.is_quad() {
                continue;
            }
            for l in [lam.clone(), -&lam] {
                let pt = vec![&l * &x, &l * &y, base[0].clone(), base[1].clone(), base[2].clone()];
                let on = |f: &Form| f.evaluate(&pt).map(|v| v.is_zero());
                if on(&phi)? && on(&f0)? && on(&f1)? {
                    let pt = ProjPoint::new(pt).map_err(GeometryError::from)?;
                    if seen.insert(pt.to_string()) {
                        out.push(pt);
                    }
                }
            }
        }
    }
    out.truncate(count);
    Ok(out)
}
