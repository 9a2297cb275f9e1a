//! The quotient surface as a divisor of bidegree (2, 3) in P^1 x P^2 and its
//! branch sextic.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::discriminant::{random_curve_points, DiscriminantError};
use crate::exactfield::{quad_sqrt, FieldKind, Scalar};
use crate::forms::monomial::{basis, monomial_count, rank};
use crate::forms::{Form, FormError, UniPoly};
use crate::tau_geometry::{random_point_on_surface, GeometryError, TauInstance, PLANE_VARS};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuotientError {
    #[error("the branch discriminant vanishes identically")]
    IdenticallyZero,
    #[error("form is not bihomogeneous of bidegree ({0}, {1})")]
    NotBihomogeneous(u32, u32),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Discriminant(#[from] DiscriminantError),
    #[error(transparent)]
    Form(#[from] FormError),
}

/// A bihomogeneous form in `(x0, x1; x2, x3, x4)`, coefficients indexed by
/// `i * #second + j` with `i`, `j` graded-lex indices in each factor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiForm {
    pub bideg: [u32; 2],
    pub coeffs: Vec<Scalar>,
}

impl BiForm {
    pub fn zero(d1: u32, d2: u32) -> Self {
        BiForm { bideg: [d1, d2], coeffs: vec![Scalar::zero(); monomial_count(2, d1) * monomial_count(3, d2)] }
    }

    /// Splits a form on P^4 by bidegree; fails if any term has a different one.
    pub fn from_form(f: &Form, d1: u32, d2: u32) -> Result<Self, QuotientError> {
        if f.nvars() != 5 || f.degree() != d1 + d2 {
            return Err(QuotientError::NotBihomogeneous(d1, d2));
        }
        let mut out = BiForm::zero(d1, d2);
        let n2 = monomial_count(3, d2);
        for (e, c) in f.terms() {
            if e[0] + e[1] != d1 {
                return Err(QuotientError::NotBihomogeneous(d1, d2));
            }
            out.coeffs[rank(&e[..2]) * n2 + rank(&e[2..])] = c;
        }
        Ok(out)
    }

    pub fn to_form(&self) -> Form {
        let [d1, d2] = self.bideg;
        let b1 = basis(2, d1);
        let b2 = basis(3, d2);
        let mut f = Form::zero(5, d1 + d2);
        for (i, e1) in b1.iter().enumerate() {
            for (j, e2) in b2.iter().enumerate() {
                let c = &self.coeffs[i * b2.len() + j];
                if !c.is_zero() {
                    let e: Vec<u32> = e1.iter().chain(e2).copied().collect();
                    f.set_coeff(&e, c.clone());
                }
            }
        }
        f
    }

    /// Coefficient forms in `(x2, x3, x4)` of each monomial in `(x0, x1)`, in graded-lex order.
    pub fn fiber_coefficients(&self) -> Vec<Form> {
        let [d1, d2] = self.bideg;
        let n2 = monomial_count(3, d2);
        (0..monomial_count(2, d1))
            .map(|i| Form::new(3, d2, self.coeffs[i * n2..(i + 1) * n2].to_vec()).expect("sized slice"))
            .collect()
    }

    /// Invariant under `(x0, x1) ↦ (−x0, −x1)`: only even first degrees occur.
    pub fn is_tau_invariant(&self) -> bool {
        self.bideg[0].is_multiple_of(2) || self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// `(l00 x0^2 + l11 x1^2 + l01 x0 x1) f2 − (a00 x0^2 + a11 x1^2 + a01 x0 x1) f3`,
/// the equation `Φ f2 − F f3` of the quotient by τ.
pub fn quotient_equation(inst: &TauInstance, quadric_index: usize) -> Result<BiForm, QuotientError> {
    let q = inst
        .quadrics
        .get(quadric_index)
        .ok_or_else(|| GeometryError::InvalidInstance(format!("no quadric {quadric_index}")))?;
    let f2 = q.f2.embed(5, &PLANE_VARS);
    let f3 = inst.f3.embed(5, &PLANE_VARS);
    let t = inst.cubic().mul(&f2).sub(&q.form().mul(&f3));
    BiForm::from_form(&t, 2, 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum SquarefreeVerdict {
    /// Some line over F_p meets the sextic in six distinct points.
    Squarefree { prime: u64 },
    /// Every probed line met it with a repeated root.
    RepeatedFactorLikely { prime: u64, lines: usize },
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchSextic {
    pub form: Form,
    pub degree: u32,
    pub squarefree: SquarefreeVerdict,
}

/// Probes squarefreeness of a plane curve over F_p by restricting to random lines.
pub fn squarefree_mod_p(f: &Form, p: u64, lines: usize, rng: &mut impl Rng) -> SquarefreeVerdict {
    let local = match f.field() {
        Ok(FieldKind::Prime(q)) if q == p => f.clone(),
        _ => match f.reduce_mod(p) {
            Ok(g) => g,
            Err(e) => return SquarefreeVerdict::Inconclusive { reason: e.to_string() },
        },
    };
    if local.is_zero() {
        return SquarefreeVerdict::Inconclusive { reason: format!("vanishes modulo {p}") };
    }
    let d = local.degree() as usize;
    if d as u64 >= p {
        return SquarefreeVerdict::Inconclusive { reason: format!("degree {d} too large for F{p}") };
    }
    let fp = |x: u64| Scalar::prime(x as i64, p).expect("admitted prime");
    for _ in 0..lines {
        // x_i = u a_i + v b_i
        let subs: Vec<Form> = (0..3)
            .map(|_| Form::linear(&[fp(rng.gen_range(0..p)), fp(rng.gen_range(0..p))]))
            .collect();
        let Ok(g) = local.substitute(&subs) else { continue };
        if g.is_zero() {
            continue;
        }
        let u = UniPoly::new((0..=d).map(|k| g.coeffs()[d - k].clone()).collect());
        // the line must not pass through the curve at v = 0
        if u.degree() != Some(d) {
            continue;
        }
        if u.gcd(&u.derivative()).degree() == Some(0) {
            return SquarefreeVerdict::Squarefree { prime: p };
        }
    }
    SquarefreeVerdict::RepeatedFactorLikely { prime: p, lines }
}

/// `B^2 − 4 A C` for the quotient equation `A x0^2 + B x0 x1 + C x1^2`.
pub fn branch_sextic(
    inst: &TauInstance,
    quadric_index: usize,
    prime: u64,
    rng: &mut impl Rng,
) -> Result<BranchSextic, QuotientError> {
    let t = quotient_equation(inst, quadric_index)?;
    let c = t.fiber_coefficients();
    let (a, b, cc) = (&c[0], &c[1], &c[2]);
    let form = b.mul(b).sub(&a.mul(cc).scale(&Scalar::from(4)));
    if form.is_zero() {
        return Err(QuotientError::IdenticallyZero);
    }
    let squarefree = squarefree_mod_p(&form, prime, 32, rng);
    Ok(BranchSextic { degree: form.degree(), form, squarefree })
}

/// Per-point comparison of the sextic with the conic bundle over the cubic
/// component, where `sextic = −f2^2 · conic_part`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SexticCrossCheck {
    pub sampled: usize,
    /// The identity held at the point.
    pub agree: usize,
    /// Sextic zeros among the samples; each must lie on the conic or on `f2 = 0`.
    pub zeros: usize,
}

pub fn sextic_vs_quintic(
    inst: &TauInstance,
    quadric_index: usize,
    p: u64,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<SexticCrossCheck, QuotientError> {
    let local = match inst.field()? {
        FieldKind::Prime(q) if q == p => inst.clone(),
        _ => inst.reduce_mod(p)?,
    };
    let sextic = branch_sextic(&local, quadric_index, p, rng)?.form;
    let conic = local.conic_part();
    let f2 = &local.quadrics[quadric_index].f2;
    let pts = random_curve_points(&local.f3, p, samples, rng)?;
    let mut out = SexticCrossCheck { sampled: 0, agree: 0, zeros: 0 };
    for pt in pts.iter().cycle().take(if pts.is_empty() { 0 } else { samples }) {
        let c = pt.coords();
        let s = sextic.evaluate(c)?;
        let e = f2.evaluate(c)?;
        let expected = -&(&(&e * &e) * &conic.evaluate(c)?);
        out.sampled += 1;
        if s == expected {
            out.agree += 1;
        }
        if s.is_zero() {
            out.zeros += 1;
        }
    }
    Ok(out)
}

/// Checks that `Φ f2 − F f3` vanishes on sampled points of the surface and,
/// conversely, that every sampled zero `((x0 : x1), P)` with `f2(P) ≠ 0` lifts
/// to a point of the surface (possibly over F_{p^2}).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PullbackCheck {
    pub forward: usize,
    pub forward_ok: usize,
    pub backward: usize,
    pub backward_ok: usize,
}

pub fn pullback_check(
    inst: &TauInstance,
    quadric_index: usize,
    p: u64,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<PullbackCheck, QuotientError> {
    let local = match inst.field()? {
        FieldKind::Prime(q) if q == p => inst.clone(),
        _ => inst.reduce_mod(p)?,
    };
    let t = quotient_equation(&local, quadric_index)?.to_form();
    let phi = local.cubic();
    let quad = &local.quadrics[quadric_index];
    let f = quad.form();
    let mut out = PullbackCheck { forward: 0, forward_ok: 0, backward: 0, backward_ok: 0 };
    for _ in 0..samples {
        if let Some(pt) = random_point_on_surface(&local, quadric_index, p, rng, 64)? {
            out.forward += 1;
            if t.evaluate(pt.coords())?.is_zero() {
                out.forward_ok += 1;
            }
        }
    }
    let fp = |x: u64| Scalar::prime(x as i64, p).expect("admitted prime");
    let coeffs = quotient_equation(&local, quadric_index)?.fiber_coefficients();
    let mut tries = 0;
    while out.backward < samples && tries < 64 * samples {
        tries += 1;
        let base: Vec<Scalar> = (0..3).map(|_| fp(rng.gen_range(0..p))).collect();
        let e = quad.f2.evaluate(&base)?;
        if e.is_zero() {
            continue;
        }
        let [a, b, c] = [0, 1, 2].map(|i| coeffs[i].evaluate(&base).expect("three coordinates"));
        // a x^2 + b x + c = 0 with x0 = x, x1 = 1
        if a.is_zero() {
            continue;
        }
        let disc = &(&b * &b) - &(&fp(4) * &(&a * &c));
        let x = if disc.is_zero() {
            &(-&b) / &(&fp(2) * &a)
        } else {
            match quad_sqrt(&disc) {
                Ok(r) if !r.is_quad() => &(&(-&b) + &r) / &(&fp(2) * &a),
                _ => continue,
            }
        };
        let one = x.like(1);
        let ax = &(&(&quad.a00 * &(&x * &x)) + &(&quad.a01 * &x)) + &quad.a11;
        if ax.is_zero() {
            continue;
        }
        out.backward += 1;
        let Ok(lam) = quad_sqrt(&(&(-&e) / &ax)) else { continue };
        let pt = vec![&lam * &x, &lam * &one, base[0].clone(), base[1].clone(), base[2].clone()];
        if phi.evaluate(&pt)?.is_zero() && f.evaluate(&pt)?.is_zero() {
            out.backward_ok += 1;
        }
    }
    Ok(out)
}
