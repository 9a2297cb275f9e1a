use serde::{Deserialize, Serialize};

use super::DiscriminantError;
use crate::exactfield::{quad_sqrt, Scalar};
use crate::forms::{Form, FormError, Matrix, ProjPoint, SymMatrix3};
use crate::tau_geometry::{tau_matrix, TauInstance};

/// Residual conic of the plane spanned by the fixed line and a point `P` of the
/// fixed plane, in coordinates `(x0 : x1 : s) ↦ (x0 : x1 : s P)`:
/// `α x0^2 + β x1^2 + γ x0 x1 + δ s^2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberConic {
    /// Coordinates (x2, x3, x4) of `P`.
    pub base_point: ProjPoint,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub delta: Scalar,
    pub gram: SymMatrix3,
}

impl FiberConic {
    pub fn from_coefficients(
        base_point: ProjPoint,
        alpha: Scalar,
        beta: Scalar,
        gamma: Scalar,
        delta: Scalar,
    ) -> Result<Self, DiscriminantError> {
        let half = &gamma * &Scalar::rational(1, 2).expect("nonzero");
        let z = alpha.like(0);
        let gram = SymMatrix3::new([
            [alpha.clone(), half.clone(), z.clone()],
            [half, beta.clone(), z.clone()],
            [z.clone(), z, delta.clone()],
        ])?;
        Ok(FiberConic { base_point, alpha, beta, gamma, delta, gram })
    }

    pub fn form(&self) -> Form {
        self.gram.to_form()
    }

    /// The plane's parametrization `(x0, x1, s) ↦ (x0, x1, s P2, s P3, s P4)` as a 5x3 matrix.
    pub fn plane_map(&self) -> Matrix {
        plane_map(&self.base_point)
    }
}

fn plane_map(p: &ProjPoint) -> Matrix {
    let c = p.coords();
    let z = c[0].like(0);
    let o = c[0].like(1);
    Matrix::from_rows(vec![
        vec![o.clone(), z.clone(), z.clone()],
        vec![z.clone(), o, z.clone()],
        vec![z.clone(), z.clone(), c[0].clone()],
        vec![z.clone(), z.clone(), c[1].clone()],
        vec![z, c[0].like(0), c[2].clone()],
    ])
}

/// Evaluates `l00, l11, l01, f3` at `P` and builds the Gram matrix.
pub fn fiber_conic(inst: &TauInstance, p: &ProjPoint) -> Result<FiberConic, DiscriminantError> {
    if p.coords().len() != 3 {
        return Err(DiscriminantError::InvalidPoint(format!(
            "{p} is not a point of the fixed plane (need coordinates x2, x3, x4)"
        )));
    }
    let c = p.coords();
    FiberConic::from_coefficients(
        p.clone(),
        inst.l00.evaluate(c)?,
        inst.l11.evaluate(c)?,
        inst.l01.evaluate(c)?,
        inst.f3.evaluate(c)?,
    )
}

/// Checks `Φ(x0, x1, s P) = s · E_P(x0, x1, s)` symbolically.
pub fn verify_fiber_restriction(inst: &TauInstance, fc: &FiberConic) -> Result<bool, DiscriminantError> {
    let restricted = inst.cubic().substitute_linear_unchecked(&fc.plane_map())?;
    let s = Form::var(3, 2);
    Ok(restricted == s.mul(&fc.form()))
}

/// A line of P^4 given by two spanning points.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Line {
    pub p: ProjPoint,
    pub q: ProjPoint,
}

impl Line {
    pub fn new(p: ProjPoint, q: ProjPoint) -> Result<Self, DiscriminantError> {
        let l = Line { p, q };
        if rank_of(&[&l.p, &l.q]) != 2 {
            return Err(DiscriminantError::InvalidPoint("coincident spanning points".into()));
        }
        Ok(l)
    }

    pub fn apply(&self, m: &Matrix) -> Result<Line, DiscriminantError> {
        Line::new(ProjPoint::new(m.mul_vec(self.p.coords()))?, ProjPoint::new(m.mul_vec(self.q.coords()))?)
    }

    /// Whether `f` vanishes identically along the line.
    pub fn lies_on(&self, f: &Form) -> Result<bool, DiscriminantError> {
        let n = self.p.coords().len();
        let m = Matrix::from_rows(
            (0..n)
                .map(|i| vec![self.p.coords()[i].clone(), self.q.coords()[i].clone()])
                .collect(),
        );
        Ok(f.substitute_linear_unchecked(&m)?.is_zero())
    }
}

fn rank_of(points: &[&ProjPoint]) -> usize {
    Matrix::from_rows(points.iter().map(|p| p.coords().to_vec()).collect()).rank()
}

impl PartialEq for Line {
    fn eq(&self, o: &Line) -> bool {
        rank_of(&[&self.p, &self.q, &o.p, &o.q]) == 2
    }
}

/// The two lines of a degenerate fiber conic, or a double line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinePair {
    pub lines: [Line; 2],
    /// Linear forms in `(x0, x1, s)` cutting out the two lines inside the plane.
    pub factors: [Form; 2],
    pub double: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ConicSplit {
    NotSplit,
    Split(LinePair),
}

fn line_from_factor(factor: &Form, map: &Matrix) -> Result<Line, DiscriminantError> {
    let c = factor.coeffs();
    let (a, b, s) = (&c[0], &c[1], &c[2]);
    let z = a.like(0);
    let (u, v) = if !s.is_zero() {
        (vec![s.clone(), z.clone(), -a], vec![z, s.clone(), -b])
    } else {
        (vec![b.clone(), -a, z.clone()], vec![z.clone(), z, a.like(1)])
    };
    Line::new(ProjPoint::new(map.mul_vec(&u))?, ProjPoint::new(map.mul_vec(&v))?)
}

/// Splits a singular fiber conic into its two lines.
///
/// With `δ ≠ 0` the pair is `δ (s + b0 x0 + b1 x1)(s − b0 x0 − b1 x1)` where
/// `b0^2 = −α/δ` and `b1 = b0 γ / (2α)` (or `b0 = 0`, `b1^2 = −β/δ` when
/// `α = 0`); with `δ = 0` both lines pass through `(0 : 0 : 1)` and come from
/// the binary part.
pub fn split_conic(fc: &FiberConic) -> Result<ConicSplit, DiscriminantError> {
    let (al, be, ga, de) = (&fc.alpha, &fc.beta, &fc.gamma, &fc.delta);
    if [al, be, ga, de].iter().all(|x| x.is_zero()) {
        return Err(DiscriminantError::ZeroConic);
    }
    if fc.gram.rank() == 3 {
        return Ok(ConicSplit::NotSplit);
    }
    let z = al.like(0);
    let o = al.like(1);
    let two = Scalar::from(2);
    let lin = |a: Scalar, b: Scalar, s: Scalar| Form::linear(&[a, b, s]);
    let (f1, f2, double) = if !de.is_zero() {
        let (b0, b1) = if !al.is_zero() {
            let b0 = quad_sqrt(&(&(-al) / de)).map_err(FormError::from)?;
            let b1 = &(&b0 * ga) / &(&two * al);
            (b0, b1)
        } else if !be.is_zero() {
            (z.clone(), quad_sqrt(&(&(-be) / de)).map_err(FormError::from)?)
        } else {
            (z.clone(), z.clone())
        };
        let double = b0.is_zero() && b1.is_zero();
        (
            lin(b0.clone(), b1.clone(), o.clone()),
            lin(-&b0, -&b1, o.clone()),
            double,
        )
    } else {
        let disc = &(ga * ga) - &(&Scalar::from(4) * &(al * be));
        if !al.is_zero() {
            if disc.is_zero() {
                let f = lin(o.clone(), &(ga / al) / &two, z.clone());
                (f.clone(), f, true)
            } else {
                let r = quad_sqrt(&disc).map_err(FormError::from)?;
                let r1 = &(&(-ga) + &r) / &(&two * al);
                let r2 = &(&(-ga) - &r) / &(&two * al);
                (lin(o.clone(), -&r1, z.clone()), lin(o.clone(), -&r2, z.clone()), false)
            }
        } else if !ga.is_zero() {
            (lin(z.clone(), o.clone(), z.clone()), lin(ga.clone(), be.clone(), z.clone()), false)
        } else {
            let f = lin(z.clone(), o.clone(), z.clone());
            (f.clone(), f, true)
        }
    };
    let map = fc.plane_map();
    let lines = [line_from_factor(&f1, &map)?, line_from_factor(&f2, &map)?];
    Ok(ConicSplit::Split(LinePair { lines, factors: [f1, f2], double }))
}

/// How τ acts on the residual conic over a point of the fixed plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberAction {
    SmoothFiber,
    /// Each line is mapped to itself.
    Fixes,
    /// The two lines are exchanged.
    Swaps,
    DoubleLine,
}

pub fn tau_fiber_action(inst: &TauInstance, p: &ProjPoint) -> Result<FiberAction, DiscriminantError> {
    let fc = fiber_conic(inst, p)?;
    let pair = match split_conic(&fc)? {
        ConicSplit::NotSplit => return Ok(FiberAction::SmoothFiber),
        ConicSplit::Split(pair) => pair,
    };
    if pair.double || pair.lines[0] == pair.lines[1] {
        return Ok(FiberAction::DoubleLine);
    }
    let tau = tau_matrix();
    let t0 = pair.lines[0].apply(&tau)?;
    let t1 = pair.lines[1].apply(&tau)?;
    if t0 == pair.lines[0] && t1 == pair.lines[1] {
        Ok(FiberAction::Fixes)
    } else if t0 == pair.lines[1] && t1 == pair.lines[0] {
        Ok(FiberAction::Swaps)
    } else {
        Err(DiscriminantError::FiberNotPreserved(p.to_string()))
    }
}
