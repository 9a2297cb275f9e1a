use serde::{Deserialize, Serialize};

use super::DiscriminantError;
use crate::exactfield::{check_admitted_prime, FieldKind, Scalar};
use crate::forms::{intersect_plane_curves, Form, FormError, Matrix, ProjPoint};
use crate::tau_geometry::{is_on_line, TauInstance};

/// A line through `T` recorded by a second point `Q`, normalized so that the
/// coordinate of `Q` used for the chart vanishes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineThrough {
    pub direction: ProjPoint,
    pub multiplicity: u32,
    pub is_fixed_line: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineCount {
    pub prime: u64,
    /// Lines through `T` counted with multiplicity over the algebraic closure,
    /// including the fixed line itself.
    pub total: usize,
    pub distinct: usize,
    /// Lines defined over F_q.
    pub rational: Vec<LineThrough>,
}

impl LineCount {
    pub fn rational_distinct(&self) -> usize {
        self.rational.len()
    }
}

/// The instance over F_q together with `T` written in F_q.
fn localize(inst: &TauInstance, t: &ProjPoint, q: u64) -> Result<(TauInstance, Vec<Scalar>), DiscriminantError> {
    check_admitted_prime(q).map_err(FormError::from)?;
    if q < 7 {
        return Err(DiscriminantError::InvalidPoint(format!(
            "F{q} is too small to separate six lines with multiplicity"
        )));
    }
    if t.coords().len() != 5 || !is_on_line(t) {
        return Err(DiscriminantError::NotOnLine(t.to_string()));
    }
    let local = match inst.field()? {
        FieldKind::Rationals => inst.reduce_mod(q)?,
        FieldKind::Prime(p) if p == q => inst.clone(),
        other => {
            return Err(DiscriminantError::InvalidPoint(format!(
                "instance over {} cannot be counted over F{q}",
                other.label()
            )))
        }
    };
    let coords = t
        .coords()
        .iter()
        .map(|c| c.reduce_mod(q).map_err(FormError::from))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.iter().all(Scalar::is_zero) {
        return Err(DiscriminantError::InvalidPoint(format!("{t} vanishes modulo {q}")));
    }
    Ok((local, coords))
}

/// `c1, c2, c3` with `Φ(T + u Q) = u c1(Q) + u^2 c2(Q) + u^3 c3(Q)`, as forms in Q.
fn expansion(phi: &Form, t: &[Scalar]) -> Result<[Form; 3], DiscriminantError> {
    // x_i ↦ t_i w + q_i in the variables (q0, .., q4, w)
    let subs: Vec<Form> = (0..5)
        .map(|i| Form::var(6, i).add(&Form::var(6, 5).scale(&t[i])))
        .collect();
    let parts = phi.substitute(&subs)?.coefficients_in(5);
    if !parts[3].is_zero() {
        return Err(DiscriminantError::NotOnLine("Φ(T) ≠ 0".into()));
    }
    Ok([parts[2].clone(), parts[1].clone(), parts[0].clone()])
}

/// Counts lines of `{Φ = 0}` through a point `T` of the fixed line over F_q.
///
/// Lines through `T` are points `Q` of the P^3 of directions; the line lies on
/// the cubic iff `c1(Q) = c2(Q) = c3(Q) = 0`. The linear condition cuts a
/// plane, on which the conic and cubic meet in six points.
pub fn lines_through_point_of_ltau(inst: &TauInstance, t: &ProjPoint, q: u64) -> Result<LineCount, DiscriminantError> {
    let (local, tc) = localize(inst, t, q)?;
    let chart = if tc[0].is_zero() { 1 } else { 0 };
    let [c1, c2, c3] = expansion(&local.cubic(), &tc)?;
    // directions with q_chart = 0, in the variables `keep`
    let keep: Vec<usize> = (0..5).filter(|&v| v != chart).collect();
    let c1 = c1.restrict_vanishing(&[chart]);
    let c2 = c2.restrict_vanishing(&[chart]);
    let c3 = c3.restrict_vanishing(&[chart]);
    let Some(k) = (0..4).find(|&i| !c1.coeffs()[i].is_zero()) else {
        return Err(DiscriminantError::InfinitelyMany);
    };
    // y_k = −Σ_{m≠k} c1_m y_m / c1_k, the rest are plane coordinates
    let zero = Scalar::prime(0, q).map_err(FormError::from)?;
    let one = Scalar::prime(1, q).map_err(FormError::from)?;
    let mut m = Matrix::from_rows(vec![vec![zero.clone(); 3]; 4]);
    let free: Vec<usize> = (0..4).filter(|&i| i != k).collect();
    for (col, &i) in free.iter().enumerate() {
        m.set(i, col, one.clone());
        m.set(k, col, -&(&c1.coeffs()[i] / &c1.coeffs()[k]));
    }
    let conic = c2.substitute_linear_unchecked(&m)?;
    let cubic = c3.substitute_linear_unchecked(&m)?;
    if conic.is_zero() || cubic.is_zero() {
        return Err(DiscriminantError::InfinitelyMany);
    }
    let inter = match intersect_plane_curves(&conic, &cubic) {
        Err(FormError::CommonComponent) => return Err(DiscriminantError::InfinitelyMany),
        other => other?,
    };
    let fixed_dir = {
        let mut v = vec![zero.clone(); 5];
        v[1 - chart] = one.clone();
        ProjPoint::new(v)?
    };
    let mut rational = Vec::new();
    for ip in &inter.points {
        let y = m.mul_vec(ip.point.coords());
        let mut full = vec![zero.clone(); 5];
        for (j, &v) in keep.iter().enumerate() {
            full[v] = y[j].clone();
        }
        let direction = ProjPoint::new(full)?;
        rational.push(LineThrough {
            is_fixed_line: direction == fixed_dir,
            direction,
            multiplicity: ip.multiplicity,
        });
    }
    Ok(LineCount { prime: q, total: inter.total, distinct: inter.distinct, rational })
}

/// Number of F_q-rational lines of `{Φ = 0}` through `T`, by enumerating every
/// direction and testing `Φ(Q) = Φ(T + Q) = Φ(T − Q) = Φ(T + 2Q) = 0`.
///
/// The four values pin down `c1, c2, c3` when `q > 3`. Cost is `O(q^3)`.
pub fn count_lines_brute_force(inst: &TauInstance, t: &ProjPoint, q: u64) -> Result<usize, DiscriminantError> {
    let (local, tc) = localize(inst, t, q)?;
    let phi = local.cubic();
    let chart = if tc[0].is_zero() { 1 } else { 0 };
    let keep: Vec<usize> = (0..5).filter(|&v| v != chart).collect();
    let fq = |x: u64| Scalar::prime(x as i64, q).expect("admitted prime");
    let two = fq(2);
    let mut count = 0;
    for lead in 0..4 {
        let free = 3 - lead;
        for code in 0..q.pow(free as u32) {
            let mut y = vec![fq(0); 4];
            y[lead] = fq(1);
            let mut c = code;
            for slot in y.iter_mut().skip(lead + 1) {
                *slot = fq(c % q);
                c /= q;
            }
            let mut qv = vec![fq(0); 5];
            for (j, &v) in keep.iter().enumerate() {
                qv[v] = y[j].clone();
            }
            let shifted = |s: &Scalar| -> Vec<Scalar> {
                tc.iter().zip(&qv).map(|(a, b)| a + &(s * b)).collect()
            };
            let on = |pt: &[Scalar]| phi.evaluate(pt).map(|v| v.is_zero());
            if on(&qv)? && on(&shifted(&fq(1)))? && on(&shifted(&-&fq(1)))? && on(&shifted(&two))? {
                count += 1;
            }
        }
    }
    Ok(count)
}
