use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::fiber::{tau_fiber_action, FiberAction};
use super::quintic::discriminant_quintic;
use super::DiscriminantError;
use crate::exactfield::{FieldKind, Scalar};
use crate::forms::{Form, FormError, ProjPoint, UniPoly};
use crate::tau_geometry::TauInstance;

/// Up to `count` distinct F_p-points of the plane curve `f = 0`: two
/// coordinates are fixed at random and the third runs over the rational roots.
pub fn random_curve_points(
    f: &Form,
    p: u64,
    count: usize,
    rng: &mut impl Rng,
) -> Result<Vec<ProjPoint>, DiscriminantError> {
    if f.nvars() != 3 || f.is_zero() {
        return Err(FormError::InvalidInput("need a nonzero ternary form".into()).into());
    }
    let fp = |x: u64| Scalar::prime(x as i64, p).expect("admitted prime");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let budget = 64 * count + 256;
    for _ in 0..budget {
        if out.len() >= count {
            break;
        }
        // fix two coordinates, solve for the third
        let v = rng.gen_range(0..3);
        let fixed = [fp(rng.gen_range(0..p)), fp(rng.gen_range(0..p))];
        if fixed.iter().all(Scalar::is_zero) {
            continue;
        }
        let mut subs = Vec::with_capacity(3);
        let mut j = 0;
        for i in 0..3 {
            if i == v {
                subs.push(Form::var(2, 0));
            } else {
                subs.push(Form::var(2, 1).scale(&fixed[j]));
                j += 1;
            }
        }
        // binary form in (t, h); set h = 1
        let g = f.substitute(&subs)?;
        let d = g.degree() as usize;
        let poly = UniPoly::new((0..=d).map(|k| g.coeffs()[d - k].clone()).collect());
        let roots = if poly.is_zero() {
            vec![fp(rng.gen_range(0..p))]
        } else {
            poly.roots_in_prime_field()
        };
        for r in roots {
            let mut c = Vec::with_capacity(3);
            let mut j = 0;
            for i in 0..3 {
                if i == v {
                    c.push(r.clone());
                } else {
                    c.push(fixed[j].clone());
                    j += 1;
                }
            }
            let pt = ProjPoint::new(c)?;
            if seen.insert(pt.to_string()) {
                out.push(pt);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentTally {
    pub sampled: usize,
    /// Distinct points among the samples; a small curve is sampled with repetition.
    pub distinct: usize,
    pub expected: FiberAction,
    pub matched: usize,
    pub exceptions: Vec<String>,
}

/// Fiber actions sampled over `C3 ∖ C2`, `C2 ∖ C3` and at `C2 ∩ C3` over F_p.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DichotomyReport {
    pub prime: u64,
    pub cubic_component: ComponentTally,
    pub conic_component: ComponentTally,
    pub intersection: ComponentTally,
}

impl DichotomyReport {
    pub fn holds(&self) -> bool {
        [&self.cubic_component, &self.conic_component, &self.intersection]
            .iter()
            .all(|t| t.exceptions.is_empty() && t.matched == t.sampled)
    }
}

fn tally(
    inst: &TauInstance,
    points: &[ProjPoint],
    expected: FiberAction,
    samples: usize,
) -> Result<ComponentTally, DiscriminantError> {
    let mut matched = 0;
    let mut exceptions = Vec::new();
    for pt in points.iter().cycle().take(samples) {
        match tau_fiber_action(inst, pt) {
            Ok(a) if a == expected => matched += 1,
            Ok(a) => exceptions.push(format!("{pt}: {a:?}")),
            Err(e) => exceptions.push(format!("{pt}: {e}")),
        }
    }
    let sampled = if points.is_empty() { 0 } else { samples };
    Ok(ComponentTally { sampled, distinct: points.len().min(samples), expected, matched, exceptions })
}

/// Samples `per_component` points on each component of the discriminant over
/// F_p (cycling through the distinct points found when a curve has fewer) and checks that τ fixes the lines over the cubic, swaps them over the
/// conic and meets a double line at the six intersection points.
pub fn check_fiber_dichotomy(
    inst: &TauInstance,
    p: u64,
    per_component: usize,
    rng: &mut impl Rng,
) -> Result<DichotomyReport, DiscriminantError> {
    let local = match inst.field()? {
        FieldKind::Prime(q) if q == p => inst.clone(),
        _ => inst.reduce_mod(p)?,
    };
    let conic = local.conic_part();
    let cubic = local.f3.clone();
    let off = |f: &Form, pts: Vec<ProjPoint>| -> Result<Vec<ProjPoint>, DiscriminantError> {
        let mut keep = Vec::new();
        for pt in pts {
            if !pt.lies_on(f)? {
                keep.push(pt);
            }
        }
        Ok(keep)
    };
    let on_cubic = off(&conic, random_curve_points(&cubic, p, per_component + 8, rng)?)?;
    let on_conic = off(&cubic, random_curve_points(&conic, p, per_component + 8, rng)?)?;
    let data = discriminant_quintic(&local)?;
    let meet: Vec<ProjPoint> = data
        .intersection
        .iter()
        .filter(|e| !e.pt.is_empty())
        .map(|e| ProjPoint::new(e.pt.clone()))
        .collect::<Result<_, _>>()?;
    Ok(DichotomyReport {
        prime: p,
        cubic_component: tally(&local, &on_cubic, FiberAction::Fixes, per_component)?,
        conic_component: tally(&local, &on_conic, FiberAction::Swaps, per_component)?,
        intersection: tally(&local, &meet, FiberAction::DoubleLine, meet.len())?,
    })
}
