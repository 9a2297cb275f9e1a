use serde::{Deserialize, Serialize};

use super::resultant::macaulay_resultant;
use super::types::ProjPoint;
use super::{Form, FormError};
use crate::exactfield::{check_admitted_prime, FieldKind, Scalar};

/// Result of a smoothness certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum SmoothnessVerdict {
    /// The Macaulay resultant of the partials is nonzero modulo every listed
    /// prime (or exactly, over an extension field).
    SmoothCertified { primes: Vec<u64> },
    /// An exact common zero of the form and all its partials.
    SingularCertified { witness: ProjPoint },
    Inconclusive { reason: String },
}

impl SmoothnessVerdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothnessVerdict::SmoothCertified { .. })
    }
}

/// Largest projective space enumerated exhaustively when hunting for a witness.
const ENUMERATION_LIMIT: u64 = 400_000;

/// Certifies smoothness of the projective hypersurface `f = 0`.
///
/// Rational forms are reduced modulo each supplied prime and the Macaulay
/// resultant of the reduced partials is computed there; all nonzero means
/// smooth. Forms already defined over F_p are certified in their own field.
/// When a resultant vanishes, a small search looks for an exact singular point.
pub fn is_smooth_hypersurface(f: &Form, primes: &[u64]) -> Result<SmoothnessVerdict, FormError> {
    if f.degree() == 0 || f.is_zero() {
        return Err(FormError::InvalidInput("need a nonzero form of positive degree".into()));
    }
    for &p in primes {
        check_admitted_prime(p)?;
    }
    match f.field()? {
        FieldKind::Rationals => {
            let mut used = Vec::new();
            let mut vanished = false;
            for &p in primes {
                if (f.degree() as u64).is_multiple_of(p) {
                    continue;
                }
                let fp = f.reduce_mod(p)?;
                match macaulay_resultant(&fp.gradient()) {
                    Ok(r) if r.is_zero() => {
                        vanished = true;
                        break;
                    }
                    Ok(_) => used.push(p),
                    // the extraneous minor can vanish identically over a tiny field
                    Err(FormError::Inconclusive(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            if !vanished && !used.is_empty() {
                return Ok(SmoothnessVerdict::SmoothCertified { primes: used });
            }
            if let Some(w) = integer_witness(f, 2)? {
                return Ok(SmoothnessVerdict::SingularCertified { witness: w });
            }
            let reason = if vanished {
                "resultant vanished modulo a supplied prime; no small singular point found"
            } else {
                "no usable prime supplied"
            };
            Ok(SmoothnessVerdict::Inconclusive { reason: reason.into() })
        }
        FieldKind::Prime(p) => {
            let nonzero = !(f.degree() as u64).is_multiple_of(p)
                && matches!(macaulay_resultant(&f.gradient()), Ok(r) if !r.is_zero());
            if nonzero {
                return Ok(SmoothnessVerdict::SmoothCertified { primes: vec![p] });
            }
            if let Some(w) = prime_field_witness(f, p)? {
                return Ok(SmoothnessVerdict::SingularCertified { witness: w });
            }
            Ok(SmoothnessVerdict::Inconclusive {
                reason: format!("resultant vanished over F{p}; no rational singular point found"),
            })
        }
        FieldKind::Quadratic { .. } => {
            if !macaulay_resultant(&f.gradient())?.is_zero() {
                return Ok(SmoothnessVerdict::SmoothCertified { primes: Vec::new() });
            }
            if let Some(w) = integer_witness(f, 2)? {
                return Ok(SmoothnessVerdict::SingularCertified { witness: w });
            }
            Ok(SmoothnessVerdict::Inconclusive {
                reason: "resultant vanished; no small singular point found".into(),
            })
        }
    }
}

fn is_singular_at(f: &Form, partials: &[Form], pt: &[Scalar]) -> Result<bool, FormError> {
    if !f.evaluate(pt)?.is_zero() {
        return Ok(false);
    }
    for g in partials {
        if !g.evaluate(pt)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches primitive integer points of max-norm at most `bound`, smallest first.
fn integer_witness(f: &Form, bound: i64) -> Result<Option<ProjPoint>, FormError> {
    let n = f.nvars();
    let partials = f.gradient();
    for h in 1..=bound {
        let side = (2 * h + 1) as u64;
        let total = side.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push((c % side) as i64 - h);
                c /= side;
            }
            v.reverse();
            if v.iter().map(|x| x.abs()).max() != Some(h) {
                continue;
            }
            // one representative per projective point
            if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                continue;
            }
            let pt: Vec<Scalar> = v.iter().map(|&x| Scalar::from(x)).collect();
            if is_singular_at(f, &partials, &pt)? {
                return Ok(Some(ProjPoint::new(pt)?));
            }
        }
    }
    Ok(None)
}

fn prime_field_witness(f: &Form, p: u64) -> Result<Option<ProjPoint>, FormError> {
    let n = f.nvars();
    let count: u64 = (0..n as u32).map(|k| p.saturating_pow(k)).sum();
    if count > ENUMERATION_LIMIT {
        return integer_witness(&f.clone(), 2).map(|w| w.and_then(|w| reduce_point(&w, p)));
    }
    let partials = f.gradient();
    // points (0,..,0,1,*,..,*)
    for lead in 0..n {
        let free = n - lead - 1;
        let total = p.pow(free as u32);
        for code in 0..total {
            let mut c = code;
            let mut pt = vec![Scalar::prime(0, p)?; n];
            pt[lead] = Scalar::prime(1, p)?;
            for k in (lead + 1..n).rev() {
                pt[k] = Scalar::prime((c % p) as i64, p)?;
                c /= p;
            }
            if is_singular_at(f, &partials, &pt)? {
                return Ok(Some(ProjPoint::new(pt)?));
            }
        }
    }
    Ok(None)
}

fn reduce_point(w: &ProjPoint, p: u64) -> Option<ProjPoint> {
    let coords: Option<Vec<Scalar>> = w.coords().iter().map(|c| c.reduce_mod(p).ok()).collect();
    ProjPoint::new(coords?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_examples() {
        let q = Form::parse(5, "x0^2 + x1^2 + x2^2 + x3^2 + x4^2").unwrap();
        assert!(is_smooth_hypersurface(&q, &[5, 7]).unwrap().is_smooth());
        let sing = Form::parse(5, "x0^2*x1").unwrap();
        match is_smooth_hypersurface(&sing, &[5, 7]).unwrap() {
            SmoothnessVerdict::SingularCertified { witness } => {
                assert!(witness.coords()[0].is_zero());
                for g in sing.gradient() {
                    assert!(witness.lies_on(&g).unwrap());
                }
            }
            other => panic!("expected a singular certificate, got {other:?}"),
        }
        assert!(matches!(
            is_smooth_hypersurface(&q, &[3]),
            Err(FormError::Field(_))
        ));
    }

    #[test]
    fn prime_field_forms_use_their_own_field() {
        let f = Form::parse(3, "x0^2 + x1^2 + x2^2").unwrap().reduce_mod(13).unwrap();
        assert_eq!(
            is_smooth_hypersurface(&f, &[]).unwrap(),
            SmoothnessVerdict::SmoothCertified { primes: vec![13] }
        );
        let g = Form::parse(3, "x0^2 - x1^2").unwrap().reduce_mod(13).unwrap();
        assert!(matches!(
            is_smooth_hypersurface(&g, &[]).unwrap(),
            SmoothnessVerdict::SingularCertified { .. }
        ));
    }
}
