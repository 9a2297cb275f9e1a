use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::{det_mod_p, scalar_residue, Matrix};
use super::monomial::{basis, rank};
use super::{Form, FormError};
use crate::exactfield::{FieldKind, Scalar};

/// Resultant of `f` and `g` with respect to `var`, as a form in the remaining
/// variables (in their original order). Both forms are treated as binary in
/// `var` of formal degree equal to their total degree, so the result is the
/// homogeneous resultant: it has degree `deg f * deg g` and vanishes exactly
/// where the two have a common root, possibly at `var`-infinity.
///
/// Sign convention: `Res(f, g) = lc(f)^{deg g} * prod g(roots of f)`.
pub fn sylvester_resultant(f: &Form, g: &Form, var: usize) -> Result<Form, FormError> {
    if f.nvars() != g.nvars() {
        return Err(FormError::DimensionMismatch { expected: f.nvars(), got: g.nvars() });
    }
    if f.is_zero() || g.is_zero() {
        return Err(FormError::ZeroForm);
    }
    if var >= f.nvars() {
        return Err(FormError::InvalidInput(format!("no variable x{var}")));
    }
    let a = f.degree() as usize;
    let b = g.degree() as usize;
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    let rest = f.nvars() - 1;
    let n = a + b;
    if n == 0 {
        return Ok(Form::one(rest));
    }
    let mut m: Vec<Vec<Option<Form>>> = vec![vec![None; n]; n];
    for i in 0..b {
        for k in 0..=a {
            // column j holds the coefficient of var^{n-1-j}
            let c = &fc[a - k];
            if !c.is_zero() {
                m[i][i + k] = Some(c.clone());
            }
        }
    }
    for i in 0..a {
        for k in 0..=b {
            let c = &gc[b - k];
            if !c.is_zero() {
                m[b + i][i + k] = Some(c.clone());
            }
        }
    }
    let det = bareiss_forms(m);
    Ok(det.unwrap_or_else(|| Form::zero(rest, (a * b) as u32)))
}

/// Fraction-free determinant of a matrix of forms whose minors are homogeneous.
/// `None` entries are zero.
fn bareiss_forms(mut m: Vec<Vec<Option<Form>>>) -> Option<Form> {
    let n = m.len();
    let mut negate = false;
    let mut prev: Option<Form> = None;
    for k in 0..n {
        if m[k][k].is_none() {
            let p = (k + 1..n).find(|&i| m[i][k].is_some())?;
            m.swap(k, p);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        let pivot = m[k][k].clone().expect("pivot chosen");
        for i in k + 1..n {
            for j in k + 1..n {
                let left = m[i][j].as_ref().map(|x| x.mul(&pivot));
                let right = match (&m[i][k], &m[k][j]) {
                    (Some(a), Some(b)) => Some(a.mul(b)),
                    _ => None,
                };
                let num = match (left, right) {
                    (None, None) => None,
                    (Some(l), None) => Some(l),
                    (None, Some(r)) => Some(r.neg()),
                    (Some(l), Some(r)) => Some(l.sub(&r)),
                };
                m[i][j] = match num {
                    Some(x) if !x.is_zero() => Some(match &prev {
                        None => x,
                        Some(d) => x.exact_divide(d).expect("Bareiss division is exact"),
                    }),
                    _ => None,
                };
            }
            m[i][k] = None;
        }
        prev = Some(pivot);
    }
    let d = m[n - 1][n - 1].clone()?;
    Some(if negate { d.neg() } else { d })
}

/// Outcome of one Macaulay-matrix attempt.
enum Attempt {
    Value(Scalar),
    MinorVanished,
}

/// Macaulay resultant of `n` forms in `n` variables, as `det M / det M'`.
/// Zero exactly when the forms have a common nonzero solution over the
/// algebraic closure.
pub fn macaulay_resultant(forms: &[Form]) -> Result<Scalar, FormError> {
    let n = forms.len();
    if n == 0 {
        return Err(FormError::InvalidInput("no forms".into()));
    }
    if let Some(f) = forms.iter().find(|f| f.nvars() != n) {
        return Err(FormError::DimensionMismatch { expected: n, got: f.nvars() });
    }
    if forms.iter().any(|f| f.degree() == 0) {
        return Err(FormError::InvalidInput("forms must have positive degree".into()));
    }
    let field = forms
        .iter()
        .try_fold(FieldKind::Rationals, |k, f| f.field().and_then(|g| Ok(k.join(&g)?)))?;
    let zero = match &field {
        FieldKind::Prime(p) => Scalar::prime(0, *p).expect("admitted prime"),
        _ => Scalar::zero(),
    };
    if forms.iter().any(Form::is_zero) {
        // n-1 forms in n variables always share a projective zero
        return Ok(zero);
    }
    if let Attempt::Value(v) = macaulay_attempt(forms, &field) {
        return Ok(v);
    }
    // determinant-one coordinate changes leave the resultant unchanged
    let mut rng = ChaCha8Rng::seed_from_u64(0x4d41_4341);
    for _ in 0..MACAULAY_RETRIES {
        let a = random_unimodular(n, &mut rng, &field);
        let moved: Vec<Form> = forms
            .iter()
            .map(|f| f.substitute_linear_unchecked(&a))
            .collect::<Result<_, _>>()?;
        if let Attempt::Value(v) = macaulay_attempt(&moved, &field) {
            return Ok(v);
        }
    }
    Err(FormError::Inconclusive("Macaulay minor vanished after every coordinate change".into()))
}

const MACAULAY_RETRIES: usize = 16;

/// Product of a unit lower and a unit upper triangular matrix with small entries.
pub(crate) fn random_unimodular(n: usize, rng: &mut ChaCha8Rng, field: &FieldKind) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    // small entries keep rational coefficients short; over F_p use the whole field
    let span = match field {
        FieldKind::Prime(p) => (*p).min(1 << 20) as i64,
        _ => 4,
    };
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, Scalar::from(rng.gen_range(-span + 1..span)));
            u.set(j, i, Scalar::from(rng.gen_range(-span + 1..span)));
        }
    }
    let m = l.mul(&u);
    match field {
        FieldKind::Prime(p) => Matrix::from_rows(
            (0..n)
                .map(|i| m.row(i).iter().map(|x| x.reduce_mod(*p).expect("small ints")).collect())
                .collect(),
        ),
        _ => m,
    }
}

fn macaulay_attempt(forms: &[Form], field: &FieldKind) -> Attempt {
    let n = forms.len();
    let degs: Vec<u32> = forms.iter().map(Form::degree).collect();
    let big_d: u32 = degs.iter().map(|d| d - 1).sum::<u32>() + 1;
    let b = basis(n, big_d);
    let size = b.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(size);
    let mut non_reduced: Vec<usize> = Vec::new();
    for e in b.iter() {
        let divisible: Vec<usize> = (0..n).filter(|&i| e[i] >= degs[i]).collect();
        let i = divisible[0];
        if divisible.len() >= 2 {
            non_reduced.push(rows.len());
        }
        let mut shift = e.to_vec();
        shift[i] -= degs[i];
        let mut row = vec![Scalar::zero(); size];
        let bf = basis(n, degs[i]);
        let mut ex = vec![0u32; n];
        for (k, c) in forms[i].coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (v, x) in ex.iter_mut().enumerate() {
                *x = bf.exps(k)[v] + shift[v];
            }
            row[rank(&ex)] = c.clone();
        }
        rows.push(row);
    }
    let minor_rows: Vec<Vec<Scalar>> = non_reduced
        .iter()
        .map(|&r| non_reduced.iter().map(|&c| rows[r][c].clone()).collect())
        .collect();
    match field {
        FieldKind::Prime(p) => {
            let to_u64 = |m: &[Vec<Scalar>]| -> Vec<Vec<u64>> {
                m.iter()
                    .map(|r| r.iter().map(|x| scalar_residue(x, *p).expect("F_p entry")).collect())
                    .collect()
            };
            let dm = det_mod_p(to_u64(&minor_rows), *p);
            if dm == 0 {
                return Attempt::MinorVanished;
            }
            let dfull = det_mod_p(to_u64(&rows), *p);
            let v = Scalar::prime(dfull as i64, *p).unwrap() / Scalar::prime(dm as i64, *p).unwrap();
            Attempt::Value(v)
        }
        _ => {
            let dm = Matrix::from_rows(minor_rows).det();
            if dm.is_zero() {
                return Attempt::MinorVanished;
            }
            let dfull = Matrix::from_rows(rows).det();
            Attempt::Value(&dfull / &dm)
        }
    }
}
