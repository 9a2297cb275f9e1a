use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::linalg::Matrix;
use super::monomial::{basis, monomial_count, rank};
use super::FormError;
use crate::exactfield::{FieldKind, Rational, Scalar};

/// Homogeneous polynomial of a fixed degree in `nvars` variables, stored densely
/// over the graded-lex monomial basis.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FormRepr", into = "FormRepr")]
pub struct Form {
    nvars: usize,
    deg: u32,
    coeffs: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    vars: usize,
    deg: u32,
    coeffs: Vec<Scalar>,
}

impl TryFrom<FormRepr> for Form {
    type Error = FormError;
    fn try_from(r: FormRepr) -> Result<Self, FormError> {
        Form::new(r.vars, r.deg, r.coeffs)
    }
}

impl From<Form> for FormRepr {
    fn from(f: Form) -> Self {
        FormRepr { vars: f.nvars, deg: f.deg, coeffs: f.coeffs }
    }
}

impl Form {
    pub fn new(nvars: usize, deg: u32, coeffs: Vec<Scalar>) -> Result<Self, FormError> {
        let want = monomial_count(nvars, deg);
        if coeffs.len() != want {
            return Err(FormError::DimensionMismatch { expected: want, got: coeffs.len() });
        }
        Ok(Form { nvars, deg, coeffs })
    }

    pub fn zero(nvars: usize, deg: u32) -> Self {
        Form { nvars, deg, coeffs: vec![Scalar::zero(); monomial_count(nvars, deg)] }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut f = Form::zero(nvars, 0);
        if !f.coeffs.is_empty() {
            f.coeffs[0] = c;
        }
        f
    }

    pub fn one(nvars: usize) -> Self {
        Form::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Form::monomial(&e, Scalar::one())
    }

    pub fn monomial(exps: &[u32], c: Scalar) -> Self {
        let d = exps.iter().sum();
        let mut f = Form::zero(exps.len(), d);
        f.coeffs[rank(exps)] = c;
        f
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        Form { nvars: coeffs.len(), deg: 1, coeffs: coeffs.to_vec() }
    }

    /// Parses an integer/rational polynomial such as `"4*x2*x3 - x4^2"`.
    pub fn parse(nvars: usize, text: &str) -> Result<Self, FormError> {
        parse_form(nvars, text)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, exps: &[u32]) -> &Scalar {
        assert_eq!(exps.len(), self.nvars);
        assert_eq!(exps.iter().sum::<u32>(), self.deg);
        &self.coeffs[rank(exps)]
    }

    pub fn set_coeff(&mut self, exps: &[u32], c: Scalar) {
        assert_eq!(exps.iter().sum::<u32>(), self.deg);
        self.coeffs[rank(exps)] = c;
    }

    /// Nonzero terms as `(exponents, coefficient)` in basis order.
    pub fn terms(&self) -> Vec<(Vec<u32>, Scalar)> {
        let b = basis(self.nvars, self.deg);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (b.exps(i).to_vec(), c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// The smallest field containing every coefficient.
    pub fn field(&self) -> Result<FieldKind, FormError> {
        let mut k = FieldKind::Rationals;
        for c in &self.coeffs {
            k = k.join(&c.field())?;
        }
        Ok(k)
    }

    fn check_shape(&self, o: &Form) {
        assert_eq!(self.nvars, o.nvars, "forms in different variable sets");
    }

    pub fn add(&self, o: &Form) -> Form {
        self.check_shape(o);
        if self.deg != o.deg {
            if self.is_zero() {
                return o.clone();
            }
            if o.is_zero() {
                return self.clone();
            }
            panic!("adding forms of degrees {} and {}", self.deg, o.deg);
        }
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Form { nvars: self.nvars, deg: self.deg, coeffs }
    }

    pub fn sub(&self, o: &Form) -> Form {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Form {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        self.map_coeffs(|c| c * s)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Form {
        Form { nvars: self.nvars, deg: self.deg, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn mul(&self, o: &Form) -> Form {
        self.check_shape(o);
        let deg = self.deg + o.deg;
        let mut out = Form::zero(self.nvars, deg);
        let ba = basis(self.nvars, self.deg);
        let bb = basis(o.nvars, o.deg);
        let mut e = vec![0u32; self.nvars];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = ba.exps(i);
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let eb = bb.exps(j);
                for k in 0..self.nvars {
                    e[k] = ea[k] + eb[k];
                }
                let idx = rank(&e);
                out.coeffs[idx] = &out.coeffs[idx] + &(a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Form {
        let mut acc = Form::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, FormError> {
        if point.len() != self.nvars {
            return Err(FormError::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        let b = basis(self.nvars, self.deg);
        // powers table: pows[v][e] = point[v]^e
        let pows: Vec<Vec<Scalar>> = point
            .iter()
            .map(|x| {
                let mut row = Vec::with_capacity(self.deg as usize + 1);
                row.push(Scalar::one());
                for e in 1..=self.deg as usize {
                    let next = &row[e - 1] * x;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = Scalar::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for (v, &e) in b.exps(i).iter().enumerate() {
                if e > 0 {
                    t = &t * &pows[v][e as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `f(g_0, ..., g_{n-1})` for forms `g_i` of a common degree in a common variable set.
    pub fn substitute(&self, subs: &[Form]) -> Result<Form, FormError> {
        if subs.len() != self.nvars {
            return Err(FormError::DimensionMismatch { expected: self.nvars, got: subs.len() });
        }
        let Some(first) = subs.first() else {
            return Ok(self.clone());
        };
        let m = first.nvars;
        let k = subs.iter().filter(|g| !g.is_zero()).map(|g| g.deg).max().unwrap_or(first.deg);
        for g in subs {
            if g.nvars != m || (g.deg != k && !g.is_zero()) {
                return Err(FormError::InvalidInput(
                    "substituted forms must share variables and degree".into(),
                ));
            }
        }
        let b = basis(self.nvars, self.deg);
        let mut pows: Vec<Vec<Form>> = Vec::with_capacity(self.nvars);
        for g in subs {
            let g = if g.deg == k { g.clone() } else { Form::zero(m, k) };
            let mut row = vec![Form::one(m)];
            for e in 1..=self.deg as usize {
                let next = row[e - 1].mul(&g);
                row.push(next);
            }
            pows.push(row);
        }
        let mut acc = Form::zero(m, self.deg * k);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = Form::constant(m, c.clone());
            for (v, &e) in b.exps(i).iter().enumerate() {
                if e > 0 {
                    t = t.mul(&pows[v][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// `(f o M)(x) = f(M x)` for an invertible square matrix `M`.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Form, FormError> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(FormError::DimensionMismatch { expected: self.nvars, got: m.rows() });
        }
        if m.det().is_zero() {
            return Err(FormError::SingularMatrix);
        }
        self.substitute_linear_unchecked(m)
    }

    /// Linear substitution by an arbitrary `nvars x m` matrix: `x_i -> sum_j M_ij y_j`.
    pub fn substitute_linear_unchecked(&self, m: &Matrix) -> Result<Form, FormError> {
        let subs: Vec<Form> = (0..m.rows()).map(|i| Form::linear(m.row(i))).collect();
        self.substitute(&subs)
    }

    pub fn partial(&self, var: usize) -> Form {
        assert!(var < self.nvars, "variable index out of range");
        if self.deg == 0 {
            return Form::zero(self.nvars, 0);
        }
        let mut out = Form::zero(self.nvars, self.deg - 1);
        let b = basis(self.nvars, self.deg);
        let mut e = vec![0u32; self.nvars];
        for (i, c) in self.coeffs.iter().enumerate() {
            let ex = b.exps(i);
            if c.is_zero() || ex[var] == 0 {
                continue;
            }
            e.copy_from_slice(ex);
            e[var] -= 1;
            out.coeffs[rank(&e)] = c * &Scalar::from(ex[var] as i64);
        }
        out
    }

    pub fn gradient(&self) -> Vec<Form> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    fn leading(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact quotient `f / g`, or `NotDivisible`.
    pub fn exact_divide(&self, g: &Form) -> Result<Form, FormError> {
        self.check_shape(g);
        let Some(lg) = g.leading() else {
            return Err(FormError::ZeroForm);
        };
        if self.is_zero() {
            return Ok(Form::zero(self.nvars, self.deg.saturating_sub(g.deg)));
        }
        if g.deg > self.deg {
            return Err(FormError::NotDivisible);
        }
        let bg = basis(g.nvars, g.deg);
        let br = basis(self.nvars, self.deg);
        let eg = bg.exps(lg).to_vec();
        let lc_inv = g.coeffs[lg].inv()?;
        let mut q = Form::zero(self.nvars, self.deg - g.deg);
        let mut r = self.clone();
        while let Some(lr) = r.leading() {
            let er = br.exps(lr);
            if er.iter().zip(&eg).any(|(a, b)| a < b) {
                return Err(FormError::NotDivisible);
            }
            let eq: Vec<u32> = er.iter().zip(&eg).map(|(a, b)| a - b).collect();
            let c = &r.coeffs[lr] * &lc_inv;
            let t = Form::monomial(&eq, c.clone());
            q.coeffs[rank(&eq)] = &q.coeffs[rank(&eq)] + &c;
            r = r.sub(&t.mul(g));
        }
        Ok(q)
    }

    /// Re-indexes variables: variable `i` of `self` becomes variable `map[i]` of an
    /// `nvars`-variable ring.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Form {
        assert_eq!(map.len(), self.nvars);
        let mut out = Form::zero(nvars, self.deg);
        let b = basis(self.nvars, self.deg);
        let mut e = vec![0u32; nvars];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            e.iter_mut().for_each(|x| *x = 0);
            for (v, &ex) in b.exps(i).iter().enumerate() {
                e[map[v]] += ex;
            }
            let idx = rank(&e);
            out.coeffs[idx] = &out.coeffs[idx] + c;
        }
        out
    }

    /// Restriction to the coordinate subspace where the listed variables vanish,
    /// written in the remaining variables (in order).
    pub fn restrict_vanishing(&self, vanishing: &[usize]) -> Form {
        let keep: Vec<usize> = (0..self.nvars).filter(|v| !vanishing.contains(v)).collect();
        let m = keep.len();
        let mut out = Form::zero(m, self.deg);
        let b = basis(self.nvars, self.deg);
        let mut e = vec![0u32; m];
        for (i, c) in self.coeffs.iter().enumerate() {
            let ex = b.exps(i);
            if c.is_zero() || vanishing.iter().any(|&v| ex[v] > 0) {
                continue;
            }
            for (k, &v) in keep.iter().enumerate() {
                e[k] = ex[v];
            }
            out.coeffs[rank(&e)] = c.clone();
        }
        if m == 0 {
            let c = if self.deg == 0 { self.coeffs[0].clone() } else { Scalar::zero() };
            return Form::constant(0, c);
        }
        out
    }

    /// Coefficient forms of `x_var^k`, `k = 0..=deg`, each a form in the other variables.
    pub fn coefficients_in(&self, var: usize) -> Vec<Form> {
        let rest = self.nvars - 1;
        let mut out: Vec<Form> = (0..=self.deg).map(|k| Form::zero(rest, self.deg - k)).collect();
        let b = basis(self.nvars, self.deg);
        let mut e = vec![0u32; rest];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ex = b.exps(i);
            let k = ex[var] as usize;
            let mut j = 0;
            for (v, &x) in ex.iter().enumerate() {
                if v != var {
                    e[j] = x;
                    j += 1;
                }
            }
            let idx = if rest == 0 { 0 } else { rank(&e) };
            out[k].coeffs[idx] = c.clone();
        }
        out
    }

    pub fn reduce_mod(&self, p: u64) -> Result<Form, FormError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.reduce_mod(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Form { nvars: self.nvars, deg: self.deg, coeffs })
    }

    pub fn coerce(&self, k: &FieldKind) -> Result<Form, FormError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.coerce(k))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Form { nvars: self.nvars, deg: self.deg, coeffs })
    }

    /// Multiplies through by a common denominator and content so that a rational
    /// form has coprime integer coefficients; other forms are made monic.
    pub fn normalized(&self) -> Form {
        let Some(l) = self.leading() else {
            return self.clone();
        };
        if let Ok(FieldKind::Rationals) = self.field() {
            use num_bigint::BigInt;
            use num_integer::Integer;
            let mut den = BigInt::from(1);
            let mut num = BigInt::from(0);
            for c in &self.coeffs {
                let r = c.as_rational().expect("rational form");
                den = den.lcm(r.denom());
                num = num.gcd(r.numer());
            }
            let mut s = Rational::new(den, num).expect("nonzero content");
            if self.coeffs[l].as_rational().expect("rational").is_negative() {
                s = Rational::from(-1).mul(&s);
            }
            return self.scale(&Scalar::Rational(s));
        }
        let inv = self.coeffs[l].inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, o: &Form) -> Form {
        Form::add(self, o)
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, o: &Form) -> Form {
        Form::sub(self, o)
    }
}

impl Mul for &Form {
    type Output = Form;
    fn mul(self, o: &Form) -> Form {
        Form::mul(self, o)
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form::neg(self)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = basis(self.nvars, self.deg);
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mono = String::new();
            for (v, &e) in b.exps(i).iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&format!("x{v}"));
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !c.is_quad() => (true, rest.to_string()),
                _ => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (mono.is_empty(), body == "1") {
                (true, _) => write!(f, "{body}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{body}*{mono}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}; deg {}]({})", self.nvars, self.deg, self)
    }
}

fn parse_form(nvars: usize, text: &str) -> Result<Form, FormError> {
    let bad = |msg: &str| FormError::InvalidInput(format!("{msg} in {text:?}"));
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(bad("empty polynomial"));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && i == 0 {
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    terms.push((neg, cur));
    let mut acc: Option<Form> = None;
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; nvars];
        for factor in term.split('*') {
            if let Some(v) = factor.strip_prefix('x') {
                let (idx, e) = match v.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (v, 1),
                };
                let idx: usize = idx.parse().map_err(|_| bad("bad variable"))?;
                if idx >= nvars {
                    return Err(bad("variable out of range"));
                }
                exps[idx] += e;
            } else {
                let r: Rational = factor.parse().map_err(|_| bad("bad coefficient"))?;
                coeff = coeff.mul(&r);
            }
        }
        if neg {
            coeff = coeff.neg();
        }
        let t = Form::monomial(&exps, Scalar::Rational(coeff));
        acc = Some(match acc {
            None => t,
            Some(a) => {
                if a.deg != t.deg {
                    return Err(bad("inhomogeneous polynomial"));
                }
                a.add(&t)
            }
        });
    }
    Ok(acc.expect("at least one term"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5(s: &str) -> Form {
        Form::parse(5, s).unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        let f = f5("4*x2*x3 - x4^2");
        assert_eq!(f.to_string(), "4*x2*x3 - x4^2");
        assert_eq!(Form::parse(5, &f.to_string()).unwrap(), f);
        assert!(Form::parse(5, "x0 + x1^2").is_err());
        assert!(Form::parse(2, "x3").is_err());
    }

    #[test]
    fn evaluation_examples() {
        let i = crate::exactfield::quad_sqrt(&Scalar::from(-1)).unwrap();
        let f = Form::parse(2, "x0^2 + x1^2").unwrap();
        assert!(f.evaluate(&[Scalar::one(), i]).unwrap().is_zero());
        let pt = |v: &[i64]| v.iter().map(|&x| Scalar::from(x)).collect::<Vec<_>>();
        assert!(f5("x2^3 + x3^3 + x4^3").evaluate(&pt(&[0, 0, 1, -1, 0])).unwrap().is_zero());
        assert!(f5("4*x2*x3 - x4^2").evaluate(&pt(&[0, 0, 1, 1, 2])).unwrap().is_zero());
        assert!(matches!(
            f.evaluate(&pt(&[1, 2, 3])),
            Err(FormError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn linear_substitution_examples() {
        let f = f5("x0^2 + 3*x1*x4 - x2^2");
        assert_eq!(f.substitute_linear(&Matrix::identity(5)).unwrap(), f);
        let mut swap = Matrix::zeros(5, 5);
        for (i, j) in [(0, 1), (1, 0), (2, 2), (3, 3), (4, 4)] {
            swap.set(i, j, Scalar::one());
        }
        assert_eq!(f5("x0^2").substitute_linear(&swap).unwrap(), f5("x1^2"));
        let tau = Matrix::diagonal(&[-1, -1, 1, 1, 1].map(Scalar::from));
        assert_eq!(f5("x0*x1").substitute_linear(&tau).unwrap(), f5("x0*x1"));
        assert_eq!(
            f5("x0^2").substitute_linear(&Matrix::zeros(5, 5)),
            Err(FormError::SingularMatrix)
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(f5("x0^3").partial(0), f5("3*x0^2"));
        assert!(f5("x2^3 + x3^3 + x4^3").partial(0).is_zero());
        let f = f5("4*x2*x3 - x4^2");
        let mut euler = Form::zero(5, 2);
        for i in 0..5 {
            euler = euler.add(&Form::var(5, i).mul(&f.partial(i)));
        }
        assert_eq!(euler, f.scale(&Scalar::from(2)));
    }

    #[test]
    fn division_examples() {
        let g = f5("4*x2*x3 - x4^2");
        let h = f5("x2^3 + x3^3 + x4^3");
        assert_eq!(g.mul(&h).exact_divide(&g).unwrap(), h);
        assert_eq!(g.exact_divide(&g).unwrap(), Form::one(5));
        assert_eq!(f5("x2^5").exact_divide(&f5("x3")), Err(FormError::NotDivisible));
        assert_eq!(g.exact_divide(&Form::zero(5, 1)), Err(FormError::ZeroForm));
    }

    #[test]
    fn json_shape() {
        let f = Form::parse(2, "x0^2 - 1/2*x1^2").unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"vars":2,"deg":2,"coeffs":["1","0","-1/2"]}"#);
        assert_eq!(serde_json::from_str::<Form>(&text).unwrap(), f);
        assert!(serde_json::from_str::<Form>(r#"{"vars":2,"deg":2,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn coefficient_split_and_restriction() {
        let f = f5("x2*x0^2 + x4*x0*x1 + x2^3");
        let parts = f.coefficients_in(0);
        assert_eq!(parts[2], Form::parse(4, "x1").unwrap());
        assert_eq!(parts[1], Form::parse(4, "x0*x3").unwrap());
        assert_eq!(parts[0], Form::parse(4, "x1^3").unwrap());
        assert_eq!(f.restrict_vanishing(&[0, 1]), Form::parse(3, "x0^3").unwrap());
        assert!(f.restrict_vanishing(&[2, 3, 4]).is_zero());
        let l = Form::parse(3, "x0 - x2").unwrap();
        assert_eq!(l.embed(5, &[2, 3, 4]), f5("x2 - x4"));
    }
}
