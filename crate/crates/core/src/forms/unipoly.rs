use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactfield::{FieldKind, Scalar};

/// Univariate polynomial, coefficients from the constant term upward.
#[derive(Clone, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    /// `t - r`
    pub fn linear_root(r: &Scalar) -> Self {
        UniPoly::new(vec![-r, r.like(1)])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn field(&self) -> FieldKind {
        let mut k = FieldKind::Rationals;
        for c in &self.coeffs {
            k = k.join(&c.field()).expect("coefficients from one field");
        }
        k
    }

    pub fn characteristic(&self) -> u64 {
        self.field().base().characteristic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Scalar::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.scale(&Scalar::from(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn monic(&self) -> UniPoly {
        match self.lc() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division; panics when dividing by zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lc().expect("nonzero").inv().expect("nonzero");
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (UniPoly::zero(), UniPoly::zero());
        };
        if nd < dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![Scalar::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from(i as i64))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::constant(Scalar::one()).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Yun's square-free decomposition: pairs `(g_i, i)` with `self = lc * prod g_i^i`,
    /// the `g_i` monic, square-free and pairwise coprime. Valid in characteristic 0
    /// and whenever the degree is below the characteristic.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let p = self.characteristic();
        assert!(
            p == 0 || (deg as u64) < p,
            "square-free decomposition needs degree below the characteristic"
        );
        if deg == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_root_count(&self) -> usize {
        self.squarefree_decomposition()
            .iter()
            .map(|(g, _)| g.degree().unwrap_or(0))
            .sum()
    }

    /// Distinct roots lying in F_p, sorted by residue. Empty for other fields.
    pub fn roots_in_prime_field(&self) -> Vec<Scalar> {
        let FieldKind::Prime(p) = self.field() else {
            return Vec::new();
        };
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let x = UniPoly::new(vec![Scalar::prime(0, p).unwrap(), Scalar::prime(1, p).unwrap()]);
        let xp = x.powmod(p, &f);
        let g = f.gcd(&xp.sub(&x));
        let mut roots = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
        split_linear_factors(&g, p, &mut rng, &mut roots);
        roots.sort_by_key(|r| r.prime_residue().unwrap_or(0));
        roots
    }
}

fn split_linear_factors(g: &UniPoly, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let c = g.monic();
            out.push(-&c.coeffs[0]);
        }
        Some(_) => loop {
            // equal-degree splitting with a random shift
            let a = Scalar::prime(rng.gen_range(0..p as i64), p).unwrap();
            let shift = UniPoly::new(vec![a, Scalar::prime(1, p).unwrap()]);
            let h = shift
                .powmod((p - 1) / 2, g)
                .sub(&UniPoly::constant(Scalar::prime(1, p).unwrap()));
            let d = g.gcd(&h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                let other = g.divrem(&d).0;
                split_linear_factors(&d, p, rng, out);
                split_linear_factors(&other, p, rng, out);
                return;
            }
        },
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
