use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::prime::least_nonresidue;
use super::{check_admitted_prime, FieldError, PrimeFieldElem, QuadExtElem, Rational};

/// Prime subfield plus characteristic: the ground of every tower we build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

impl BaseField {
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::from(n),
            BaseField::Prime(p) => Scalar::Prime(PrimeFieldElem::from_i64_unchecked(n, *p)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => *p,
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// The smallest field containing a collection of scalars.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    Quadratic { base: BaseField, radicand: Scalar },
}

impl FieldKind {
    pub fn base(&self) -> BaseField {
        match self {
            FieldKind::Rationals => BaseField::Rationals,
            FieldKind::Prime(p) => BaseField::Prime(*p),
            FieldKind::Quadratic { base, .. } => *base,
        }
    }

    /// Compositum of two fields from the same tower.
    pub fn join(&self, other: &FieldKind) -> Result<FieldKind, FieldError> {
        use FieldKind::*;
        let mismatch = || FieldError::FieldMismatch(format!("{self} vs {other}"));
        match (self, other) {
            (Rationals, x) | (x, Rationals) => Ok(x.clone()),
            (Prime(p), Prime(q)) => {
                if p == q {
                    Ok(Prime(*p))
                } else {
                    Err(mismatch())
                }
            }
            (Prime(p), q @ Quadratic { base, .. }) | (q @ Quadratic { base, .. }, Prime(p)) => {
                match base {
                    BaseField::Rationals => match q {
                        Quadratic { radicand, .. } => Ok(Quadratic {
                            base: BaseField::Prime(*p),
                            radicand: radicand.reduce_mod(*p)?,
                        }),
                        _ => unreachable!(),
                    },
                    BaseField::Prime(bp) if bp == p => Ok(q.clone()),
                    _ => Err(mismatch()),
                }
            }
            (
                Quadratic { base: b1, radicand: d1 },
                Quadratic { base: b2, radicand: d2 },
            ) => {
                if b1 != b2 {
                    return Err(mismatch());
                }
                if d1 == d2 || (d2 / d1).is_square_in_base() {
                    Ok(self.clone())
                } else {
                    Err(mismatch())
                }
            }
        }
    }

    /// Label used in serialized point lists: `Q`, `Q(sqrt D)`, `Fp`, `Fp(sqrt D)`.
    pub fn label(&self) -> String {
        match self {
            FieldKind::Rationals => "Q".into(),
            FieldKind::Prime(_) => "Fp".into(),
            FieldKind::Quadratic { base: BaseField::Rationals, radicand } => {
                format!("Q(sqrt {radicand})")
            }
            FieldKind::Quadratic { base: BaseField::Prime(_), radicand } => {
                format!("Fp(sqrt {})", radicand.prime_residue().unwrap_or_default())
            }
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
            FieldKind::Quadratic { base, radicand } => match base {
                BaseField::Rationals => write!(f, "Q(sqrt {radicand})"),
                BaseField::Prime(p) => write!(
                    f,
                    "F{p}(sqrt {})",
                    radicand.prime_residue().unwrap_or_default()
                ),
            },
        }
    }
}

/// Coefficient of every form in the crate.
#[derive(Clone)]
pub enum Scalar {
    Rational(Rational),
    Prime(PrimeFieldElem),
    Quad(Box<QuadExtElem>),
}

/// `x mod p` as a ring homomorphism Z_(p) -> F_p.
pub fn reduce_mod_prime(x: &Rational, p: u64) -> Result<PrimeFieldElem, FieldError> {
    check_admitted_prime(p)?;
    x.residue_mod(p)
        .map(|r| PrimeFieldElem::from_residue(r, p))
        .ok_or(FieldError::BadPrime(p))
}

/// Square root of `d`, in the base field when `d` is a square there and in
/// `K(sqrt d)` otherwise. Radicands are normalized (square-free part over Q,
/// the least non-residue over F_p) so that all extensions built from one base
/// field are compatible.
pub fn quad_sqrt(d: &Scalar) -> Result<Scalar, FieldError> {
    if d.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    match d {
        Scalar::Rational(r) => {
            if let Some(s) = r.sqrt_exact() {
                return Ok(Scalar::Rational(s));
            }
            let (c, k) = r.square_decompose(10_000);
            Ok(Scalar::from(QuadExtElem::raw(
                Scalar::zero(),
                Scalar::Rational(c),
                Scalar::Rational(Rational::from_integer(k)),
            )))
        }
        Scalar::Prime(x) => {
            if let Some(s) = x.sqrt() {
                return Ok(Scalar::Prime(s));
            }
            let p = x.modulus();
            let n0 = PrimeFieldElem::from_residue(least_nonresidue(p), p);
            let s = x
                .mul(&n0.inv()?)
                .sqrt()
                .expect("ratio of two non-residues is a residue");
            Ok(Scalar::from(QuadExtElem::raw(
                Scalar::Prime(PrimeFieldElem::from_residue(0, p)),
                Scalar::Prime(s),
                Scalar::Prime(n0),
            )))
        }
        Scalar::Quad(q) => {
            // (u + v sqrt D)^2 = a + b sqrt D  <=>  u^2 + D v^2 = a, 2uv = b
            let norm = q.norm();
            let n = base_sqrt(&norm).ok_or(FieldError::TowerRejected)?;
            let two_inv = Scalar::from(2).inv()?;
            for sign in [Scalar::one(), -Scalar::one()] {
                let t = &(&q.a + &(&sign * &n)) * &two_inv;
                if t.is_zero() {
                    continue;
                }
                if let Some(u) = base_sqrt(&t) {
                    let v = &q.b / &(&u * &Scalar::from(2));
                    let cand = Scalar::from(QuadExtElem::raw(u, v, q.d.clone()));
                    if &(&cand * &cand) == d {
                        return Ok(cand);
                    }
                }
            }
            Err(FieldError::TowerRejected)
        }
    }
}

fn base_sqrt(x: &Scalar) -> Option<Scalar> {
    match x {
        Scalar::Rational(r) => r.sqrt_exact().map(Scalar::Rational),
        Scalar::Prime(p) => p.sqrt().map(Scalar::Prime),
        Scalar::Quad(_) => None,
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn rational(n: i64, d: i64) -> Result<Self, FieldError> {
        Rational::new(n, d).map(Scalar::Rational)
    }

    pub fn prime(n: i64, p: u64) -> Result<Self, FieldError> {
        PrimeFieldElem::new(n, p).map(Scalar::Prime)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime(x) => x.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r == &Rational::one(),
            Scalar::Prime(x) => x.residue() == 1,
            Scalar::Quad(_) => false,
        }
    }

    pub fn is_quad(&self) -> bool {
        matches!(self, Scalar::Quad(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn prime_residue(&self) -> Option<u64> {
        match self {
            Scalar::Prime(x) => Some(x.residue()),
            _ => None,
        }
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rationals,
            Scalar::Prime(x) => FieldKind::Prime(x.modulus()),
            Scalar::Quad(q) => FieldKind::Quadratic {
                base: match q.d.field() {
                    FieldKind::Prime(p) => BaseField::Prime(p),
                    _ => BaseField::Rationals,
                },
                radicand: q.d.clone(),
            },
        }
    }

    /// Square test inside the base field the scalar lives in.
    pub fn is_square_in_base(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_square(),
            Scalar::Prime(x) => x.is_square(),
            Scalar::Quad(_) => quad_sqrt(self).is_ok(),
        }
    }

    /// Image under the reduction map to F_p (componentwise on extension elements).
    pub fn reduce_mod(&self, p: u64) -> Result<Scalar, FieldError> {
        match self {
            Scalar::Rational(r) => reduce_mod_prime(r, p).map(Scalar::Prime),
            Scalar::Prime(x) => {
                if x.modulus() == p {
                    Ok(self.clone())
                } else {
                    Err(FieldError::FieldMismatch(format!("F{} into F{p}", x.modulus())))
                }
            }
            Scalar::Quad(q) => {
                let a = q.a.reduce_mod(p)?;
                let b = q.b.reduce_mod(p)?;
                let d = q.d.reduce_mod(p)?;
                if d.is_zero() {
                    return Err(FieldError::BadPrime(p));
                }
                // sqrt(d) may split mod p; re-express in the canonical extension
                let s = quad_sqrt(&d)?;
                Ok(&a + &(&b * &s))
            }
        }
    }

    /// Embeds `self` into `target`, which must contain the field of `self`.
    pub fn coerce(&self, target: &FieldKind) -> Result<Scalar, FieldError> {
        let joined = self.field().join(target)?;
        if &joined != target {
            return Err(FieldError::FieldMismatch(format!("{} into {target}", self.field())));
        }
        match target {
            FieldKind::Rationals => Ok(self.clone()),
            FieldKind::Prime(p) => self.reduce_mod(*p),
            FieldKind::Quadratic { base, .. } => match (base, self) {
                (BaseField::Prime(p), Scalar::Rational(_)) => self.reduce_mod(*p),
                _ => Ok(self.clone()),
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        match self {
            Scalar::Rational(r) => r.inv().map(Scalar::Rational),
            Scalar::Prime(x) => x.inv().map(Scalar::Prime),
            Scalar::Quad(q) => q.inv().map(Scalar::from),
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Galois conjugate for extension elements; identity on base scalars.
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Quad(q) => Scalar::from(q.conjugate()),
            _ => self.clone(),
        }
    }

    pub fn sqrt(&self) -> Result<Scalar, FieldError> {
        quad_sqrt(self)
    }

    /// A scalar equal to `n` inside the same field as `self`.
    pub fn like(&self, n: i64) -> Scalar {
        match self.field().base() {
            BaseField::Rationals => Scalar::from(n),
            b => b.from_i64(n),
        }
    }
}

fn lift(base: &Scalar, d: &Scalar) -> QuadExtElem {
    QuadExtElem::raw(base.clone(), base.like(0), d.clone())
}

/// Re-expresses `y` over the radicand of `x` when the two radicands differ by a square.
fn align(x: &QuadExtElem, y: &QuadExtElem) -> QuadExtElem {
    if x.d == y.d {
        return y.clone();
    }
    let ratio = &y.d / &x.d;
    let c = base_sqrt(&ratio).unwrap_or_else(|| {
        panic!("arithmetic between incompatible extensions sqrt({}) and sqrt({})", x.d, y.d)
    });
    QuadExtElem::raw(y.a.clone(), &y.b * &c, x.d.clone())
}

enum Pair<'a> {
    Q(&'a Rational, &'a Rational),
    P(PrimeFieldElem, PrimeFieldElem),
    E(QuadExtElem, QuadExtElem),
}

fn reduce_or_panic(r: &Rational, p: u64) -> PrimeFieldElem {
    r.residue_mod(p)
        .map(|res| PrimeFieldElem::from_residue(res, p))
        .unwrap_or_else(|| panic!("rational {r} has no image in F{p}"))
}

fn pair<'a>(a: &'a Scalar, b: &'a Scalar) -> Pair<'a> {
    use Scalar::*;
    match (a, b) {
        (Rational(x), Rational(y)) => Pair::Q(x, y),
        (Prime(x), Prime(y)) => Pair::P(*x, *y),
        (Rational(x), Prime(y)) => Pair::P(reduce_or_panic(x, y.modulus()), *y),
        (Prime(x), Rational(y)) => Pair::P(*x, reduce_or_panic(y, x.modulus())),
        (Quad(x), Quad(y)) => Pair::E((**x).clone(), align(x, y)),
        (Quad(x), other) => Pair::E((**x).clone(), lift(&other.coerce_base(&x.d), &x.d)),
        (other, Quad(y)) => Pair::E(lift(&other.coerce_base(&y.d), &y.d), (**y).clone()),
    }
}

impl Scalar {
    fn coerce_base(&self, like: &Scalar) -> Scalar {
        match (self, like) {
            (Scalar::Rational(r), Scalar::Prime(p)) => Scalar::Prime(reduce_or_panic(r, p.modulus())),
            _ => self.clone(),
        }
    }
}

impl From<QuadExtElem> for Scalar {
    fn from(q: QuadExtElem) -> Self {
        if q.b.is_zero() {
            q.a
        } else {
            Scalar::Quad(Box::new(q))
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Rational(Rational::from(n))
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<PrimeFieldElem> for Scalar {
    fn from(x: PrimeFieldElem) -> Self {
        Scalar::Prime(x)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &'a Scalar) -> Scalar {
        match pair(self, o) {
            Pair::Q(x, y) => Scalar::Rational(x.add(y)),
            Pair::P(x, y) => Scalar::Prime(x.add(&y)),
            Pair::E(x, y) => Scalar::from(x.add(&y)),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &'a Scalar) -> Scalar {
        match pair(self, o) {
            Pair::Q(x, y) => Scalar::Rational(x.sub(y)),
            Pair::P(x, y) => Scalar::Prime(x.sub(&y)),
            Pair::E(x, y) => Scalar::from(x.sub(&y)),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &'a Scalar) -> Scalar {
        match pair(self, o) {
            Pair::Q(x, y) => Scalar::Rational(x.mul(y)),
            Pair::P(x, y) => Scalar::Prime(x.mul(&y)),
            Pair::E(x, y) => Scalar::from(x.mul(&y)),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like integer division.
    fn div(self, o: &'a Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.neg()),
            Scalar::Prime(x) => Scalar::Prime(x.neg()),
            Scalar::Quad(q) => Scalar::Quad(Box::new(q.neg())),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &'a Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        use Scalar::*;
        match (self, o) {
            (Rational(x), Rational(y)) => x == y,
            (Prime(x), Prime(y)) => x == y,
            (Rational(x), Prime(y)) | (Prime(y), Rational(x)) => {
                x.residue_mod(y.modulus()) == Some(y.residue())
            }
            (Quad(_), Quad(_)) => {
                self.field().join(&o.field()).is_ok() && (self - o).is_zero()
            }
            // extension elements are normalized to have a nonzero sqrt part
            (Quad(q), _) | (_, Quad(q)) => q.b.is_zero() && {
                let base = if matches!(self, Quad(_)) { o } else { self };
                &q.a == base
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime(x) => write!(f, "{}", x.residue()),
            Scalar::Quad(q) => write!(f, "{q}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime(x) => write!(f, "{x:?}"),
            Scalar::Quad(q) => write!(f, "{q:?}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Str(String),
    Int(i64),
    Prime { r: u64, p: u64 },
    Quad { a: Box<ScalarRepr>, b: Box<ScalarRepr>, d: Box<ScalarRepr> },
}

impl ScalarRepr {
    fn from_scalar(s: &Scalar) -> Self {
        match s {
            Scalar::Rational(r) => ScalarRepr::Str(r.to_string()),
            Scalar::Prime(x) => ScalarRepr::Prime { r: x.residue(), p: x.modulus() },
            Scalar::Quad(q) => ScalarRepr::Quad {
                a: Box::new(Self::from_scalar(&q.a)),
                b: Box::new(Self::from_scalar(&q.b)),
                d: Box::new(Self::from_scalar(&q.d)),
            },
        }
    }

    fn into_scalar(self) -> Result<Scalar, FieldError> {
        match self {
            ScalarRepr::Str(s) => s.parse::<Rational>().map(Scalar::Rational),
            ScalarRepr::Int(n) => Ok(Scalar::from(n)),
            ScalarRepr::Prime { r, p } => {
                check_admitted_prime(p)?;
                if r >= p {
                    return Err(FieldError::Parse(format!("residue {r} out of range for p = {p}")));
                }
                Ok(Scalar::Prime(PrimeFieldElem::from_residue(r, p)))
            }
            ScalarRepr::Quad { a, b, d } => {
                let q = QuadExtElem::new(a.into_scalar()?, b.into_scalar()?, d.into_scalar()?)?;
                Ok(Scalar::from(q))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr::from_scalar(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        repr.into_scalar().map_err(serde::de::Error::custom)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::Rational(Rational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d).unwrap()
    }

    fn fp(n: i64, p: u64) -> Scalar {
        Scalar::prime(n, p).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(reduce_mod_prime(&half, 7).unwrap().residue(), 4);
        assert_eq!(reduce_mod_prime(&Rational::zero(), 11).unwrap().residue(), 0);
        let r = Rational::new(22, 7).unwrap();
        assert_eq!(reduce_mod_prime(&r, 7), Err(FieldError::BadPrime(7)));
        assert_eq!(reduce_mod_prime(&half, 3), Err(FieldError::BadPrime(3)));
        assert_eq!(reduce_mod_prime(&half, 2), Err(FieldError::BadPrime(2)));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(quad_sqrt(&Scalar::from(4)).unwrap(), Scalar::from(2));
        let i = quad_sqrt(&Scalar::from(-1)).unwrap();
        match &i {
            Scalar::Quad(e) => {
                assert!(e.real_part().is_zero());
                assert_eq!(e.sqrt_part(), &Scalar::one());
                assert_eq!(e.radicand(), &Scalar::from(-1));
            }
            other => panic!("expected an extension element, got {other:?}"),
        }
        // exhaustive search over F_7: 3^2 = 4^2 = 2
        let roots: Vec<i64> = (0..7).filter(|r| (r * r) % 7 == 2).collect();
        assert_eq!(roots, vec![3, 4]);
        let s = quad_sqrt(&fp(2, 7)).unwrap();
        assert!(roots.contains(&(s.prime_residue().unwrap() as i64)));
        assert_eq!(quad_sqrt(&Scalar::zero()), Err(FieldError::ZeroInput));
    }

    #[test]
    fn extension_arithmetic() {
        let i = quad_sqrt(&Scalar::from(-1)).unwrap();
        assert_eq!(&i * &i, Scalar::from(-1));
        let z = &Scalar::from(3) + &(&i * &Scalar::from(4));
        let zi = z.inv().unwrap();
        assert_eq!(&z * &zi, Scalar::one());
        // sqrt(-4) lands in the same extension as sqrt(-1)
        let j = quad_sqrt(&Scalar::from(-4)).unwrap();
        assert_eq!(&j - &(&i * &Scalar::from(2)), Scalar::zero());
        // sqrt(-9/8) = (3/4) sqrt(-2)
        let k = quad_sqrt(&q(-9, 8)).unwrap();
        assert_eq!(&k * &k, q(-9, 8));
    }

    #[test]
    fn sqrt_inside_extension() {
        let i = quad_sqrt(&Scalar::from(-1)).unwrap();
        // (1 + i)^2 = 2i
        let two_i = &Scalar::from(2) * &i;
        let r = quad_sqrt(&two_i).unwrap();
        assert_eq!(&r * &r, two_i);
        // i itself has no square root in Q(i)
        assert_eq!(quad_sqrt(&i), Err(FieldError::TowerRejected));
    }

    #[test]
    fn prime_extension_radicand_is_canonical() {
        let p = 13;
        let n0 = least_nonresidue(p) as i64;
        for a in 1..13 {
            let s = quad_sqrt(&fp(a, p)).unwrap();
            assert_eq!(&s * &s, fp(a, p));
            if let Scalar::Quad(e) = &s {
                assert_eq!(e.radicand(), &fp(n0, p));
            }
        }
    }

    #[test]
    fn mixed_coercion() {
        assert_eq!(&q(1, 2) + &fp(0, 7), fp(4, 7));
        assert_eq!(q(1, 2), fp(4, 7));
        assert_ne!(q(1, 3), fp(4, 7));
    }

    #[test]
    fn towers_rejected() {
        let i = quad_sqrt(&Scalar::from(-1)).unwrap();
        assert_eq!(
            QuadExtElem::new(i.clone(), Scalar::one(), Scalar::from(2)).err(),
            Some(FieldError::TowerRejected)
        );
        assert!(matches!(
            QuadExtElem::new(Scalar::one(), Scalar::one(), Scalar::from(4)),
            Err(FieldError::SquareRadicand(_))
        ));
    }

    #[test]
    fn serde_shapes() {
        assert_eq!(serde_json::to_string(&q(3, 4)).unwrap(), "\"3/4\"");
        assert_eq!(serde_json::to_string(&q(-5, 1)).unwrap(), "\"-5\"");
        assert_eq!(serde_json::to_string(&fp(4, 7)).unwrap(), r#"{"r":4,"p":7}"#);
        let back: Scalar = serde_json::from_str(r#"{"r":4,"p":7}"#).unwrap();
        assert_eq!(back, fp(4, 7));
        assert!(serde_json::from_str::<Scalar>("\"1/0\"").is_err());
        assert!(serde_json::from_str::<Scalar>(r#"{"r":9,"p":7}"#).is_err());
        assert!(serde_json::from_str::<Scalar>(r#"{"r":1,"p":3}"#).is_err());
        let i = quad_sqrt(&Scalar::from(-1)).unwrap();
        let text = serde_json::to_string(&i).unwrap();
        assert_eq!(serde_json::from_str::<Scalar>(&text).unwrap(), i);
    }
}
