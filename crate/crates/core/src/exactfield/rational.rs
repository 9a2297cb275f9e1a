use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FieldError;

/// Arbitrary-precision rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, FieldError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Exact square root if `self` is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_exact().is_some()
    }

    /// Writes `self` as `c^2 * k` with `k` an integer whose square factors below
    /// `trial_bound` have been removed. Returns `(c, k)`.
    pub fn square_decompose(&self, trial_bound: u64) -> (Rational, BigInt) {
        // num/den = num*den / den^2
        let mut k = self.numer() * self.denom();
        let mut c = BigInt::one();
        let sign = if k.is_negative() { -1 } else { 1 };
        k = k.abs();
        let mut f: u64 = 2;
        while f <= trial_bound {
            let sq = BigInt::from(f * f);
            if sq > k {
                break;
            }
            while (&k % &sq).is_zero() {
                k /= &sq;
                c *= f;
            }
            f += 1;
        }
        let r = k.sqrt();
        if &r * &r == k {
            c *= &r;
            k = BigInt::one();
        }
        let coeff = Rational(BigRational::new(c, self.denom().clone()));
        (coeff, k * sign)
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub(crate) fn add(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }
    pub(crate) fn sub(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }
    pub(crate) fn mul(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }
    pub(crate) fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    /// Residue of the numerator and denominator modulo `p`, if the denominator is a unit.
    pub(crate) fn residue_mod(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let den = self.denom().mod_floor(&pb).to_u64()?;
        if den == 0 {
            return None;
        }
        let num = self.numer().mod_floor(&pb).to_u64()?;
        let inv = super::prime::inv_mod(den, p)?;
        Some(super::prime::mul_mod(num, inv, p))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FieldError::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
                    .map_err(|_| FieldError::Parse(format!("zero denominator in {s:?}")))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational::from_integer(n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let r: Rational = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("7".parse::<Rational>().unwrap().to_string(), "7");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        let r = Rational::new(9, 4).unwrap();
        assert_eq!(r.sqrt_exact().unwrap(), Rational::new(3, 2).unwrap());
        assert!(Rational::from(2).sqrt_exact().is_none());
        assert!(Rational::from(-4).sqrt_exact().is_none());
    }

    #[test]
    fn square_decomposition_recombines() {
        for (n, d) in [(12i64, 1i64), (-50, 9), (7, 18), (1, 1), (-1, 1)] {
            let r = Rational::new(n, d).unwrap();
            let (c, k) = r.square_decompose(1000);
            let back = c.mul(&c).mul(&Rational::from_integer(k));
            assert_eq!(back, r);
        }
        let (_, k) = Rational::new(-50, 9).unwrap().square_decompose(1000);
        assert_eq!(k, BigInt::from(-2));
    }
}
