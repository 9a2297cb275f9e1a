use std::fmt;

use super::FieldError;

/// Element of the prime field F_p, stored with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    residue: u64,
    modulus: u64,
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rejects moduli the geometry cannot use: non-primes and the primes 2 and 3.
pub fn check_admitted_prime(p: u64) -> Result<(), FieldError> {
    if p <= 3 || !is_prime(p) {
        return Err(FieldError::BadPrime(p));
    }
    Ok(())
}

/// Smallest quadratic non-residue modulo `p`; the canonical radicand for F_{p^2}.
pub fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&a| pow_mod(a, (p - 1) / 2, p) == p - 1)
        .expect("odd prime has a non-residue")
}

impl PrimeFieldElem {
    /// Builds `value mod p`. The modulus must be an admitted prime.
    pub fn new(value: i64, p: u64) -> Result<Self, FieldError> {
        check_admitted_prime(p)?;
        Ok(Self::from_i64_unchecked(value, p))
    }

    pub(crate) fn from_i64_unchecked(value: i64, p: u64) -> Self {
        let r = (value as i128).rem_euclid(p as i128) as u64;
        PrimeFieldElem { residue: r, modulus: p }
    }

    pub(crate) fn from_residue(residue: u64, p: u64) -> Self {
        PrimeFieldElem { residue: residue % p, modulus: p }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn same(&self, o: &Self) {
        assert_eq!(
            self.modulus, o.modulus,
            "arithmetic between F_{} and F_{}",
            self.modulus, o.modulus
        );
    }

    pub(crate) fn add(&self, o: &Self) -> Self {
        self.same(o);
        let s = self.residue + o.residue;
        Self::from_residue(if s >= self.modulus { s - self.modulus } else { s }, self.modulus)
    }

    pub(crate) fn sub(&self, o: &Self) -> Self {
        self.same(o);
        let s = self.residue + self.modulus - o.residue;
        Self::from_residue(s, self.modulus)
    }

    pub(crate) fn mul(&self, o: &Self) -> Self {
        self.same(o);
        Self::from_residue(mul_mod(self.residue, o.residue, self.modulus), self.modulus)
    }

    pub(crate) fn neg(&self) -> Self {
        Self::from_residue(self.modulus - self.residue, self.modulus)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        inv_mod(self.residue, self.modulus)
            .map(|r| Self::from_residue(r, self.modulus))
            .ok_or(FieldError::DivisionByZero)
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self::from_residue(pow_mod(self.residue, exp, self.modulus), self.modulus)
    }

    /// Euler's criterion. Zero counts as a square.
    pub fn is_square(&self) -> bool {
        self.is_zero() || self.pow((self.modulus - 1) / 2).residue == 1
    }

    /// Tonelli-Shanks square root, if one exists in F_p.
    pub fn sqrt(&self) -> Option<Self> {
        let p = self.modulus;
        if self.is_zero() {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = Self::from_residue(least_nonresidue(p), p);
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.residue != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt.residue != 1 {
                tt = tt.mul(&tt);
                i += 1;
            }
            let b = c.pow(1u64 << (m - i - 1));
            m = i;
            c = b.mul(&b);
            t = t.mul(&c);
            r = r.mul(&b);
        }
        Some(r)
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

impl fmt::Debug for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}%{}", self.residue, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(10007));
        assert!(!is_prime(10011));
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn admitted_primes() {
        assert!(check_admitted_prime(2).is_err());
        assert!(check_admitted_prime(3).is_err());
        assert!(check_admitted_prime(9).is_err());
        assert!(check_admitted_prime(5).is_ok());
    }

    #[test]
    fn tonelli_shanks_agrees_with_search() {
        for p in [5u64, 7, 13, 17, 41, 97, 101, 257] {
            for a in 0..p {
                let x = PrimeFieldElem::from_residue(a, p);
                let by_search = (0..p).any(|r| mul_mod(r, r, p) == a);
                match x.sqrt() {
                    Some(r) => {
                        assert!(by_search);
                        assert_eq!(r.mul(&r), x);
                    }
                    None => assert!(!by_search),
                }
            }
        }
    }

    #[test]
    fn inverses() {
        let p = 101;
        for a in 1..p {
            let x = PrimeFieldElem::from_residue(a, p);
            assert_eq!(x.mul(&x.inv().unwrap()).residue(), 1);
        }
        assert!(PrimeFieldElem::from_residue(0, p).inv().is_err());
    }
}
