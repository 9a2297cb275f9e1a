//! Property bodies shared by the property test target and the acceptance run,
//! plus a small GF(q^k) used as an independent common-zero oracle.

#![allow(dead_code)]

use nikulin_core::exactfield::{quad_sqrt, QuadExtElem, Scalar};
use nikulin_core::forms::monomial::monomial_count;
use nikulin_core::forms::{macaulay_resultant, sylvester_resultant, Form, FormError};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CASES: u32 = 256;
pub const SMALL_PRIMES: [u64; 3] = [7, 11, 13];
pub const PRIMES: [u64; 5] = [5, 7, 11, 13, 10007];

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() }
}

fn fail(msg: String) -> Result<(), TestCaseError> {
    Err(TestCaseError::fail(msg))
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return fail(format!($($fmt)*));
        }
    };
}

pub fn rational() -> impl Strategy<Value = (i64, i64)> {
    (-60i64..=60, 1i64..=40)
}

fn q((n, d): (i64, i64)) -> Scalar {
    Scalar::rational(n, d).unwrap()
}

fn axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    ensure!(&(a + b) + c == a + &(b + c), "associativity of + for {a}, {b}, {c}");
    ensure!(&(a * b) * c == a * &(b * c), "associativity of * for {a}, {b}, {c}");
    ensure!(a * &(b + c) == &(a * b) + &(a * c), "distributivity for {a}, {b}, {c}");
    ensure!(a + b == b + a && a * b == b * a, "commutativity for {a}, {b}");
    ensure!((a + &(-a)).is_zero(), "a + (−a) = 0 for {a}");
    if !a.is_zero() {
        let inv = a.inv().map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure!((a * &inv).is_one(), "a · a⁻¹ = 1 for {a}");
    }
    Ok(())
}

pub fn field_axioms_rational(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Result<(), TestCaseError> {
    axioms(&q(x), &q(y), &q(z))
}

pub fn field_axioms_prime(pi: usize, a: i64, b: i64, c: i64) -> Result<(), TestCaseError> {
    let p = PRIMES[pi % PRIMES.len()];
    let f = |x| Scalar::prime(x, p).unwrap();
    axioms(&f(a), &f(b), &f(c))
}

/// Elements of Q(sqrt 2), Q(sqrt −1) or F_p(sqrt n) for the least non-residue n.
pub fn field_axioms_quadratic(kind: usize, v: [i64; 6]) -> Result<(), TestCaseError> {
    let (base, d): (Box<dyn Fn(i64) -> Scalar>, Scalar) = match kind % 3 {
        0 => (Box::new(Scalar::from), Scalar::from(2)),
        1 => (Box::new(Scalar::from), Scalar::from(-1)),
        _ => {
            let p = 10007;
            let n = nikulin_core::exactfield::least_nonresidue(p) as i64;
            (Box::new(move |x| Scalar::prime(x, p).unwrap()), Scalar::prime(n, p).unwrap())
        }
    };
    let e = |i: usize| Scalar::from(QuadExtElem::new(base(v[i]), base(v[i + 1]), d.clone()).unwrap());
    axioms(&e(0), &e(2), &e(4))
}

pub fn reduction_homomorphism(pi: usize, x: (i64, i64), y: (i64, i64)) -> Result<(), TestCaseError> {
    let p = PRIMES[pi % PRIMES.len()];
    if x.1 as u64 % p == 0 || y.1 as u64 % p == 0 {
        return Ok(());
    }
    let (a, b) = (q(x), q(y));
    let r = |s: &Scalar| s.reduce_mod(p).unwrap();
    ensure!(r(&(&a + &b)) == &r(&a) + &r(&b), "sum of {a}, {b} mod {p}");
    ensure!(r(&(&a * &b)) == &r(&a) * &r(&b), "product of {a}, {b} mod {p}");
    Ok(())
}

pub fn sqrt_squares(pi: usize, x: (i64, i64), over_prime: bool) -> Result<(), TestCaseError> {
    let d = if over_prime { Scalar::prime(x.0 * 41 + x.1, PRIMES[pi % PRIMES.len()]).unwrap() } else { q(x) };
    if d.is_zero() {
        return Ok(());
    }
    let r = quad_sqrt(&d).map_err(|e| TestCaseError::fail(e.to_string()))?;
    ensure!(&r * &r == d, "sqrt({d})² = {}", &r * &r);
    Ok(())
}

/// A form over Q with integer coefficients in [−b, b].
pub fn random_form(rng: &mut ChaCha8Rng, n: usize, d: u32, b: i64) -> Form {
    let c = (0..monomial_count(n, d)).map(|_| Scalar::from(rng.gen_range(-b..=b))).collect();
    Form::new(n, d, c).unwrap()
}

fn nonzero_form(rng: &mut ChaCha8Rng, n: usize, d: u32, b: i64) -> Form {
    loop {
        let f = random_form(rng, n, d, b);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn resultant_multiplicativity(seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=3);
    let var = rng.gen_range(0..n);
    let [df, dg, dh] = [0; 3].map(|_| rng.gen_range(1..=2));
    let (f, g, h) = (nonzero_form(&mut rng, n, df, 4), nonzero_form(&mut rng, n, dg, 4), nonzero_form(&mut rng, n, dh, 4));
    let r = |a: &Form, b: &Form| sylvester_resultant(a, b, var).unwrap();
    let lhs = r(&f, &g.mul(&h));
    let rhs = r(&f, &g).mul(&r(&f, &h));
    ensure!(lhs == rhs, "Res(f, gh) ≠ Res(f, g)·Res(f, h) for f = {f}, g = {g}, h = {h}");
    Ok(())
}

pub fn euler_identity(seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=5);
    let d = rng.gen_range(1..=4);
    let f = random_form(&mut rng, n, d, 9);
    let mut lhs = Form::zero(n, d);
    for i in 0..n {
        let xi = Form::var(n, i);
        let term = xi.mul(&f.partial(i));
        lhs = lhs.add(&term);
    }
    ensure!(lhs == f.scale(&Scalar::from(d as i64)), "Euler identity fails for {f}");
    Ok(())
}

pub fn reduction_commutes(seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = PRIMES[rng.gen_range(0..PRIMES.len())];
    let n = rng.gen_range(2..=3);
    let (df, dg) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
    let f = nonzero_form(&mut rng, n, df, 20);
    let g = nonzero_form(&mut rng, n, dg, 20);
    let red = |h: &Form| h.reduce_mod(p).unwrap();
    let (fp, gp) = (red(&f), red(&g));

    let pt: Vec<i64> = (0..n).map(|_| rng.gen_range(-30..=30)).collect();
    let over_q = f.evaluate(&pt.iter().map(|&x| Scalar::from(x)).collect::<Vec<_>>()).unwrap();
    let over_p = fp.evaluate(&pt.iter().map(|&x| Scalar::prime(x, p).unwrap()).collect::<Vec<_>>()).unwrap();
    ensure!(over_q.reduce_mod(p).unwrap() == over_p, "evaluate mod {p} for {f}");

    if gp.is_zero() {
        return Ok(());
    }
    let fg = f.mul(&g);
    let quotient_q = red(&fg.exact_divide(&g).unwrap());
    let quotient_p = red(&fg).exact_divide(&gp).unwrap();
    ensure!(quotient_q == quotient_p, "exact_divide mod {p} for {f}, {g}");

    if fp.is_zero() {
        return Ok(());
    }
    let var = rng.gen_range(0..n);
    let res_q = red(&sylvester_resultant(&f, &g, var).unwrap());
    let res_p = sylvester_resultant(&fp, &gp, var).unwrap();
    ensure!(res_q == res_p, "resultant mod {p} for {f}, {g}");
    Ok(())
}

/// GF(q^k) for k ≤ 3 as F_q[t] modulo a monic polynomial without roots in F_q.
pub struct Gf {
    pub q: u64,
    pub k: usize,
    /// Monic modulus, low degree first, length k + 1.
    modulus: Vec<u64>,
}

type El = Vec<u64>;

impl Gf {
    pub fn new(q: u64, k: usize) -> Self {
        assert!((1..=3).contains(&k));
        if k == 1 {
            return Gf { q, k, modulus: vec![0, 1] };
        }
        let total = q.pow(k as u32);
        for code in 0..total {
            let mut m: Vec<u64> = (0..k).map(|i| code / q.pow(i as u32) % q).collect();
            m.push(1);
            let has_root = (0..q).any(|x| m.iter().rev().fold(0, |acc, &c| (acc * x + c) % q) == 0);
            if !has_root {
                return Gf { q, k, modulus: m };
            }
        }
        unreachable!("an irreducible polynomial of degree {k} exists")
    }

    pub fn constant(&self, x: u64) -> El {
        let mut e = vec![0; self.k];
        e[0] = x % self.q;
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = El> + '_ {
        (0..self.q.pow(self.k as u32)).map(move |code| (0..self.k).map(|i| code / self.q.pow(i as u32) % self.q).collect())
    }

    pub fn add(&self, a: &El, b: &El) -> El {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.q).collect()
    }

    pub fn mul(&self, a: &El, b: &El) -> El {
        let q = self.q;
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % q;
            }
        }
        for top in (self.k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // subtract c · t^(top − k) · modulus
            for (i, m) in self.modulus.iter().enumerate() {
                let idx = top - self.k + i;
                prod[idx] = (prod[idx] + q * q - c * m % q) % q;
            }
        }
        prod.truncate(self.k);
        prod
    }

    pub fn is_zero(&self, a: &El) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Value of a form with F_q coefficients at a point with coordinates in GF(q^k).
    pub fn eval(&self, f: &Form, pt: &[El]) -> El {
        let mut acc = self.constant(0);
        for (e, c) in f.terms() {
            let mut term = self.constant(c.prime_residue().expect("form over F_q"));
            for (x, &k) in pt.iter().zip(&e) {
                for _ in 0..k {
                    term = self.mul(&term, x);
                }
            }
            acc = self.add(&acc, &term);
        }
        acc
    }
}

/// Whether the forms share a zero in P^{n−1}(F_{q^k}) for some k ≤ 3. For two
/// binary forms of degree ≤ 3, or a linear form followed by forms of degree ≤ 3
/// in three variables, this decides a common zero over the algebraic closure.
pub fn common_zero_brute_force(forms: &[Form], q: u64) -> bool {
    let n = forms.len();
    // parametrize the ambient P^1 (n = 2) or the line cut by forms[0] (n = 3)
    let (basis, rest): (Vec<Vec<u64>>, &[Form]) = match n {
        2 => (vec![vec![1, 0], vec![0, 1]], forms),
        3 => {
            let l: Vec<u64> = forms[0].coeffs().iter().map(|c| c.prime_residue().unwrap()).collect();
            let j = (0..3).rev().find(|&j| l[j] != 0).expect("nonzero linear form");
            let inv = (1..q).find(|&x| x * l[j] % q == 1).unwrap();
            let others: Vec<usize> = (0..3).filter(|&i| i != j).collect();
            let basis = others
                .iter()
                .map(|&i| {
                    let mut v = vec![0; 3];
                    v[i] = 1;
                    v[j] = (q - l[i] * inv % q) % q;
                    v
                })
                .collect();
            (basis, &forms[1..])
        }
        _ => panic!("oracle handles two or three variables"),
    };
    for k in 1..=3 {
        let gf = Gf::new(q, k);
        let point = |s: &El, t: &El| -> Vec<El> {
            (0..n)
                .map(|i| gf.add(&gf.mul(s, &gf.constant(basis[0][i])), &gf.mul(t, &gf.constant(basis[1][i]))))
                .collect()
        };
        let at_infinity = std::iter::once((gf.constant(0), gf.constant(1)));
        let affine = gf.elements().map(|t| (gf.constant(1), t));
        for (s, t) in at_infinity.chain(affine) {
            let pt = point(&s, &t);
            if rest.iter().all(|f| gf.is_zero(&gf.eval(f, &pt))) {
                return true;
            }
        }
    }
    false
}

fn fq_form(rng: &mut ChaCha8Rng, n: usize, d: u32, q: u64) -> Form {
    let c = (0..monomial_count(n, d)).map(|_| Scalar::prime(rng.gen_range(0..q as i64), q).unwrap()).collect();
    Form::new(n, d, c).unwrap()
}

/// Forces `f(pt) = 0` by adjusting the coefficient of `x_j^d` for a `j` with `pt_j ≠ 0`.
fn force_zero(f: &Form, pt: &[i64], q: u64) -> Form {
    let j = pt.iter().position(|&x| x != 0).unwrap();
    let val = f.evaluate(&pt.iter().map(|&x| Scalar::prime(x, q).unwrap()).collect::<Vec<_>>()).unwrap();
    let mut e = vec![0; pt.len()];
    e[j] = f.degree();
    let m = Scalar::prime(pt[j], q).unwrap().pow(f.degree());
    let mut g = f.clone();
    g.set_coeff(&e, &f.coeff(&e).clone() - &(&val / &m));
    g
}

/// Outcome of one Macaulay-vs-oracle case: `None` when the resultant was inconclusive.
pub fn macaulay_vs_brute_force(seed: u64) -> Result<Option<bool>, TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = SMALL_PRIMES[rng.gen_range(0..SMALL_PRIMES.len())];
    let n = rng.gen_range(2..=3);
    let mode = rng.gen_range(0..3);
    let mut forms: Vec<Form> = match n {
        2 => {
            let (d1, d2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            if mode == 2 {
                // a shared factor of degree 2 or 3, often irreducible over F_q
                let dg = rng.gen_range(2..=3);
                let g = fq_form(&mut rng, 2, dg, q);
                let h1 = fq_form(&mut rng, 2, 3 - dg, q);
                let h2 = fq_form(&mut rng, 2, 3 - dg, q);
                vec![g.mul(&h1), g.mul(&h2)]
            } else {
                vec![fq_form(&mut rng, 2, d1, q), fq_form(&mut rng, 2, d2, q)]
            }
        }
        _ => {
            let (d2, d3) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            vec![fq_form(&mut rng, 3, 1, q), fq_form(&mut rng, 3, d2, q), fq_form(&mut rng, 3, d3, q)]
        }
    };
    if forms.iter().any(Form::is_zero) {
        return Ok(None);
    }
    if mode == 1 {
        let pt: Vec<i64> = loop {
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..q as i64)).collect();
            if v.iter().any(|&x| x != 0) {
                break v;
            }
        };
        forms = forms.iter().map(|f| force_zero(f, &pt, q)).collect();
        if forms.iter().any(Form::is_zero) {
            return Ok(None);
        }
    }
    let res = match macaulay_resultant(&forms) {
        Ok(r) => r,
        Err(FormError::Inconclusive(_)) => return Ok(None),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    let common = common_zero_brute_force(&forms, q);
    ensure_opt(res.is_zero() == common, || {
        format!("q = {q}, forms {forms:?}: resultant {res}, brute-force common zero {common}")
    })?;
    Ok(Some(common))
}

fn ensure_opt(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}
