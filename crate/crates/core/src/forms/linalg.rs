use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactfield::{inv_mod, mul_mod, FieldError, Rational, Scalar};

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    fn prime_modulus(&self) -> Option<u64> {
        let mut p = None;
        for x in &self.data {
            match x {
                Scalar::Prime(e) => p = Some(e.modulus()),
                Scalar::Rational(_) => {}
                Scalar::Quad(_) => return None,
            }
        }
        p
    }

    fn all_rational(&self) -> bool {
        self.data.iter().all(|x| matches!(x, Scalar::Rational(_)))
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(i, j) - &(&f * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Pivot columns of the reduced row echelon form.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().echelon()
    }

    pub fn rank(&self) -> usize {
        if let Some(p) = self.prime_modulus() {
            if let Ok(rows) = self.to_u64_rows(p) {
                return rank_mod_p(rows, p);
            }
        }
        self.clone().echelon().len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[fc] = Scalar::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, fc);
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let pivots = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Scalar::one();
        }
        if let Some(p) = self.prime_modulus() {
            if let Ok(rows) = self.to_u64_rows(p) {
                let d = det_mod_p(rows, p);
                return Scalar::prime(d as i64, p).expect("admitted prime");
            }
        }
        if self.all_rational() {
            return Scalar::Rational(self.det_rational());
        }
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    fn det_rational(&self) -> Rational {
        // clear denominators row by row, then fraction-free elimination
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = BigInt::one();
            for x in self.row(i) {
                if let Scalar::Rational(r) = x {
                    l = l.lcm(r.denom());
                }
            }
            scale *= &l;
            rows.push(
                self.row(i)
                    .iter()
                    .map(|x| match x {
                        Scalar::Rational(r) => r.numer() * (&l / r.denom()),
                        _ => unreachable!(),
                    })
                    .collect(),
            );
        }
        let d = bareiss(rows);
        Rational::new(d, scale).expect("nonzero scale")
    }

    pub(crate) fn to_u64_rows(&self, p: u64) -> Result<Vec<Vec<u64>>, FieldError> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| scalar_residue(x, p)).collect())
            .collect()
    }
}

pub(crate) fn scalar_residue(x: &Scalar, p: u64) -> Result<u64, FieldError> {
    match x {
        Scalar::Prime(e) if e.modulus() == p => Ok(e.residue()),
        Scalar::Rational(_) => x
            .reduce_mod(p)
            .map(|s| s.prime_residue().expect("reduced to F_p")),
        _ => Err(FieldError::FieldMismatch(format!("{x:?} is not in F{p}"))),
    }
}

/// Fraction-free Gaussian elimination over the integers.
pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn det_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if piv != c {
            m.swap(piv, c);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[c][c], p);
        let inv = inv_mod(m[c][c], p).expect("nonzero pivot");
        for i in c + 1..n {
            if m[i][c] == 0 {
                continue;
            }
            let f = mul_mod(m[i][c], inv, p);
            let (top, bottom) = m.split_at_mut(i);
            let src = &top[c];
            for (dst, &s) in bottom[0][c..].iter_mut().zip(&src[c..]) {
                *dst = (*dst + p - mul_mod(f, s, p)) % p;
            }
        }
    }
    det
}

pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = inv_mod(m[r][c], p).expect("nonzero pivot");
        for i in r + 1..rows {
            if m[i][c] == 0 {
                continue;
            }
            let f = mul_mod(m[i][c], inv, p);
            let (top, bottom) = m.split_at_mut(i);
            for (dst, &s) in bottom[0][c..].iter_mut().zip(&top[r][c..]) {
                *dst = (*dst + p - mul_mod(f, s, p)) % p;
            }
        }
        r += 1;
    }
    r
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}
