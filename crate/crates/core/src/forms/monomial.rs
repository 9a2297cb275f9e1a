use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// `C(n, k)` for the small arguments that occur in monomial counting.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n as u64 - 1 + d as u64, d as u64) as usize
}

/// Exponent vectors of all degree-`d` monomials in `n` variables, graded-lex
/// descending with x0 > x1 > ... . Stored flat with stride `n`.
#[derive(Debug)]
pub struct MonomialBasis {
    pub n: usize,
    pub d: u32,
    exps: Vec<u32>,
}

impl MonomialBasis {
    fn build(n: usize, d: u32) -> Self {
        let mut exps = Vec::with_capacity(monomial_count(n, d) * n);
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<u32>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left;
                out.extend_from_slice(cur);
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if n == 0 {
            // the empty monomial spans degree zero
        } else {
            rec(0, d, &mut cur, &mut exps);
        }
        MonomialBasis { n, d, exps }
    }

    pub fn len(&self) -> usize {
        monomial_count(self.n, self.d)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exps(&self, idx: usize) -> &[u32] {
        &self.exps[idx * self.n..(idx + 1) * self.n]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        let n = self.n;
        let total = self.len();
        (0..total).map(move |i| {
            if n == 0 {
                &[][..]
            } else {
                &self.exps[i * n..(i + 1) * n]
            }
        })
    }
}

type Cache = RwLock<HashMap<(usize, u32), Arc<MonomialBasis>>>;

pub fn basis(n: usize, d: u32) -> Arc<MonomialBasis> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(b) = cache.read().expect("basis cache poisoned").get(&(n, d)) {
        return b.clone();
    }
    let b = Arc::new(MonomialBasis::build(n, d));
    cache
        .write()
        .expect("basis cache poisoned")
        .entry((n, d))
        .or_insert(b)
        .clone()
}

/// Position of an exponent vector inside `basis(e.len(), sum(e))`.
pub fn rank(e: &[u32]) -> usize {
    let n = e.len();
    let mut left: u32 = e.iter().sum();
    let mut idx = 0usize;
    for i in 0..n.saturating_sub(1) {
        // monomials with a larger exponent at position i come first
        let rest = (n - i - 1) as u64;
        let gap = (left - e[i]) as u64;
        if gap > 0 {
            idx += binomial(rest + gap - 1, rest) as usize;
        }
        left -= e[i];
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(monomial_count(5, 3), 35);
        assert_eq!(monomial_count(3, 5), 21);
        assert_eq!(monomial_count(5, 6), 210);
        assert_eq!(monomial_count(0, 0), 1);
        assert_eq!(monomial_count(0, 2), 0);
        assert_eq!(basis(0, 0).iter().count(), 1);
    }

    #[test]
    fn order_and_rank() {
        let b = basis(3, 2);
        let listed: Vec<Vec<u32>> = b.iter().map(|e| e.to_vec()).collect();
        assert_eq!(
            listed,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        for (n, d) in [(1, 4), (2, 3), (3, 5), (5, 3), (6, 4)] {
            let b = basis(n, d);
            for (i, e) in b.iter().enumerate() {
                assert_eq!(rank(e), i);
            }
        }
    }
}
