//! The hypersurface `x1 ⋯ xn = x(n+1)^n` in projective space: local series,
//! the log-power degree of its height count, and a brute-force count.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Truncation of the local factor `h(X1..Xn, X(n+1))` to exponents `<= cutoff`
/// in every coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSeries {
    pub n: usize,
    pub cutoff: i64,
    coeffs: BTreeMap<Vec<i64>, i64>,
}

impl ToricSeries {
    pub fn coeff(&self, alpha: &[i64]) -> i64 {
        self.coeffs.get(alpha).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.coeffs.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

type Box_ = BTreeMap<Vec<i64>, i64>;

fn mul_box(a: &Box_, b: &Box_, cutoff: i64) -> Box_ {
    let mut out = Box_::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if e.iter().all(|&x| x <= cutoff) {
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Exponent vectors `(r, |r|/n)` with `0 <= r_i < n` and `n | |r|`.
pub fn residue_set(n: usize) -> Vec<Vec<i64>> {
    let n_i = n as i64;
    let mut out = Vec::new();
    let mut r = vec![0i64; n];
    loop {
        let sum: i64 = r.iter().sum();
        if sum % n_i == 0 {
            let mut e = r.clone();
            e.push(sum / n_i);
            out.push(e);
        }
        let mut i = 0;
        while i < n && r[i] == n_i - 1 {
            r[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        r[i] += 1;
    }
    out.sort();
    out
}

/// `(1 - X1⋯X(n+1)) ∏_i (1 - Xi^n X(n+1))^-1 Σ_{r ∈ D} X^(r, |r|/n)`, where
/// `D` is [`residue_set`]. The geometric factors and the residue sum
/// generate every exponent with `Σ α_i = n α(n+1)` once; the first factor
/// removes those with all `α_i >= 1`.
pub fn toric_local_series(n: usize, cutoff: i64) -> Result<ToricSeries> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    if cutoff < 1 {
        return Err(Error::Precondition("cutoff must be at least 1".into()));
    }
    let mut acc: Box_ = residue_set(n)
        .into_iter()
        .filter(|e| e.iter().all(|&x| x <= cutoff))
        .map(|e| (e, 1))
        .collect();
    for i in 0..n {
        let mut geo = Box_::new();
        let mut k = 0;
        while (n as i64) * k <= cutoff && k <= cutoff {
            let mut e = vec![0; n + 1];
            e[i] = n as i64 * k;
            e[n] = k;
            geo.insert(e, 1);
            k += 1;
        }
        acc = mul_box(&acc, &geo, cutoff);
    }
    let coprime: Box_ = [(vec![0; n + 1], 1), (vec![1; n + 1], -1)]
        .into_iter()
        .collect();
    Ok(ToricSeries {
        n,
        cutoff,
        coeffs: mul_box(&acc, &coprime, cutoff),
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree `C(2n-1, n) - n - 1` of the log-polynomial in the height count.
pub fn toric_degree(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    if n > 30 {
        return Err(Error::Overflow("toric degree"));
    }
    Ok(binomial(2 * n - 1, n) - n - 1)
}

/// Enumeration size above which the brute count refuses to run.
const BRUTE_LIMIT: u128 = 2_000_000_000;

/// `#{(x1..x(n+1)) positive, coprime, max <= t, x1⋯xn = x(n+1)^n}`.
pub fn brute_count_toric(n: u32, t: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    let work = (t as u128)
        .checked_pow(n)
        .ok_or(Error::Overflow("enumeration size"))?;
    if work > BRUTE_LIMIT || (t as u128).checked_pow(n + 1).is_none() {
        return Err(Error::Overflow("enumeration size"));
    }
    let count = (1..=t)
        .into_par_iter()
        .map(|last| {
            let target = (last as u128).pow(n);
            count_factorizations(target, n - 1, t, last)
        })
        .sum();
    Ok(count)
}

/// Ways to write `rest = x_1 ⋯ x_k x_(k+1)` with every factor `<= t` and
/// `gcd(g, x_1, ..) = 1` overall.
fn count_factorizations(rest: u128, k: u32, t: u64, g: u64) -> u64 {
    if k == 0 {
        return u64::from(rest <= t as u128 && g.gcd(&(rest as u64)) == 1);
    }
    let mut c = 0;
    for x in 1..=t {
        if rest.is_multiple_of(x as u128) {
            c += count_factorizations(rest / x as u128, k - 1, t, g.gcd(&x));
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(toric_degree(2).unwrap(), 0);
        assert_eq!(toric_degree(3).unwrap(), 6);
        assert_eq!(toric_degree(4).unwrap(), 30);
        assert!(toric_degree(1).is_err());
    }

    #[test]
    fn local_series_examples() {
        let h = toric_local_series(3, 4).unwrap();
        assert_eq!(h.coeff(&[0, 0, 0, 0]), 1);
        assert_eq!(h.coeff(&[1, 2, 0, 1]), 1);
        assert_eq!(h.coeff(&[1, 1, 1, 1]), 0);
        assert_eq!(h.coeff(&[3, 0, 0, 1]), 1);
        assert!(h.terms().all(|(_, c)| c == 1));
    }

    #[test]
    fn small_counts() {
        assert_eq!(brute_count_toric(3, 1).unwrap(), 1);
        assert_eq!(brute_count_toric(3, 2).unwrap(), 1);
        // (1,2,4,2) and permutations
        assert_eq!(brute_count_toric(3, 4).unwrap(), 7);
        // (1,4,2), (4,1,2)
        assert_eq!(brute_count_toric(2, 4).unwrap(), 3);
        assert!(brute_count_toric(3, 100_000).is_err());
    }
}
