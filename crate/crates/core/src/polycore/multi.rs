use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::series::TruncSeries;
use super::{join_terms, term_body};
use crate::error::{Error, Result};

/// Integer polynomial in `X1..Xn, X(n+1)`; the last variable is the one
/// set to `p` in the Euler product `∏_p h(p^-s1, ..., p^-sn, p)`.
///
/// Exponent vectors have length `n + 1` and are non-negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl MultiPoly {
    /// Panics on wrong exponent length or negative exponents; use
    /// [`MultiPoly::try_new`] for unchecked input.
    pub fn new<I: IntoIterator<Item = (Vec<i64>, BigInt)>>(n: usize, terms: I) -> Self {
        Self::try_new(n, terms).expect("valid exponent vectors")
    }

    pub fn try_new<I: IntoIterator<Item = (Vec<i64>, BigInt)>>(n: usize, terms: I) -> Result<Self> {
        let mut map: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    got: e.len(),
                });
            }
            if e.iter().any(|&x| x < 0) {
                return Err(Error::Precondition("negative exponent".into()));
            }
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { n, terms: map })
    }

    pub fn from_i64(n: usize, terms: &[(&[i64], i64)]) -> Self {
        Self::new(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    pub fn one(n: usize) -> Self {
        Self::new(n, [(vec![0; n + 1], BigInt::one())])
    }

    /// `1 - X^m`.
    pub fn one_minus_monomial(n: usize, m: &[i64]) -> Self {
        Self::new(
            n,
            [
                (vec![0; n + 1], BigInt::one()),
                (m.to_vec(), BigInt::from(-1)),
            ],
        )
    }

    /// Number of `s`-variables; the polynomial has `n + 1` variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i64]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    /// Largest degree in `X1..Xn` alone.
    pub fn base_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e[..self.n].iter().sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn has_unit_constant(&self) -> bool {
        self.terms
            .get(&vec![0; self.n + 1])
            .is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Blocks `h_k` of `h = 1 + Σ_k h_k X(n+1)^k`, each as a list of
    /// `(α, coefficient)` with `α` the exponent in `X1..Xn`. Empty blocks are
    /// omitted and the leading constant 1 is excluded from `h_0`.
    pub fn blocks(&self) -> BTreeMap<i64, Vec<(Vec<i64>, BigInt)>> {
        let mut out: BTreeMap<i64, Vec<(Vec<i64>, BigInt)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let alpha = e[..self.n].to_vec();
            let k = e[self.n];
            if k == 0 && alpha.iter().all(|&x| x == 0) {
                let rest = c - BigInt::one();
                if !rest.is_zero() {
                    out.entry(0).or_default().push((alpha, rest));
                }
                continue;
            }
            out.entry(k).or_default().push((alpha, c.clone()));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    pub fn to_series(&self, weights: Vec<i64>, order: i64) -> TruncSeries<BigRational> {
        TruncSeries::from_terms(
            weights,
            order,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), BigRational::from_integer(c.clone()))),
        )
    }

    /// `h(p^-s1, ..., p^-sn, p)`.
    pub fn eval_euler(&self, p: f64, s: &[Complex64]) -> Complex64 {
        let lp = p.ln();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut z = Complex64::new(e[self.n] as f64, 0.0);
                for (ei, si) in e[..self.n].iter().zip(s) {
                    z -= si * (*ei as f64);
                }
                (z * lp).exp() * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    pub(crate) fn var_name(&self, i: usize) -> String {
        format!("X{}", i + 1)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        MultiPoly {
            n: self.n,
            terms: out,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // graded order reads better than raw lex
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().sum::<i64>(), std::cmp::Reverse((*e).clone())));
        let terms: Vec<(bool, String)> = keys
            .into_iter()
            .map(|e| {
                let c = &self.terms[e];
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            self.var_name(i)
                        } else {
                            format!("{}^{x}", self.var_name(i))
                        }
                    })
                    .collect();
                (
                    c.is_negative(),
                    term_body(&BigRational::from_integer(c.abs()), &mono.join("*")),
                )
            })
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_split_on_last_variable() {
        // 1 + (X1 + X1*X2) X3
        let h = MultiPoly::from_i64(2, &[(&[0, 0, 0], 1), (&[1, 0, 1], 1), (&[1, 1, 1], 1)]);
        let b = h.blocks();
        assert_eq!(b.len(), 1);
        assert_eq!(b[&1].len(), 2);
        assert_eq!(h.to_string(), "1 + X1*X3 + X1*X2*X3");

        let h = MultiPoly::from_i64(2, &[(&[0, 0, 0], 1), (&[1, 1, 0], -1)]);
        assert_eq!(h.blocks()[&0], vec![(vec![1, 1], BigInt::from(-1))]);
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(MultiPoly::try_new(1, [(vec![1], BigInt::one())]).is_err());
        assert!(MultiPoly::try_new(1, [(vec![-1, 0], BigInt::one())]).is_err());
    }
}
