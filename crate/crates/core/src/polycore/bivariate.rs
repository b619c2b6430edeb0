use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::multi::MultiPoly;
use super::series::FormalSeries2;
use super::{fmt_exponent, gcd_i64, join_terms, ratio_to_f64, term_body};
use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Monomial `x^(u/d) y^(v/d)` with `d` the owning polynomial's denominator.
///
/// Field order makes the derived ordering graded-lex by `(v, u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mono2 {
    pub v: i64,
    pub u: i64,
}

/// Laurent polynomial `W(x, y) = Σ a_{u,v} x^u y^v` with rational exponents
/// and rational coefficients; the Euler product reads it at `x = p`,
/// `y = p^-s`.
///
/// Exponents are stored as integers over one common denominator, kept
/// minimal. The `v = 0` part is usually the constant 1, but that is checked
/// by the operations that need it rather than at construction: some local
/// factors (the cubic-surface one after its change of variables) carry
/// `p`-dependent constant parts and negative `y` powers, and still have
/// perfectly good local zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivariateLocalFactor {
    denom: i64,
    terms: BTreeMap<Mono2, BigRational>,
}

impl BivariateLocalFactor {
    /// Builds from scaled exponents over `denom`; merges duplicates, drops
    /// zeros and reduces the denominator.
    pub fn new<I: IntoIterator<Item = (Mono2, BigRational)>>(denom: i64, terms: I) -> Self {
        assert!(denom > 0, "denominator must be positive");
        let mut map: BTreeMap<Mono2, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let g = map.keys().fold(denom, |g, m| gcd_i64(gcd_i64(g, m.u), m.v));
        let terms = map
            .into_iter()
            .map(|(m, c)| {
                (
                    Mono2 {
                        u: m.u / g,
                        v: m.v / g,
                    },
                    c,
                )
            })
            .collect();
        BivariateLocalFactor {
            denom: denom / g,
            terms,
        }
    }

    /// Integer exponents `(u, v, coefficient)`.
    pub fn from_int_terms(terms: &[(i64, i64, i64)]) -> Self {
        Self::new(
            1,
            terms
                .iter()
                .map(|&(u, v, c)| (Mono2 { u, v }, BigRational::from_integer(c.into()))),
        )
    }

    pub fn from_rational_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational64, Rational64, BigRational)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let d = terms.iter().fold(1i64, |acc, (u, v, _)| {
            num_integer::lcm(num_integer::lcm(acc, *u.denom()), *v.denom())
        });
        Self::new(
            d,
            terms.into_iter().map(|(u, v, c)| {
                let u = u * d;
                let v = v * d;
                (
                    Mono2 {
                        u: u.to_integer(),
                        v: v.to_integer(),
                    },
                    c,
                )
            }),
        )
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Scaled terms in `(v, u)` order.
    pub fn scaled_terms(&self) -> impl Iterator<Item = (&Mono2, &BigRational)> {
        self.terms.iter()
    }

    /// Terms as `(u, v, coefficient)` with rational exponents.
    pub fn terms(&self) -> impl Iterator<Item = (Rational64, Rational64, &BigRational)> + '_ {
        self.terms.iter().map(|(m, c)| {
            (
                Rational64::new(m.u, self.denom),
                Rational64::new(m.v, self.denom),
                c,
            )
        })
    }

    pub fn coeff(&self, u: Rational64, v: Rational64) -> BigRational {
        let su = u * self.denom;
        let sv = v * self.denom;
        if !su.is_integer() || !sv.is_integer() {
            return BigRational::zero();
        }
        let m = Mono2 {
            u: su.to_integer(),
            v: sv.to_integer(),
        };
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.denom == 1
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The `v = 0` part is exactly 1 and no power of `y` is negative.
    pub fn has_unit_constant(&self) -> bool {
        let mut low = self.terms.iter().take_while(|(m, _)| m.v <= 0);
        match (low.next(), low.next()) {
            (Some((m, c)), None) => m.v == 0 && m.u == 0 && c.is_one(),
            _ => false,
        }
    }

    pub fn depends_on_y(&self) -> bool {
        self.terms.keys().any(|m| m.v != 0)
    }

    /// Checks the shape required by factorization and classification.
    pub fn require_euler_factor(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.has_unit_constant() {
            return Err(Error::ConstantTermNotOne);
        }
        if !self.depends_on_y() {
            return Err(Error::ConstantInY);
        }
        Ok(())
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter<F: Fn(Rational64, Rational64) -> bool>(&self, keep: F) -> Self {
        Self::new(
            self.denom,
            self.terms
                .iter()
                .filter(|(m, _)| {
                    keep(
                        Rational64::new(m.u, self.denom),
                        Rational64::new(m.v, self.denom),
                    )
                })
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Formal series in `(x, y)` over the scaled exponents, truncated at
    /// `y`-order `order` (unscaled).
    pub fn to_series(&self, order: i64) -> FormalSeries2 {
        FormalSeries2::from_terms(
            vec![0, 1],
            order * self.denom,
            self.terms.iter().map(|(m, c)| (vec![m.u, m.v], c.clone())),
        )
    }

    /// Integer-exponent, non-negative view as a polynomial in `(x, y)`.
    pub fn to_multi(&self) -> Option<MultiPoly> {
        if !self.is_integral() || !self.has_integer_coeffs() {
            return None;
        }
        if self.terms.keys().any(|m| m.u < 0 || m.v < 0) {
            return None;
        }
        Some(MultiPoly::new(
            1,
            self.terms
                .iter()
                .map(|(m, c)| (vec![m.u, m.v], c.to_integer())),
        ))
    }

    /// `W(p, p^-s)`.
    pub fn eval_at(&self, p: f64, s: Complex64) -> Complex64 {
        let lp = p.ln();
        let d = self.denom as f64;
        self.terms
            .iter()
            .map(|(m, c)| {
                ((Complex64::new(m.u as f64 / d, 0.0) - s * (m.v as f64 / d)) * lp).exp()
                    * ratio_to_f64(c)
            })
            .sum()
    }

    /// `Σ |a_{u,v}| p^{u - v Re s}`, the natural scale for residual checks.
    pub fn abs_scale_at(&self, p: f64, s: Complex64) -> f64 {
        let lp = p.ln();
        let d = self.denom as f64;
        self.terms
            .iter()
            .map(|(m, c)| ((m.u as f64 - s.re * m.v as f64) / d * lp).exp() * ratio_to_f64(c).abs())
            .sum()
    }
}

/// `W(p, ·)` as a polynomial in `w = y^(1/q)`:
/// `W(p, w^q) = Σ_k coeffs[k] w^(shift + k)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalPoly {
    pub p: u64,
    pub q: i64,
    pub shift: i64,
    pub coeffs: Vec<f64>,
}

impl LocalPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        let poly = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * w + c);
        poly * w.powi(self.shift as i32)
    }
}

/// Evaluates `x ↦ p`, leaving a polynomial in `w = y^(1/q)`, shifted so the
/// lowest power is `w^0`.
pub fn substitute_prime(w: &BivariateLocalFactor, p: u64) -> Result<LocalPoly> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if w.terms.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let gv = w.terms.keys().fold(w.denom, |g, m| gcd_i64(g, m.v));
    let q = w.denom / gv;
    let power = |m: &Mono2| m.v / gv;
    let lo = w.terms.keys().map(power).min().unwrap_or(0);
    let hi = w.terms.keys().map(power).max().unwrap_or(0);
    let lp = (p as f64).ln();
    let mut parts: Vec<Vec<f64>> = vec![Vec::new(); (hi - lo + 1) as usize];
    for (m, c) in &w.terms {
        let val = if m.u % w.denom == 0 {
            exact_power(p, m.u / w.denom, c)
        } else {
            (m.u as f64 / w.denom as f64 * lp).exp() * ratio_to_f64(c)
        };
        parts[(power(m) - lo) as usize].push(val);
    }
    let coeffs = parts
        .into_iter()
        .map(|mut v| {
            // ascending magnitude keeps the f64 sum stable
            v.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
            v.into_iter().sum()
        })
        .collect();
    Ok(LocalPoly {
        p,
        q,
        shift: lo,
        coeffs,
    })
}

/// `c * p^k` rounded once from the exact rational.
fn exact_power(p: u64, k: i64, c: &BigRational) -> f64 {
    let pk = num_traits::pow(BigInt::from(p), k.unsigned_abs() as usize);
    let val = if k >= 0 {
        c * BigRational::from_integer(pk)
    } else {
        c / BigRational::from_integer(pk)
    };
    ratio_to_f64(&val)
}

impl fmt::Display for BivariateLocalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |name: &str, e: Rational64| -> Option<String> {
            if e.is_zero() {
                None
            } else if e.is_one() {
                Some(name.to_string())
            } else {
                Some(format!("{name}^{}", fmt_exponent(e)))
            }
        };
        let terms: Vec<(bool, String)> = self
            .terms()
            .map(|(u, v, c)| {
                let mono: Vec<String> = [var("x", u), var("y", v)].into_iter().flatten().collect();
                (c.is_negative(), term_body(&c.abs(), &mono.join("*")))
            })
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gsp6() -> BivariateLocalFactor {
        BivariateLocalFactor::from_int_terms(&[
            (0, 0, 1),
            (1, 1, 1),
            (2, 1, 1),
            (3, 1, 1),
            (4, 1, 1),
            (5, 2, 1),
        ])
    }

    #[test]
    fn substitution_examples() {
        let lp = substitute_prime(&gsp6(), 2).unwrap();
        assert_eq!((lp.q, lp.shift), (1, 0));
        assert_eq!(lp.coeffs, vec![1.0, 30.0, 32.0]);

        let w = BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (2, 1, -1), (0, 1, 1)]);
        assert_eq!(substitute_prime(&w, 3).unwrap().coeffs, vec![1.0, -8.0]);

        let w = BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (0, 1, -1)]);
        for p in [2, 7, 101] {
            assert_eq!(substitute_prime(&w, p).unwrap().coeffs, vec![1.0, -1.0]);
        }
        assert_eq!(substitute_prime(&w, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn denominators_reduce() {
        let w = BivariateLocalFactor::new(
            4,
            [
                (Mono2 { u: 0, v: 0 }, BigRational::one()),
                (Mono2 { u: 2, v: 4 }, BigRational::one()),
            ],
        );
        assert_eq!(w.denom(), 2);
        assert_eq!(w.to_string(), "1 + x^(1/2)*y");
    }

    #[test]
    fn fractional_y_powers() {
        // 1 + y^(1/2): w = y^(1/2), polynomial 1 + w
        let w = BivariateLocalFactor::new(
            2,
            [
                (Mono2 { u: 0, v: 0 }, BigRational::one()),
                (Mono2 { u: 0, v: 1 }, BigRational::one()),
            ],
        );
        let lp = substitute_prime(&w, 5).unwrap();
        assert_eq!((lp.q, lp.coeffs.clone()), (2, vec![1.0, 1.0]));
    }

    #[test]
    fn unit_constant_detection() {
        assert!(gsp6().has_unit_constant());
        let w = BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (-1, 0, 1), (0, 1, 1)]);
        assert!(!w.has_unit_constant());
        let w = BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (1, -1, 1)]);
        assert!(!w.has_unit_constant());
        let w = BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (3, 0, 1)]);
        assert_eq!(w.require_euler_factor(), Err(Error::ConstantTermNotOne));
    }
}
