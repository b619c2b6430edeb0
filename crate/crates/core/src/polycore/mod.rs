//! Exact polynomial and truncated power-series arithmetic.
//!
//! Three polynomial shapes are used throughout the crate:
//!
//! * [`UniPoly`]: integer polynomial `h(X)` in one variable, the local factor
//!   of `∏_p h(p^-s)`.
//! * [`BivariateLocalFactor`]: Laurent polynomial `W(x, y)` with rational
//!   exponents and rational coefficients, read with `x ↦ p`, `y ↦ p^-s`.
//! * [`MultiPoly`]: integer polynomial in `X1..Xn, X(n+1)` for multivariate
//!   Euler products.
//!
//! [`TruncSeries`] carries the formal logarithm and product manipulations,
//! truncated along a linear grading of the exponents.

mod bivariate;
mod json;
mod multi;
mod parse;
pub mod roots;
mod series;
mod uni;

pub use bivariate::{substitute_prime, BivariateLocalFactor, LocalPoly, Mono2};
pub use json::{ExpJson, PolyJson, TermJson};
pub use multi::MultiPoly;
pub use parse::{parse_bivariate, parse_multi, parse_poly, parse_uni, Parsed, VarSet};
pub use series::{formal_log, FormalSeries2, TruncSeries};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

/// Formats a rational as `n` or `n/d`.
pub fn fmt_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n` or `n/d` (optional leading sign, no whitespace inside).
pub fn parse_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn r64_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator individually too large for f64
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub(crate) fn fmt_exponent(r: Rational64) -> String {
    if r.is_integer() && !r.is_negative() {
        r.numer().to_string()
    } else if r.is_integer() {
        format!("({})", r.numer())
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

/// Joins signed terms as `a + b - c`.
pub(crate) fn join_terms(terms: &[(bool, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(body);
            }
            (0, false) => out.push_str(body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(body);
            }
        }
    }
    out
}

/// Renders `|coef| * monomial` with the unit coefficient suppressed.
pub(crate) fn term_body(abs_coef: &BigRational, monomial: &str) -> String {
    if monomial.is_empty() {
        fmt_ratio(abs_coef)
    } else if abs_coef.is_one() {
        monomial.to_string()
    } else {
        format!("{}*{}", fmt_ratio(abs_coef), monomial)
    }
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}
