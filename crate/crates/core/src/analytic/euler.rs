use num_complex::Complex64;
use num_rational::Rational64;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polycore::{r64_to_f64, ratio_to_f64, BivariateLocalFactor, MultiPoly};
use crate::primes::primes_up_to;

/// Primes per parallel block; fixed so results do not depend on the pool.
pub const PRIME_BLOCK: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct EulerProductValue {
    pub value: Complex64,
    /// Relative bound on `|Z(s) - value| / |value|`; infinite when no
    /// certificate applies at this cutoff.
    pub tail_bound: f64,
    pub sigma_a: Rational64,
    pub prime_bound: u64,
}

impl EulerProductValue {
    pub fn to_json(&self) -> Value {
        json!({
            "re": self.value.re,
            "im": self.value.im,
            "tail_bound": if self.tail_bound.is_finite() { json!(self.tail_bound) } else { Value::Null },
            "sigma_a": crate::zetafact::fmt_r64(self.sigma_a),
            "prime_bound": self.prime_bound,
        })
    }
}

/// Abscissa `max (u + 1)/v` over terms with `v >= 1`.
pub fn abscissa(w: &BivariateLocalFactor) -> Result<Rational64> {
    w.terms()
        .filter(|(_, v, _)| *v > Rational64::from_integer(0))
        .map(|(u, v, _)| (u + 1) / v)
        .max()
        .ok_or(Error::ConstantInY)
}

/// `∏_{p <= P} W(p, p^-s)` with a certified tail bound.
///
/// For `p > P`, `|W - 1| <= Σ |a| p^-κ` with `κ = v Re s - u > 1`, so the
/// log of the tail is at most `2 T` with
/// `T = Σ_terms |a| P^(1-κ)/(κ-1)` once every `|W - 1| <= 1/2`; the relative
/// error is then at most `exp(2T) - 1`.
pub fn euler_product_eval(
    w: &BivariateLocalFactor,
    s: Complex64,
    prime_bound: u64,
) -> Result<EulerProductValue> {
    euler_product_blocked(w, s, prime_bound, PRIME_BLOCK)
}

pub fn euler_product_blocked(
    w: &BivariateLocalFactor,
    s: Complex64,
    prime_bound: u64,
    block: usize,
) -> Result<EulerProductValue> {
    if !w.has_unit_constant() {
        return Err(Error::ConstantTermNotOne);
    }
    let sigma_a = abscissa(w)?;
    if s.re.is_nan() || s.re <= r64_to_f64(sigma_a) {
        return Err(Error::Precondition(format!(
            "Re s = {} is not beyond the abscissa {}",
            s.re,
            crate::zetafact::fmt_r64(sigma_a)
        )));
    }
    let primes = primes_up_to(prime_bound);
    let value = blocked_product(&primes, block.max(1), |p| w.eval_at(p as f64, s));
    let tail_bound = tail_bound(w, s.re, prime_bound);
    Ok(EulerProductValue {
        value,
        tail_bound,
        sigma_a,
        prime_bound,
    })
}

/// Ascending product over fixed-size blocks, blocks combined in order.
pub(crate) fn blocked_product<F>(primes: &[u64], block: usize, f: F) -> Complex64
where
    F: Fn(u64) -> Complex64 + Sync,
{
    let partial: Vec<Complex64> = primes
        .par_chunks(block)
        .map(|chunk| {
            chunk
                .iter()
                .fold(Complex64::new(1.0, 0.0), |acc, &p| acc * f(p))
        })
        .collect();
    partial
        .into_iter()
        .fold(Complex64::new(1.0, 0.0), |acc, x| acc * x)
}

fn tail_bound(w: &BivariateLocalFactor, sigma: f64, prime_bound: u64) -> f64 {
    let big_p = prime_bound.max(1) as f64;
    let mut t = 0.0;
    let mut at_cutoff = 0.0;
    for (u, v, c) in w.terms() {
        if *v.numer() == 0 {
            continue;
        }
        let kappa = r64_to_f64(v) * sigma - r64_to_f64(u);
        let a = ratio_to_f64(c).abs();
        t += a * big_p.powf(1.0 - kappa) / (kappa - 1.0);
        at_cutoff += a * big_p.powf(-kappa);
    }
    if at_cutoff > 0.5 {
        return f64::INFINITY;
    }
    (2.0 * t).exp_m1()
}

/// Partial products of `∏_p h(p^-s1, ..., p^-sn, p)` at each power of ten up
/// to `prime_bound`, plus the per-decade sums of `|log h(p)|`.
pub fn multi_euler_decades(
    h: &MultiPoly,
    s: &[Complex64],
    prime_bound: u64,
) -> Result<Vec<(u64, Complex64, f64)>> {
    if s.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            got: s.len(),
        });
    }
    let primes = primes_up_to(prime_bound);
    let mut out = Vec::new();
    let mut prod = Complex64::new(1.0, 0.0);
    let mut decade = 10u64;
    let mut mass = 0.0;
    for &p in &primes {
        while p > decade {
            out.push((decade, prod, mass));
            mass = 0.0;
            decade *= 10;
        }
        let v = h.eval_euler(p as f64, s);
        prod *= v;
        mass += v.ln().norm();
    }
    while decade <= prime_bound {
        out.push((decade, prod, mass));
        mass = 0.0;
        decade *= 10;
    }
    Ok(out)
}
