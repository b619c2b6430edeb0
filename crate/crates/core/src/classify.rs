//! Five-way classification of `∏_p W(p, p^-s)` by the position of its
//! expected boundary `Re s = β`.
//!
//! 1. `W` equals its ghost and the ghost is cyclotomic: a finite zeta product.
//! 2. The ghost is not cyclotomic.
//! 3. Infinitely many zeta factors cross the line (checked by growth in depth).
//! 4. Finitely many crossing factors, local zeros right of the line for
//!    every tested prime near the bound.
//! 5. Neither.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cyclotomic::{cyclotomic_factor_uni, estermann_verdict, CyclotomicVerdict};
use crate::error::{Error, Result};
use crate::polycore::roots::{cluster_roots, poly_roots};
use crate::polycore::{r64_to_f64, substitute_prime, BivariateLocalFactor, UniPoly};
use crate::primes::{is_prime, primes_up_to};
use crate::zetafact::{big_json, factorize_bivariate, fmt_r64, BivFactor};

/// Residual bound, relative to the sum of term moduli, for reported zeros.
pub const ZERO_RESIDUAL: f64 = 1e-9;

/// Number of leading factors kept as evidence.
const PREFIX_LEN: usize = 16;

pub fn beta(w: &BivariateLocalFactor) -> Result<Rational64> {
    w.terms()
        .filter(|(_, v, _)| v.is_positive())
        .map(|(u, v, _)| u / v)
        .max()
        .ok_or(Error::ConstantInY)
}

/// The constant term plus the terms on the line `u = β v`.
pub fn ghost(w: &BivariateLocalFactor) -> Result<BivariateLocalFactor> {
    let b = beta(w)?;
    Ok(w.filter(|u, v| (u.is_zero() && v.is_zero()) || (v.is_positive() && u == b * v)))
}

/// The ghost as a polynomial `g(t)` in `t = x^n0 y^m0`, `β = n0/m0`.
fn ghost_univariate(g: &BivariateLocalFactor, b: Rational64) -> Result<(UniPoly, Rational64)> {
    let m0 = Rational64::from_integer(*b.denom());
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (_, v, c) in g.terms() {
        let k = v / m0;
        if !k.is_integer() {
            return Err(Error::NonInteger("exponent"));
        }
        if !c.is_integer() {
            return Err(Error::NonInteger("coefficient"));
        }
        let k = k.to_integer() as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += c.to_integer();
    }
    Ok((UniPoly::new(coeffs), m0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalZero {
    pub re: f64,
    /// Imaginary part reduced to `[0, period)`.
    pub im: f64,
    pub multiplicity: usize,
    pub residual: f64,
}

impl LocalZero {
    pub fn s(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Zeros of `s ↦ W(p, p^-s)` in one period strip; the full set is
/// `s + i k period`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalZeroSet {
    pub p: u64,
    /// `2π q / ln p`, where `q` is the denominator of the `y`-exponents.
    pub period: f64,
    /// Degree in `y^(1/q)` after removing powers of `y` dividing `W(p, ·)`.
    pub degree: usize,
    pub zeros: Vec<LocalZero>,
}

impl LocalZeroSet {
    pub fn count(&self) -> usize {
        self.zeros.iter().map(|z| z.multiplicity).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "period": self.period,
            "degree": self.degree,
            "zeros": self.zeros.iter().map(|z| json!({
                "re": z.re, "im": z.im, "multiplicity": z.multiplicity, "residual": z.residual,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Local zeros with `Re s` in `window` (all of them when `None`).
pub fn local_zeros(
    w: &BivariateLocalFactor,
    p: u64,
    window: Option<(f64, f64)>,
) -> Result<LocalZeroSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !w.depends_on_y() {
        return Err(Error::ConstantInY);
    }
    let lp = substitute_prime(w, p)?;
    let coeffs: &[f64] = {
        let lo = lp.coeffs.iter().take_while(|c| **c == 0.0).count();
        &lp.coeffs[lo..]
    };
    if coeffs.last().is_none_or(|c| *c == 0.0) {
        return Err(Error::Degenerate(p));
    }
    let lnp = (p as f64).ln();
    let q = lp.q as f64;
    let period = 2.0 * PI * q / lnp;
    let roots = poly_roots(coeffs)?;
    let mut zeros: Vec<LocalZero> = cluster_roots(&roots, 1e-6)
        .into_iter()
        .map(|(u, multiplicity)| {
            // u = p^(-s/q)
            let re = -q * u.norm().ln() / lnp;
            let im = (-q * u.arg() / lnp).rem_euclid(period);
            let s = Complex64::new(re, im);
            let residual = w.eval_at(p as f64, s).norm() / w.abs_scale_at(p as f64, s);
            LocalZero {
                re,
                im,
                multiplicity,
                residual,
            }
        })
        .filter(|z| window.is_none_or(|(a, b)| a <= z.re && z.re <= b))
        .collect();
    zeros.sort_by(|a, b| b.re.total_cmp(&a.re).then(a.im.total_cmp(&b.im)));
    Ok(LocalZeroSet {
        p,
        period,
        degree: coeffs.len() - 1,
        zeros,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClusterRow {
    pub p: u64,
    /// Lattice point right of the line closest to `β + iτ`.
    pub nearest: Option<Complex64>,
    pub distance: Option<f64>,
    /// Smallest `Re s - β` over zeros right of the line.
    pub min_offset: Option<f64>,
}

impl ClusterRow {
    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "nearest": self.nearest.map(|z| json!({"re": z.re, "im": z.im})),
            "distance": self.distance,
            "min_offset": self.min_offset,
        })
    }
}

/// For each prime, the local zero right of `Re s = re` nearest to `re + iτ`.
pub fn boundary_cluster(
    w: &BivariateLocalFactor,
    re: f64,
    tau: f64,
    primes: &[u64],
) -> Result<Vec<ClusterRow>> {
    if primes.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::Precondition("primes must be increasing".into()));
    }
    primes
        .par_iter()
        .map(|&p| {
            let set = local_zeros(w, p, None)?;
            let right: Vec<&LocalZero> = set.zeros.iter().filter(|z| z.re > re).collect();
            let nearest = right
                .iter()
                .map(|z| {
                    let k = ((tau - z.im) / set.period).round();
                    Complex64::new(z.re, z.im + k * set.period)
                })
                .min_by(|a, b| {
                    let t = Complex64::new(re, tau);
                    (a - t).norm().total_cmp(&(b - t).norm())
                });
            Ok(ClusterRow {
                p,
                nearest,
                distance: nearest.map(|z| (z - Complex64::new(re, tau)).norm()),
                min_offset: right.iter().map(|z| z.re - re).min_by(f64::total_cmp),
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    Exact,
    VerifiedToDepth { depth: i64, prime_bound: u64 },
}

/// Local zeros right of the line over all primes up to the bound.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCensus {
    pub prime_bound: u64,
    pub primes_tested: usize,
    pub primes_with_zero: usize,
    /// `(P/10, P]`.
    pub top_decade: (u64, u64),
    pub top_decade_primes: usize,
    pub top_decade_with_zero: usize,
    /// Primes where the leading coefficient vanishes.
    pub degenerate: Vec<u64>,
    /// Rightmost zero found and its prime.
    pub rightmost: Option<(u64, f64)>,
}

impl ZeroCensus {
    fn to_json(&self) -> Value {
        json!({
            "prime_bound": self.prime_bound,
            "primes_tested": self.primes_tested,
            "primes_with_zero": self.primes_with_zero,
            "top_decade": [self.top_decade.0, self.top_decade.1],
            "top_decade_primes": self.top_decade_primes,
            "top_decade_with_zero": self.top_decade_with_zero,
            "degenerate": self.degenerate,
            "rightmost": self.rightmost.map(|(p, re)| json!({"p": p, "re": re})),
        })
    }
}

pub fn zero_census(w: &BivariateLocalFactor, line: f64, prime_bound: u64) -> Result<ZeroCensus> {
    if prime_bound < 2 {
        return Err(Error::Precondition("prime bound must be at least 2".into()));
    }
    let primes = primes_up_to(prime_bound);
    let found: Vec<(u64, Option<Option<f64>>)> = primes
        .par_iter()
        .map(|&p| match local_zeros(w, p, None) {
            Ok(set) => Ok((
                p,
                Some(
                    set.zeros
                        .iter()
                        .map(|z| z.re)
                        .filter(|&r| r > line)
                        .max_by(f64::total_cmp),
                ),
            )),
            Err(Error::Degenerate(_)) => Ok((p, None)),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    let lo = prime_bound / 10;
    let top = |p: u64| p > lo;
    let hit = |r: &Option<Option<f64>>| matches!(r, Some(Some(_)));
    Ok(ZeroCensus {
        prime_bound,
        primes_tested: primes.len(),
        primes_with_zero: found.iter().filter(|(_, r)| hit(r)).count(),
        top_decade: (lo, prime_bound),
        top_decade_primes: found.iter().filter(|(p, _)| top(*p)).count(),
        top_decade_with_zero: found.iter().filter(|(p, r)| top(*p) && hit(r)).count(),
        degenerate: found
            .iter()
            .filter(|(_, r)| r.is_none())
            .map(|(p, _)| *p)
            .collect(),
        rightmost: found
            .iter()
            .filter_map(|(p, r)| r.flatten().map(|re| (*p, re)))
            .max_by(|a, b| a.1.total_cmp(&b.1)),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evidence {
    pub depth: i64,
    /// Leading factors `(1 - x^a y^b)^e`; the full list in case 1.
    pub factors: Vec<BivFactor>,
    /// Factors with `a < β b < a + 1` up to the depth.
    pub crossing: Vec<BivFactor>,
    /// How many of those have `b <= depth / 2`.
    pub crossing_in_half: usize,
    pub census: Option<ZeroCensus>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub beta: Rational64,
    pub ghost: BivariateLocalFactor,
    pub case_label: u8,
    pub ghost_verdict: CyclotomicVerdict,
    pub evidence: Evidence,
    pub confidence: Confidence,
}

fn factor_json(f: &BivFactor) -> Value {
    json!({"a": fmt_r64(f.a), "b": fmt_r64(f.b), "e": big_json(&f.e)})
}

impl Classification {
    pub fn to_json(&self) -> Value {
        let confidence = match self.confidence {
            Confidence::Exact => json!({"kind": "exact"}),
            Confidence::VerifiedToDepth { depth, prime_bound } => {
                json!({"kind": "verified_to_depth", "depth": depth, "prime_bound": prime_bound})
            }
        };
        let e = &self.evidence;
        json!({
            "caseLabel": self.case_label,
            "beta": fmt_r64(self.beta),
            "ghost": self.ghost.to_string(),
            "ghost_verdict": self.ghost_verdict.to_json(),
            "evidence": {
                "depth": e.depth,
                "factors": e.factors.iter().map(factor_json).collect::<Vec<_>>(),
                "crossing": e.crossing.iter().map(factor_json).collect::<Vec<_>>(),
                "crossing_in_half": e.crossing_in_half,
                "census": e.census.as_ref().map(ZeroCensus::to_json),
            },
            "confidence": confidence,
        })
    }
}

/// `a < β b < a + 1`.
pub fn crosses(f: &BivFactor, beta: Rational64) -> bool {
    let bb = beta * f.b;
    f.a < bb && bb < f.a + 1
}

pub fn classify(w: &BivariateLocalFactor, depth: i64, prime_bound: u64) -> Result<Classification> {
    w.require_euler_factor()?;
    if !w.is_integral() {
        return Err(Error::NonInteger("exponent"));
    }
    if depth < 2 {
        return Err(Error::Precondition("depth must be at least 2".into()));
    }
    let b = beta(w)?;
    let g = ghost(w)?;
    let (gu, m0) = ghost_univariate(&g, b)?;
    let ghost_verdict = cyclotomic_factor_uni(&gu)?;
    let exact = |case_label, factors| Classification {
        beta: b,
        ghost: g.clone(),
        case_label,
        ghost_verdict: ghost_verdict.clone(),
        evidence: Evidence {
            depth,
            factors,
            crossing: Vec::new(),
            crossing_in_half: 0,
            census: None,
        },
        confidence: Confidence::Exact,
    };

    if !ghost_verdict.is_cyclotomic() {
        let fact = factorize_bivariate(w, depth)?;
        let prefix = fact.factors().iter().take(PREFIX_LEN).cloned().collect();
        return Ok(exact(2, prefix));
    }
    if &g == w {
        // g(t) = ∏ (1 - t^k)^(-c) with ζ(k s)^c read off the Möbius expansion
        let n0 = Rational64::from_integer(*b.numer());
        let factors = estermann_verdict(&gu)?
            .zeta_factors
            .into_iter()
            .map(|(k, c)| {
                let k = Rational64::from_integer(k as i64);
                BivFactor {
                    a: k * n0,
                    b: k * m0,
                    e: BigInt::from(-c),
                }
            })
            .collect();
        return Ok(exact(1, factors));
    }

    let fact = factorize_bivariate(w, depth)?;
    let crossing: Vec<BivFactor> = fact
        .factors()
        .iter()
        .filter(|f| crosses(f, b))
        .cloned()
        .collect();
    let half = Rational64::new(depth, 2);
    let crossing_in_half = crossing.iter().filter(|f| f.b <= half).count();
    let mut evidence = Evidence {
        depth,
        factors: fact.factors().iter().take(PREFIX_LEN).cloned().collect(),
        crossing,
        crossing_in_half,
        census: None,
    };
    let case_label = if evidence.crossing.len() > crossing_in_half {
        3
    } else {
        let census = zero_census(w, r64_to_f64(b), prime_bound)?;
        let lucky =
            census.top_decade_primes > 0 && census.top_decade_with_zero == census.top_decade_primes;
        evidence.census = Some(census);
        if lucky {
            4
        } else {
            5
        }
    };
    Ok(Classification {
        beta: b,
        ghost: g,
        case_label,
        ghost_verdict,
        evidence,
        confidence: Confidence::VerifiedToDepth { depth, prime_bound },
    })
}

/// Distance from `β + iτ` to the nearest point of a lattice `z + i k period`.
pub fn lattice_distance(z: Complex64, period: f64, target: Complex64) -> f64 {
    let k = ((target.im - z.im) / period).round();
    (Complex64::new(z.re, z.im + k * period) - target).norm()
}

/// First-order position `β - ln(1 - 1/p)/ln p` of the GSp6 zero near the line.
pub fn gsp6_predicted_re(p: u64) -> f64 {
    let p = p as f64;
    4.0 - (1.0 - 1.0 / p).ln() / p.ln()
}

/// Predicted offset `1/(4 √2 p^(1/4) ln p)` of the cubic-surface zeros.
pub fn cubic_predicted_offset(p: u64) -> f64 {
    let p = p as f64;
    1.0 / (4.0 * 2f64.sqrt() * p.powf(0.25) * p.ln())
}
