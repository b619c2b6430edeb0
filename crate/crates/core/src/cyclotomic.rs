//! Cyclotomicity of local factors.
//!
//! A univariate `h` with `h(0) = 1` gives an Euler product `∏_p h(p^-s)`
//! that continues to the whole plane exactly when `h` is a product of
//! cyclotomic polynomials; otherwise `Re s = 0` is a natural boundary. The
//! exact test divides out reversed cyclotomic polynomials; a numeric root
//! test supplies the witness when that fails.
//!
//! In several variables, cyclotomic means `h = ∏ (1 - X^m)^γ` with integer
//! `γ` (negative allowed), decided by log elimination plus an exact
//! polynomial identity.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polycore::roots::poly_roots;
use crate::polycore::{BivariateLocalFactor, MultiPoly, UniPoly};
use crate::primes::{divisors, mobius, totient};
use crate::zetafact::{big_json, eliminate, exact_product_identity};

/// Off-circle threshold for numeric roots.
pub const CIRCLE_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub enum CyclotomicFactorization {
    /// `h = ∏ Φ_d^k` with `Φ_d` reversed to constant term 1; `(d, k)`.
    Indices(Vec<(u64, u32)>),
    /// `h = ∏ (1 - X^m)^γ`.
    Monomials {
        n: usize,
        factors: Vec<(Vec<i64>, BigInt)>,
    },
}

impl CyclotomicFactorization {
    fn to_json(&self) -> Value {
        match self {
            CyclotomicFactorization::Indices(v) => v
                .iter()
                .map(|(d, k)| json!({"index": d, "multiplicity": k}))
                .collect(),
            CyclotomicFactorization::Monomials { factors, .. } => factors
                .iter()
                .map(|(m, g)| json!({"m": m, "gamma": big_json(g)}))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// A root off the unit circle, polished to `residual` (relative).
    Root { root: Complex64, residual: f64 },
    /// Elimination to `depth` did not close into a finite product.
    Depth {
        depth: i64,
        factors: usize,
        max_gamma: BigInt,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum CyclotomicVerdict {
    Cyclotomic(CyclotomicFactorization),
    NotCyclotomic(Witness),
}

impl CyclotomicVerdict {
    pub fn is_cyclotomic(&self) -> bool {
        matches!(self, CyclotomicVerdict::Cyclotomic(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            CyclotomicVerdict::Cyclotomic(f) => {
                json!({"status": "cyclotomic", "factors": f.to_json()})
            }
            CyclotomicVerdict::NotCyclotomic(Witness::Root { root, residual }) => json!({
                "status": "not_cyclotomic",
                "witness": {
                    "kind": "root",
                    "re": root.re,
                    "im": root.im,
                    "modulus": root.norm(),
                    "residual": residual,
                }
            }),
            CyclotomicVerdict::NotCyclotomic(Witness::Depth {
                depth,
                factors,
                max_gamma,
            }) => json!({
                "status": "not_cyclotomic",
                "witness": {"kind": "depth", "depth": depth, "factors": factors, "max_gamma": big_json(max_gamma)}
            }),
        }
    }
}

/// Reversed cyclotomic polynomial `∏_{e | d} (1 - X^e)^μ(d/e)`, constant
/// term 1 (equal to `Φ_d` itself for `d > 1`).
pub fn cyclotomic_poly(d: u64) -> UniPoly {
    let deg = totient(d) as usize;
    // expand as a power series to degree φ(d); it is a polynomial
    let mut c = vec![0i64; deg + 1];
    c[0] = 1;
    for e in divisors(d) {
        let e = e as usize;
        match mobius(d / e as u64) {
            1 => {
                for i in (e..=deg).rev() {
                    c[i] -= c[i - e];
                }
            }
            -1 => {
                for i in e..=deg {
                    c[i] += c[i - e];
                }
            }
            _ => {}
        }
    }
    UniPoly::new(c.into_iter().map(BigInt::from).collect())
}

/// Exact decomposition into reversed cyclotomic polynomials, if any.
pub fn cyclotomic_decomposition(h: &UniPoly) -> Option<Vec<(u64, u32)>> {
    let d = h.degree()?;
    if !h.has_unit_constant() || !h.coeff(d).abs().is_one() {
        return None;
    }
    let mut rest = h.clone();
    let mut out = Vec::new();
    let bound = 2 * (d as u64) * (d as u64);
    for m in 1..=bound.max(2) {
        let rd = rest.degree().unwrap_or(0);
        if rd == 0 {
            break;
        }
        if totient(m) as usize > rd {
            continue;
        }
        let phi = cyclotomic_poly(m);
        let mut k = 0;
        while let Some(q) = rest.div_exact(&phi) {
            rest = q;
            k += 1;
        }
        if k > 0 {
            out.push((m, k));
        }
    }
    (rest == UniPoly::one()).then_some(out)
}

/// Numeric roots of the square-free part of `h`.
pub fn numeric_roots(h: &UniPoly) -> Result<Vec<Complex64>> {
    let sf = h.squarefree();
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    poly_roots(&sf.to_f64())
}

/// The numeric side of the dichotomy: every root within [`CIRCLE_TOL`] of
/// the unit circle.
pub fn roots_on_unit_circle(h: &UniPoly) -> Result<bool> {
    Ok(numeric_roots(h)?
        .iter()
        .all(|z| (z.norm() - 1.0).abs() < CIRCLE_TOL))
}

fn relative_residual(h: &UniPoly, z: Complex64) -> f64 {
    let scale: f64 = h
        .to_f64()
        .iter()
        .enumerate()
        .map(|(k, c)| c.abs() * z.norm().powi(k as i32))
        .sum();
    h.eval_complex(z).norm() / scale
}

pub fn cyclotomic_factor_uni(h: &UniPoly) -> Result<CyclotomicVerdict> {
    h.require_euler_factor()?;
    if let Some(idx) = cyclotomic_decomposition(h) {
        let rebuilt = idx.iter().fold(UniPoly::one(), |acc, &(d, k)| {
            &acc * &cyclotomic_poly(d).pow(k)
        });
        assert_eq!(&rebuilt, h, "cyclotomic reconstruction");
        return Ok(CyclotomicVerdict::Cyclotomic(
            CyclotomicFactorization::Indices(idx),
        ));
    }
    let roots = numeric_roots(h)?;
    let off: Vec<Complex64> = roots
        .iter()
        .copied()
        .filter(|z| (z.norm() - 1.0).abs() >= CIRCLE_TOL)
        .collect();
    // the product of |roots| is 1/|lead| <= 1, so some off-circle root lies inside
    let root = off
        .iter()
        .copied()
        .min_by(|a, b| a.norm().total_cmp(&b.norm()))
        .or_else(|| {
            roots
                .iter()
                .copied()
                .max_by(|a, b| (a.norm() - 1.0).abs().total_cmp(&(b.norm() - 1.0).abs()))
        })
        .ok_or(Error::ZeroPolynomial)?;
    let residual = relative_residual(h, root);
    Ok(CyclotomicVerdict::NotCyclotomic(Witness::Root {
        root,
        residual,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Continuation {
    ContinuesToWholePlane,
    NaturalBoundaryAtImaginaryAxis,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EstermannReport {
    pub verdict: Continuation,
    pub detail: CyclotomicVerdict,
    /// For cyclotomic `h`: `∏_p h(p^-s) = ∏ ζ(k s)^c` as `(k, c)`.
    pub zeta_factors: Vec<(u64, i64)>,
}

impl EstermannReport {
    pub fn to_json(&self) -> Value {
        let verdict = match self.verdict {
            Continuation::ContinuesToWholePlane => "continues_to_whole_plane",
            Continuation::NaturalBoundaryAtImaginaryAxis => "natural_boundary_at_imaginary_axis",
        };
        json!({
            "verdict": verdict,
            "half_plane": "meromorphic continuation to Re s > 0",
            "detail": self.detail.to_json(),
            "zeta": self.zeta_factors.iter().map(|(k, c)| json!({"k": k, "c": c})).collect::<Vec<_>>(),
        })
    }
}

pub fn estermann_verdict(h: &UniPoly) -> Result<EstermannReport> {
    let detail = cyclotomic_factor_uni(h)?;
    let (verdict, zeta_factors) = match &detail {
        CyclotomicVerdict::Cyclotomic(CyclotomicFactorization::Indices(idx)) => {
            let mut acc: std::collections::BTreeMap<u64, i64> = Default::default();
            for &(d, k) in idx {
                for e in divisors(d) {
                    // ∏_p (1 - p^(-e s)) = 1/ζ(e s)
                    *acc.entry(e).or_default() -= mobius(d / e) as i64 * k as i64;
                }
            }
            acc.retain(|_, c| *c != 0);
            (
                Continuation::ContinuesToWholePlane,
                acc.into_iter().collect(),
            )
        }
        _ => (Continuation::NaturalBoundaryAtImaginaryAxis, Vec::new()),
    };
    Ok(EstermannReport {
        verdict,
        detail,
        zeta_factors,
    })
}

/// Largest factor weight any cyclotomic product of total degree `deg` can
/// need: along a primitive direction of weight `w`, `Φ_d(X^m)` has degree
/// `φ(d) w` and its factors reach weight `d w`.
pub fn cyclotomic_weight_bound(deg: i64) -> i64 {
    let deg = deg.max(1) as u64;
    (1..=2 * deg * deg)
        .filter(|&d| totient(d) <= deg)
        .map(|d| (d * (deg / totient(d))) as i64)
        .max()
        .unwrap_or(1)
}

/// Multivariate cyclotomicity by elimination to total degree `depth`
/// (default: enough for any factorization to appear in full).
pub fn cyclotomic_factor_multi(h: &MultiPoly, depth: Option<i64>) -> Result<CyclotomicVerdict> {
    if h.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if !h.has_unit_constant() {
        return Err(Error::ConstantTermNotOne);
    }
    let deg = h.total_degree();
    let min_depth = 2 * deg + 2;
    let depth = depth.unwrap_or_else(|| min_depth.max(cyclotomic_weight_bound(deg)));
    if depth < min_depth {
        return Err(Error::Precondition(format!(
            "depth must be at least {min_depth}"
        )));
    }
    let weights = vec![1; h.nvars()];
    let log = h.to_series(weights, depth).log()?;
    let factors = eliminate(&log)?;
    let max_gamma = factors
        .iter()
        .map(|(_, e)| e.abs())
        .max()
        .unwrap_or_default();
    if factors.len() as i64 <= depth && exact_product_identity(h, &factors, depth) {
        Ok(CyclotomicVerdict::Cyclotomic(
            CyclotomicFactorization::Monomials { n: h.n(), factors },
        ))
    } else {
        Ok(CyclotomicVerdict::NotCyclotomic(Witness::Depth {
            depth,
            factors: factors.len(),
            max_gamma,
        }))
    }
}

/// Bivariate front end; exponents must be non-negative integers.
pub fn cyclotomic_factor_bivariate(
    w: &BivariateLocalFactor,
    depth: Option<i64>,
) -> Result<CyclotomicVerdict> {
    let h = w.to_multi().ok_or(Error::NonInteger("exponent"))?;
    cyclotomic_factor_multi(&h, depth)
}

/// Expands a multivariate factorization back into a polynomial, when all
/// exponents are small enough to do so.
pub fn expand_monomials(
    n: usize,
    factors: &[(Vec<i64>, BigInt)],
) -> Option<(MultiPoly, MultiPoly)> {
    let mut num = MultiPoly::one(n);
    let mut den = MultiPoly::one(n);
    for (m, e) in factors {
        let k = e.abs().to_u32()?;
        let f = MultiPoly::one_minus_monomial(n, m).pow(k);
        if e.is_positive() {
            num = &num * &f;
        } else {
            den = &den * &f;
        }
    }
    Some((num, den))
}
