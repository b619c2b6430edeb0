//! Zeta factorization of Euler products.
//!
//! `W(x, y) = ∏ (1 - x^a y^b)^e` formally in `y`, found by greedy
//! elimination on `log W`: the least surviving term `c x^a y^b` is removed by
//! the factor with `e = -c`. Each factor contributes `ζ(b s - a)^(-e)` to
//! `∏_p W(p, p^-s)`.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polycore::{fmt_ratio, BivariateLocalFactor, FormalSeries2, MultiPoly, TruncSeries};

/// Greedy elimination of a logarithm in graded-lex order. Returns
/// `(m, e)` such that `∏ (1 - X^m)^e` has the given logarithm up to the
/// series order.
pub(crate) fn eliminate(log: &TruncSeries<BigRational>) -> Result<Vec<(Vec<i64>, BigInt)>> {
    let mut rest = log.clone();
    let mut out = Vec::new();
    loop {
        let Some((m, c)) = rest.iter().next().map(|(m, c)| (m.to_vec(), c.clone())) else {
            break;
        };
        if !c.is_integer() {
            return Err(Error::NonIntegralExponent(fmt_ratio(&-c)));
        }
        let e = -c.to_integer();
        let w = rest.weight_of(&m);
        debug_assert!(w > 0);
        // log (1 - X^m)^e = -e Σ_j X^(jm)/j; subtracting it cancels the term
        for j in 1..=rest.order() / w {
            let coef = BigRational::new(e.clone(), BigInt::from(j));
            rest.add_term(m.iter().map(|x| x * j).collect(), coef);
        }
        debug_assert!(rest.get(&m).is_none());
        out.push((m, e));
    }
    Ok(out)
}

/// Product `∏ (1 - X^m)^e` truncated along `weights` at `order`.
pub(crate) fn expand_factors(
    weights: Vec<i64>,
    order: i64,
    factors: &[(Vec<i64>, BigInt)],
) -> TruncSeries<BigInt> {
    let mut acc = TruncSeries::<BigInt>::one(weights, order);
    for (m, e) in factors {
        if acc.weight_of(m) <= order {
            acc = acc.mul_binomial(m, e);
        }
    }
    acc
}

/// One factor `(1 - x^a y^b)^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivFactor {
    pub a: Rational64,
    pub b: Rational64,
    pub e: BigInt,
}

/// `ζ(n s + m)^c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZetaTerm {
    pub n: i64,
    pub m: i64,
    pub c: BigInt,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaFactorization {
    source: BivariateLocalFactor,
    order: i64,
    factors: Vec<BivFactor>,
}

impl ZetaFactorization {
    pub fn source(&self) -> &BivariateLocalFactor {
        &self.source
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Factors in graded-lex order by `(b, a)`.
    pub fn factors(&self) -> &[BivFactor] {
        &self.factors
    }

    pub fn exponent(&self, a: Rational64, b: Rational64) -> BigInt {
        self.factors
            .iter()
            .find(|f| f.a == a && f.b == b)
            .map_or_else(BigInt::zero, |f| f.e.clone())
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .factors
            .iter()
            .map(|f| json!({"a": fmt_r64(f.a), "b": fmt_r64(f.b), "e": big_json(&f.e)}))
            .collect();
        let zeta: Value = match zeta_form(self) {
            Ok(z) => z
                .iter()
                .map(|t| json!({"n": t.n, "m": t.m, "c": big_json(&t.c)}))
                .collect(),
            Err(_) => Value::Null,
        };
        json!({"order": self.order, "factors": factors, "zeta": zeta})
    }
}

pub(crate) fn fmt_r64(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer as a JSON number when it fits, else as a decimal string.
pub(crate) fn big_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

/// Factors `W` up to `y`-order `order`.
pub fn factorize_bivariate(w: &BivariateLocalFactor, order: i64) -> Result<ZetaFactorization> {
    w.require_euler_factor()?;
    if order < 1 {
        return Err(Error::Precondition("order must be at least 1".into()));
    }
    let log = w.to_series(order).log()?;
    let d = w.denom();
    let factors = eliminate(&log)?
        .into_iter()
        .map(|(m, e)| BivFactor {
            a: Rational64::new(m[0], d),
            b: Rational64::new(m[1], d),
            e,
        })
        .collect();
    Ok(ZetaFactorization {
        source: w.clone(),
        order,
        factors,
    })
}

/// Expands the factorization as a series to `y`-order `order`.
pub fn reconstruct(f: &ZetaFactorization, order: i64) -> Result<FormalSeries2> {
    if order > f.order {
        return Err(Error::OrderExceeded {
            requested: order,
            stored: f.order,
        });
    }
    let d = f.source.denom();
    let factors: Vec<(Vec<i64>, BigInt)> = f
        .factors
        .iter()
        .map(|x| {
            (
                vec![(x.a * d).to_integer(), (x.b * d).to_integer()],
                x.e.clone(),
            )
        })
        .collect();
    let prod = expand_factors(vec![0, 1], order * d, &factors);
    Ok(prod.map_coeffs(|c| BigRational::from_integer(c.clone())))
}

/// `(a, b, e) ↦ (n, m, c) = (b, -a, -e)`; refuses non-integral exponents.
pub fn zeta_form(f: &ZetaFactorization) -> Result<Vec<ZetaTerm>> {
    f.factors
        .iter()
        .map(|x| {
            if !x.a.is_integer() || !x.b.is_integer() {
                return Err(Error::NonInteger("factor exponent"));
            }
            Ok(ZetaTerm {
                n: x.b.to_integer(),
                m: -x.a.to_integer(),
                c: -&x.e,
            })
        })
        .collect()
}

/// Inverse of [`zeta_form`] on factor triples.
pub fn from_zeta_form(terms: &[ZetaTerm]) -> Vec<BivFactor> {
    terms
        .iter()
        .map(|t| BivFactor {
            a: Rational64::from_integer(-t.m),
            b: Rational64::from_integer(t.n),
            e: -&t.c,
        })
        .collect()
}

/// Multivariate factorization `Z(h; s) = ∏ ζ(⟨m, s⟩)^γ(m) · G(s)`.
///
/// `m` is the full exponent vector over `X1..X(n+1)`; with `X(n+1) ↦ p` the
/// factor reads `ζ(⟨m', s⟩ - m_(n+1))` where `m'` drops the last entry.
/// `γ = -e` for the factor `(1 - X^m)^e`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiZetaFactorization {
    pub n: usize,
    pub r: u32,
    pub cutoff: i64,
    pub factors: Vec<(Vec<i64>, BigInt)>,
    /// The factors reproduce `h` exactly as a polynomial.
    pub terminating: bool,
    /// Non-zero `γ` occur above half the cutoff.
    pub growth: bool,
}

impl MultiZetaFactorization {
    pub fn gamma(&self, m: &[i64]) -> BigInt {
        self.factors
            .iter()
            .find(|(x, _)| x == m)
            .map_or_else(BigInt::zero, |(_, g)| g.clone())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "r": self.r,
            "cutoff": self.cutoff,
            "terminating": self.terminating,
            "growth": self.growth,
            "factors": self.factors.iter().map(|(m, g)| json!({"m": m, "gamma": big_json(g)})).collect::<Vec<_>>(),
        })
    }
}

fn base_weights(n: usize) -> Vec<i64> {
    let mut w = vec![1; n];
    w.push(0);
    w
}

/// Default cutoff `N_r = r · (max base degree)`: a log term built from `j`
/// monomials of `h` then lies at least `j/r` beyond its block threshold, so
/// everything above the cutoff converges absolutely on `V(h; 1/r)`.
pub fn default_cutoff(h: &MultiPoly, r: u32) -> i64 {
    r as i64 * h.base_degree().max(1)
}

pub fn factorize_multivariate(
    h: &MultiPoly,
    r: u32,
    cutoff: Option<i64>,
) -> Result<MultiZetaFactorization> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    if !h.has_unit_constant() {
        return Err(Error::ConstantTermNotOne);
    }
    let n = h.n();
    let cutoff = cutoff.unwrap_or_else(|| default_cutoff(h, r));
    let series = h.to_series(base_weights(n), cutoff);
    let log = series.log()?;
    let elim = eliminate(&log)?;
    let terminating = exact_product_identity(h, &elim, cutoff);
    let w = |m: &[i64]| m[..n].iter().sum::<i64>();
    let growth = !terminating && elim.iter().any(|(m, _)| 2 * w(m) > cutoff);
    let factors = elim.into_iter().map(|(m, e)| (m, -e)).collect();
    Ok(MultiZetaFactorization {
        n,
        r,
        cutoff,
        factors,
        terminating,
        growth,
    })
}

/// `∏_{e>0} (1 - X^m)^e == h · ∏_{e<0} (1 - X^m)^(-e)` as polynomials.
///
/// Exponent growth beyond what any finite product of polynomial degree
/// `deg h` can need is rejected before expanding.
pub(crate) fn exact_product_identity(
    h: &MultiPoly,
    factors: &[(Vec<i64>, BigInt)],
    depth: i64,
) -> bool {
    let budget = BigInt::from(64 * depth.max(1) * depth.max(1));
    let size: BigInt = factors
        .iter()
        .map(|(m, e)| e.abs() * BigInt::from(m.iter().sum::<i64>()))
        .sum();
    if size > budget {
        return false;
    }
    let n = h.n();
    let mut lhs = MultiPoly::one(n);
    let mut rhs = h.clone();
    for (m, e) in factors {
        let k = e.abs().to_u32().expect("bounded by budget");
        let f = MultiPoly::one_minus_monomial(n, m).pow(k);
        if e.is_positive() {
            lhs = &lhs * &f;
        } else {
            rhs = &rhs * &f;
        }
    }
    lhs == rhs
}

/// Truncated expansion of the multivariate factors (in `(1 - X^m)^(-γ)` form)
/// up to base weight `order`.
pub fn reconstruct_multi(f: &MultiZetaFactorization, order: i64) -> Result<MultiPoly> {
    if order > f.cutoff {
        return Err(Error::OrderExceeded {
            requested: order,
            stored: f.cutoff,
        });
    }
    let factors: Vec<(Vec<i64>, BigInt)> = f.factors.iter().map(|(m, g)| (m.clone(), -g)).collect();
    let prod = expand_factors(base_weights(f.n), order, &factors);
    MultiPoly::try_new(f.n, prod.iter().map(|(e, c)| (e.to_vec(), c.clone())))
}

/// `W · ∏ (1 - x^a y^b)^(-e)` to the factorization's order; `1` when the
/// factorization is right.
pub fn remainder_series(f: &ZetaFactorization) -> FormalSeries2 {
    let d = f.source.denom();
    let inverse: Vec<(Vec<i64>, BigInt)> = f
        .factors
        .iter()
        .map(|x| (vec![(x.a * d).to_integer(), (x.b * d).to_integer()], -&x.e))
        .collect();
    let inv = expand_factors(vec![0, 1], f.order * d, &inverse)
        .map_coeffs(|c| BigRational::from_integer(c.clone()));
    f.source.to_series(f.order).mul_trunc(&inv)
}

/// Whether `series` is `1` to its order.
pub fn is_one(series: &FormalSeries2) -> bool {
    let zero = vec![0; series.nvars()];
    series.len() == 1 && series.get(&zero).is_some_and(One::is_one)
}
