//! Dirichlet coefficients of the GSp6 zeta function, its smoothed partial
//! sum `A(x) = Σ a_n e^(-n/x)` and the exponents of the main terms of
//! `A(x)`.
//!
//! With `D(w) = Σ a_n n^-w` the local factor at `p` is, in `t = p^(-3w)`,
//! `W(p, t) / ((1 - t)(1 - p^3 t)(1 - p^5 t)(1 - p^6 t))` where `W` is
//! [`anchors::gsp6`], so `a_n` lives on cubes.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_rational::Rational64;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::analytic::{euler_product_eval, zeta_eval};
use crate::anchors;
use crate::error::{Error, Result};
use crate::primes::{factorize, primes_up_to};
use crate::zetafact::{factorize_bivariate, fmt_r64};

/// Shifts `k` in the factors `ζ(3w - k)` of `D(w)`.
pub const ZETA_SHIFTS: [i64; 4] = [0, 3, 5, 6];

/// Local coefficients `c_p(0..=e_max)`: `a_(p^(3e)) = c_p(e)`.
pub fn local_coeffs(p: u64, e_max: usize) -> Result<Vec<u128>> {
    let p = p as u128;
    let pw = |k: u32| p.checked_pow(k).ok_or(Error::Overflow("local coefficient"));
    // numerator 1 + (p + p^2 + p^3 + p^4) t + p^5 t^2
    let num = [1, pw(1)? + pw(2)? + pw(3)? + pw(4)?, pw(5)?];
    let mut c: Vec<u128> = num
        .iter()
        .copied()
        .chain(std::iter::repeat(0))
        .take(e_max + 1)
        .collect();
    // divide by each (1 - q t): running prefix c_e += q c_(e-1)
    for q in [1, pw(3)?, pw(5)?, pw(6)?] {
        for e in 1..=e_max {
            let add = c[e - 1]
                .checked_mul(q)
                .ok_or(Error::Overflow("local coefficient"))?;
            c[e] = c[e]
                .checked_add(add)
                .ok_or(Error::Overflow("local coefficient"))?;
        }
    }
    Ok(c)
}

/// Non-zero `a_n` for `n <= N`, all at cubes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSp6Coefficients {
    pub bound: u64,
    coeffs: BTreeMap<u64, u128>,
}

impl GSp6Coefficients {
    pub fn get(&self, n: u64) -> u128 {
        self.coeffs.get(&n).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u128)> + '_ {
        self.coeffs.iter().map(|(n, a)| (*n, *a))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ_{n <= N} a_n n^-s`.
    pub fn dirichlet_sum(&self, s: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .map(|(&n, &a)| a as f64 * (-s * (n as f64).ln()).exp())
            .sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,a_n\n");
        for (n, a) in &self.coeffs {
            out.push_str(&format!("{n},{a}\n"));
        }
        out
    }
}

fn icbrt(n: u64) -> u64 {
    let mut k = (n as f64).cbrt().round() as u64;
    while k.checked_pow(3).is_none_or(|c| c > n) {
        k -= 1;
    }
    while (k + 1).checked_pow(3).is_some_and(|c| c <= n) {
        k += 1;
    }
    k
}

pub fn gsp6_coeffs(bound: u64) -> Result<GSp6Coefficients> {
    if bound < 1 {
        return Err(Error::Precondition("N must be at least 1".into()));
    }
    let kmax = icbrt(bound);
    let local: BTreeMap<u64, Vec<u128>> = primes_up_to(kmax)
        .into_par_iter()
        .map(|p| {
            let e_max = (kmax as f64).log(p as f64).floor() as usize + 1;
            local_coeffs(p, e_max).map(|c| (p, c))
        })
        .collect::<Result<_>>()?;
    let coeffs = (1..=kmax)
        .into_par_iter()
        .map(|k| {
            let mut a: u128 = 1;
            for (p, e) in factorize(k) {
                a = a
                    .checked_mul(local[&p][e as usize])
                    .ok_or(Error::Overflow("coefficient"))?;
            }
            Ok((k * k * k, a))
        })
        .collect::<Result<BTreeMap<u64, u128>>>()?;
    Ok(GSp6Coefficients { bound, coeffs })
}

/// Abscissa used for the Rankin tail bounds.
const RANKIN_SIGMA: f64 = 2.6;

/// Upper bound for `Σ a_n n^-σ` at [`RANKIN_SIGMA`] from the Euler product.
fn rankin_constant() -> Result<f64> {
    static CELL: OnceLock<f64> = OnceLock::new();
    if let Some(v) = CELL.get() {
        return Ok(*v);
    }
    let w = 3.0 * RANKIN_SIGMA;
    let local = euler_product_eval(&anchors::gsp6(), Complex64::new(w, 0.0), 10_000)?;
    let zetas = ZETA_SHIFTS
        .iter()
        .map(|&k| zeta_eval(Complex64::new(w - k as f64, 0.0)).map(|z| z.re))
        .product::<Result<f64>>()?;
    let v = zetas * local.value.re * (1.0 + local.tail_bound);
    Ok(*CELL.get_or_init(|| v))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Smoothed {
    pub x: f64,
    pub value: f64,
    /// Bound on the omitted `Σ_{n > N} a_n e^(-n/x)`.
    pub tail_bound: f64,
    pub bound: u64,
}

impl Smoothed {
    pub fn to_json(&self) -> Value {
        json!({"x": self.x, "value": self.value, "tail_bound": self.tail_bound, "N": self.bound})
    }
}

/// Smallest `N` accepted for `x`.
pub fn smoothed_min_bound(x: f64) -> u64 {
    (30.0 * x).ceil() as u64
}

/// `A(x)` from the coefficients up to `N >= 30 x`. For `n > N`,
/// `e^(-n/x) <= N^σ e^(-N/x) n^-σ`, so the tail is at most
/// `N^σ e^(-N/x) Σ a_n n^-σ`.
pub fn gsp6_smoothed(x: f64, coeffs: &GSp6Coefficients) -> Result<Smoothed> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Precondition("x must be positive".into()));
    }
    if coeffs.bound < smoothed_min_bound(x) {
        return Err(Error::Precondition(format!(
            "N = {} is below 30 x = {}",
            coeffs.bound,
            smoothed_min_bound(x)
        )));
    }
    let value = coeffs
        .iter()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(n, a)| a as f64 * (-(n as f64) / x).exp())
        .sum();
    let nb = coeffs.bound as f64;
    let tail_bound = (RANKIN_SIGMA * nb.ln() - nb / x).exp() * rankin_constant()?;
    Ok(Smoothed {
        x,
        value,
        tail_bound,
        bound: coeffs.bound,
    })
}

/// Rankin bound `N^(σ' - Re s) Σ a_n n^-σ'` on the tail of the Dirichlet
/// series, for `Re s > σ'`.
pub fn dirichlet_tail_bound(s: Complex64, bound: u64) -> Result<f64> {
    if s.re <= RANKIN_SIGMA {
        return Err(Error::Precondition(format!(
            "Re s must exceed {RANKIN_SIGMA}"
        )));
    }
    Ok((bound as f64).powf(RANKIN_SIGMA - s.re) * rankin_constant()?)
}

/// `ζ(n w - m)^c`, in the variable of `D(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZetaFactorW {
    pub n: i64,
    pub m: i64,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TermStructure {
    /// Only singularities with `Re w` above this are kept.
    pub region: Rational64,
    /// Exponents of `x` from the poles, descending, with the factor causing
    /// each.
    pub poles: Vec<(Rational64, ZetaFactorW)>,
    /// Factors whose zeros give terms `x^((ρ + m)/n)`.
    pub zero_families: Vec<ZetaFactorW>,
}

impl TermStructure {
    pub fn exponents(&self) -> Vec<Rational64> {
        self.poles.iter().map(|(e, _)| *e).collect()
    }

    /// `ρ ↦ (ρ + m)/n` for each zero family.
    pub fn zero_exponent(&self, family: usize, rho: Complex64) -> Complex64 {
        let f = self.zero_families[family];
        (rho + f.m as f64) / f.n as f64
    }

    pub fn to_json(&self) -> Value {
        json!({
            "region": fmt_r64(self.region),
            "poles": self.poles.iter().map(|(e, f)| json!({
                "exponent": fmt_r64(*e),
                "factor": {"n": f.n, "m": f.m, "c": f.c},
            })).collect::<Vec<_>>(),
            "zero_families": self.zero_families.iter().map(|f| json!({
                "map": format!("(rho + {})/{}", f.m, f.n),
                "factor": {"n": f.n, "m": f.m, "c": f.c},
            })).collect::<Vec<_>>(),
        })
    }
}

/// Exponents of the terms of `A(x)` from singularities of `D(w)` with
/// `Re w > 4/3`: poles of the explicit factors `ζ(3w - k)`, and of the
/// factors `ζ(3 b w - a)^(-e)` from the zeta factorization of the local
/// polynomial to `y`-depth 2. Under RH zeros sit on `Re = 1/2`.
pub fn gsp6_term_structure() -> Result<TermStructure> {
    let region = Rational64::new(4, 3);
    let mut factors: Vec<ZetaFactorW> = ZETA_SHIFTS
        .iter()
        .map(|&k| ZetaFactorW { n: 3, m: k, c: 1 })
        .collect();
    let fact = factorize_bivariate(&anchors::gsp6(), 2)?;
    for f in fact.factors() {
        let e = i64::try_from(&f.e).map_err(|_| Error::Overflow("factor exponent"))?;
        factors.push(ZetaFactorW {
            n: 3 * f.b.to_integer(),
            m: f.a.to_integer(),
            c: -e,
        });
    }
    let mut poles: Vec<(Rational64, ZetaFactorW)> = factors
        .iter()
        .filter(|f| f.c > 0)
        .map(|f| (Rational64::new(f.m + 1, f.n), *f))
        .filter(|(w, _)| *w > region)
        .collect();
    poles.sort_by_key(|p| std::cmp::Reverse(p.0));
    let half = Rational64::new(1, 2);
    let zero_families = factors
        .into_iter()
        .filter(|f| f.c < 0 && (half + f.m) / f.n > region)
        .collect();
    Ok(TermStructure {
        region,
        poles,
        zero_families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_coefficients_at_two() {
        assert_eq!(local_coeffs(2, 2).unwrap(), vec![1, 135, 11287]);
    }

    #[test]
    fn small_coefficients() {
        let a = gsp6_coeffs(1000).unwrap();
        assert_eq!(a.get(1), 1);
        assert_eq!(a.get(8), 135);
        assert_eq!(a.get(6), 0);
        assert_eq!(a.get(216), a.get(8) * a.get(27));
        assert_eq!(a.len(), 10);
        assert_eq!(icbrt(999), 9);
        assert_eq!(icbrt(1000), 10);
    }

    #[test]
    fn smoothed_checks() {
        let x = 100.0;
        let a = gsp6_coeffs(smoothed_min_bound(x)).unwrap();
        let s = gsp6_smoothed(x, &a).unwrap();
        assert!(s.value >= (-1.0 / x).exp());
        assert!(s.tail_bound < 1e-3 * s.value);
        let small = gsp6_coeffs(100).unwrap();
        assert!(gsp6_smoothed(x, &small).is_err());
        let lower = gsp6_smoothed(50.0, &a).unwrap();
        assert!(lower.value < s.value);
    }

    #[test]
    fn term_structure() {
        let t = gsp6_term_structure().unwrap();
        assert_eq!(
            t.exponents(),
            vec![
                Rational64::new(7, 3),
                Rational64::new(2, 1),
                Rational64::new(5, 3)
            ]
        );
        assert_eq!(t.zero_families, vec![ZetaFactorW { n: 6, m: 8, c: -1 }]);
        let rho = Complex64::new(0.5, 14.134725);
        assert!((t.zero_exponent(0, rho) - (rho + 8.0) / 6.0).norm() < 1e-15);
    }
}
