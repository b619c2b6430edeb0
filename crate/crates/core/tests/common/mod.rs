//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

/// Integer polynomial product, coefficients by ascending degree.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Exact quotient of monic-divisor division; panics on a nonzero remainder.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; num.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = r[i + dl - 1] / lead;
        assert_eq!(c * lead, r[i + dl - 1]);
        q[i] = c;
        for (j, d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "inexact division");
    trim(q)
}

/// `Φ_d` by repeated division of `X^d - 1`, reversed and signed so the
/// constant term is 1.
pub fn cyclotomic_rev(d: u64) -> Vec<i64> {
    let mut cache: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
    fn phi(d: u64, cache: &mut BTreeMap<u64, Vec<i64>>) -> Vec<i64> {
        if let Some(v) = cache.get(&d) {
            return v.clone();
        }
        let mut num = vec![0i64; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        for e in 1..d {
            if d.is_multiple_of(e) {
                num = poly_div_exact(&num, &phi(e, cache));
            }
        }
        cache.insert(d, num.clone());
        num
    }
    let mut v = phi(d, &mut cache);
    v.reverse();
    if v[0] < 0 {
        v.iter_mut().for_each(|c| *c = -*c);
    }
    v
}

/// Durand–Kerner roots of `Σ c_i z^i` (leading coefficient nonzero).
pub fn dk_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * z + c)
    };
    let radius = 1.0 + monic[..n].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(
                radius,
                0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64,
            )
        })
        .collect();
    for _ in 0..5000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::one();
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Truncated bivariate series keyed by `(x exponent, y exponent)`.
pub type Series = BTreeMap<(i64, i64), BigInt>;

fn binomial_general(e: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= e - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn series_mul(a: &Series, b: &Series, order: i64) -> Series {
    let mut out = Series::new();
    for ((u1, v1), c1) in a {
        for ((u2, v2), c2) in b {
            if v1 + v2 <= order {
                *out.entry((u1 + u2, v1 + v2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `∏ (1 - x^a y^b)^e` expanded to y-order `order` by the binomial series.
pub fn expand_factors(factors: &[(i64, i64, BigInt)], order: i64) -> Series {
    let mut acc = Series::from([((0, 0), BigInt::one())]);
    for (a, b, e) in factors {
        assert!(*b > 0);
        let mut f = Series::new();
        let mut k = 0u32;
        while (k as i64) * b <= order {
            let c = binomial_general(e, k);
            let c = if k % 2 == 1 { -c } else { c };
            if !c.is_zero() {
                f.insert((a * k as i64, b * k as i64), c);
            }
            k += 1;
        }
        acc = series_mul(&acc, &f, order);
    }
    acc
}

/// Is `p` a point of the closed segment `[a, b]` other than its ends?
fn strictly_inside_segment(a: &[i64], b: &[i64], p: &[i64]) -> bool {
    if p == a || p == b || a == b {
        return false;
    }
    // p = a + t (b - a), 0 < t < 1, checked by cross products
    let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
    let q: Vec<i64> = a.iter().zip(p).map(|(x, y)| y - x).collect();
    for i in 0..d.len() {
        for j in 0..d.len() {
            if d[i] * q[j] != d[j] * q[i] {
                return false;
            }
        }
    }
    let dot: i64 = d.iter().zip(&q).map(|(x, y)| x * y).sum();
    let dd: i64 = d.iter().map(|x| x * x).sum();
    dot > 0 && dot < dd
}

/// Extreme points of a planar point set by brute force: a point survives
/// unless it lies strictly inside a segment or triangle of other points.
pub fn ext_points_2d_brute(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let cross = |o: &[i64], a: &[i64], b: &[i64]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let in_triangle = |a: &[i64], b: &[i64], c: &[i64], p: &[i64]| {
        let area = cross(a, b, c);
        if area == 0 {
            return false;
        }
        let s = area.signum();
        // closed triangle, p distinct from the corners
        cross(a, b, p) * s >= 0 && cross(b, c, p) * s >= 0 && cross(c, a, p) * s >= 0
    };
    let n = pts.len();
    let mut out = Vec::new();
    'points: for i in 0..n {
        for j in 0..n {
            for k in j + 1..n {
                if i == j || i == k {
                    continue;
                }
                if strictly_inside_segment(&pts[j], &pts[k], &pts[i]) {
                    continue 'points;
                }
                for l in k + 1..n {
                    if l != i && in_triangle(&pts[j], &pts[k], &pts[l], &pts[i]) {
                        continue 'points;
                    }
                }
            }
        }
        out.push(pts[i].clone());
    }
    out
}

/// `ζ(s)` from the alternating (eta) series with Borwein acceleration, valid
/// for `Re s > 0`, `s ≠ 1`.
pub fn zeta_eta(s: Complex64) -> Complex64 {
    // Borwein's algorithm 2 with n terms
    let n = 60usize;
    let mut d = vec![0f64; n + 1];
    let mut sum = 0.0;
    // (n + i - 1)! 4^i / ((n - i)! (2i)!) built incrementally
    let mut fact_ratio = 1.0 / n as f64;
    for (i, di) in d.iter_mut().enumerate() {
        if i > 0 {
            let (nf, i_f) = (n as f64, i as f64);
            fact_ratio *=
                (nf + i_f - 1.0) * 4.0 * (nf - i_f + 1.0) / ((2.0 * i_f - 1.0) * (2.0 * i_f));
        }
        sum += fact_ratio;
        *di = n as f64 * sum;
    }
    let mut acc = Complex64::zero();
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = Complex64::new((k + 1) as f64, 0.0).powc(-s);
        acc += term * (sign * (d[k] - d[n]));
    }
    let eta = -acc / d[n];
    let two = Complex64::new(2.0, 0.0);
    eta / (Complex64::one() - two.powc(Complex64::one() - s))
}
