use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{join_terms, term_body};
use crate::error::{Error, Result};

/// Integer polynomial in `X`; `coeffs[i]` is the coefficient of `X^i`.
///
/// The coefficient list never carries a trailing zero, so the zero
/// polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `1 - X^k`.
    pub fn one_minus_power(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = BigInt::one();
        c[k] -= 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one)
    }

    /// Checks the Euler-factor shape `h(0) = 1`, `deg h >= 1`.
    pub fn require_euler_factor(&self) -> Result<usize> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if !self.has_unit_constant() {
            return Err(Error::ConstantTermNotOne);
        }
        if d == 0 {
            return Err(Error::Precondition("degree must be at least 1".into()));
        }
        Ok(d)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.to_f64()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient `self / divisor` when the divisor has constant term 1
    /// and divides `self` in `Z[X]`; `None` otherwise.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        if !divisor.has_unit_constant() {
            return None;
        }
        let (Some(n), Some(d)) = (self.degree(), divisor.degree()) else {
            return self.is_zero().then(UniPoly::zero);
        };
        if d > n {
            return None;
        }
        // power-series division, low order first; exact over Z since divisor(0) = 1
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - d + 1];
        for i in 0..=n - d {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| UniPoly::new(q))
    }

    /// Monic-normalised gcd over `Q`, returned as a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let to_q = |p: &UniPoly| -> Vec<BigRational> {
            p.coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect()
        };
        let mut a = to_q(self);
        let mut b = to_q(other);
        while !b.is_empty() {
            let r = rem_q(&a, &b);
            a = b;
            b = r;
        }
        primitive_part(&a)
    }

    /// Square-free part, primitive, positive leading coefficient.
    pub fn squarefree(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return primitive_part(
                &self
                    .coeffs
                    .iter()
                    .cloned()
                    .map(BigRational::from_integer)
                    .collect::<Vec<_>>(),
            );
        }
        let to_q = |p: &UniPoly| -> Vec<BigRational> {
            p.coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect()
        };
        let q = quo_q(&to_q(self), &to_q(&g));
        primitive_part(&q)
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        (0..k).fold(UniPoly::one(), |acc, _| &acc * self)
    }
}

fn rem_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap().clone() / &lb;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &f * bc;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn quo_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap().clone() / &lb;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &f * bc;
        }
        q[shift] = f;
        r.pop();
    }
    q
}

fn primitive_part(p: &[BigRational]) -> UniPoly {
    use num_integer::Integer;
    if p.is_empty() {
        return UniPoly::zero();
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
    if out.last().is_some_and(Signed::is_negative) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    UniPoly::new(out)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(bool, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => "X".to_string(),
                    _ => format!("X^{i}"),
                };
                let abs = BigRational::from_integer(c.abs());
                (c.is_negative(), term_body(&abs, &mono))
            })
            .collect();
        f.write_str(&join_terms(&terms))
    }
}
