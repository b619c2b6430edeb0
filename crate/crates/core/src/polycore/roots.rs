//! Complex roots of real polynomials: companion-matrix eigenvalues on a
//! rescaled polynomial, then Newton polish on each root.
//!
//! Unshifted QR cycles on permutation-like companions (`1 - w^n`), so the
//! Schur iteration is capped and Aberth-Ehrlich takes over when it gives up.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Roots of `Σ coeffs[k] w^k`, with multiplicity. The leading coefficient
/// must be non-zero.
pub fn poly_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if coeffs.is_empty() || coeffs[n] == 0.0 {
        return Err(Error::Precondition("zero leading coefficient".into()));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Overflow("non-finite coefficient"));
    }
    let zeros_at_origin = coeffs.iter().take_while(|&&c| c == 0.0).count();
    let a = &coeffs[zeros_at_origin..];
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros_at_origin];
    let m = a.len() - 1;
    if m == 0 {
        return Ok(roots);
    }

    // w = λ z balances the end coefficients
    let lambda = (a[0].abs() / a[m].abs()).powf(1.0 / m as f64);
    let scaled: Vec<f64> = a
        .iter()
        .enumerate()
        .map(|(k, c)| c * lambda.powi(k as i32))
        .collect();
    let lead = scaled[m];
    let monic: Vec<f64> = scaled.iter().map(|c| c / lead).collect();

    let guesses: Vec<Complex64> = if m == 1 {
        vec![Complex64::new(-monic[0], 0.0)]
    } else {
        let mut comp = DMatrix::<f64>::zeros(m, m);
        for i in 1..m {
            comp[(i, i - 1)] = 1.0;
        }
        for i in 0..m {
            comp[(i, m - 1)] = -monic[i];
        }
        match Schur::try_new(comp, f64::EPSILON, 2000) {
            Some(schur) => schur.complex_eigenvalues().iter().copied().collect(),
            None => aberth(&monic),
        }
    };

    for z in guesses {
        roots.push(polish(&monic, z) * lambda);
    }
    Ok(roots)
}

fn eval_with_derivative(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ck in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
    }
    (p, dp)
}

/// Simultaneous iteration from points spread on the unit circle.
fn aberth(c: &[f64]) -> Vec<Complex64> {
    let m = c.len() - 1;
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| {
            Complex64::from_polar(
                1.0,
                (2.0 * std::f64::consts::PI * k as f64 + 0.7) / m as f64,
            )
        })
        .collect();
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for i in 0..m {
            let (p, dp) = eval_with_derivative(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..m)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / z[i].norm().max(1e-300));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Newton steps while the residual keeps shrinking.
fn polish(c: &[f64], mut z: Complex64) -> Complex64 {
    let (mut val, _) = eval_with_derivative(c, z);
    for _ in 0..50 {
        let (p, dp) = eval_with_derivative(c, z);
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let next = z - p / dp;
        let (pn, _) = eval_with_derivative(c, next);
        if pn.norm().is_nan() || pn.norm() >= val.norm() {
            break;
        }
        let step = (next - z).norm();
        z = next;
        val = pn;
        if step <= 4.0 * f64::EPSILON * z.norm() {
            break;
        }
    }
    z
}

/// Groups roots that agree to `rel_tol` relative distance, returning
/// `(root, multiplicity)` with the cluster mean as representative.
pub fn cluster_roots(roots: &[Complex64], rel_tol: f64) -> Vec<(Complex64, usize)> {
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    for &r in roots {
        match out.iter_mut().find(|(c, _)| {
            (c - r).norm() <= rel_tol * c.norm().max(r.norm()).max(f64::MIN_POSITIVE)
        }) {
            Some((c, k)) => {
                *c = (*c * *k as f64 + r) / (*k as f64 + 1.0);
                *k += 1;
            }
            None => out.push((r, 1)),
        }
    }
    out
}
