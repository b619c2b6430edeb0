//! Additive convolutions of the von Mangoldt function:
//! `G_r(n) = Σ_{k1+..+kr=n} Λ(k1)⋯Λ(kr)`, their partial sums, the zero sum
//! `H_r(x)` and the Dirichlet series `Σ G_2(n) n^-s`.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::analytic::ZetaZerosTable;
use crate::error::{Error, Result};
use crate::primes::primes_up_to;

/// Largest table size accepted.
pub const MAX_TABLE: usize = 50_000_000;

/// Compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Neumaier::default();
        iter.into_iter().for_each(|x| s.add(x));
        s
    }
}

/// `Λ(n)` for `n <= N`, stored as the prime `p` at each prime power
/// (`0` elsewhere) with a float view.
#[derive(Clone, Debug, PartialEq)]
pub struct VonMangoldtTable {
    n: usize,
    markers: Vec<u32>,
    lam: Vec<f64>,
    /// Prime powers `<= N`, ascending.
    support: Vec<usize>,
}

impl VonMangoldtTable {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition("table size must be at least 2".into()));
        }
        if n > MAX_TABLE {
            return Err(Error::Overflow("von Mangoldt table size"));
        }
        let mut markers = vec![0u32; n + 1];
        for p in primes_up_to(n as u64) {
            let p = p as usize;
            let mut q = p;
            loop {
                markers[q] = p as u32;
                match q.checked_mul(p) {
                    Some(next) if next <= n => q = next,
                    _ => break,
                }
            }
        }
        let lam = markers
            .iter()
            .map(|&p| if p == 0 { 0.0 } else { (p as f64).ln() })
            .collect();
        let support = (0..=n).filter(|&k| markers[k] != 0).collect();
        Ok(VonMangoldtTable {
            n,
            markers,
            lam,
            support,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lambda(&self, k: usize) -> f64 {
        self.lam.get(k).copied().unwrap_or(0.0)
    }

    /// The prime `p` when `k` is a power of `p`.
    pub fn marker(&self, k: usize) -> Option<u64> {
        self.markers.get(k).filter(|&&p| p != 0).map(|&p| p as u64)
    }

    pub fn values(&self) -> &[f64] {
        &self.lam
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `ψ(x)` as `Σ_p k_p ln p` with `k_p = ⌊log_p x⌋`.
    pub fn psi_exponents(&self, x: usize) -> Vec<(u64, u32)> {
        let x = x.min(self.n);
        let mut out: Vec<(u64, u32)> = Vec::new();
        for &k in self.support.iter().take_while(|&&k| k <= x) {
            let p = self.markers[k] as u64;
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, c)) => *c += 1,
                None => out.push((p, 1)),
            }
        }
        out
    }

    pub fn psi(&self, x: usize) -> f64 {
        self.psi_exponents(x)
            .into_iter()
            .map(|(p, k)| k as f64 * (p as f64).ln())
            .collect::<Neumaier>()
            .value()
    }

    /// `ψ(k)` for every `k <= N`.
    pub fn psi_table(&self) -> Vec<f64> {
        let mut acc = Neumaier::default();
        self.lam
            .iter()
            .map(|&l| {
                acc.add(l);
                acc.value()
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Naive,
    Fast,
}

/// Below this size the fast path runs the naive one.
pub const FAST_MIN: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct GoldbachSeries {
    pub r: u32,
    pub n: usize,
    pub g: Vec<f64>,
    pub method: Method,
    block: usize,
    /// A-priori bound on `|g_computed - g|` per block of the fast path.
    block_bounds: Vec<f64>,
}

impl GoldbachSeries {
    pub fn get(&self, k: usize) -> f64 {
        self.g.get(k).copied().unwrap_or(0.0)
    }

    /// Rounding bound at index `k`; zero for the naive path, whose only
    /// error is float accumulation.
    pub fn error_bound_at(&self, k: usize) -> f64 {
        k.checked_div(self.block)
            .map_or(0.0, |i| self.block_bounds[i])
    }

    /// `max_k bound(k) / G_r(k)` over non-zero entries.
    pub fn max_relative_bound(&self) -> f64 {
        self.g
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(k, v)| self.error_bound_at(k) / v)
            .fold(0.0, f64::max)
    }

    /// `S(x) = Σ_{n <= x} G_r(n)`.
    pub fn summatory(&self, x: usize) -> Result<f64> {
        if x > self.n {
            return Err(Error::Precondition(format!(
                "x = {x} exceeds the series length {}",
                self.n
            )));
        }
        Ok(self.g[..=x].iter().copied().collect::<Neumaier>().value())
    }
}

fn convolve_naive(prev: &[f64], lam: &VonMangoldtTable, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    let nz: Vec<usize> = (0..=n).filter(|&k| prev[k] != 0.0).collect();
    for &a in lam.support() {
        let la = lam.lambda(a);
        for &b in nz.iter().take_while(|&&b| a + b <= n) {
            out[a + b] += la * prev[b];
        }
    }
    out
}

/// Block length of the fast convolution.
pub const FFT_BLOCK: usize = 2048;

/// `prev ⋆ Λ` truncated to `n`, by FFT on blocks of [`FFT_BLOCK`] entries.
///
/// Returns the values and, per output block, the rounding bound
/// `3 u log2(2B) Σ ‖prev_i‖₂ ‖Λ_j‖₂` over the block pairs feeding it, so
/// small entries near the start are not swamped by the large ones at the end.
fn convolve_blocks(
    prev: &[f64],
    lam: &[f64],
    n: usize,
    planner: &mut FftPlanner<f64>,
) -> (Vec<f64>, Vec<f64>) {
    let b = FFT_BLOCK.min((n + 1).next_power_of_two());
    let len = 2 * b;
    let nb = (n + 1).div_ceil(b);
    let fwd = planner.plan_fft_forward(len);
    let inv = planner.plan_fft_inverse(len);
    let spectra = |v: &[f64]| -> Vec<(Vec<Complex64>, f64)> {
        (0..nb)
            .into_par_iter()
            .map(|i| {
                let lo = i * b;
                let hi = ((i + 1) * b).min(n + 1);
                let mut buf = vec![Complex64::new(0.0, 0.0); len];
                for (z, &x) in buf.iter_mut().zip(&v[lo..hi]) {
                    z.re = x;
                }
                let norm = v[lo..hi].iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm > 0.0 {
                    fwd.process(&mut buf);
                }
                (buf, norm)
            })
            .collect()
    };
    let a = spectra(prev);
    let l = spectra(lam);
    let segments: Vec<(Vec<f64>, f64)> = (0..nb)
        .into_par_iter()
        .map(|s| {
            let mut acc = vec![Complex64::new(0.0, 0.0); len];
            let mut weight = 0.0;
            for i in 0..=s {
                let (ai, na) = &a[i];
                let (lj, nl) = &l[s - i];
                if *na == 0.0 || *nl == 0.0 {
                    continue;
                }
                weight += na * nl;
                for ((z, x), y) in acc.iter_mut().zip(ai).zip(lj) {
                    *z += x * y;
                }
            }
            if weight == 0.0 {
                return (Vec::new(), 0.0);
            }
            inv.process(&mut acc);
            let scale = 1.0 / len as f64;
            (acc.iter().map(|z| z.re * scale).collect(), weight)
        })
        .collect();
    let mut out = vec![0.0; n + 1];
    for (s, (seg, _)) in segments.iter().enumerate() {
        for (t, v) in seg.iter().enumerate() {
            if let Some(o) = out.get_mut(s * b + t) {
                *o += v;
            }
        }
    }
    let unit = 3.0 * f64::EPSILON * (len as f64).log2();
    let bounds = (0..nb)
        .map(|k| {
            let before = if k > 0 { segments[k - 1].1 } else { 0.0 };
            unit * (segments[k].1 + before)
        })
        .collect();
    (out, bounds)
}

/// `G_r(n)` for `n <= N`.
///
/// The fast path convolves blockwise by FFT. Every non-zero value is a sum
/// of products of `r` logarithms of primes, hence at least `(ln 2)^r`;
/// entries whose computed value is within the rounding bound of zero are
/// set to zero exactly. If a bound is too large to separate the two, the
/// naive path is used instead.
pub fn convolve_gr(lam: &VonMangoldtTable, r: u32, method: Method) -> Result<GoldbachSeries> {
    if r < 2 {
        return Err(Error::Precondition("r must be at least 2".into()));
    }
    let n = lam.len();
    let naive = || {
        let mut g = lam.values().to_vec();
        for _ in 1..r {
            g = convolve_naive(&g, lam, n);
        }
        GoldbachSeries {
            r,
            n,
            g,
            method: Method::Naive,
            block: 0,
            block_bounds: Vec::new(),
        }
    };
    if method == Method::Naive || n < FAST_MIN {
        return Ok(naive());
    }
    let mut planner = FftPlanner::new();
    let psi = lam.psi_table();
    let mut g = lam.values().to_vec();
    let mut err: Vec<f64> = Vec::new();
    let mut block = 0;
    for step in 2..=r {
        let (next, fft_err) = convolve_blocks(&g, lam.values(), n, &mut planner);
        block = FFT_BLOCK.min((n + 1).next_power_of_two());
        // carried error: Σ_a Λ(a) e(m - a) <= ψ(m) max_{m' <= m} e(m')
        let mut running: f64 = 0.0;
        let new_err: Vec<f64> = fft_err
            .iter()
            .enumerate()
            .map(|(k, e)| {
                running = running.max(err.get(k).copied().unwrap_or(0.0));
                e + psi[((k + 1) * block - 1).min(n)] * running
            })
            .collect();
        let floor = std::f64::consts::LN_2.powi(step as i32);
        if new_err.iter().any(|e| *e >= floor / 2.0) {
            return Ok(naive());
        }
        g = next
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                if k < 2 * step as usize || v < floor - new_err[k / block] {
                    0.0
                } else {
                    v
                }
            })
            .collect();
        err = new_err;
    }
    Ok(GoldbachSeries {
        r,
        n,
        g,
        method: Method::Fast,
        block,
        block_bounds: err,
    })
}

/// `Σ_{a <= x-2} Λ(a) ψ(x - a)`, the partial sum of `G_2` without the
/// convolution.
pub fn summatory_hyperbola(lam: &VonMangoldtTable, x: usize) -> Result<f64> {
    if x > lam.len() {
        return Err(Error::Precondition("x exceeds the table".into()));
    }
    let psi = lam.psi_table();
    Ok(lam
        .support()
        .iter()
        .take_while(|&&a| a + 2 <= x)
        .map(|&a| lam.lambda(a) * psi[x - a])
        .collect::<Neumaier>()
        .value())
}

fn hr_terms(x: f64, r: u32, zeros: &ZetaZerosTable, count: usize) -> Result<Vec<Complex64>> {
    if count > zeros.len() {
        return Err(Error::Precondition(format!(
            "{count} zeros requested, table has {}",
            zeros.len()
        )));
    }
    if x < 2.0 {
        return Err(Error::Precondition("x must be at least 2".into()));
    }
    let lx = x.ln();
    Ok(zeros.gammas()[..count]
        .iter()
        .flat_map(|&g| [g, -g])
        .map(|g| {
            let rho = Complex64::new(0.5, g);
            let den = (0..r).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (rho + j as f64));
            ((rho + (r - 1) as f64) * lx).exp() / den
        })
        .collect())
}

/// `H_r(x) = -r Σ_ρ x^(r-1+ρ) / (ρ(ρ+1)⋯(ρ+r-1))` over the first `count`
/// conjugate pairs, `ρ = 1/2 ± iγ`.
pub fn oscillating_hr(x: f64, r: u32, zeros: &ZetaZerosTable, count: usize) -> Result<f64> {
    let sum: Complex64 = hr_terms(x, r, zeros, count)?.into_iter().sum();
    Ok(-(r as f64) * sum.re)
}

/// The same sum kept complex; its imaginary part is rounding only.
pub fn oscillating_hr_complex(
    x: f64,
    r: u32,
    zeros: &ZetaZerosTable,
    count: usize,
) -> Result<Complex64> {
    let sum: Complex64 = hr_terms(x, r, zeros, count)?.into_iter().sum();
    Ok(-(r as f64) * sum)
}

/// `2 r x^(r-1/2) Σ_k ∏_j |j + ρ_k|^-1`.
pub fn hr_magnitude_bound(x: f64, r: u32, zeros: &ZetaZerosTable, count: usize) -> Result<f64> {
    if count > zeros.len() {
        return Err(Error::Precondition("too many zeros requested".into()));
    }
    let s: f64 = zeros.gammas()[..count]
        .iter()
        .map(|&g| {
            let rho = Complex64::new(0.5, g);
            (0..r)
                .map(|j| 1.0 / (rho + j as f64).norm())
                .product::<f64>()
        })
        .sum();
    Ok(2.0 * r as f64 * x.powf(r as f64 - 0.5) * s)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Phi2Value {
    pub value: Complex64,
    /// Bound on `|Σ_{n > N} G_2(n) n^-s|` from `G_2(n) <= n ln² n`.
    pub tail_bound: f64,
}

fn phi2_tail(sigma: f64, n: usize) -> f64 {
    let d = sigma - 2.0;
    let l = (n as f64).ln();
    (n as f64).powf(-d) * (l * l / d + 2.0 * l / (d * d) + 2.0 / (d * d * d))
}

/// `Σ_{n <= N} G_2(n) n^-s` for `Re s > 2`.
pub fn phi2_eval(s: Complex64, n: usize) -> Result<Phi2Value> {
    if s.re <= 2.0 {
        return Err(Error::Precondition("Re s must exceed 2".into()));
    }
    if n < 4 {
        return Err(Error::Precondition("N must be at least 4".into()));
    }
    let lam = VonMangoldtTable::new(n)?;
    let g = convolve_gr(&lam, 2, Method::Fast)?;
    Ok(Phi2Value {
        value: phi2_from_series(&g, s),
        tail_bound: phi2_tail(s.re, n),
    })
}

pub fn phi2_from_series(g: &GoldbachSeries, s: Complex64) -> Complex64 {
    // smallest terms first
    g.g.iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| **c != 0.0)
        .map(|(k, &c)| c * (-s * (k as f64).ln()).exp())
        .sum()
}

/// `Σ_{k1 + k2 <= N} Λ(k1) Λ(k2) (k1 + k2)^-s`, summed pair by pair.
pub fn phi2_double_sum(s: Complex64, n: usize) -> Result<Complex64> {
    let lam = VonMangoldtTable::new(n)?;
    let sup = lam.support();
    let mut acc = Complex64::new(0.0, 0.0);
    for &a in sup {
        for &b in sup.iter().take_while(|&&b| a + b <= n) {
            acc += lam.lambda(a) * lam.lambda(b) * (-s * ((a + b) as f64).ln()).exp();
        }
    }
    Ok(acc)
}

pub const RESIDUAL_HEADER: &str = "x,S,S_minus_main,S_minus_main_minus_H2,fujii_bound,log5_bound";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidualRow {
    pub x: usize,
    pub s: f64,
    pub minus_main: f64,
    pub minus_main_minus_h2: f64,
    /// `(x ln x)^(4/3)`.
    pub fujii_bound: f64,
    /// `x ln^5 x`.
    pub log5_bound: f64,
}

impl ResidualRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e}",
            self.x,
            self.s,
            self.minus_main,
            self.minus_main_minus_h2,
            self.fujii_bound,
            self.log5_bound
        )
    }
}

/// Rows `S(x)`, `S - x²/2`, `S - x²/2 - H_2(x)` and the two reference
/// bounds for each `x`.
pub fn residual_report(
    g: &GoldbachSeries,
    xs: &[usize],
    zeros: &ZetaZerosTable,
    count: usize,
) -> Result<Vec<ResidualRow>> {
    if g.r != 2 {
        return Err(Error::Precondition(
            "residuals are defined for r = 2".into(),
        ));
    }
    xs.iter()
        .map(|&x| {
            let s = g.summatory(x)?;
            let xf = x as f64;
            let minus_main = s - xf * xf / 2.0;
            let h = if count == 0 {
                0.0
            } else {
                oscillating_hr(xf, 2, zeros, count)?
            };
            let lx = xf.ln();
            Ok(ResidualRow {
                x,
                s,
                minus_main,
                minus_main_minus_h2: minus_main - h,
                fujii_bound: (xf * lx).powf(4.0 / 3.0),
                log5_bound: xf * lx.powi(5),
            })
        })
        .collect()
}
