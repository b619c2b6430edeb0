use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;

use super::zeta::zeta_eval;
use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../../data/zeros100.txt");

/// Largest `|ζ(1/2 + iγ)|` accepted for a listed ordinate.
pub const ZERO_TOL: f64 = 1e-5;

/// Ordinates `γ` of the first non-trivial zeros `1/2 + iγ`, validated.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaZerosTable {
    gammas: Vec<f64>,
    source: Option<PathBuf>,
    precision: usize,
}

impl ZetaZerosTable {
    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn source(&self) -> Option<&Path> {
        self.source.as_deref()
    }

    /// Fewest significant digits among the listed values.
    pub fn precision(&self) -> usize {
        self.precision
    }

    /// The first 100 ordinates shipped with the crate.
    pub fn bundled() -> Self {
        parse_zeros(BUNDLED, None).expect("bundled zeros validate")
    }
}

fn significant_digits(s: &str) -> usize {
    s.chars()
        .filter(char::is_ascii_digit)
        .skip_while(|&c| c == '0')
        .count()
}

/// Parses and validates a table: one positive ordinate per line, strictly
/// ascending, each a zero to [`ZERO_TOL`]. Blank lines and `#` comments are
/// skipped; errors carry 1-based line numbers.
pub fn parse_zeros(text: &str, source: Option<PathBuf>) -> Result<ZetaZerosTable> {
    let mut gammas: Vec<f64> = Vec::new();
    let mut precision = usize::MAX;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let g: f64 = s.parse().map_err(|_| Error::ZerosTable {
            line,
            msg: format!("not a number: `{s}`"),
        })?;
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::ZerosTable {
                line,
                msg: "ordinate must be positive".into(),
            });
        }
        if let Some(&last) = gammas.last() {
            if g <= last {
                return Err(Error::ZerosTable {
                    line,
                    msg: "unsorted input".into(),
                });
            }
        } else if (g - 14.1347).abs() > 1e-3 {
            return Err(Error::ZerosTable {
                line,
                msg: format!("first ordinate {g} is not 14.1347..."),
            });
        }
        let z = zeta_eval(Complex64::new(0.5, g))?;
        if z.norm() >= ZERO_TOL {
            return Err(Error::ZerosTable {
                line,
                msg: format!("|ζ(1/2 + i{g})| = {:.3e}", z.norm()),
            });
        }
        precision = precision.min(significant_digits(s));
        gammas.push(g);
    }
    if gammas.is_empty() {
        return Err(Error::ZerosTable {
            line: 0,
            msg: "empty table".into(),
        });
    }
    Ok(ZetaZerosTable {
        gammas,
        source,
        precision,
    })
}

pub fn load_zeros(path: &Path) -> Result<ZetaZerosTable> {
    let text = std::fs::read_to_string(path)?;
    parse_zeros(&text, Some(path.to_path_buf()))
}

/// Smallest gap between sums of two ordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependenceReport {
    pub count: usize,
    pub alpha: f64,
    /// `min |(γ1 + γ2) - (γ3 + γ4)|` over distinct multisets.
    pub min_margin: f64,
    /// `exp(-α Σ γ)` at the minimising quadruple.
    pub bound: f64,
    /// Indices (0-based) `[i1, i2, i3, i4]` with `i1 <= i2`, `i3 <= i4`.
    pub quadruple: [usize; 4],
    /// `ln(margin / bound)` at the minimising quadruple.
    pub log_ratio: f64,
    /// Smallest `ln(margin / bound)` over all quadruples.
    pub min_log_ratio: f64,
}

pub const MAX_INDEPENDENCE_COUNT: usize = 50;

/// Brute force over pairs of pairs from the first `count` ordinates.
pub fn independence_margin(
    table: &ZetaZerosTable,
    count: usize,
    alpha: f64,
) -> Result<IndependenceReport> {
    if count > table.len() || count > MAX_INDEPENDENCE_COUNT {
        return Err(Error::Precondition(format!(
            "count {count} exceeds table size {} or cap {MAX_INDEPENDENCE_COUNT}",
            table.len()
        )));
    }
    if count < 2 {
        return Err(Error::Precondition("need at least two ordinates".into()));
    }
    if !(alpha > 0.0 && alpha < std::f64::consts::FRAC_PI_2) {
        return Err(Error::Precondition("alpha must lie in (0, π/2)".into()));
    }
    let g = &table.gammas()[..count];
    let pairs: Vec<(usize, usize)> = (0..count)
        .flat_map(|i| (i..count).map(move |j| (i, j)))
        .collect();
    let mut best: Option<(f64, [usize; 4])> = None;
    let mut min_log_ratio = f64::INFINITY;
    for (a, &(i1, i2)) in pairs.iter().enumerate() {
        for &(i3, i4) in &pairs[a + 1..] {
            let margin = ((g[i1] + g[i2]) - (g[i3] + g[i4])).abs();
            let weight = g[i1] + g[i2] + g[i3] + g[i4];
            min_log_ratio = min_log_ratio.min(margin.ln() + alpha * weight);
            if best.is_none_or(|(m, _)| margin < m) {
                best = Some((margin, [i1, i2, i3, i4]));
            }
        }
    }
    let (min_margin, q) = best.expect("at least two pairs");
    let weight: f64 = q.iter().map(|&i| g[i]).sum();
    Ok(IndependenceReport {
        count,
        alpha,
        min_margin,
        bound: (-alpha * weight).exp(),
        quadruple: q,
        log_ratio: min_margin.ln() + alpha * weight,
        min_log_ratio,
    })
}
