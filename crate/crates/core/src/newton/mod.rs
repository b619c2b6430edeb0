//! Newton polyhedra of the blocks `h_k`, the tube domains `V(h; δ)` and the
//! toric hypersurface example.

mod hull;
mod toric;

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::Rational64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polycore::MultiPoly;
use crate::zetafact::fmt_r64;

pub use hull::{ext_points, in_convex_hull};
pub use toric::{brute_count_toric, residue_set, toric_degree, toric_local_series, ToricSeries};

/// `Ext(h_k)` for every non-empty block.
pub fn ext_sets(h: &MultiPoly) -> Result<BTreeMap<i64, Vec<Vec<i64>>>> {
    h.blocks()
        .into_iter()
        .map(|(k, terms)| {
            let support: Vec<Vec<i64>> = terms.into_iter().map(|(a, _)| a).collect();
            Ok((k, ext_points(&support)?))
        })
        .collect()
}

/// `{s : Re⟨α, s⟩ > k + δ for every constraint (α, k)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainV {
    pub n: usize,
    pub delta: Rational64,
    pub constraints: Vec<(Vec<i64>, i64)>,
}

impl DomainV {
    pub fn contains(&self, s: &[Complex64]) -> Result<bool> {
        if s.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: s.len(),
            });
        }
        let delta = *self.delta.numer() as f64 / *self.delta.denom() as f64;
        Ok(self.constraints.iter().all(|(alpha, k)| {
            let re: f64 = alpha.iter().zip(s).map(|(a, z)| *a as f64 * z.re).sum();
            re > *k as f64 + delta
        }))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "delta": fmt_r64(self.delta),
            "constraints": self.constraints.iter().map(|(a, k)| json!({"alpha": a, "k": k})).collect::<Vec<_>>(),
        })
    }
}

fn require_nonconstant(h: &MultiPoly) -> Result<()> {
    if h.is_constant() {
        Err(Error::Precondition("constant polynomial".into()))
    } else if !h.has_unit_constant() {
        Err(Error::ConstantTermNotOne)
    } else {
        Ok(())
    }
}

/// `V(h; δ)` from the extreme points of each block.
pub fn domain_v(h: &MultiPoly, delta: Rational64) -> Result<DomainV> {
    require_nonconstant(h)?;
    let constraints = ext_sets(h)?
        .into_iter()
        .flat_map(|(k, ext)| ext.into_iter().map(move |a| (a, k)))
        .collect();
    Ok(DomainV {
        n: h.n(),
        delta,
        constraints,
    })
}

/// `V(h; δ)` with a constraint for every support point, without reduction.
pub fn domain_v_full(h: &MultiPoly, delta: Rational64) -> Result<DomainV> {
    require_nonconstant(h)?;
    let constraints = h
        .blocks()
        .into_iter()
        .flat_map(|(k, terms)| terms.into_iter().map(move |(a, _)| (a, k)))
        .collect();
    Ok(DomainV {
        n: h.n(),
        delta,
        constraints,
    })
}
