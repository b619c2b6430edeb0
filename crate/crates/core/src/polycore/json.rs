use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use serde::{Deserialize, Serialize};

use super::bivariate::BivariateLocalFactor;
use super::multi::MultiPoly;
use super::uni::UniPoly;
use super::{fmt_ratio, parse_ratio};
use crate::error::{Error, Result};

/// Exponent entry: a plain integer, or `"p/q"` when fractional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpJson {
    Int(i64),
    Ratio(String),
}

impl ExpJson {
    fn from_ratio(r: Rational64) -> Self {
        if r.is_integer() {
            ExpJson::Int(r.to_integer())
        } else {
            ExpJson::Ratio(format!("{}/{}", r.numer(), r.denom()))
        }
    }

    fn to_ratio(&self) -> Result<Rational64> {
        match self {
            ExpJson::Int(k) => Ok(Rational64::from_integer(*k)),
            ExpJson::Ratio(s) => {
                let bad = || Error::Precondition(format!("bad exponent `{s}`"));
                let (n, d) = s.split_once('/').ok_or_else(bad)?;
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Rational64::new(n, d))
            }
        }
    }

    fn to_int(&self) -> Result<i64> {
        let r = self.to_ratio()?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(Error::NonInteger("exponent"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<ExpJson>,
    pub coef: String,
}

/// Canonical JSON form shared by all polynomial types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

fn coef_of(t: &TermJson) -> Result<BigRational> {
    parse_ratio(&t.coef).ok_or_else(|| Error::Precondition(format!("bad coefficient `{}`", t.coef)))
}

fn check_len(t: &TermJson, n: usize) -> Result<()> {
    if t.exp.len() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: n,
            got: t.exp.len(),
        })
    }
}

impl From<&UniPoly> for PolyJson {
    fn from(p: &UniPoly) -> Self {
        PolyJson {
            vars: vec!["X".into()],
            terms: p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(i, c)| TermJson {
                    exp: vec![ExpJson::Int(i as i64)],
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

impl From<&BivariateLocalFactor> for PolyJson {
    fn from(w: &BivariateLocalFactor) -> Self {
        PolyJson {
            vars: vec!["x".into(), "y".into()],
            terms: w
                .terms()
                .map(|(u, v, c)| TermJson {
                    exp: vec![ExpJson::from_ratio(u), ExpJson::from_ratio(v)],
                    coef: fmt_ratio(c),
                })
                .collect(),
        }
    }
}

impl From<&MultiPoly> for PolyJson {
    fn from(h: &MultiPoly) -> Self {
        PolyJson {
            vars: (0..h.nvars()).map(|i| h.var_name(i)).collect(),
            terms: h
                .terms()
                .map(|(e, c)| TermJson {
                    exp: e.iter().map(|&k| ExpJson::Int(k)).collect(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for UniPoly {
    type Error = Error;
    fn try_from(j: &PolyJson) -> Result<Self> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for t in &j.terms {
            check_len(t, 1)?;
            let k = usize::try_from(t.exp[0].to_int()?)
                .map_err(|_| Error::Precondition("negative exponent".into()))?;
            let c = coef_of(t)?;
            if !c.is_integer() {
                return Err(Error::NonInteger("coefficient"));
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::default());
            }
            coeffs[k] += c.to_integer();
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl TryFrom<&PolyJson> for BivariateLocalFactor {
    type Error = Error;
    fn try_from(j: &PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                check_len(t, 2)?;
                Ok((t.exp[0].to_ratio()?, t.exp[1].to_ratio()?, coef_of(t)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BivariateLocalFactor::from_rational_terms(terms))
    }
}

impl TryFrom<&PolyJson> for MultiPoly {
    type Error = Error;
    fn try_from(j: &PolyJson) -> Result<Self> {
        let nv = j.vars.len();
        if nv < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: nv,
            });
        }
        let terms = j
            .terms
            .iter()
            .map(|t| {
                check_len(t, nv)?;
                let e = t
                    .exp
                    .iter()
                    .map(ExpJson::to_int)
                    .collect::<Result<Vec<_>>>()?;
                let c = coef_of(t)?;
                if !c.is_integer() {
                    return Err(Error::NonInteger("coefficient"));
                }
                Ok((e, c.to_integer()))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::try_new(nv - 1, terms)
    }
}
