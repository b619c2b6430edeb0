use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exponent key ordered by grading weight first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key {
    weight: i64,
    exp: Vec<i64>,
}

/// Truncated multivariate power series.
///
/// Exponents are integer vectors; a linear grading `weights` decides the
/// truncation: every stored term has `weights · exp <= order`. The grading
/// must be positive on every non-constant term that enters a logarithm or an
/// exponential (the weight-0 part has to be exactly the constant 1 there).
///
/// Terms iterate in graded-lexicographic order, which is the elimination
/// order used by the zeta factorizations.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C = BigRational> {
    weights: Vec<i64>,
    order: i64,
    terms: BTreeMap<Key, C>,
}

/// Bivariate series in `(x, y)` truncated by `y`-order.
pub type FormalSeries2 = TruncSeries<BigRational>;

impl<C> TruncSeries<C>
where
    C: Clone + Zero + One + PartialEq,
    for<'a> &'a C: Add<&'a C, Output = C> + Sub<&'a C, Output = C> + Mul<&'a C, Output = C>,
{
    pub fn zero(weights: Vec<i64>, order: i64) -> Self {
        TruncSeries {
            weights,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(weights: Vec<i64>, order: i64) -> Self {
        let n = weights.len();
        let mut s = Self::zero(weights, order);
        s.add_term(vec![0; n], C::one());
        s
    }

    /// Bivariate `(x, y)` series graded by the `y` exponent.
    pub fn bivariate(order: i64) -> Self {
        Self::zero(vec![0, 1], order)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, C)>>(
        weights: Vec<i64>,
        order: i64,
        terms: I,
    ) -> Self {
        let mut s = Self::zero(weights, order);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    pub fn weight_of(&self, exp: &[i64]) -> i64 {
        self.weights.iter().zip(exp).map(|(w, e)| w * e).sum()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Adds `c * X^exp`, dropping it when beyond the truncation order.
    pub fn add_term(&mut self, exp: Vec<i64>, c: C) {
        debug_assert_eq!(exp.len(), self.weights.len());
        let weight = self.weight_of(&exp);
        if weight > self.order || c.is_zero() {
            return;
        }
        let key = Key { weight, exp };
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn get(&self, exp: &[i64]) -> Option<&C> {
        let key = Key {
            weight: self.weight_of(exp),
            exp: exp.to_vec(),
        };
        self.terms.get(&key)
    }

    /// Terms in graded-lex order as `(exponent, coefficient)`.
    pub fn iter(&self) -> impl Iterator<Item = (&[i64], &C)> {
        self.terms.iter().map(|(k, c)| (k.exp.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, order: i64) -> Self {
        TruncSeries {
            weights: self.weights.clone(),
            order: order.min(self.order),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight <= order)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Minimum grading weight among non-constant terms.
    pub fn min_positive_weight(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.weight).find(|&w| w > 0)
    }

    /// True when the weight-0 part is exactly the constant 1 and no term has
    /// negative weight.
    pub fn has_unit_constant(&self) -> bool {
        let mut zero_weight = self.terms.iter().take_while(|(k, _)| k.weight <= 0);
        match (zero_weight.next(), zero_weight.next()) {
            (Some((k, c)), None) => k.weight == 0 && k.exp.iter().all(|&e| e == 0) && c.is_one(),
            _ => false,
        }
    }

    /// Truncated product; the result keeps the smaller of the two orders.
    pub fn mul_trunc(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut acc: HashMap<Vec<i64>, C> = HashMap::new();
        for (ka, ca) in &self.terms {
            let room = order - ka.weight;
            for (kb, cb) in rhs.terms.iter().take_while(|(kb, _)| kb.weight <= room) {
                let exp: Vec<i64> = ka.exp.iter().zip(&kb.exp).map(|(a, b)| a + b).collect();
                let prod = ca * cb;
                match acc.get_mut(&exp) {
                    Some(v) => *v = &*v + &prod,
                    None => {
                        acc.insert(exp, prod);
                    }
                }
            }
        }
        let mut out = Self::zero(self.weights.clone(), order);
        for (e, c) in acc {
            if !c.is_zero() {
                let weight = out.weight_of(&e);
                out.terms.insert(Key { weight, exp: e }, c);
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.weights.clone(), self.order);
        for (k, v) in &self.terms {
            let p = v * c;
            if !p.is_zero() {
                out.terms.insert(k.clone(), p);
            }
        }
        out
    }

    pub fn add_series(&self, rhs: &Self) -> Self {
        let mut out = self.truncate(self.order.min(rhs.order));
        for (k, c) in &rhs.terms {
            out.add_term(k.exp.clone(), c.clone());
        }
        out
    }

    pub fn sub_series(&self, rhs: &Self) -> Self {
        let mut out = self.truncate(self.order.min(rhs.order));
        for (k, c) in &rhs.terms {
            out.add_term(k.exp.clone(), &C::zero() - c);
        }
        out
    }

    /// Homogeneous components indexed by weight.
    fn components(&self) -> BTreeMap<i64, Vec<(Vec<i64>, C)>> {
        let mut out: BTreeMap<i64, Vec<(Vec<i64>, C)>> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.weight)
                .or_default()
                .push((k.exp.clone(), c.clone()));
        }
        out
    }

    pub fn map_coeffs<D, F>(&self, f: F) -> TruncSeries<D>
    where
        D: Clone + Zero + One + PartialEq,
        for<'a> &'a D: Add<&'a D, Output = D> + Sub<&'a D, Output = D> + Mul<&'a D, Output = D>,
        F: Fn(&C) -> D,
    {
        TruncSeries::from_terms(
            self.weights.clone(),
            self.order,
            self.terms.iter().map(|(k, c)| (k.exp.clone(), f(c))),
        )
    }
}

impl TruncSeries<BigInt> {
    /// Multiplies by `(1 - X^m)^e`, expanded with the (generalised)
    /// binomial series up to the truncation order.
    pub fn mul_binomial(&self, m: &[i64], e: &BigInt) -> Self {
        let w = self.weight_of(m);
        assert!(w > 0, "binomial factor needs positive weight");
        let kmax = self.order / w;
        let mut factor = TruncSeries::one(self.weights.clone(), self.order);
        // c_k = (-1)^k C(e, k)
        let mut c = BigInt::one();
        for k in 1..=kmax {
            c = -(c * (e - BigInt::from(k - 1))) / BigInt::from(k);
            if c.is_zero() {
                break;
            }
            factor.add_term(m.iter().map(|x| x * k).collect(), c.clone());
        }
        self.mul_trunc(&factor)
    }
}

impl TruncSeries<BigRational> {
    /// `log f` for `f` with weight-0 part exactly 1.
    ///
    /// Uses the Euler operator `D = Σ w_i X_i ∂_i`: `f · D(log f) = D f` gives
    /// `d·L_d = d·f_d - Σ_{0<i<d} i·L_i·f_{d-i}` on homogeneous components.
    pub fn log(&self) -> Result<Self> {
        if !self.has_unit_constant() {
            return Err(Error::ConstantTermNotOne);
        }
        let f = self.components();
        let mut l: BTreeMap<i64, Self> = BTreeMap::new();
        let to_series = |parts: &[(Vec<i64>, BigRational)]| {
            Self::from_terms(self.weights.clone(), self.order, parts.iter().cloned())
        };
        // only weights that can occur are sums of weights present in f
        let reachable = reachable_weights(f.keys().copied().filter(|&w| w > 0), self.order);
        for &d in &reachable {
            let mut acc = match f.get(&d) {
                Some(parts) => to_series(parts).scale(&BigRational::from_integer(d.into())),
                None => Self::zero(self.weights.clone(), self.order),
            };
            for (&i, li) in &l {
                if i >= d {
                    break;
                }
                if let Some(parts) = f.get(&(d - i)) {
                    let prod = li.mul_trunc(&to_series(parts));
                    acc = acc.sub_series(&prod.scale(&BigRational::from_integer(i.into())));
                }
            }
            let ld = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(d)));
            if !ld.is_empty() {
                l.insert(d, ld);
            }
        }
        Ok(l.values()
            .fold(Self::zero(self.weights.clone(), self.order), |acc, s| {
                acc.add_series(s)
            }))
    }

    /// `exp g` for `g` with no terms of weight <= 0.
    pub fn exp(&self) -> Result<Self> {
        if self.terms.keys().any(|k| k.weight <= 0) {
            return Err(Error::Precondition(
                "exp needs a series without weight-0 part".into(),
            ));
        }
        let g = self.components();
        let reachable = reachable_weights(g.keys().copied(), self.order);
        let mut e: BTreeMap<i64, Self> = BTreeMap::new();
        e.insert(0, Self::one(self.weights.clone(), self.order));
        let to_series = |parts: &[(Vec<i64>, BigRational)]| {
            Self::from_terms(self.weights.clone(), self.order, parts.iter().cloned())
        };
        // d·E_d = Σ_{0<i<=d} i·g_i·E_{d-i}
        for &d in &reachable {
            let mut acc = Self::zero(self.weights.clone(), self.order);
            for (&i, parts) in &g {
                if i > d {
                    break;
                }
                if let Some(prev) = e.get(&(d - i)) {
                    let prod = prev.mul_trunc(&to_series(parts));
                    acc = acc.add_series(&prod.scale(&BigRational::from_integer(i.into())));
                }
            }
            let ed = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(d)));
            if !ed.is_empty() {
                e.insert(d, ed);
            }
        }
        Ok(e.values()
            .fold(Self::zero(self.weights.clone(), self.order), |acc, s| {
                acc.add_series(s)
            }))
    }
}

fn reachable_weights(base: impl Iterator<Item = i64>, order: i64) -> Vec<i64> {
    let base: Vec<i64> = base.filter(|&w| w > 0).collect();
    let mut reach = vec![false; order.max(0) as usize + 1];
    reach[0] = true;
    for d in 1..=order.max(0) as usize {
        reach[d] = base
            .iter()
            .any(|&w| (w as usize) <= d && reach[d - w as usize]);
    }
    (1..reach.len())
        .filter(|&d| reach[d])
        .map(|d| d as i64)
        .collect()
}

/// `Σ_{k>=1} (-1)^{k+1} (f-1)^k / k` truncated at the series order.
pub fn formal_log(f: &FormalSeries2) -> Result<FormalSeries2> {
    f.log()
}

impl<C> Neg for &TruncSeries<C>
where
    C: Clone + Zero + One + PartialEq,
    for<'a> &'a C: Add<&'a C, Output = C> + Sub<&'a C, Output = C> + Mul<&'a C, Output = C>,
{
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries::zero(self.weights.clone(), self.order).sub_series(self)
    }
}
