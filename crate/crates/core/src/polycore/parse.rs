//! Polynomial expression parser.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | '+' factor | atom ('^' power)?
//! power  := int | '-' int | '(' '-'? int ('/' int)? ')'
//! atom   := int | ident | '(' expr ')'
//! ```
//!
//! Division is only by constants, so `3/4*x` and `x/2` both work.
//! Rational powers apply to monomials; sums take non-negative integer powers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bivariate::BivariateLocalFactor;
use super::multi::MultiPoly;
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// Which variables an expression may use, and hence its result type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarSet {
    /// `X` (or `x`), integer coefficients.
    Uni,
    /// `x`, `y` with rational exponents and coefficients.
    Bivariate,
    /// `X1..Xn, X(n+1)`, integer coefficients.
    Multi(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Uni(UniPoly),
    Bivariate(BivariateLocalFactor),
    Multi(MultiPoly),
}

pub fn parse_poly(text: &str, vars: &VarSet) -> Result<Parsed> {
    match vars {
        VarSet::Uni => parse_uni(text).map(Parsed::Uni),
        VarSet::Bivariate => parse_bivariate(text).map(Parsed::Bivariate),
        VarSet::Multi(n) => parse_multi(text, *n).map(Parsed::Multi),
    }
}

pub fn parse_uni(text: &str) -> Result<UniPoly> {
    let raw = parse_raw(text, &["X", "x"])?;
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (e, c) in raw {
        // X and x are the same variable
        let k = nonneg_int(e[0] + e[1])?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += integer(&c)?;
    }
    Ok(UniPoly::new(coeffs))
}

pub fn parse_bivariate(text: &str) -> Result<BivariateLocalFactor> {
    let raw = parse_raw(text, &["x", "y"])?;
    Ok(BivariateLocalFactor::from_rational_terms(
        raw.into_iter().map(|(e, c)| (e[0], e[1], c)),
    ))
}

/// Parses a polynomial in `X1..X(n+1)`.
pub fn parse_multi(text: &str, n: usize) -> Result<MultiPoly> {
    let names: Vec<String> = (1..=n + 1).map(|i| format!("X{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let raw = parse_raw(text, &refs)?;
    let mut terms = Vec::new();
    for (e, c) in raw {
        let e = e
            .iter()
            .map(|x| nonneg_int(*x).map(|k| k as i64))
            .collect::<Result<Vec<_>>>()?;
        terms.push((e, integer(&c)?));
    }
    MultiPoly::try_new(n, terms)
}

fn nonneg_int(e: Rational64) -> Result<usize> {
    if !e.is_integer() {
        return Err(Error::NonInteger("exponent"));
    }
    e.to_integer()
        .to_usize()
        .ok_or_else(|| Error::Precondition("negative exponent".into()))
}

fn integer(c: &BigRational) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::NonInteger("coefficient"))
    }
}

type Raw = BTreeMap<Vec<Rational64>, BigRational>;

fn parse_raw(text: &str, vars: &[&str]) -> Result<Raw> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        vars,
        end: text.chars().count(),
    };
    let out = p.expr()?;
    if let Some(t) = p.tokens.get(p.pos) {
        return Err(Error::Syntax {
            pos: t.pos,
            msg: format!("unexpected `{}`", t.kind),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Int(n) => write!(f, "{n}"),
            Kind::Ident(s) => f.write_str(s),
            Kind::Sym(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                kind: Kind::Int(s.parse().expect("digits")),
                pos: start,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                kind: Kind::Ident(chars[start..i].iter().collect()),
                pos: start,
            });
        } else if "+-*/^()".contains(c) {
            out.push(Token {
                kind: Kind::Sym(c),
                pos: i,
            });
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [&'a str],
    end: usize,
}

impl Parser<'_> {
    fn peek_sym(&self, c: char) -> bool {
        matches!(self.tokens.get(self.pos), Some(Token { kind: Kind::Sym(s), .. }) if *s == c)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.pos)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.peek_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: self.here(),
                msg: format!("expected `{c}`"),
            })
        }
    }

    fn constant(&self, c: BigRational) -> Raw {
        let mut m = Raw::new();
        if !c.is_zero() {
            m.insert(vec![Rational64::zero(); self.vars.len()], c);
        }
        m
    }

    fn expr(&mut self) -> Result<Raw> {
        let mut acc = self.term()?;
        loop {
            let sign = if self.peek_sym('+') {
                1
            } else if self.peek_sym('-') {
                -1
            } else {
                break;
            };
            self.pos += 1;
            let rhs = self.term()?;
            for (e, c) in rhs {
                let c = if sign < 0 { -c } else { c };
                add_into(&mut acc, e, c);
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Raw> {
        let mut acc = self.factor()?;
        loop {
            if self.peek_sym('*') {
                self.pos += 1;
                let rhs = self.factor()?;
                acc = mul(&acc, &rhs);
            } else if self.peek_sym('/') {
                let at = self.here();
                self.pos += 1;
                let rhs = self.factor()?;
                let c = as_constant(&rhs, self.vars.len()).ok_or_else(|| Error::Syntax {
                    pos: at,
                    msg: "division by a non-constant".into(),
                })?;
                if c.is_zero() {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "division by zero".into(),
                    });
                }
                acc = acc.into_iter().map(|(e, v)| (e, v / &c)).collect();
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Raw> {
        if self.peek_sym('-') {
            self.pos += 1;
            return Ok(self.factor()?.into_iter().map(|(e, c)| (e, -c)).collect());
        }
        if self.peek_sym('+') {
            self.pos += 1;
            return self.factor();
        }
        let base = self.atom()?;
        if !self.peek_sym('^') {
            return Ok(base);
        }
        let at = self.here();
        self.pos += 1;
        let k = self.power()?;
        pow(&base, k, self.vars.len()).ok_or_else(|| Error::Syntax {
            pos: at,
            msg: "only monomials take negative or fractional powers".into(),
        })
    }

    fn int(&mut self) -> Result<i64> {
        match self.tokens.get(self.pos) {
            Some(Token {
                kind: Kind::Int(n),
                pos,
            }) => {
                let v = n.to_i64().ok_or(Error::Syntax {
                    pos: *pos,
                    msg: "exponent too large".into(),
                })?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(Error::Syntax {
                pos: self.here(),
                msg: "expected an integer".into(),
            }),
        }
    }

    fn power(&mut self) -> Result<Rational64> {
        if self.peek_sym('(') {
            self.pos += 1;
            let neg = self.peek_sym('-');
            if neg {
                self.pos += 1;
            }
            let num = self.int()?;
            let den = if self.peek_sym('/') {
                self.pos += 1;
                let at = self.here();
                let d = self.int()?;
                if d == 0 {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "zero denominator".into(),
                    });
                }
                d
            } else {
                1
            };
            self.expect_sym(')')?;
            Ok(Rational64::new(if neg { -num } else { num }, den))
        } else if self.peek_sym('-') {
            self.pos += 1;
            Ok(Rational64::from_integer(-self.int()?))
        } else {
            Ok(Rational64::from_integer(self.int()?))
        }
    }

    fn atom(&mut self) -> Result<Raw> {
        let Some(tok) = self.tokens.get(self.pos).cloned() else {
            return Err(Error::Syntax {
                pos: self.end,
                msg: "unexpected end of input".into(),
            });
        };
        match tok.kind {
            Kind::Int(n) => {
                self.pos += 1;
                Ok(self.constant(BigRational::from_integer(n)))
            }
            Kind::Ident(name) => {
                self.pos += 1;
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(Error::UnknownVariable(name))?;
                let mut e = vec![Rational64::zero(); self.vars.len()];
                e[idx] = Rational64::one();
                Ok(Raw::from([(e, BigRational::one())]))
            }
            Kind::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Kind::Sym(c) => Err(Error::Syntax {
                pos: tok.pos,
                msg: format!("unexpected `{c}`"),
            }),
        }
    }
}

fn add_into(acc: &mut Raw, e: Vec<Rational64>, c: BigRational) {
    let slot = acc.entry(e.clone()).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&e);
    }
}

fn mul(a: &Raw, b: &Raw) -> Raw {
    let mut out = Raw::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, e, ca * cb);
        }
    }
    out
}

fn as_constant(p: &Raw, nvars: usize) -> Option<BigRational> {
    match p.len() {
        0 => Some(BigRational::zero()),
        1 => {
            let (e, c) = p.iter().next()?;
            (e.len() == nvars && e.iter().all(Zero::is_zero)).then(|| c.clone())
        }
        _ => None,
    }
}

fn pow(base: &Raw, k: Rational64, nvars: usize) -> Option<Raw> {
    if k.is_integer() && !k.is_negative() {
        let k = k.to_integer();
        let one = Raw::from([(vec![Rational64::zero(); nvars], BigRational::one())]);
        return Some((0..k).fold(one, |acc, _| mul(&acc, base)));
    }
    if base.len() != 1 {
        return None;
    }
    let (e, c) = base.iter().next()?;
    let coef = if c.is_one() {
        c.clone()
    } else if k.is_integer() {
        // constant or scaled monomial to a negative integer power
        num_traits::pow(c.recip(), k.to_integer().unsigned_abs() as usize)
    } else {
        return None;
    };
    Some(Raw::from([(e.iter().map(|x| x * k).collect(), coef)]))
}
