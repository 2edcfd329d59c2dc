//! Canonical text and JSON forms.
//!
//! Text grammar: terms in ascending canonical order joined by ` + `, each a
//! signed integer coefficient followed by `*`-separated factors `x<i>^<e>`,
//! `b<j>^<e>`, `beta^<e>` (exponent 1 omitted), e.g.
//! `1*x1 + 1*b1 + 1*x1*b1*beta`. The zero polynomial is `0`.

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::RingContext;
use crate::error::Error;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn parse_text(ctx: RingContext, s: &str) -> Result<Polynomial, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        if s == "0" {
            return Ok(Polynomial::zero(ctx));
        }
        let mut out = Polynomial::zero(ctx);
        for term in s.split(" + ") {
            let mut factors = term.split('*');
            let coeff_str = factors.next().unwrap().trim();
            let coeff = BigInt::from_str(coeff_str)
                .map_err(|_| Error::Parse(format!("bad coefficient `{coeff_str}`")))?;
            let mut m = Monomial::one(ctx.d(), ctx.b_vars());
            for factor in factors {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let exp: u32 = e
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                        (n, exp)
                    }
                    None => (factor, 1),
                };
                if name == "beta" {
                    m.beta += exp;
                } else if let Some(idx) = name.strip_prefix('x') {
                    let i: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable `{name}`")))?;
                    if i == 0 || i > ctx.d() {
                        return Err(Error::IndexOutOfRange(format!("x{i}")));
                    }
                    m.x[i - 1] += exp;
                } else if let Some(idx) = name.strip_prefix('b') {
                    let j: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable `{name}`")))?;
                    if j == 0 || j > ctx.b_vars() {
                        return Err(Error::IndexOutOfRange(format!("b{j}")));
                    }
                    m.b[j - 1] += exp;
                } else {
                    return Err(Error::Parse(format!("unknown factor `{factor}`")));
                }
            }
            if m.beta as usize > ctx.beta_trunc() {
                return Err(Error::Parse(format!(
                    "beta exponent {} exceeds truncation order {}",
                    m.beta,
                    ctx.beta_trunc()
                )));
            }
            out.accumulate(m, coeff);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ContextJson {
    d: usize,
    #[serde(rename = "B")]
    b: usize,
    #[serde(rename = "N")]
    n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TermJson {
    /// Decimal string; avoids any integer-width assumption in consumers.
    coeff: String,
    x: Vec<u32>,
    b: Vec<u32>,
    beta: u32,
}

/// Serde image of a polynomial: `{"context": {"d","B","N"}, "terms": [...]}`
/// with terms in canonical order. Emission is deterministic, so
/// emit -> parse -> emit is byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    context: ContextJson,
    terms: Vec<TermJson>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolynomialJson {
        let ctx = self.ctx();
        PolynomialJson {
            context: ContextJson { d: ctx.d(), b: ctx.b_vars(), n: ctx.beta_trunc() },
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    x: m.x_exponents().to_vec(),
                    b: m.b_exponents().to_vec(),
                    beta: m.beta_exponent(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial serializes")
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Polynomial, Error> {
        let ctx = RingContext::new(json.context.d, json.context.b, json.context.n)?;
        let mut out = Polynomial::zero(ctx);
        for t in &json.terms {
            if t.x.len() != ctx.d() || t.b.len() != ctx.b_vars() {
                return Err(Error::Parse("exponent vector length mismatch".into()));
            }
            if t.beta as usize > ctx.beta_trunc() {
                return Err(Error::Parse("beta exponent exceeds truncation order".into()));
            }
            let coeff = BigInt::from_str(&t.coeff)
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            out.accumulate(Monomial { x: t.x.clone(), b: t.b.clone(), beta: t.beta }, coeff);
        }
        Ok(out)
    }

    pub fn from_json_str(s: &str) -> Result<Polynomial, Error> {
        let json: PolynomialJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Polynomial::from_json(&json)
    }
}
