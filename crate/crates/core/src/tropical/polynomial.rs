use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{parse_rational, TropicalError, TropicalNumber};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalTerm {
    pub exp: Vec<i64>,
    pub coeff: BigRational,
}

/// A max-plus polynomial `max_i (<exp_i, X> + coeff_i)` with distinct exponents.
///
/// Terms are kept sorted by exponent vector, largest first, so term indices are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPolynomial {
    nvars: usize,
    terms: Vec<TropicalTerm>,
}

const VAR_NAMES: [&str; 4] = ["X", "Y", "Z", "W"];

impl TropicalPolynomial {
    pub fn new(terms: Vec<TropicalTerm>) -> Result<Self, TropicalError> {
        let nvars = terms.first().ok_or(TropicalError::NoTerms)?.exp.len();
        let mut seen = BTreeSet::new();
        for t in &terms {
            if t.exp.len() != nvars {
                return Err(TropicalError::ArityMismatch {
                    expected: nvars,
                    found: t.exp.len(),
                });
            }
            if !seen.insert(t.exp.clone()) {
                return Err(TropicalError::DuplicateExponent(t.exp.clone()));
            }
        }
        let mut terms = terms;
        terms.sort_by(|a, b| b.exp.cmp(&a.exp));
        Ok(TropicalPolynomial { nvars, terms })
    }

    /// Convenience constructor from integer data.
    pub fn from_ints(terms: &[(Vec<i64>, i64)]) -> Result<Self, TropicalError> {
        Self::new(
            terms
                .iter()
                .map(|(e, c)| TropicalTerm {
                    exp: e.clone(),
                    coeff: BigRational::from_integer(BigInt::from(*c)),
                })
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[TropicalTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_value(&self, i: usize, pt: &[BigRational]) -> BigRational {
        let t = &self.terms[i];
        let mut v = t.coeff.clone();
        for (e, x) in t.exp.iter().zip(pt) {
            if *e != 0 {
                v += x * BigRational::from_integer(BigInt::from(*e));
            }
        }
        v
    }

    /// Maximum value and the exact set of maximizing term indices.
    pub fn eval(&self, pt: &[BigRational]) -> Result<(TropicalNumber, Vec<usize>), TropicalError> {
        if pt.len() != self.nvars {
            return Err(TropicalError::ArityMismatch {
                expected: self.nvars,
                found: pt.len(),
            });
        }
        let mut best: Option<BigRational> = None;
        let mut arg = Vec::new();
        for i in 0..self.terms.len() {
            let v = self.term_value(i, pt);
            match &best {
                Some(b) if &v < b => {}
                Some(b) if &v == b => arg.push(i),
                _ => {
                    best = Some(v);
                    arg = vec![i];
                }
            }
        }
        Ok((TropicalNumber::Finite(best.expect("nonempty")), arg))
    }

    /// Drop one variable (dehomogenize at that coordinate set to zero).
    pub fn drop_var(&self, var: usize) -> Result<Self, TropicalError> {
        let mut terms: Vec<TropicalTerm> = Vec::new();
        for t in &self.terms {
            let mut e = t.exp.clone();
            e.remove(var);
            if let Some(prev) = terms.iter_mut().find(|p| p.exp == e) {
                if t.coeff > prev.coeff {
                    prev.coeff = t.coeff.clone();
                }
            } else {
                terms.push(TropicalTerm {
                    exp: e,
                    coeff: t.coeff.clone(),
                });
            }
        }
        Self::new(terms)
    }

    /// Both polynomials agree after subtracting one constant from every coefficient.
    pub fn equal_up_to_shift(&self, other: &Self) -> bool {
        if self.nvars != other.nvars || self.terms.len() != other.terms.len() {
            return false;
        }
        let shift = &self.terms[0].coeff - &other.terms[0].coeff;
        self.terms
            .iter()
            .zip(&other.terms)
            .all(|(a, b)| a.exp == b.exp && &a.coeff - &b.coeff == shift)
    }

    /// Parse `max(3*x + 321, 2*x + y + 328, 347)` or the same list without `max`.
    pub fn parse(input: &str) -> Result<Self, TropicalError> {
        let mut s = input.trim();
        if let Some(rest) = s.strip_prefix("max") {
            let rest = rest.trim();
            s = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| TropicalError::Parse("unbalanced max( )".into()))?;
        }
        let pieces: Vec<&str> = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .collect();
        let mut raw = Vec::new();
        let mut nvars = 0;
        for p in &pieces {
            let (e, c) = parse_affine(p)?;
            nvars = nvars.max(e.len());
            raw.push((e, c));
        }
        let nvars = nvars.max(1);
        Self::new(
            raw.into_iter()
                .map(|(mut e, c)| {
                    e.resize(nvars, 0);
                    TropicalTerm { exp: e, coeff: c }
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> TropicalPolynomialJson {
        TropicalPolynomialJson {
            vars: VAR_NAMES[..self.nvars.min(4)]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    exp: t.exp.clone(),
                    coeff: t.coeff.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &TropicalPolynomialJson) -> Result<Self, TropicalError> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                Ok(TropicalTerm {
                    exp: t.exp.clone(),
                    coeff: parse_rational(&t.coeff).ok_or_else(|| {
                        TropicalError::Parse(format!("coefficient {:?}", t.coeff))
                    })?,
                })
            })
            .collect::<Result<Vec<_>, TropicalError>>()?;
        let p = Self::new(terms)?;
        if !j.vars.is_empty() && j.vars.len() != p.nvars {
            return Err(TropicalError::ArityMismatch {
                expected: j.vars.len(),
                found: p.nvars,
            });
        }
        Ok(p)
    }
}

fn parse_affine(s: &str) -> Result<(Vec<i64>, BigRational), TropicalError> {
    let err = || TropicalError::Parse(format!("term {s:?}"));
    let mut exp: Vec<i64> = Vec::new();
    let mut coeff = BigRational::zero();
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parts: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            parts.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if ch == '-' {
            neg = true;
        } else if ch != '+' {
            cur.push(ch);
        }
    }
    parts.push((neg, cur));
    for (neg, part) in parts {
        if part.is_empty() {
            return Err(err());
        }
        let last = part.chars().last().unwrap().to_ascii_lowercase();
        let var = ['x', 'y', 'z', 'w'].iter().position(|v| *v == last);
        match var {
            Some(v) => {
                let head = part[..part.len() - 1].trim_end_matches('*');
                let k: i64 = if head.is_empty() {
                    1
                } else {
                    head.parse().map_err(|_| err())?
                };
                if exp.len() <= v {
                    exp.resize(v + 1, 0);
                }
                exp[v] += if neg { -k } else { k };
            }
            None => {
                let q = parse_rational(&part).ok_or_else(err)?;
                coeff += if neg { -q } else { q };
            }
        }
    }
    Ok((exp, coeff))
}

impl fmt::Display for TropicalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "max(")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            for (v, e) in t.exp.iter().enumerate() {
                match *e {
                    0 => {}
                    1 => write!(f, "{} + ", VAR_NAMES[v].to_lowercase())?,
                    e => write!(f, "{e}*{} + ", VAR_NAMES[v].to_lowercase())?,
                }
            }
            write!(f, "{}", t.coeff)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TropicalPolynomialJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub coeff: String,
}
