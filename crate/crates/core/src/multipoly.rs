//! Sparse multivariate polynomials, used to pull surfaces back through projective maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{Ring, Scalar};

/// Exponent vectors are stored with trailing zeros trimmed, so the number of
/// variables is implicit and constants need no context.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<R> {
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: fmt::Debug> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl<R: Ring> MultiPoly<R> {
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::term(R::one(), e)
    }

    pub fn term(c: R, exp: Vec<u32>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exp), c);
        }
        MultiPoly { terms }
    }

    pub fn constant(c: R) -> Self {
        Self::term(c, Vec::new())
    }

    /// Coefficient of a monomial; `exp` may carry trailing zeros.
    pub fn coeff(&self, exp: &[u32]) -> R {
        self.terms
            .get(&trim(exp.to_vec()))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    /// Terms with exponent vectors padded to `nvars`.
    pub fn terms_padded(&self, nvars: usize) -> Vec<(Vec<u32>, R)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars.max(e.len()), 0);
                (e, c.clone())
            })
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Evaluate by substituting ring values for the variables.
    pub fn eval(&self, vals: &[R]) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (i, k) in e.iter().enumerate() {
                if *k > 0 {
                    m = m * vals[i].pow(*k);
                }
            }
            acc = acc + m;
        }
        acc
    }

    fn insert_add(terms: &mut BTreeMap<Vec<u32>, R>, e: Vec<u32>, c: R) {
        match terms.remove(&e) {
            Some(old) => {
                let v = old + c;
                if !v.is_zero() {
                    terms.insert(e, v);
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(e, c);
                }
            }
        }
    }
}

impl<R: Ring> Add for MultiPoly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut terms = self.terms;
        for (e, c) in rhs.terms {
            Self::insert_add(&mut terms, e, c);
        }
        MultiPoly { terms }
    }
}

impl<R: Ring> Sub for MultiPoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<R: Ring> Mul for MultiPoly<R> {
    type Output = Self;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let n = ea.len().max(eb.len());
                let e: Vec<u32> = (0..n)
                    .map(|i| ea.get(i).unwrap_or(&0) + eb.get(i).unwrap_or(&0))
                    .collect();
                Self::insert_add(&mut terms, e, ca.clone() * cb.clone());
            }
        }
        MultiPoly { terms }
    }
}

impl<R: Ring> Zero for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for MultiPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn from_scalar(s: Scalar) -> Self {
        Self::constant(R::from_scalar(s))
    }
}
