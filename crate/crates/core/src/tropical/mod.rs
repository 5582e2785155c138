//! Max-plus tropical arithmetic and tropical surfaces.
//!
//! Everything here uses the `(max, +)` convention: the valuation of a series is its
//! top degree in `t`, see [`CONVENTION`].

mod cells;
mod number;
mod pipeline;
mod polynomial;

pub use cells::{corner_locus_cells, BoundingBox, LinearConstraint, TropicalCell};
pub use number::TropicalNumber;
pub use pipeline::{tropical_surface_pipeline, SurfaceReport};
pub use polynomial::{TermJson, TropicalPolynomial, TropicalPolynomialJson, TropicalTerm};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::contact::ContactError;
use crate::field::Ring;
use crate::multipoly::MultiPoly;
use crate::Valued;

/// The semiring used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    MaxPlus,
}

pub const CONVENTION: Convention = Convention::MaxPlus;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TropicalError {
    #[error("a tropical polynomial needs at least one term")]
    NoTerms,
    #[error("all coefficients vanish")]
    AllCoefficientsZero,
    #[error("exponent {0:?} appears twice")]
    DuplicateExponent(Vec<i64>),
    #[error("expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty bounding box")]
    EmptyBox,
    #[error(transparent)]
    Contact(#[from] ContactError),
}

/// Parse `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// A monomial whose coefficient vanished during tropicalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DroppedMonomial {
    pub exp: Vec<u32>,
}

/// Replace each coefficient by its valuation. Monomials with zero coefficient are dropped
/// and reported.
pub fn tropicalize_poly<R: Ring + Valued>(
    g: &MultiPoly<R>,
    nvars: usize,
) -> Result<(TropicalPolynomial, Vec<DroppedMonomial>), TropicalError> {
    let mut terms = Vec::new();
    let mut dropped = Vec::new();
    for (e, c) in g.terms_padded(nvars) {
        match c.valuation() {
            TropicalNumber::NegInf => dropped.push(DroppedMonomial { exp: e }),
            TropicalNumber::Finite(v) => terms.push(TropicalTerm {
                exp: e.iter().map(|&k| k as i64).collect(),
                coeff: v,
            }),
        }
    }
    if terms.is_empty() {
        return Err(TropicalError::AllCoefficientsZero);
    }
    Ok((TropicalPolynomial::new(terms)?, dropped))
}

/// All monomials of total degree `d` in `n` variables, for padding tables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}
