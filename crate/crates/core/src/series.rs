//! Truncated Laurent series in `t`, expanded downward from the top degree.
//!
//! The valuation of a series is its *top* degree (the `t → ∞` convention), so terms
//! far below the leading one are the ones that get truncated. A series stores its
//! nonzero coefficients together with an optional `floor`: exponents below the floor
//! are unknown. Exact series (no floor) arise from polynomials and exact products.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{ArithmeticError, Field, FieldKind, Ring, Scalar};
use crate::poly::Poly;
use crate::tropical::TropicalNumber;
use crate::Valued;

/// Number of exponents kept by default below the top degree.
pub const DEFAULT_RETAINED: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error("cannot invert the zero series")]
    ZeroSeries,
    #[error("result not determined: all known terms fall below the truncation floor {floor}")]
    WindowUnderflow { floor: i64 },
    #[error("coefficient of s^{index} is not determined by the truncation window")]
    CoefficientUnderflow { index: usize },
    #[error("exponent {exp} lies above the window top {hi}")]
    WindowOverflow { exp: i64, hi: i64 },
    #[error("empty window {lo}:{hi}")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("malformed series: {0}")]
    Malformed(String),
}

/// A window `[lo, hi]` of retained exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self, SeriesError> {
        if lo > hi {
            return Err(SeriesError::EmptyWindow { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    pub fn retained(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }
}

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    terms: BTreeMap<i64, R>,
    floor: Option<i64>,
}

impl<R: fmt::Debug> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{{")?;
        for (e, c) in self.terms.iter().rev() {
            write!(f, " {c:?}*t^{e}")?;
        }
        if let Some(fl) = self.floor {
            write!(f, " + O(t^{})", fl - 1)?;
        }
        write!(f, " }}")
    }
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, R)>, floor: Option<i64>) -> Self {
        let mut map: BTreeMap<i64, R> = BTreeMap::new();
        for (e, c) in terms {
            if floor.is_some_and(|fl| e < fl) {
                continue;
            }
            let slot = map.remove(&e);
            let v = match slot {
                Some(old) => old + c,
                None => c,
            };
            if !v.is_zero() {
                map.insert(e, v);
            }
        }
        TruncatedSeries { terms: map, floor }
    }

    pub fn monomial(c: R, exp: i64) -> Self {
        Self::from_terms([(exp, c)], None)
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    /// The parameter `t`.
    pub fn t() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_poly(p: &Poly<R>) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
            None,
        )
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    pub fn is_exact(&self) -> bool {
        self.floor.is_none()
    }

    /// Top exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(i64, &R)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// No known terms, but the unknown tail below the floor may be nonzero.
    pub fn is_undetermined(&self) -> bool {
        self.terms.is_empty() && self.floor.is_some()
    }

    /// Largest exponent that may carry a nonzero coefficient.
    fn top_bound(&self) -> Option<i64> {
        self.degree().or(self.floor.map(|f| f - 1))
    }

    /// Valuation, refusing to answer when no term survives truncation.
    pub fn checked_valuation(&self) -> Result<TropicalNumber, SeriesError> {
        match (self.degree(), self.floor) {
            (Some(d), _) => Ok(TropicalNumber::from(d)),
            (None, None) => Ok(TropicalNumber::NegInf),
            (None, Some(fl)) => Err(SeriesError::WindowUnderflow { floor: fl }),
        }
    }

    /// Forget all terms below `floor`.
    pub fn truncate_below(&self, floor: i64) -> Self {
        let floor = self.floor.map_or(floor, |f| f.max(floor));
        TruncatedSeries {
            terms: self
                .terms
                .range(floor..)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            floor: Some(floor),
        }
    }

    /// Keep this series to a fixed number of exponents below its top degree.
    pub fn keep_top(&self, retained: usize) -> Self {
        match self.degree() {
            Some(d) => self.truncate_below(d - retained as i64 + 1),
            None => self.clone(),
        }
    }

    /// Restrict to an explicit window; terms above the top are an error, never silently dropped.
    pub fn restrict(&self, window: Window) -> Result<Self, SeriesError> {
        if let Some(d) = self.degree() {
            if d > window.hi {
                return Err(SeriesError::WindowOverflow {
                    exp: d,
                    hi: window.hi,
                });
            }
        }
        Ok(self.truncate_below(window.lo))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())),
            self.floor,
        )
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedSeries {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            floor: self.floor.map(|f| f + k),
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let floor = match (self.floor, rhs.floor) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        Self::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
            floor,
        )
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let exact_zero = |s: &Self| s.terms.is_empty() && s.floor.is_none();
        if exact_zero(self) || exact_zero(rhs) {
            return Self::zero();
        }
        let mut floor: Option<i64> = None;
        let mut bump = |lf: Option<i64>, top: Option<i64>| {
            if let (Some(l), Some(d)) = (lf, top) {
                floor = Some(floor.map_or(l + d, |f: i64| f.max(l + d)));
            }
        };
        bump(self.floor, rhs.top_bound());
        bump(rhs.floor, self.top_bound());
        let mut map: BTreeMap<i64, R> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in rhs.terms.iter().rev() {
                let e = ea + eb;
                if floor.is_some_and(|f| e < f) {
                    break;
                }
                let p = ca.clone() * cb.clone();
                match map.remove(&e) {
                    Some(old) => {
                        let v = old + p;
                        if !v.is_zero() {
                            map.insert(e, v);
                        }
                    }
                    None => {
                        if !p.is_zero() {
                            map.insert(e, p);
                        }
                    }
                }
            }
        }
        TruncatedSeries { terms: map, floor }
    }
}

impl<F: Field> TruncatedSeries<F> {
    /// Inverse by long division from the top term, producing `order + 1` terms.
    ///
    /// Fewer terms are reliable when `self` is itself truncated; the floor of the
    /// result records how far down the quotient is determined.
    pub fn invert(&self, order: usize) -> Result<Self, SeriesError> {
        let (d, lc) = match self.leading() {
            Some(x) => x,
            None if self.floor.is_some() => {
                return Err(SeriesError::WindowUnderflow {
                    floor: self.floor.unwrap(),
                })
            }
            None => return Err(SeriesError::ZeroSeries),
        };
        if self.terms.len() == 1 && self.floor.is_none() {
            return Ok(Self::monomial(lc.try_inv()?, -d));
        }
        let reliable = match self.floor {
            Some(l) => order.min((d - l) as usize),
            None => order,
        };
        let lc_inv = lc.try_inv()?;
        let mut g: Vec<F> = Vec::with_capacity(reliable + 1);
        g.push(lc_inv.clone());
        for j in 1..=reliable {
            let mut acc = F::zero();
            for (e, c) in self.terms.range(d - j as i64..d).rev() {
                let k = (d - e) as usize;
                if !g[j - k].is_zero() {
                    acc = acc + c.clone() * g[j - k].clone();
                }
            }
            g.push(-(acc * lc_inv.clone()));
        }
        Ok(Self::from_terms(
            g.into_iter().enumerate().map(|(j, c)| (-d - j as i64, c)),
            Some(-d - reliable as i64),
        ))
    }
}

impl TruncatedSeries<Scalar> {
    fn field_kind(&self) -> Result<FieldKind, ArithmeticError> {
        let mut kind = FieldKind::Rational;
        for c in self.terms.values() {
            match (kind, c.kind()) {
                (_, FieldKind::Rational) => {}
                (FieldKind::Rational, k) => kind = k,
                (FieldKind::Prime(a), FieldKind::Prime(b)) if a != b => {
                    return Err(ArithmeticError::FieldMismatch(a, b))
                }
                _ => {}
            }
        }
        Ok(kind)
    }

    fn check_compatible(&self, rhs: &Self) -> Result<(), ArithmeticError> {
        match (self.field_kind()?, rhs.field_kind()?) {
            (FieldKind::Prime(a), FieldKind::Prime(b)) if a != b => {
                Err(ArithmeticError::FieldMismatch(a, b))
            }
            (FieldKind::Prime(p), FieldKind::Rational) => {
                rhs.embed(FieldKind::Prime(p)).map(|_| ())
            }
            (FieldKind::Rational, FieldKind::Prime(p)) => {
                self.embed(FieldKind::Prime(p)).map(|_| ())
            }
            _ => Ok(()),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(rhs)?;
        Ok(self.add_ref(rhs))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(rhs)?;
        Ok(self.mul_ref(rhs))
    }

    /// Map every coefficient into the given field.
    pub fn embed(&self, kind: FieldKind) -> Result<Self, ArithmeticError> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((*e, kind.embed(c)?)))
            .collect::<Result<Vec<_>, ArithmeticError>>()?;
        Ok(Self::from_terms(terms, self.floor))
    }

    pub fn to_json(&self) -> SeriesJson {
        let kind = self.field_kind().unwrap_or(FieldKind::Rational);
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match (kind, c) {
                (FieldKind::Rational, Scalar::Rational(q)) => {
                    SeriesTerm::Rational(*e, q.numer().to_string(), q.denom().to_string())
                }
                (FieldKind::Prime(p), c) => {
                    let Scalar::Modular(m) = c.reduce_mod(p).expect("embeddable") else {
                        unreachable!()
                    };
                    SeriesTerm::Modular(*e, m.residue())
                }
                (FieldKind::Rational, Scalar::Modular(_)) => unreachable!(),
            })
            .collect();
        SeriesJson {
            field: match kind {
                FieldKind::Rational => "Q".into(),
                FieldKind::Prime(_) => "Fp".into(),
            },
            p: match kind {
                FieldKind::Prime(p) => Some(p),
                FieldKind::Rational => None,
            },
            terms,
            floor: self.floor,
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<Self, SeriesError> {
        let kind = match (j.field.as_str(), j.p) {
            ("Q", None) => FieldKind::Rational,
            ("Fp", Some(p)) => crate::field::PrimeField::new(p)?.kind(),
            (f, p) => {
                return Err(SeriesError::Malformed(format!(
                    "field {f:?} with modulus {p:?}"
                )))
            }
        };
        let mut terms = Vec::new();
        for t in &j.terms {
            let (e, c) = match (t, kind) {
                (SeriesTerm::Rational(e, n, d), FieldKind::Rational) => {
                    let n: BigInt = n
                        .parse()
                        .map_err(|_| SeriesError::Malformed(format!("numerator {n:?}")))?;
                    let d: BigInt = d
                        .parse()
                        .map_err(|_| SeriesError::Malformed(format!("denominator {d:?}")))?;
                    if d.is_zero() {
                        return Err(ArithmeticError::DivisionByZero.into());
                    }
                    (*e, Scalar::Rational(BigRational::new(n, d)))
                }
                (SeriesTerm::Modular(e, r), FieldKind::Prime(p)) => {
                    if *r >= p {
                        return Err(SeriesError::Malformed(format!("residue {r} >= {p}")));
                    }
                    (*e, kind.int(*r as i64))
                }
                _ => {
                    return Err(SeriesError::Malformed(
                        "term shape does not match field".into(),
                    ))
                }
            };
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms, j.floor))
    }
}

/// JSON mirror of a series over `Q` or `F_p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    pub terms: Vec<SeriesTerm>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub floor: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesTerm {
    Rational(i64, String, String),
    Modular(i64, u64),
}

impl<R: Ring> Valued for TruncatedSeries<R> {
    fn valuation(&self) -> TropicalNumber {
        match self.degree() {
            Some(d) => TropicalNumber::from(d),
            None => TropicalNumber::NegInf,
        }
    }
}

impl<R: Ring> Add for TruncatedSeries<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<'a, R: Ring> Add<&'a TruncatedSeries<R>> for &'a TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: &TruncatedSeries<R>) -> TruncatedSeries<R> {
        self.add_ref(rhs)
    }
}

impl<R: Ring> Sub for TruncatedSeries<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl<R: Ring> Mul for TruncatedSeries<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, R: Ring> Mul<&'a TruncatedSeries<R>> for &'a TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: &TruncatedSeries<R>) -> TruncatedSeries<R> {
        self.mul_ref(rhs)
    }
}

impl<R: Ring> Neg for TruncatedSeries<R> {
    type Output = Self;
    fn neg(self) -> Self {
        TruncatedSeries {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
            floor: self.floor,
        }
    }
}

impl<R: Ring> Zero for TruncatedSeries<R> {
    fn zero() -> Self {
        TruncatedSeries {
            terms: BTreeMap::new(),
            floor: None,
        }
    }
    /// Exactly zero; an undetermined series is not zero.
    fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.floor.is_none()
    }
}

impl<R: Ring> One for TruncatedSeries<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Ring for TruncatedSeries<R> {
    fn from_scalar(s: Scalar) -> Self {
        Self::constant(R::from_scalar(s))
    }
}

impl<F: Field> Field for TruncatedSeries<F> {
    fn try_inv(&self) -> Result<Self, ArithmeticError> {
        self.invert(DEFAULT_RETAINED - 1).map_err(|e| match e {
            SeriesError::Arithmetic(a) => a,
            _ => ArithmeticError::DivisionByZero,
        })
    }
}

/// Polynomial in `s` with series coefficients.
pub type SeriesPoly<R> = Poly<TruncatedSeries<R>>;

/// `f(s + s0)`, failing when a coefficient is left with no determined term.
pub fn poly_substitute<R: Ring>(
    f: &SeriesPoly<R>,
    s0: &TruncatedSeries<R>,
) -> Result<SeriesPoly<R>, SeriesError> {
    let g = f.shift(s0);
    for (i, c) in g.coeffs().iter().enumerate() {
        if c.is_undetermined() {
            return Err(SeriesError::CoefficientUnderflow { index: i });
        }
    }
    Ok(g)
}
