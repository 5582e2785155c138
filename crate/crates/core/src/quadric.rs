//! Legendrian curves on the quadric `xy - zw = 0`.
//!
//! In the chart `(mu, nu) -> (mu, nu, mu nu, 1)` a contact form restricts to a pair of
//! decoupled Riccati equations, one per ruling. Normalizing each equation and combining
//! the two normal forms decides which standard form an integral curve takes.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::contact::{ContactForm, ParametrizedCurve};
use crate::field::{Field, FieldKind, Ring, Scalar};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadricError {
    #[error("the form is not contact: pc + qb + ra = 0")]
    NotContact,
}

/// `dmu/dt = mu[0] + mu[1] mu + mu[2] mu^2` and likewise for `nu`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticOdePair {
    pub mu: [Scalar; 3],
    pub nu: [Scalar; 3],
}

/// `dmu/dt = (c-p) mu + b + q mu^2`, `dnu/dt = -((p+c) nu + a - r nu^2)`.
pub fn restrict_to_quadric(form: &ContactForm) -> QuadraticOdePair {
    let ContactForm { p, q, r, a, b, c } = form;
    QuadraticOdePair {
        mu: [b.clone(), c - p, q.clone()],
        nu: [-a.clone(), -(p + c), r.clone()],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalTag {
    /// `dx/dt = c`
    Constant,
    /// `dx/dt = c x`
    Linear,
    /// `dx/dt = c x^2`
    PureSquare,
    /// `dx/dt = c (x^2 - 1)`
    SquareMinusOne,
}

impl fmt::Display for NormalTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NormalTag::Constant => "constant",
            NormalTag::Linear => "linear",
            NormalTag::PureSquare => "pure-square",
            NormalTag::SquareMinusOne => "square-minus-one",
        };
        f.write_str(s)
    }
}

/// A normalized equation `dx~/dt = c * model(x~)` with `x~ = scale x + shift`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalForm {
    pub tag: NormalTag,
    /// `None` when the substitution needs a square root outside the field.
    pub scale: Option<Scalar>,
    pub shift: Option<Scalar>,
    pub c: Option<Scalar>,
    /// `c1^2 - 4 c0 c2`.
    pub discriminant: Scalar,
    pub extension_required: bool,
}

/// Reduce `dx/dt = c0 + c1 x + c2 x^2` to one of the four model equations.
pub fn normalize_quadratic(c0: &Scalar, c1: &Scalar, c2: &Scalar) -> NormalForm {
    let k = |n: i64| c0.kind().int(n);
    let disc = &(c1 * c1) - &(&k(4) * &(c0 * c2));
    let plain = |tag, scale: Scalar, shift: Scalar, c: Scalar| NormalForm {
        tag,
        scale: Some(scale),
        shift: Some(shift),
        c: Some(c),
        discriminant: disc.clone(),
        extension_required: false,
    };
    if c2.is_zero() {
        if c1.is_zero() {
            return plain(NormalTag::Constant, k(1), k(0), c0.clone());
        }
        let shift = c0.try_div(c1).expect("nonzero");
        return plain(NormalTag::Linear, k(1), shift, c1.clone());
    }
    let two_c2 = &k(2) * c2;
    if disc.is_zero() {
        let shift = c1.try_div(&two_c2).expect("nonzero");
        return plain(NormalTag::PureSquare, k(1), shift, c2.clone());
    }
    // c2 x^2 + c1 x + c0 = (D / 4c2)(x~^2 - 1) with x~ = (2 c2 x + c1) / sqrt(D)
    match disc.sqrt() {
        Some(root) => {
            let scale = two_c2.try_div(&root).expect("nonzero");
            let shift = c1.try_div(&root).expect("nonzero");
            let c = root.try_div(&k(2)).expect("nonzero");
            plain(NormalTag::SquareMinusOne, scale, shift, c)
        }
        None => NormalForm {
            tag: NormalTag::SquareMinusOne,
            scale: None,
            shift: None,
            c: None,
            discriminant: disc.clone(),
            extension_required: true,
        },
    }
}

/// The standard forms of legendrian curves on the quadric, in the normalized coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardForm {
    /// `c0 ((nu-1)/(nu+1))^d1 = c1 ((mu-1)/(mu+1))^d2`
    MobiusBoth,
    /// `c0 nu^d1 = c1 mu^d2`
    Power,
    /// `c0 ((nu-1)/(nu+1))^d1 = c1 mu^d2`
    MobiusNuPowerMu,
    /// `c0 ((mu-1)/(mu+1))^d1 = c1 nu^d2`
    MobiusMuPowerNu,
    /// `c0 mu nu + c1 mu + c2 nu = 0`
    Bilinear,
    /// `c0 mu + c1 nu + c2 = 0`
    Linear,
    /// `c0 mu nu + c1 mu + c2 = 0`
    BilinearMu,
    /// `c0 mu nu + c1 nu + c2 = 0`
    BilinearNu,
    /// `mu = c0`
    MuConstant,
    /// `nu = c0`
    NuConstant,
}

impl StandardForm {
    pub fn index(&self) -> usize {
        *self as usize + 1
    }

    pub fn equation(&self) -> &'static str {
        match self {
            StandardForm::MobiusBoth => "c0((nu-1)/(nu+1))^d1 = c1((mu-1)/(mu+1))^d2",
            StandardForm::Power => "c0 nu^d1 = c1 mu^d2",
            StandardForm::MobiusNuPowerMu => "c0((nu-1)/(nu+1))^d1 = c1 mu^d2",
            StandardForm::MobiusMuPowerNu => "c0((mu-1)/(mu+1))^d1 = c1 nu^d2",
            StandardForm::Bilinear => "c0 mu nu + c1 mu + c2 nu = 0",
            StandardForm::Linear => "c0 mu + c1 nu + c2 = 0",
            StandardForm::BilinearMu => "c0 mu nu + c1 mu + c2 = 0",
            StandardForm::BilinearNu => "c0 mu nu + c1 nu + c2 = 0",
            StandardForm::MuConstant => "mu = c0",
            StandardForm::NuConstant => "nu = c0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebraicity {
    Algebraic,
    NonAlgebraic,
    /// Transcendence questions are not decided in positive characteristic.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadricClassification {
    pub odes: QuadraticOdePair,
    pub mu: NormalForm,
    pub nu: NormalForm,
    /// `None` when the integral curves are transcendental for every choice of constants.
    pub form: Option<StandardForm>,
    /// Exponents `(d1, d2)` for the power-type forms, when the ratio is rational.
    pub exponents: Option<(u64, u64)>,
    /// The exponent ratio is negative: one side appears with exponent `-d`, i.e. the
    /// relation reads `c0 nu^d1 mu^d2 = c1` and its Mobius analogues.
    pub reciprocal: bool,
    pub algebraicity: Algebraicity,
}

/// `d1 / d2` in lowest terms as unsigned integers plus a sign flag.
fn exponent_pair(ratio: &Scalar) -> Option<((u64, u64), bool)> {
    let q = ratio.as_rational()?;
    if q.is_zero() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let neg = (n.sign() == num_bigint::Sign::Minus) != (d.sign() == num_bigint::Sign::Minus);
    let n = n.magnitude().to_u64_digits();
    let d = d.magnitude().to_u64_digits();
    if n.len() != 1 || d.len() != 1 {
        return None;
    }
    Some(((n[0], d[0]), neg))
}

pub fn classify_quadric_curve(form: &ContactForm) -> Result<QuadricClassification, QuadricError> {
    if !form.is_contact() {
        return Err(QuadricError::NotContact);
    }
    let odes = restrict_to_quadric(form);
    let mu = normalize_quadratic(&odes.mu[0], &odes.mu[1], &odes.mu[2]);
    let nu = normalize_quadratic(&odes.nu[0], &odes.nu[1], &odes.nu[2]);
    let prime = form
        .coeffs()
        .iter()
        .any(|c| matches!(c.kind(), FieldKind::Prime(_)));
    let zero_rhs =
        |n: &NormalForm| n.tag == NormalTag::Constant && n.c.as_ref().is_some_and(|c| c.is_zero());
    use NormalTag::*;
    use StandardForm as S;

    let mut out = QuadricClassification {
        odes: odes.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        form: None,
        exponents: None,
        reciprocal: false,
        algebraicity: Algebraicity::Algebraic,
    };
    let transcendental = if prime {
        Algebraicity::Inconclusive
    } else {
        Algebraicity::NonAlgebraic
    };

    // A vanishing right-hand side pins that coordinate; prefer mu when both vanish.
    if zero_rhs(&mu) {
        out.form = Some(S::MuConstant);
        return Ok(out);
    }
    if zero_rhs(&nu) {
        out.form = Some(S::NuConstant);
        return Ok(out);
    }

    // `ratio_sq` is (d1/d2)^2 when the ratio is only known through discriminants.
    let mut power = |f: S, ratio: Option<Scalar>, ratio_sq: Option<Scalar>| {
        out.form = Some(f);
        let ratio = ratio.or_else(|| ratio_sq.and_then(|r| r.sqrt()));
        match ratio.as_ref().and_then(exponent_pair) {
            Some((pair, neg)) => {
                out.exponents = Some(pair);
                out.reciprocal = neg;
                if prime {
                    out.algebraicity = Algebraicity::Inconclusive;
                }
            }
            None => out.algebraicity = transcendental,
        }
    };
    let d = |n: &NormalForm| n.discriminant.clone();
    match (mu.tag, nu.tag) {
        // mu~ = e^{c_mu t}, nu~ = e^{c_nu t}: nu~^{c_mu} ~ mu~^{c_nu}
        (Linear, Linear) => {
            let r = mu.c.clone().unwrap().try_div(nu.c.as_ref().unwrap()).ok();
            power(S::Power, r, None);
        }
        // c = sqrt(D)/2 on both sides, so (d1/d2)^2 = D_mu / D_nu
        (SquareMinusOne, SquareMinusOne) => {
            let r2 = d(&mu).try_div(&d(&nu)).ok();
            power(S::MobiusBoth, None, r2);
        }
        // M_nu^{c_mu} ~ mu~^{2 c_nu}: (d1/d2)^2 = c_mu^2 / D_nu
        (Linear, SquareMinusOne) => {
            let cm = mu.c.clone().unwrap();
            let r2 = (&cm * &cm).try_div(&d(&nu)).ok();
            power(S::MobiusNuPowerMu, None, r2);
        }
        (SquareMinusOne, Linear) => {
            let cn = nu.c.clone().unwrap();
            let r2 = (&cn * &cn).try_div(&d(&mu)).ok();
            power(S::MobiusMuPowerNu, None, r2);
        }
        // -1/mu~ and -1/nu~ are both affine in t
        (PureSquare, PureSquare) => out.form = Some(S::Bilinear),
        (Constant, Constant) => out.form = Some(S::Linear),
        (PureSquare, Constant) => out.form = Some(S::BilinearMu),
        (Constant, PureSquare) => out.form = Some(S::BilinearNu),
        // exponentials or logarithms against rational functions of t
        _ => out.algebraicity = transcendental,
    }
    Ok(out)
}

/// The lifted curve `(mu(s), nu(s), mu(s) nu(s), 1)` on the quadric.
pub fn lift_to_quadric<R: Ring>(mu: &Poly<R>, nu: &Poly<R>) -> ParametrizedCurve<R> {
    ParametrizedCurve::new([mu.clone(), nu.clone(), mu * nu, Poly::one()])
}
