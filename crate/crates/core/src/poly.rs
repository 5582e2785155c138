//! Dense univariate polynomials over a ring, with Euclidean operations over fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{ArithmeticError, Field, Ring, Scalar};

/// Coefficients in ascending degree order with no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<R: Ring> Poly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: R, deg: usize) -> Self {
        let mut v = vec![R::zero(); deg + 1];
        v[deg] = c;
        Self::from_coeffs(v)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| R::from_i64(i as i64) * c.clone())
                .collect(),
        )
    }

    /// `f(s + a)`.
    pub fn shift(&self, a: &R) -> Self {
        let lin = Poly::from_coeffs(vec![a.clone(), R::one()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * lin.clone() + Poly::constant(c.clone());
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Poly<S>, E> {
        Ok(Poly::from_coeffs(
            self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        ))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(v)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                let slot = std::mem::replace(&mut v[i + j], R::zero());
                v[i + j] = slot + prod;
            }
        }
        Self::from_coeffs(v)
    }
}

impl<F: Field> Poly<F> {
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.try_inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithmeticError> {
        let dd = divisor.degree().ok_or(ArithmeticError::DivisionByZero)?;
        let lc_inv = divisor.leading().unwrap().try_inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let r = std::mem::replace(&mut rem[k + j], F::zero());
                rem[k + j] = r - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl Poly<Scalar> {
    /// Gcd that factors out powers of the variable and certifies coprime cofactors
    /// modulo a large prime before falling back to the Euclidean algorithm.
    pub fn gcd_fast(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.gcd(other);
        }
        let low = |p: &Self| p.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let (ka, kb) = (low(self), low(other));
        let a = Poly {
            coeffs: self.coeffs[ka..].to_vec(),
        };
        let b = Poly {
            coeffs: other.coeffs[kb..].to_vec(),
        };
        let tk = Poly::monomial(Scalar::one(), ka.min(kb));
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return tk;
        }
        match (a.integer_coeffs(), b.integer_coeffs()) {
            (Some(ia), Some(ib)) => {
                let g = crate::modgcd::gcd_zx(&ia, &ib);
                let g = Poly::from_coeffs(
                    g.into_iter()
                        .map(|c| Scalar::Rational(BigRational::from_integer(c)))
                        .collect(),
                );
                g.monic() * tk
            }
            _ => a.gcd(&b) * tk,
        }
    }

    /// Clear denominators of a rational polynomial.
    fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.as_rational()?.denom());
        }
        Some(
            self.coeffs
                .iter()
                .map(|c| {
                    let q = c.as_rational().unwrap();
                    q.numer() * (&l / q.denom())
                })
                .collect(),
        )
    }

    /// Roots lying in the coefficient field, with multiplicity.
    ///
    /// Over `Q` candidates come from the rational root theorem; over `F_p` by enumeration.
    pub fn roots(&self) -> Result<Vec<(Scalar, usize)>, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        let kind = self
            .coeffs
            .iter()
            .map(|c| c.kind())
            .find(|k| *k != crate::field::FieldKind::Rational)
            .unwrap_or(crate::field::FieldKind::Rational);
        let candidates: Vec<Scalar> = match kind {
            crate::field::FieldKind::Prime(p) => (0..p).map(|r| kind.int(r as i64)).collect(),
            crate::field::FieldKind::Rational => rational_root_candidates(self),
        };
        let mut out = Vec::new();
        let mut f = self.clone();
        for c in candidates {
            let lin = Poly::from_coeffs(vec![-c.clone(), Scalar::one()]);
            let mut mult = 0;
            loop {
                if f.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (q, r) = f.div_rem(&lin)?;
                if !r.is_zero() {
                    break;
                }
                f = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((c, mult));
            }
        }
        Ok(out)
    }
}

fn rational_root_candidates(f: &Poly<Scalar>) -> Vec<Scalar> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::Signed;

    let qs: Vec<BigRational> = f
        .coeffs
        .iter()
        .map(|c| c.as_rational().cloned().unwrap())
        .collect();
    let mut lcm = BigInt::one();
    for q in &qs {
        lcm = lcm.lcm(q.denom());
    }
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * &lcm).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut out = Vec::new();
    if low > 0 {
        out.push(Scalar::zero());
    }
    let a0 = ints[low].abs();
    let an = ints.last().unwrap().abs();
    let divs = |n: &BigInt| -> Vec<BigInt> {
        let mut v = Vec::new();
        let mut d = BigInt::one();
        while &(&d * &d) <= n {
            if (n % &d).is_zero() {
                v.push(d.clone());
                v.push(n / &d);
            }
            d += 1;
        }
        v
    };
    let mut seen = std::collections::BTreeSet::new();
    for p in divs(&a0) {
        for q in divs(&an) {
            for s in [p.clone(), -p.clone()] {
                let r = BigRational::new(s, q.clone());
                if seen.insert(r.clone()) {
                    out.push(Scalar::Rational(r));
                }
            }
        }
    }
    out
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        self.add_ref(rhs)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        self.mul_ref(rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_scalar(s: Scalar) -> Self {
        Poly::constant(R::from_scalar(s))
    }
}
