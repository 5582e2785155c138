//! Exact coefficient fields: the rationals and prime fields with a runtime modulus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Poly;

/// Default prime for modular sampling runs.
pub const DEFAULT_PRIME: u64 = 2897;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot mix elements of F_{0} and F_{1}")]
    FieldMismatch(u64, u64),
    #[error("denominator {den} is divisible by the modulus {modulus}")]
    BadReduction { den: String, modulus: u64 },
}

/// Commutative ring interface shared by scalars, polynomials, rational functions and series.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_scalar(s: Scalar) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_scalar(Scalar::from(n))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn try_inv(&self) -> Result<Self, ArithmeticError>;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    /// A denominator that must be cleared to land in the integral subring, if any.
    /// Scalars are always integral; rational functions report a non-constant denominator.
    fn integral_denominator(&self) -> Option<Self> {
        None
    }

    /// Monic gcd of two polynomials over this field.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        a.gcd(b)
    }
}

/// The kind of exact field an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FieldKind {
    /// Embed an integer into this field.
    pub fn int(&self, n: i64) -> Scalar {
        self.embed(&Scalar::from(n))
            .expect("integers embed in every field")
    }

    pub fn embed(&self, s: &Scalar) -> Result<Scalar, ArithmeticError> {
        match self {
            FieldKind::Rational => Ok(s.clone()),
            FieldKind::Prime(p) => s.reduce_mod(*p),
        }
    }

    pub fn rational(&self, q: &BigRational) -> Result<Scalar, ArithmeticError> {
        self.embed(&Scalar::Rational(q.clone()))
    }
}

/// A prime field `F_p` with a checked modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithmeticError> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(ArithmeticError::NotPrime(p));
        }
        Ok(PrimeField { modulus: p })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn element(&self, n: i64) -> Scalar {
        let p = self.modulus as i64;
        Scalar::Modular(ModInt {
            residue: n.rem_euclid(p) as u64,
            modulus: self.modulus,
        })
    }

    pub fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.modulus)
    }
}

/// A residue modulo a prime below 2^32.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt {
    residue: u64,
    modulus: u64,
}

impl ModInt {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn centered(&self) -> i64 {
        let r = self.residue as i64;
        let p = self.modulus as i64;
        if r > p / 2 {
            r - p
        } else {
            r
        }
    }

    fn inv(&self) -> Option<ModInt> {
        if self.residue == 0 {
            return None;
        }
        Some(ModInt {
            residue: pow_mod(self.residue, self.modulus - 2, self.modulus),
            modulus: self.modulus,
        })
    }
}

/// An exact scalar. Rational values coerce into `F_p` when combined with residues.
#[derive(Clone)]
pub enum Scalar {
    Rational(BigRational),
    Modular(ModInt),
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular(m) => write!(f, "{} mod {}", m.residue, m.modulus),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular(m) => write!(f, "{}", m.centered()),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(n))
    }
}

fn big_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

enum Pair<'a> {
    Q(&'a BigRational, &'a BigRational),
    M(u64, u64, u64),
}

impl Scalar {
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Modular(m) => FieldKind::Prime(m.modulus),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular(_) => None,
        }
    }

    /// Reduce into `F_p`; fails when the denominator vanishes modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Scalar, ArithmeticError> {
        match self {
            Scalar::Modular(m) if m.modulus == p => Ok(self.clone()),
            Scalar::Modular(m) => Err(ArithmeticError::FieldMismatch(m.modulus, p)),
            Scalar::Rational(q) => {
                let n = big_mod(q.numer(), p);
                let d = big_mod(q.denom(), p);
                let dinv = ModInt {
                    residue: d,
                    modulus: p,
                }
                .inv()
                .ok_or_else(|| ArithmeticError::BadReduction {
                    den: q.denom().to_string(),
                    modulus: p,
                })?;
                Ok(Scalar::Modular(ModInt {
                    residue: mul_mod(n, dinv.residue, p),
                    modulus: p,
                }))
            }
        }
    }

    /// True when both operands can be combined.
    pub fn compatible(&self, other: &Scalar) -> bool {
        self.pair(other).is_ok()
    }

    fn pair<'a>(&'a self, other: &'a Scalar) -> Result<Pair<'a>, ArithmeticError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Pair::Q(a, b)),
            (Scalar::Modular(a), Scalar::Modular(b)) => {
                if a.modulus != b.modulus {
                    Err(ArithmeticError::FieldMismatch(a.modulus, b.modulus))
                } else {
                    Ok(Pair::M(a.residue, b.residue, a.modulus))
                }
            }
            (Scalar::Modular(a), Scalar::Rational(_)) => {
                let b = other.reduce_mod(a.modulus)?;
                let Scalar::Modular(b) = b else {
                    unreachable!()
                };
                Ok(Pair::M(a.residue, b.residue, a.modulus))
            }
            (Scalar::Rational(_), Scalar::Modular(b)) => {
                let a = self.reduce_mod(b.modulus)?;
                let Scalar::Modular(a) = a else {
                    unreachable!()
                };
                Ok(Pair::M(a.residue, b.residue, b.modulus))
            }
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ArithmeticError> {
        Ok(match self.pair(rhs)? {
            Pair::Q(a, b) => Scalar::Rational(a + b),
            Pair::M(a, b, p) => modular((a + b) % p, p),
        })
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ArithmeticError> {
        Ok(match self.pair(rhs)? {
            Pair::Q(a, b) => Scalar::Rational(a - b),
            Pair::M(a, b, p) => modular((a + p - b) % p, p),
        })
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ArithmeticError> {
        Ok(match self.pair(rhs)? {
            Pair::Q(a, b) => Scalar::Rational(a * b),
            Pair::M(a, b, p) => modular(mul_mod(a, b, p), p),
        })
    }

    /// Square root in the same field, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().sqrt();
                let d = q.denom().sqrt();
                if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
                    Some(Scalar::Rational(BigRational::new(n, d)))
                } else {
                    None
                }
            }
            Scalar::Modular(m) => sqrt_mod(m.residue, m.modulus).map(|r| modular(r, m.modulus)),
        }
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }
}

fn modular(residue: u64, modulus: u64) -> Scalar {
    Scalar::Modular(ModInt { residue, modulus })
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match self.pair(other) {
            Ok(Pair::Q(a, b)) => a == b,
            Ok(Pair::M(a, b, _)) => a == b,
            Err(_) => false,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.checked_add(&rhs).expect("incompatible scalar fields")
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.checked_sub(&rhs).expect("incompatible scalar fields")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.checked_mul(&rhs).expect("incompatible scalar fields")
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("incompatible scalar fields")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("incompatible scalar fields")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("incompatible scalar fields")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular(m) => modular((m.modulus - m.residue) % m.modulus, m.modulus),
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular(m) => m.residue == 0,
        }
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }
}

impl Ring for Scalar {
    fn from_scalar(s: Scalar) -> Self {
        s
    }
}

impl Field for Scalar {
    fn try_inv(&self) -> Result<Self, ArithmeticError> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(ArithmeticError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Modular(m) => m
                .inv()
                .map(Scalar::Modular)
                .ok_or(ArithmeticError::DivisionByZero),
        }
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        a.gcd_fast(b)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Tonelli–Shanks.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}
