//! Rational functions in the parameter `t`, kept reduced with a monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{ArithmeticError, Field, Ring, Scalar};
use crate::poly::Poly;
use crate::series::{SeriesError, TruncatedSeries};
use crate::tropical::TropicalNumber;
use crate::Valued;

#[derive(Clone, PartialEq)]
pub struct RationalFunction<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: fmt::Debug> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(num: Poly<F>) -> Self {
        RationalFunction {
            num,
            den: Poly::one(),
        }
    }

    /// The parameter `t`.
    pub fn t() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Poly::one(),
            };
        }
        if den.degree() == Some(0) {
            let inv = den.leading().unwrap().try_inv().expect("nonzero");
            return RationalFunction {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = F::poly_gcd(&num, &den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        } else {
            (num, den)
        };
        let inv = den.leading().unwrap().try_inv().expect("nonzero");
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// Make an already coprime denominator monic.
    fn normalize(num: Poly<F>, den: Poly<F>) -> Self {
        let inv = den.leading().unwrap().try_inv().expect("nonzero");
        if den.degree() == Some(0) {
            return RationalFunction {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    fn cancel(n: Poly<F>, d: Poly<F>) -> (Poly<F>, Poly<F>) {
        if d.degree() == Some(0) {
            return (n, d);
        }
        let g = F::poly_gcd(&n, &d);
        if g.degree().unwrap_or(0) == 0 {
            return (n, d);
        }
        (n.div_rem(&g).unwrap().0, d.div_rem(&g).unwrap().0)
    }

    pub fn eval(&self, t: &F) -> Result<F, ArithmeticError> {
        self.num.eval(t).try_div(&self.den.eval(t))
    }

    /// Laurent expansion in `t^{-1}` through exponent `floor`.
    pub fn to_series(&self, floor: i64) -> Result<TruncatedSeries<F>, SeriesError> {
        let num = TruncatedSeries::from_poly(&self.num);
        let den = TruncatedSeries::from_poly(&self.den);
        if self.is_polynomial() {
            return Ok(num);
        }
        let v = self.valuation_i64().unwrap_or(0);
        let order = (v - floor).max(0) as usize;
        let inv = den.invert(order + self.den.degree().unwrap_or(0))?;
        Ok((num * inv).truncate_below(floor))
    }

    fn valuation_i64(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(n - self.den.degree().unwrap() as i64)
    }
}

impl<F: Field> Valued for RationalFunction<F> {
    fn valuation(&self) -> TropicalNumber {
        match self.valuation_i64() {
            None => TropicalNumber::NegInf,
            Some(v) => TropicalNumber::from(v),
        }
    }
}

impl<F: Field> Add for RationalFunction<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::reduce(self.num + rhs.num, self.den);
        }
        if rhs.den.degree() == Some(0) {
            return RationalFunction {
                num: self.num + &rhs.num * &self.den,
                den: self.den,
            };
        }
        if self.den.degree() == Some(0) {
            return RationalFunction {
                num: &self.num * &rhs.den + rhs.num,
                den: rhs.den,
            };
        }
        Self::reduce(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<F: Field> Sub for RationalFunction<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for RationalFunction<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalFunction {
                num: self.num * rhs.num,
                den: Poly::one(),
            };
        }
        // both operands are reduced, so only cross terms can share factors
        let (a, d) = Self::cancel(self.num, rhs.den);
        let (c, b) = Self::cancel(rhs.num, self.den);
        Self::normalize(a * c, b * d)
    }
}

impl<F: Field> Neg for RationalFunction<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Zero for RationalFunction<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RationalFunction<F> {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<F: Field> Ring for RationalFunction<F> {
    fn from_scalar(s: Scalar) -> Self {
        Self::constant(F::from_scalar(s))
    }
}

impl<F: Field> Field for RationalFunction<F> {
    fn try_inv(&self) -> Result<Self, ArithmeticError> {
        if self.num.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    fn integral_denominator(&self) -> Option<Self> {
        if self.den.degree().unwrap_or(0) > 0 {
            Some(Self::from_poly(self.den.clone()))
        } else {
            None
        }
    }
}
