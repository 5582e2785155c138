//! Exact computations with complex legendrian curves in projective 3-space and their
//! tropical limits.
//!
//! All valuations follow the `t -> infinity` convention: the valuation of a series in `t`
//! is its top degree and tropical arithmetic is `(max, +)`.

pub mod checks;
pub mod contact;
pub mod field;
pub mod mesh;
mod modgcd;
pub mod multipoly;
pub mod poly;
pub mod quadric;
pub mod ratfun;
pub mod sampling;
pub mod series;
pub mod tropical;

pub use field::{ArithmeticError, Field, FieldKind, PrimeField, Ring, Scalar, DEFAULT_PRIME};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use series::{SeriesError, TruncatedSeries, Window};
pub use tropical::TropicalNumber;

/// Elements with a max-plus valuation.
pub trait Valued {
    fn valuation(&self) -> TropicalNumber;
}

impl Valued for Scalar {
    fn valuation(&self) -> TropicalNumber {
        if num_traits::Zero::is_zero(self) {
            TropicalNumber::NegInf
        } else {
            TropicalNumber::zero()
        }
    }
}

/// Series with exact scalar coefficients.
pub type Series = TruncatedSeries<Scalar>;
/// Rational functions of `t` over `Q` or `F_p`.
pub type RatFun = RationalFunction<Scalar>;
/// Polynomials in `s` with series coefficients.
pub type SeriesPoly = series::SeriesPoly<Scalar>;
/// Projective maps over a fixed field.
pub type ScalarMap = contact::ProjectiveMap<Scalar>;
/// Projective maps over rational functions of `t`.
pub type FunctionMap = contact::ProjectiveMap<RatFun>;
/// Projective maps over series in `t`.
pub type SeriesMap = contact::ProjectiveMap<Series>;
