//! JSON renderings of the core types that have no serde form of their own.

use num_traits::One;
use serde_json::{json, Value};
use tropleg_core::contact::{ProjectiveMap, ProjectivePoint};
use tropleg_core::{Poly, RatFun, Ring, Scalar, Series};

pub fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

/// Coefficients from degree 0 upward.
pub fn poly(p: &Poly<Scalar>) -> Value {
    Value::Array(p.coeffs().iter().map(scalar).collect())
}

pub fn ratfun(r: &RatFun) -> Value {
    if r.is_polynomial() && r.denominator().coeff(0).is_one() {
        return json!({ "num": poly(r.numerator()) });
    }
    json!({ "num": poly(r.numerator()), "den": poly(r.denominator()) })
}

pub fn series(s: &Series) -> Value {
    serde_json::to_value(s.to_json()).expect("series JSON")
}

pub fn series_poly(p: &Poly<Series>) -> Value {
    Value::Array(p.coeffs().iter().map(series).collect())
}

pub fn point<R: Ring>(p: &ProjectivePoint<R>, f: impl Fn(&R) -> Value) -> Value {
    Value::Array(p.coords().iter().map(f).collect())
}

pub fn matrix<R: Ring>(m: &ProjectiveMap<R>, f: impl Fn(&R) -> Value) -> Value {
    Value::Array(
        m.entries()
            .iter()
            .map(|row| Value::Array(row.iter().map(&f).collect()))
            .collect(),
    )
}
