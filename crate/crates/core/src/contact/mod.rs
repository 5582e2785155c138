//! Contact structures on projective 3-space, the symplectic group acting on them,
//! and the legendrian curves of low degree.

mod cubic;
mod line;
mod map;
mod transform;

pub use cubic::{
    cubic_family, cubic_family_curve, cubic_family_psi, cubic_family_psi_curve,
    cubic_family_psi_m_curve, cubic_surface, cubic_surface_eval, cubics_through_line,
    CubicThroughLine, LineCubics,
};
pub use line::{line_balance_table, line_criterion, line_is_legendrian, BalanceTable, Line};
pub use map::{stabilizer, standard_j, standard_points, Generator, ProjectiveMap, ProjectivePoint};
pub use transform::{transformation, Pivot, Transformation};

use std::array;

use num_traits::Zero;
use thiserror::Error;

use crate::field::{ArithmeticError, Ring, Scalar};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContactError {
    #[error("degenerate configuration: {0} vanishes")]
    Degenerate(Pivot),
    #[error("point lies at infinity in the w = 1 chart")]
    AtInfinity,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symplectic up to scale")]
    NotSymplectic,
    #[error("scale generator needs a nonzero parameter")]
    ZeroScale,
    #[error("the two points spanning the line are dependent")]
    DegenerateLine,
    #[error("non-generic line: {0}")]
    NonGenericLine(String),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

/// The contact form
/// `(py-qz+aw)dx + (-px+rz+bw)dy + (qx-ry+cw)dz + (-ax-by-cz)dw`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContactForm {
    pub p: Scalar,
    pub q: Scalar,
    pub r: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl ContactForm {
    pub fn new(coeffs: [Scalar; 6]) -> Self {
        let [p, q, r, a, b, c] = coeffs;
        ContactForm { p, q, r, a, b, c }
    }

    pub fn from_ints(coeffs: [i64; 6]) -> Self {
        Self::new(coeffs.map(Scalar::from))
    }

    /// `y dx - x dy + w dz - z dw`.
    pub fn standard() -> Self {
        Self::from_ints([1, 0, 0, 0, 0, 1])
    }

    pub fn coeffs(&self) -> [Scalar; 6] {
        [
            self.p.clone(),
            self.q.clone(),
            self.r.clone(),
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
        ]
    }

    /// `pc + qb + ra`; the form is contact iff this is nonzero.
    pub fn contactness(&self) -> Scalar {
        &(&self.p * &self.c) + &(&(&self.q * &self.b) + &(&self.r * &self.a))
    }

    pub fn is_contact(&self) -> bool {
        !self.contactness().is_zero()
    }

    pub fn scaled(&self, l: &Scalar) -> Self {
        Self::new(self.coeffs().map(|c| &c * l))
    }

    /// Coefficients of `dx, dy, dz, dw` at a point.
    pub fn covector<R: Ring>(&self, pt: &[R; 4]) -> [R; 4] {
        let k = |s: &Scalar| R::from_scalar(s.clone());
        let [x, y, z, w] = pt.clone();
        let (p, q, r, a, b, c) = (
            k(&self.p),
            k(&self.q),
            k(&self.r),
            k(&self.a),
            k(&self.b),
            k(&self.c),
        );
        [
            p.clone() * y.clone() - q.clone() * z.clone() + a.clone() * w.clone(),
            -(p * x.clone()) + r.clone() * z.clone() + b.clone() * w.clone(),
            q * x.clone() - r * y.clone() + c.clone() * w,
            -(a * x) - b * y - c * z,
        ]
    }
}

/// Four homogeneous coordinate polynomials in the curve parameter `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametrizedCurve<R> {
    coords: [Poly<R>; 4],
}

impl<R: Ring> ParametrizedCurve<R> {
    pub fn new(coords: [Poly<R>; 4]) -> Self {
        ParametrizedCurve { coords }
    }

    pub fn coords(&self) -> &[Poly<R>; 4] {
        &self.coords
    }

    pub fn eval(&self, s: &R) -> ProjectivePoint<R> {
        ProjectivePoint(array::from_fn(|i| self.coords[i].eval(s)))
    }

    pub fn is_identically_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> ParametrizedCurve<S> {
        ParametrizedCurve {
            coords: array::from_fn(|i| self.coords[i].map(&f)),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coords.iter().filter_map(Poly::degree).max()
    }
}

/// `y x' - x y' + w z' - z w'`; zero iff the curve is legendrian for the standard form.
pub fn contact_eval<R: Ring>(curve: &ParametrizedCurve<R>) -> Poly<R> {
    let [x, y, z, w] = &curve.coords;
    y * &x.derivative() - x * &y.derivative() + w * &z.derivative() - z * &w.derivative()
}

/// The general form evaluated on the tangent field of the curve.
pub fn general_contact_eval<R: Ring>(form: &ContactForm, curve: &ParametrizedCurve<R>) -> Poly<R> {
    let cov = form.covector::<Poly<R>>(&curve.coords);
    let mut acc = Poly::zero();
    for (c, x) in cov.iter().zip(&curve.coords) {
        acc = acc + c * &x.derivative();
    }
    acc
}
