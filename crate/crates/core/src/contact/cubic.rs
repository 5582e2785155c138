//! The one-parameter family of legendrian twisted cubics through the standard points
//! and the cubic surface it sweeps out.

use num_traits::{One, Zero};

use super::{ContactError, ParametrizedCurve, ProjectivePoint};
use crate::field::{Field, Ring, Scalar};
use crate::multipoly::MultiPoly;
use crate::poly::Poly;

/// `l(t, mu) = (t, t^2 + mu (t - t^3), t^3, 1 - 3 mu (t - t^3))`, legendrian for
/// `3y dx - 3x dy + w dz - z dw`.
pub fn cubic_family<R: Ring>(t: &R, mu: &R) -> ProjectivePoint<R> {
    let t2 = t.clone() * t.clone();
    let t3 = t2.clone() * t.clone();
    let g = t.clone() - t3.clone();
    ProjectivePoint::new(
        t.clone(),
        t2 + mu.clone() * g.clone(),
        t3,
        R::one() - R::from_i64(3) * mu.clone() * g,
    )
}

/// `(3t - t^3, 2t^2 + 2 mu (t - t^3), 2t^3, 1 + t^2 - 2 mu (t - t^3))`, legendrian for the
/// standard form.
pub fn cubic_family_psi<R: Ring>(t: &R, mu: &R) -> ProjectivePoint<R> {
    let k = |n: i64| R::from_i64(n);
    let t2 = t.clone() * t.clone();
    let t3 = t2.clone() * t.clone();
    let g = t.clone() - t3.clone();
    ProjectivePoint::new(
        k(3) * t.clone() - t3.clone(),
        k(2) * t2.clone() + k(2) * mu.clone() * g.clone(),
        k(2) * t3,
        R::one() + t2 - k(2) * mu.clone() * g,
    )
}

fn mu_poly(coeffs: &[i64]) -> Poly<Scalar> {
    Poly::from_coeffs(coeffs.iter().map(|&c| Scalar::from(c)).collect())
}

fn family_curve(rows: [[[i64; 2]; 4]; 4]) -> ParametrizedCurve<Poly<Scalar>> {
    // rows[i][k] = coefficients (in mu) of s^k in coordinate i
    ParametrizedCurve::new(rows.map(|r| Poly::from_coeffs(r.iter().map(|c| mu_poly(c)).collect())))
}

/// [`cubic_family`] as a curve in `s` whose coefficients are polynomials in `mu`.
pub fn cubic_family_curve() -> ParametrizedCurve<Poly<Scalar>> {
    family_curve([
        [[0, 0], [1, 0], [0, 0], [0, 0]],
        [[0, 0], [0, 1], [1, 0], [0, -1]],
        [[0, 0], [0, 0], [0, 0], [1, 0]],
        [[1, 0], [0, -3], [0, 0], [0, 3]],
    ])
}

/// [`cubic_family_psi`] as a curve in `s` with coefficients polynomial in `mu`.
pub fn cubic_family_psi_curve() -> ParametrizedCurve<Poly<Scalar>> {
    family_curve([
        [[0, 0], [3, 0], [0, 0], [-1, 0]],
        [[0, 0], [0, 2], [2, 0], [0, -2]],
        [[0, 0], [0, 0], [0, 0], [2, 0]],
        [[1, 0], [0, -2], [1, 0], [0, 2]],
    ])
}

/// The same family in the parameter `m = 2 mu`:
/// `(3s - s^3, 2s^2 + m (s - s^3), 2s^3, 1 + s^2 - m (s - s^3))`.
pub fn cubic_family_psi_m_curve() -> ParametrizedCurve<Poly<Scalar>> {
    family_curve([
        [[0, 0], [3, 0], [0, 0], [-1, 0]],
        [[0, 0], [0, 1], [2, 0], [0, -1]],
        [[0, 0], [0, 0], [0, 0], [2, 0]],
        [[1, 0], [0, -1], [1, 0], [0, 1]],
    ])
}

/// `F = 2x^3 + 21x^2 z - 27y^2 z - 54yzw - 27zw^2 + 60xz^2 + 25z^3`.
pub fn cubic_surface_eval<R: Ring>(pt: &[R; 4]) -> R {
    let k = |n: i64| R::from_i64(n);
    let [x, y, z, w] = pt.clone();
    let x2 = x.clone() * x.clone();
    let z2 = z.clone() * z.clone();
    k(2) * x2.clone() * x.clone() + k(21) * x2 * z.clone()
        - k(27) * y.clone() * y.clone() * z.clone()
        - k(54) * y * z.clone() * w.clone()
        - k(27) * z.clone() * w.clone() * w
        + k(60) * x * z2.clone()
        + k(25) * z2 * z
}

/// [`cubic_surface_eval`] as a polynomial in `x, y, z, w`.
pub fn cubic_surface() -> MultiPoly<Scalar> {
    cubic_surface_eval(&[0, 1, 2, 3].map(MultiPoly::var))
}

/// One cubic of the family meeting a given line.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicThroughLine {
    /// Parameter on the cubic where it meets the line.
    pub t: Scalar,
    /// The line is hit at `x = c t`.
    pub c: Scalar,
    pub mu: Scalar,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineCubics {
    /// `(3p1 + p3)(t^3 - q2 t) - p2 (3t^2 - (3q1 + q3) t + 1)`.
    pub polynomial: Poly<Scalar>,
    /// Solutions with `t` in the base field.
    pub solutions: Vec<CubicThroughLine>,
}

/// Cubics of the family meeting the line `y = p1 + q1 x, z = p2 + q2 x, w = p3 + q3 x`.
pub fn cubics_through_line(
    p1: &Scalar,
    q1: &Scalar,
    p2: &Scalar,
    q2: &Scalar,
    p3: &Scalar,
    q3: &Scalar,
) -> Result<LineCubics, ContactError> {
    let k = |n: i64| Scalar::from(n);
    let lead = &(&k(3) * p1) + p3;
    if lead.is_zero() {
        return Err(ContactError::NonGenericLine("3 p1 + p3 = 0".into()));
    }
    if p1.is_zero() && p2.is_zero() {
        return Err(ContactError::NonGenericLine(
            "the line passes through (0,0,0,1)".into(),
        ));
    }
    let s = &(&k(3) * q1) + q3;
    let cubic = Poly::from_coeffs(vec![
        Scalar::zero(),
        -(&lead * q2),
        Scalar::zero(),
        lead.clone(),
    ]);
    let quad = Poly::from_coeffs(vec![Scalar::one(), -s.clone(), k(3)]);
    let polynomial = cubic - quad.scale(p2);
    let mut solutions = Vec::new();
    for (t, mult) in polynomial.roots()? {
        let g = &t - &(&(&t * &t) * &t);
        if g.is_zero() {
            return Err(ContactError::NonGenericLine(format!(
                "intersection at t = {t}"
            )));
        }
        let c = lead.try_div(&quad.eval(&t))?;
        let ct = &c * &t;
        let num = &(p1 + &(q1 * &ct)) - &(&ct * &t);
        let mu = num.try_div(&(&c * &g))?;
        solutions.push(CubicThroughLine {
            t,
            c,
            mu,
            multiplicity: mult,
        });
    }
    Ok(LineCubics {
        polynomial,
        solutions,
    })
}

impl CubicThroughLine {
    /// The family point at `t` is the line point at `x = c t`.
    pub fn lies_on_line(
        &self,
        p1: &Scalar,
        q1: &Scalar,
        p2: &Scalar,
        q2: &Scalar,
        p3: &Scalar,
        q3: &Scalar,
    ) -> bool {
        let x = &self.c * &self.t;
        let on_line =
            ProjectivePoint::new(x.clone(), p1 + &(q1 * &x), p2 + &(q2 * &x), p3 + &(q3 * &x));
        cubic_family(&self.t, &self.mu).projectively_equal(&on_line)
    }
}
