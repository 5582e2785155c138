use std::array;

use num_traits::Zero;

use super::{tropicalize_poly, DroppedMonomial, TropicalError, TropicalPolynomial};
use crate::contact::{cubic_surface_eval, transformation, ProjectivePoint};
use crate::field::Field;
use crate::multipoly::MultiPoly;
use crate::Valued;

/// Output of [`tropical_surface_pipeline`].
#[derive(Debug, Clone)]
pub struct SurfaceReport<F> {
    /// The tropical surface in the `W = 0` chart, variables `X, Y, Z`.
    pub polynomial: TropicalPolynomial,
    /// The homogeneous tropical cubic in `X, Y, Z, W`.
    pub homogeneous: TropicalPolynomial,
    /// Monomials whose pulled-back coefficient vanished identically.
    pub dropped: Vec<DroppedMonomial>,
    /// Stage parameters chosen by the transformation, for comparing runs.
    pub lambdas: [F; 6],
}

/// Pull the swept cubic surface back through the contactomorphism that sends the three
/// points to the standard ones, then tropicalize its coefficients.
pub fn tropical_surface_pipeline<F: Field + Valued>(
    p1: &ProjectivePoint<F>,
    p2: &ProjectivePoint<F>,
    p3: &ProjectivePoint<F>,
) -> Result<SurfaceReport<F>, TropicalError> {
    let tr = transformation(p1, p2, p3)?;
    let m = tr.to_standard.entries();
    let vars: [MultiPoly<F>; 4] = array::from_fn(MultiPoly::var);
    let pulled: [MultiPoly<F>; 4] = array::from_fn(|i| {
        let mut acc = MultiPoly::zero();
        for j in 0..4 {
            if !m[i][j].is_zero() {
                acc = acc + MultiPoly::constant(m[i][j].clone()) * vars[j].clone();
            }
        }
        acc
    });
    let g = cubic_surface_eval(&pulled);
    let (homogeneous, dropped) = tropicalize_poly(&g, 4)?;
    let polynomial = homogeneous.drop_var(3)?;
    Ok(SurfaceReport {
        polynomial,
        homogeneous,
        dropped,
        lambdas: tr.lambdas,
    })
}
