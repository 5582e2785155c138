use std::array;

use num_traits::Zero;

use super::{ContactError, ParametrizedCurve};
use crate::field::{Field, Ring};
use crate::poly::Poly;

/// Homogeneous coordinates `(x, y, z, w)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint<R>(pub [R; 4]);

impl<R: Ring> ProjectivePoint<R> {
    pub fn new(x: R, y: R, z: R, w: R) -> Self {
        ProjectivePoint([x, y, z, w])
    }

    pub fn coords(&self) -> &[R; 4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Equality in projective space: all 2x2 minors vanish.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let m =
                    self.0[i].clone() * other.0[j].clone() - self.0[j].clone() * other.0[i].clone();
                if !m.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ProjectivePoint<S> {
        ProjectivePoint(array::from_fn(|i| f(&self.0[i])))
    }
}

impl<F: Field> ProjectivePoint<F> {
    /// Divide by `w`; fails when the point is at infinity in this chart.
    pub fn normalized(&self) -> Result<Self, ContactError> {
        let inv = self.0[3].try_inv().map_err(|_| ContactError::AtInfinity)?;
        Ok(self.map(|c| c.clone() * inv.clone()))
    }
}

/// Bilinear form `Omega(u, v) = u^T J v` of the standard contact form
/// `y dx - x dy + w dz - z dw`.
pub fn standard_j<R: Ring>() -> [[R; 4]; 4] {
    let mut j: [[R; 4]; 4] = array::from_fn(|_| array::from_fn(|_| R::zero()));
    j[1][0] = R::one();
    j[0][1] = -R::one();
    j[3][2] = R::one();
    j[2][3] = -R::one();
    j
}

/// A 4x4 matrix acting on column vectors, optionally flagged as symplectic up to scale.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveMap<R> {
    m: [[R; 4]; 4],
    symplectic: bool,
}

impl<R: Ring> ProjectiveMap<R> {
    pub fn new(m: [[R; 4]; 4]) -> Self {
        ProjectiveMap {
            m,
            symplectic: false,
        }
    }

    pub(crate) fn flagged(m: [[R; 4]; 4]) -> Self {
        ProjectiveMap {
            m,
            symplectic: true,
        }
    }

    pub fn identity() -> Self {
        Self::flagged(array::from_fn(|i| {
            array::from_fn(|j| if i == j { R::one() } else { R::zero() })
        }))
    }

    pub fn entries(&self) -> &[[R; 4]; 4] {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.m[i][j]
    }

    pub fn is_flagged_symplectic(&self) -> bool {
        self.symplectic
    }

    /// Set the flag after checking `M^T J M = lambda J`.
    pub fn verified(mut self) -> Result<Self, ContactError> {
        if self.symplectic_factor().is_none() {
            return Err(ContactError::NotSymplectic);
        }
        self.symplectic = true;
        Ok(self)
    }

    pub fn map_entries<S: Ring>(&self, f: impl Fn(&R) -> S) -> ProjectiveMap<S> {
        ProjectiveMap {
            m: array::from_fn(|i| array::from_fn(|j| f(&self.m[i][j]))),
            symplectic: self.symplectic,
        }
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        ProjectiveMap {
            m: mat_mul(&self.m, &rhs.m),
            symplectic: self.symplectic && rhs.symplectic,
        }
    }

    pub fn transpose(&self) -> Self {
        ProjectiveMap {
            m: array::from_fn(|i| array::from_fn(|j| self.m[j][i].clone())),
            symplectic: self.symplectic,
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = self.map_entries(|e| e.clone() * c.clone());
        out.symplectic = self.symplectic;
        out
    }

    pub fn apply(&self, p: &ProjectivePoint<R>) -> ProjectivePoint<R> {
        ProjectivePoint(array::from_fn(|i| {
            let mut acc = R::zero();
            for j in 0..4 {
                if !self.m[i][j].is_zero() {
                    acc = acc + self.m[i][j].clone() * p.0[j].clone();
                }
            }
            acc
        }))
    }

    pub fn apply_curve(&self, c: &ParametrizedCurve<R>) -> ParametrizedCurve<R> {
        ParametrizedCurve::new(array::from_fn(|i| {
            let mut acc = Poly::zero();
            for j in 0..4 {
                if !self.m[i][j].is_zero() {
                    acc = acc + c.coords()[j].scale(&self.m[i][j]);
                }
            }
            acc
        }))
    }

    /// The scalar `lambda` with `M^T J M = lambda J`, if it exists and is nonzero.
    pub fn symplectic_factor(&self) -> Option<R> {
        let j = standard_j::<R>();
        let mt = self.transpose().m;
        let p = mat_mul(&mat_mul(&mt, &j), &self.m);
        let lambda = p[1][0].clone();
        if lambda.is_zero() {
            return None;
        }
        for a in 0..4 {
            for b in 0..4 {
                if p[a][b] != lambda.clone() * j[a][b].clone() {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// Equal to a nonzero multiple of the other map.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        let mut pivot = None;
        for i in 0..4 {
            for j in 0..4 {
                if !self.m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break;
                }
            }
            if pivot.is_some() {
                break;
            }
        }
        let Some((pi, pj)) = pivot else { return false };
        if other.m[pi][pj].is_zero() {
            return false;
        }
        for i in 0..4 {
            for j in 0..4 {
                let l = self.m[i][j].clone() * other.m[pi][pj].clone();
                let r = other.m[i][j].clone() * self.m[pi][pj].clone();
                if l != r {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_scalar(&self) -> bool {
        self.projectively_equal(&Self::identity())
    }
}

pub(crate) fn mat_mul<R: Ring>(a: &[[R; 4]; 4], b: &[[R; 4]; 4]) -> [[R; 4]; 4] {
    array::from_fn(|i| {
        array::from_fn(|j| {
            let mut acc = R::zero();
            for k in 0..4 {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    acc = acc + a[i][k].clone() * b[k][j].clone();
                }
            }
            acc
        })
    })
}

impl<F: Field> ProjectiveMap<F> {
    /// Inverse up to scale, with denominators cleared entry by entry.
    pub fn inverse(&self) -> Result<Self, ContactError> {
        let (det, adj) = adjugate(&self.m);
        let d = det.try_inv().map_err(|_| ContactError::Singular)?;
        let mut out = ProjectiveMap {
            m: adj.map(|row| row.map(|e| e * d.clone())),
            symplectic: self.symplectic,
        };
        out.clear_denominators();
        Ok(out)
    }

    /// Visit entries row by row over the first three columns, then the last column,
    /// scaling the matrix by any denominator encountered.
    pub fn clear_denominators(&mut self) {
        let order: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .chain((0..4).map(|i| (i, 3)))
            .collect();
        for (i, j) in order {
            if let Some(d) = self.m[i][j].integral_denominator() {
                for row in self.m.iter_mut() {
                    for e in row.iter_mut() {
                        *e = e.clone() * d.clone();
                    }
                }
            }
        }
    }
}

fn det3<R: Ring>(m: &[[R; 4]; 4], rows: [usize; 3], cols: [usize; 3]) -> R {
    let e = |i: usize, j: usize| m[rows[i]][cols[j]].clone();
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// Determinant and adjugate by cofactors, using only ring operations.
fn adjugate<R: Ring>(m: &[[R; 4]; 4]) -> (R, [[R; 4]; 4]) {
    let others = |k: usize| -> [usize; 3] {
        let mut out = [0; 3];
        let mut n = 0;
        for i in 0..4 {
            if i != k {
                out[n] = i;
                n += 1;
            }
        }
        out
    };
    let adj: [[R; 4]; 4] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // adj[i][j] is the (j, i) cofactor
            let c = det3(m, others(j), others(i));
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    });
    let mut det = R::zero();
    for j in 0..4 {
        det = det + m[0][j].clone() * adj[j][0].clone();
    }
    (det, adj)
}

/// The five generator families of the contactomorphism group.
#[derive(Debug, Clone, PartialEq)]
pub enum Generator<R> {
    /// `x -> x + lambda y`
    ShearXy(R),
    /// `x -> y, y -> -x`
    RotateXy,
    /// `x <-> z, y <-> w`
    SwapPairs,
    /// `x -> x + lambda w, z -> z + lambda y`
    CrossShear(R),
    /// `x -> lambda x, y -> y / lambda`
    ScaleXy(R),
}

impl<F: Field> Generator<F> {
    pub fn matrix(&self) -> Result<ProjectiveMap<F>, ContactError> {
        let mut m = ProjectiveMap::<F>::identity().m;
        match self {
            Generator::ShearXy(l) => m[0][1] = l.clone(),
            Generator::RotateXy => {
                m[0][0] = F::zero();
                m[1][1] = F::zero();
                m[0][1] = F::one();
                m[1][0] = -F::one();
            }
            Generator::SwapPairs => {
                m = array::from_fn(|_| array::from_fn(|_| F::zero()));
                m[0][2] = F::one();
                m[1][3] = F::one();
                m[2][0] = F::one();
                m[3][1] = F::one();
            }
            Generator::CrossShear(l) => {
                m[0][3] = l.clone();
                m[2][1] = l.clone();
            }
            Generator::ScaleXy(l) => {
                let inv = l.try_inv().map_err(|_| ContactError::ZeroScale)?;
                m[0][0] = l.clone();
                m[1][1] = inv;
            }
        }
        Ok(ProjectiveMap::flagged(m))
    }
}

/// Maps fixing `(0,0,0,1)`, `(1,1,1,1)` and `(-1,1,-1,1)`:
/// `y -> y + mu (z - x)`, `w -> w - mu (z - x)`.
pub fn stabilizer<R: Ring>(mu: &R) -> ProjectiveMap<R> {
    let mut m = ProjectiveMap::<R>::identity().m;
    m[1][0] = -mu.clone();
    m[1][2] = mu.clone();
    m[3][0] = mu.clone();
    m[3][2] = -mu.clone();
    ProjectiveMap::flagged(m)
}

/// The three standard points.
pub fn standard_points<R: Ring>() -> [ProjectivePoint<R>; 3] {
    let i = |v: i64| R::from_i64(v);
    [
        ProjectivePoint::new(i(0), i(0), i(0), i(1)),
        ProjectivePoint::new(i(1), i(1), i(1), i(1)),
        ProjectivePoint::new(i(-1), i(1), i(-1), i(1)),
    ]
}
