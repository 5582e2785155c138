//! Exact enumeration of the two-dimensional cells of a tropical surface in a box.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{TropicalError, TropicalPolynomial};

pub type Point3 = [BigRational; 3];

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Closed axis-aligned box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundingBox {
    pub lo: Point3,
    pub hi: Point3,
}

impl BoundingBox {
    pub fn new(lo: Point3, hi: Point3) -> Result<Self, TropicalError> {
        if (0..3).any(|i| lo[i] >= hi[i]) {
            return Err(TropicalError::EmptyBox);
        }
        Ok(BoundingBox { lo, hi })
    }

    /// `[-r, r]^3`.
    pub fn cube(r: i64) -> Self {
        Self::new([q(-r), q(-r), q(-r)], [q(r), q(r), q(r)]).expect("r > 0")
    }

    pub fn contains(&self, p: &Point3) -> bool {
        (0..3).all(|i| self.lo[i] <= p[i] && p[i] <= self.hi[i])
    }
}

/// `normal . x + offset`, read as `= 0` or `>= 0` depending on context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub normal: Point3,
    pub offset: BigRational,
}

impl LinearConstraint {
    pub fn eval(&self, p: &Point3) -> BigRational {
        let mut v = self.offset.clone();
        for (n, x) in self.normal.iter().zip(p) {
            v += n * x;
        }
        v
    }
}

/// The region where two terms tie and dominate all others, clipped to a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalCell {
    pub terms: (usize, usize),
    /// Term `i` minus term `j`.
    pub equality: LinearConstraint,
    /// Term `i` minus term `k`, for every other `k`.
    pub inequalities: Vec<LinearConstraint>,
    /// Vertices of the clipped polygon in cyclic order.
    pub polygon: Vec<Point3>,
}

fn difference(f: &TropicalPolynomial, i: usize, k: usize) -> LinearConstraint {
    let (a, b) = (&f.terms()[i], &f.terms()[k]);
    LinearConstraint {
        normal: [0, 1, 2].map(|v| q(a.exp[v] - b.exp[v])),
        offset: &a.coeff - &b.coeff,
    }
}

type P2 = (BigRational, BigRational);

/// `alpha u + beta v + gamma >= 0`.
struct HalfPlane(BigRational, BigRational, BigRational);

impl HalfPlane {
    fn eval(&self, p: &P2) -> BigRational {
        &self.0 * &p.0 + &self.1 * &p.1 + &self.2
    }
}

fn clip(poly: Vec<P2>, h: &HalfPlane) -> Vec<P2> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..n {
        let p = &poly[k];
        let qq = &poly[(k + 1) % n];
        let fp = h.eval(p);
        let fq = h.eval(qq);
        if !fp.is_negative() {
            out.push(p.clone());
        }
        if (fp.is_negative() && fq.is_positive()) || (fp.is_positive() && fq.is_negative()) {
            let s = &fp / (&fp - &fq);
            out.push((&p.0 + (&qq.0 - &p.0) * &s, &p.1 + (&qq.1 - &p.1) * &s));
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn area2(poly: &[P2]) -> BigRational {
    let n = poly.len();
    let mut a = BigRational::zero();
    for k in 0..n {
        let (p, r) = (&poly[k], &poly[(k + 1) % n]);
        a += &p.0 * &r.1 - &r.0 * &p.1;
    }
    a
}

fn cell_for_pair(
    f: &TropicalPolynomial,
    bbox: &BoundingBox,
    i: usize,
    j: usize,
) -> Option<TropicalCell> {
    let eq = difference(f, i, j);
    let axis = (0..3)
        .filter(|&a| !eq.normal[a].is_zero())
        .max_by(|&a, &b| eq.normal[a].abs().cmp(&eq.normal[b].abs()))?;
    let free: Vec<usize> = (0..3).filter(|&a| a != axis).collect();
    let (b, c) = (free[0], free[1]);
    let na = &eq.normal[axis];
    // restrict g . x + h >= 0 to the plane, in the free coordinates (u, v)
    let restrict = |g: &Point3, h: &BigRational| {
        let ga = &g[axis] / na;
        HalfPlane(
            &g[b] - &ga * &eq.normal[b],
            &g[c] - &ga * &eq.normal[c],
            h - &ga * &eq.offset,
        )
    };
    let mut poly: Vec<P2> = vec![
        (bbox.lo[b].clone(), bbox.lo[c].clone()),
        (bbox.hi[b].clone(), bbox.lo[c].clone()),
        (bbox.hi[b].clone(), bbox.hi[c].clone()),
        (bbox.lo[b].clone(), bbox.hi[c].clone()),
    ];
    let mut unit: Point3 = [q(0), q(0), q(0)];
    unit[axis] = q(1);
    let neg_unit: Point3 = unit.clone().map(|x| -x);
    poly = clip(poly, &restrict(&unit, &-bbox.lo[axis].clone()));
    poly = clip(poly, &restrict(&neg_unit, &bbox.hi[axis]));
    let mut inequalities = Vec::new();
    for k in 0..f.len() {
        if k == i || k == j {
            continue;
        }
        let d = difference(f, i, k);
        if poly.len() >= 3 {
            poly = clip(poly, &restrict(&d.normal, &d.offset));
        }
        inequalities.push(d);
    }
    if poly.len() < 3 || area2(&poly).is_zero() {
        return None;
    }
    let polygon = poly
        .into_iter()
        .map(|(u, v)| {
            let mut p: Point3 = [q(0), q(0), q(0)];
            p[b] = u.clone();
            p[c] = v.clone();
            p[axis] = -(&eq.offset + &eq.normal[b] * &u + &eq.normal[c] * &v) / na;
            p
        })
        .collect();
    Some(TropicalCell {
        terms: (i, j),
        equality: eq,
        inequalities,
        polygon,
    })
}

/// Every pair of terms whose tie-and-dominate region meets the box in a polygon.
pub fn corner_locus_cells(
    f: &TropicalPolynomial,
    bbox: &BoundingBox,
) -> Result<Vec<TropicalCell>, TropicalError> {
    if f.nvars() != 3 {
        return Err(TropicalError::ArityMismatch {
            expected: 3,
            found: f.nvars(),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..f.len())
        .flat_map(|i| (i + 1..f.len()).map(move |j| (i, j)))
        .collect();
    Ok(pairs
        .par_iter()
        .filter_map(|&(i, j)| cell_for_pair(f, bbox, i, j))
        .collect())
}

impl TropicalCell {
    /// Whether `p` lies in the closed cell (inside the box it was clipped to).
    pub fn contains(&self, p: &Point3, bbox: &BoundingBox) -> bool {
        bbox.contains(p)
            && self.equality.eval(p).is_zero()
            && self.inequalities.iter().all(|c| !c.eval(p).is_negative())
    }
}
