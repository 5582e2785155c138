//! Staged construction of a contactomorphism sending three generic points to the
//! standard triple `(0,0,0,1)`, `(1,1,1,1)`, `(-1,1,-1,1)`.

use std::array;
use std::fmt;

use super::map::ProjectiveMap;
use super::{ContactError, Generator, ProjectivePoint};
use crate::field::{Field, Ring};

/// Quantities that must not vanish for the staged algorithm to go through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    /// Denominator of `lambda_k`, `k` in `2..=6`.
    Lambda(u8),
    /// `z` of the third point after the shears.
    SpecialZ,
    /// `y - z` of the third point.
    SpecialYMinusZ,
    /// `x - y + z - w` of the third point.
    SpecialDeterminant,
    /// The `w` coordinate of input point `i`.
    Chart(u8),
}

impl fmt::Display for Pivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pivot::Lambda(k) => write!(f, "the pivot of lambda{k}"),
            Pivot::SpecialZ => write!(f, "z in the special matrix"),
            Pivot::SpecialYMinusZ => write!(f, "y - z in the special matrix"),
            Pivot::SpecialDeterminant => write!(f, "x - y + z - w in the special matrix"),
            Pivot::Chart(i) => write!(f, "w of point {}", i + 1),
        }
    }
}

/// Result of [`transformation`].
#[derive(Debug, Clone, PartialEq)]
pub struct Transformation<F> {
    /// Sends the input points to the standard ones.
    pub to_standard: ProjectiveMap<F>,
    /// Sends the standard points to the inputs.
    pub from_standard: ProjectiveMap<F>,
    /// `lambda1..lambda6` as chosen by the stages.
    pub lambdas: [F; 6],
    /// The third point after the shears, fed to the special matrix.
    pub special_point: [F; 4],
}

/// Three points stored as columns: `cols[j][i]` is coordinate `i` of point `j`.
struct Triple<F> {
    cols: [[F; 4]; 3],
}

impl<F: Field> Triple<F> {
    fn get(&self, coord: usize, point: usize) -> &F {
        &self.cols[point][coord]
    }

    fn apply(self, g: &ProjectiveMap<F>) -> Self {
        Triple {
            cols: self.cols.map(|c| g.apply(&ProjectivePoint(c)).0),
        }
    }

    /// Scale by every non-integral denominator, visiting rows then columns.
    fn clear_denominators(&mut self) {
        for i in 0..4 {
            for j in 0..3 {
                if let Some(d) = self.cols[j][i].integral_denominator() {
                    for col in self.cols.iter_mut() {
                        for e in col.iter_mut() {
                            *e = e.clone() * d.clone();
                        }
                    }
                }
            }
        }
    }
}

/// `num / den`, with `0 / 0 = 0` since the stage's goal already holds then.
fn ratio<F: Field>(num: F, den: &F, pivot: Pivot) -> Result<F, ContactError> {
    if den.is_zero() {
        if num.is_zero() {
            return Ok(F::zero());
        }
        return Err(ContactError::Degenerate(pivot));
    }
    Ok(num.try_div(den)?)
}

fn a<F: Field>(l: &F) -> ProjectiveMap<F> {
    Generator::ShearXy(l.clone()).matrix().expect("shear")
}

fn b<F: Field>() -> ProjectiveMap<F> {
    // x -> -y, y -> x: the inverse of the rotation generator
    Generator::RotateXy.matrix().expect("rotation").transpose()
}

fn c<F: Field>() -> ProjectiveMap<F> {
    Generator::SwapPairs.matrix().expect("swap")
}

fn d<F: Field>(l: &F) -> ProjectiveMap<F> {
    Generator::CrossShear(l.clone())
        .matrix()
        .expect("cross shear")
}

/// Inverse of the special matrix sending `(x,y,z,w)` to `(-1,1,-1,1)` while fixing the other
/// two standard points, multiplied by `(y - z)(x - y + z - w)`.
fn special_inverse<R: Ring>(p: &[R; 4]) -> [[R; 4]; 4] {
    let [x, y, z, w] = p.clone();
    let k = |n: i64| R::from_i64(n);
    let xx = || x.clone();
    let yy = || y.clone();
    let zz = || z.clone();
    let ww = || w.clone();
    let mut m: [[R; 4]; 4] = array::from_fn(|_| array::from_fn(|_| R::zero()));
    m[0][0] = k(2) * ww() * zz() + k(2) * xx() * yy() - k(4) * zz() * zz();
    m[0][1] = -(k(2) * xx() * yy()) + k(2) * xx() * zz() + k(2) * yy() * zz() - k(2) * zz() * zz();
    m[0][2] = -(k(2) * ww() * zz()) - k(2) * xx() * zz() + k(2) * yy() * zz() + k(2) * zz() * zz();
    m[1][0] = k(2) * yy() * yy() - k(2) * zz() * zz();
    m[1][1] = -(k(2) * yy() * yy()) + k(4) * yy() * zz() - k(2) * zz() * zz();
    m[2][2] = k(4) * yy() * zz() - k(4) * zz() * zz();
    m[3][0] = ww() * yy() + ww() * zz() + xx() * yy() + xx() * zz()
        - yy() * yy()
        - k(2) * yy() * zz()
        - zz() * zz();
    m[3][1] = -(ww() * yy()) + ww() * zz() - xx() * yy() + xx() * zz() + yy() * yy() - zz() * zz();
    m[3][2] = ww() * yy() - k(3) * ww() * zz() - xx() * yy() - xx() * zz()
        + yy() * yy()
        + k(4) * yy() * zz()
        - zz() * zz();
    m[3][3] = -(ww() * yy()) + ww() * zz() + xx() * yy() - xx() * zz() - yy() * yy()
        + k(2) * yy() * zz()
        - zz() * zz();
    m
}

/// Build the contactomorphism through the staged shears, then the special matrix.
///
/// Points are first normalized to `w = 1`. Each stage checks its own pivot; the error
/// names the first one that vanishes.
pub fn transformation<F: Field>(
    p1: &ProjectivePoint<F>,
    p2: &ProjectivePoint<F>,
    p3: &ProjectivePoint<F>,
) -> Result<Transformation<F>, ContactError> {
    let pts = [p1, p2, p3];
    let mut cols: [[F; 4]; 3] = array::from_fn(|_| array::from_fn(|_| F::zero()));
    for (i, p) in pts.iter().enumerate() {
        cols[i] = p
            .normalized()
            .map_err(|_| ContactError::Degenerate(Pivot::Chart(i as u8)))?
            .0;
    }
    let t = Triple { cols };

    let t = t.apply(&c());
    let l1 = -t.get(0, 0).clone();
    let t = t.apply(&c().compose(&a(&l1)));
    let l2 = ratio(-t.get(0, 0).clone(), t.get(1, 0), Pivot::Lambda(2))?;
    let t = t.apply(&b().compose(&a(&l2)));
    let l3 = ratio(-t.get(0, 0).clone(), t.get(3, 0), Pivot::Lambda(3))?;
    let t = t.apply(&d(&l3));
    let t = t.apply(&b().compose(&c()));
    let l4 = ratio(
        -(t.get(0, 1).clone() + t.get(1, 1).clone()),
        t.get(1, 1),
        Pivot::Lambda(4),
    )?;
    let t = t.apply(&c().compose(&b()).compose(&a(&l4)));
    let l5 = ratio(
        t.get(2, 1).clone() - t.get(0, 1).clone(),
        t.get(1, 1),
        Pivot::Lambda(5),
    )?;
    let t = t.apply(&b().compose(&a(&l5)));
    let l6 = ratio(
        t.get(2, 1).clone() - t.get(0, 1).clone(),
        t.get(1, 1),
        Pivot::Lambda(6),
    )?;
    let mut t = t.apply(&a(&l6));
    t.clear_denominators();

    let sp = t.cols[2].clone();
    let [x, y, z, w] = sp.clone();
    if z.is_zero() {
        return Err(ContactError::Degenerate(Pivot::SpecialZ));
    }
    if (y.clone() - z.clone()).is_zero() {
        return Err(ContactError::Degenerate(Pivot::SpecialYMinusZ));
    }
    if (x - y + z - w).is_zero() {
        return Err(ContactError::Degenerate(Pivot::SpecialDeterminant));
    }
    let m1 = ProjectiveMap::flagged(special_inverse(&sp));

    let binv = b::<F>().compose(&b()).compose(&b());
    let yy = a(&-l4.clone())
        .compose(&binv)
        .compose(&c())
        .compose(&a(&-l5.clone()))
        .compose(&binv)
        .compose(&a(&-l6.clone()))
        .compose(&m1);
    let mut sr = c::<F>()
        .compose(&a(&-l1.clone()))
        .compose(&c())
        .compose(&a(&-l2.clone()))
        .compose(&binv)
        .compose(&d(&-l3.clone()))
        .compose(&c())
        .compose(&binv)
        .compose(&yy);
    sr.clear_denominators();
    let to_standard = sr.inverse()?;
    Ok(Transformation {
        to_standard,
        from_standard: sr,
        lambdas: [l1, l2, l3, l4, l5, l6],
        special_point: sp,
    })
}

impl<F: Field> Transformation<F> {
    /// Check that the inputs land on the standard points.
    pub fn sends_to_standard(&self, p: [&ProjectivePoint<F>; 3]) -> bool {
        let std = super::standard_points::<F>();
        p.iter()
            .zip(std.iter())
            .all(|(a, s)| self.to_standard.apply(a).projectively_equal(s))
    }
}
