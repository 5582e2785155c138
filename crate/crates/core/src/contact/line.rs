use std::array;

use super::{ContactError, ParametrizedCurve};
use crate::field::{Field, Ring};
use crate::poly::Poly;

/// The line `a + b s`.
#[derive(Debug, Clone, PartialEq)]
pub struct Line<R> {
    pub a: [R; 4],
    pub b: [R; 4],
}

impl<R: Ring> Line<R> {
    pub fn new(a: [R; 4], b: [R; 4]) -> Self {
        Line { a, b }
    }

    pub fn curve(&self) -> ParametrizedCurve<R> {
        ParametrizedCurve::new(array::from_fn(|i| {
            Poly::from_coeffs(vec![self.a[i].clone(), self.b[i].clone()])
        }))
    }

    pub fn is_degenerate(&self) -> bool {
        for i in 0..4 {
            for j in i + 1..4 {
                let m =
                    self.a[i].clone() * self.b[j].clone() - self.a[j].clone() * self.b[i].clone();
                if !m.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// `a1 b0 - a0 b1 + a3 b2 - a2 b3`.
pub fn line_criterion<R: Ring>(line: &Line<R>) -> R {
    let (a, b) = (&line.a, &line.b);
    a[1].clone() * b[0].clone() - a[0].clone() * b[1].clone() + a[3].clone() * b[2].clone()
        - a[2].clone() * b[3].clone()
}

pub fn line_is_legendrian<R: Ring>(line: &Line<R>) -> Result<bool, ContactError> {
    if line.is_degenerate() {
        return Err(ContactError::DegenerateLine);
    }
    Ok(line_criterion(line).is_zero())
}

/// Values of the coordinate functions at each other's roots.
#[derive(Debug, Clone, PartialEq)]
pub struct BalanceTable<F> {
    /// Roots `X, Y, Z, W`; `None` when the coordinate is constant.
    pub roots: [Option<F>; 4],
    /// `values[i][j]` is coordinate `j` evaluated at root `i`.
    pub values: [[Option<F>; 4]; 4],
    /// `y(X) / z(X) = w(Z) / x(Z)`, compared cross-multiplied; `None` when undefined.
    pub xz_identity: Option<bool>,
    /// `x(Y) / w(Y) = z(W) / y(W)`, compared cross-multiplied; `None` when undefined.
    pub yw_identity: Option<bool>,
    /// Coordinates without a finite root.
    pub constant_coordinates: Vec<usize>,
}

pub fn line_balance_table<F: Field>(line: &Line<F>) -> Result<BalanceTable<F>, ContactError> {
    if line.is_degenerate() {
        return Err(ContactError::DegenerateLine);
    }
    let mut roots: [Option<F>; 4] = array::from_fn(|_| None);
    let mut constant = Vec::new();
    for (i, root) in roots.iter_mut().enumerate() {
        if line.b[i].is_zero() {
            constant.push(i);
        } else {
            *root = Some(-line.a[i].try_div(&line.b[i])?);
        }
    }
    let values: [[Option<F>; 4]; 4] = array::from_fn(|i| {
        array::from_fn(|j| {
            roots[i]
                .as_ref()
                .map(|r| line.a[j].clone() + line.b[j].clone() * r.clone())
        })
    });
    let v = |i: usize, j: usize| values[i][j].clone();
    let xz = match (&roots[0], &roots[2]) {
        // x and z sharing a root makes both ratios 0/0
        (Some(_), Some(_)) if v(0, 2).unwrap().is_zero() => None,
        (Some(_), Some(_)) => {
            Some(v(0, 1).unwrap() * v(2, 0).unwrap() == v(0, 2).unwrap() * v(2, 3).unwrap())
        }
        _ => None,
    };
    let yw = match (&roots[1], &roots[3]) {
        (Some(_), Some(_)) if v(1, 3).unwrap().is_zero() => None,
        (Some(_), Some(_)) => {
            Some(v(1, 0).unwrap() * v(3, 1).unwrap() == v(1, 3).unwrap() * v(3, 2).unwrap())
        }
        _ => None,
    };
    Ok(BalanceTable {
        roots,
        values,
        xz_identity: xz,
        yw_identity: yw,
        constant_coordinates: constant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;

    fn l(a: [i64; 4], b: [i64; 4]) -> Line<Scalar> {
        Line::new(a.map(Scalar::from), b.map(Scalar::from))
    }

    #[test]
    fn criterion_examples() {
        assert!(line_is_legendrian(&l([0, 0, 0, 1], [1, 0, 0, 0])).unwrap());
        assert!(!line_is_legendrian(&l([0, 1, 0, 0], [1, 0, 0, 0])).unwrap());
        assert_eq!(
            line_criterion(&l([0, 1, 0, 0], [1, 0, 0, 0])),
            Scalar::from(1)
        );
        assert!(line_is_legendrian(&l([1, 2, 3, 4], [2, 4, 6, 8])).is_err());
    }

    #[test]
    fn balance_identities() {
        // a1 b0 - a0 b1 + a3 b2 - a2 b3 with a = (1,2,3,1), b = (1,1,1,x)
        // = 2 - 1 + 1 - 3x, zero at x = 2/3; scale to integers: b = (3,3,3,2)
        let leg = l([1, 2, 3, 1], [3, 3, 3, 2]);
        assert!(line_is_legendrian(&leg).unwrap());
        let t = line_balance_table(&leg).unwrap();
        assert_eq!(t.xz_identity, Some(true));
        assert_eq!(t.yw_identity, Some(true));
        let bad = l([1, 2, 3, 1], [3, 3, 3, 5]);
        let t = line_balance_table(&bad).unwrap();
        assert_eq!(t.xz_identity, Some(false));
        assert_eq!(t.yw_identity, Some(false));
        let flat = l([1, 2, 3, 1], [0, 3, 3, 5]);
        let t = line_balance_table(&flat).unwrap();
        assert_eq!(t.xz_identity, None);
        assert_eq!(t.constant_coordinates, vec![0]);
    }
}
