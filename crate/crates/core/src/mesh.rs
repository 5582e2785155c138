//! Triangulated export of tropical surface cells, as OBJ text and a JSON mirror.
//!
//! Clipping is exact; coordinates become floats only when written, rounded to 12
//! significant digits.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tropical::{BoundingBox, TropicalCell};

pub type Point3 = [BigRational; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeshError {
    #[error("mesh export needs a bounding box")]
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshPolygon {
    pub terms: (usize, usize),
    pub vertices: Vec<[f64; 3]>,
    /// Fan triangulation, indices into `vertices`.
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct MeshExport {
    pub polygons: Vec<MeshPolygon>,
    pub points: Vec<[f64; 3]>,
    pub polyline: Vec<[f64; 3]>,
}

/// Round to 12 significant digits.
pub fn round12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

fn to_f64(p: &Point3) -> [f64; 3] {
    p.each_ref()
        .map(|c| round12(c.to_f64().unwrap_or(f64::NAN)))
}

/// Clip a convex polygon against `sign * (x_axis - bound) <= 0`.
fn clip_plane(poly: &[Point3], axis: usize, bound: &BigRational, upper: bool) -> Vec<Point3> {
    let val = |p: &Point3| {
        let d = &p[axis] - bound;
        if upper {
            d
        } else {
            -d
        }
    };
    let mut out = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let (vp, vq) = (val(p), val(q));
        if !vp.is_positive() {
            out.push(p.clone());
        }
        if (vp.is_positive() && vq.is_negative()) || (vp.is_negative() && vq.is_positive()) {
            let lam = &vp / (&vp - &vq);
            out.push([0, 1, 2].map(|k| &p[k] + &lam * (&q[k] - &p[k])));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Exact clipping of a convex polygon to the box.
pub fn clip_polygon(poly: &[Point3], bbox: &BoundingBox) -> Vec<Point3> {
    let mut cur = poly.to_vec();
    for axis in 0..3 {
        cur = clip_plane(&cur, axis, &bbox.hi[axis], true);
        cur = clip_plane(&cur, axis, &bbox.lo[axis], false);
    }
    cur
}

fn area_nonzero(poly: &[Point3]) -> bool {
    if poly.len() < 3 {
        return false;
    }
    let sub = |a: &Point3, b: &Point3| [0, 1, 2].map(|i| &a[i] - &b[i]);
    let u = sub(&poly[1], &poly[0]);
    (2..poly.len()).any(|j| {
        let v = sub(&poly[j], &poly[0]);
        let cross = [
            &u[1] * &v[2] - &u[2] * &v[1],
            &u[2] * &v[0] - &u[0] * &v[2],
            &u[0] * &v[1] - &u[1] * &v[0],
        ];
        cross.iter().any(|c| !c.is_zero())
    })
}

/// Clip every cell to the box, triangulate it, and pass marked points through.
pub fn export_mesh(
    cells: &[TropicalCell],
    bbox: Option<&BoundingBox>,
    points: &[Point3],
    polyline: &[Point3],
) -> Result<MeshExport, MeshError> {
    let bbox = bbox.ok_or(MeshError::Unbounded)?;
    let mut polygons = Vec::new();
    for c in cells {
        let poly = clip_polygon(&c.polygon, bbox);
        if !area_nonzero(&poly) {
            continue;
        }
        let triangles = (1..poly.len() - 1).map(|j| [0, j, j + 1]).collect();
        polygons.push(MeshPolygon {
            terms: c.terms,
            vertices: poly.iter().map(to_f64).collect(),
            triangles,
        });
    }
    Ok(MeshExport {
        polygons,
        points: points.iter().map(to_f64).collect(),
        polyline: polyline.iter().map(to_f64).collect(),
    })
}

fn push_v(out: &mut String, p: &[f64; 3]) {
    let _ = writeln!(out, "v {} {} {}", p[0], p[1], p[2]);
}

impl MeshExport {
    pub fn triangle_count(&self) -> usize {
        self.polygons.iter().map(|p| p.triangles.len()).sum()
    }

    pub fn to_obj(&self) -> String {
        let mut out = String::from("# tropical surface cells\n");
        let mut base = 1;
        for p in &self.polygons {
            let _ = writeln!(out, "g cell_{}_{}", p.terms.0, p.terms.1);
            for v in &p.vertices {
                push_v(&mut out, v);
            }
            for t in &p.triangles {
                let _ = writeln!(out, "f {} {} {}", base + t[0], base + t[1], base + t[2]);
            }
            base += p.vertices.len();
        }
        if !self.points.is_empty() {
            out.push_str("g points\n");
            for v in &self.points {
                push_v(&mut out, v);
            }
            let idx: Vec<String> = (base..base + self.points.len())
                .map(|i| i.to_string())
                .collect();
            let _ = writeln!(out, "p {}", idx.join(" "));
            base += self.points.len();
        }
        if self.polyline.len() >= 2 {
            out.push_str("g polyline\n");
            for v in &self.polyline {
                push_v(&mut out, v);
            }
            let idx: Vec<String> = (base..base + self.polyline.len())
                .map(|i| i.to_string())
                .collect();
            let _ = writeln!(out, "l {}", idx.join(" "));
        }
        out
    }

    /// Whether `p` lies on some emitted triangle, up to `tol`.
    pub fn covers(&self, p: &[f64; 3], tol: f64) -> bool {
        self.polygons.iter().any(|poly| {
            poly.triangles.iter().any(|t| {
                let [a, b, c] = t.map(|i| poly.vertices[i]);
                point_in_triangle(p, &a, &b, &c, tol)
            })
        })
    }
}

fn point_in_triangle(p: &[f64; 3], a: &[f64; 3], b: &[f64; 3], c: &[f64; 3], tol: f64) -> bool {
    let sub = |x: &[f64; 3], y: &[f64; 3]| [x[0] - y[0], x[1] - y[1], x[2] - y[2]];
    let dot = |x: &[f64; 3], y: &[f64; 3]| x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    let (v0, v1, v2) = (sub(b, a), sub(c, a), sub(p, a));
    let n = [
        v0[1] * v1[2] - v0[2] * v1[1],
        v0[2] * v1[0] - v0[0] * v1[2],
        v0[0] * v1[1] - v0[1] * v1[0],
    ];
    let nn = dot(&n, &n).sqrt();
    if nn == 0.0 || (dot(&n, &v2) / nn).abs() > tol {
        return false;
    }
    let (d00, d01, d11, d20, d21) = (
        dot(&v0, &v0),
        dot(&v0, &v1),
        dot(&v1, &v1),
        dot(&v2, &v0),
        dot(&v2, &v1),
    );
    let den = d00 * d11 - d01 * d01;
    let v = (d11 * d20 - d01 * d21) / den;
    let w = (d00 * d21 - d01 * d20) / den;
    v >= -tol && w >= -tol && v + w <= 1.0 + tol
}
