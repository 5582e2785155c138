//! Combinatorial checks on tropical curves in `R^3` against the plane `X + Y = Z`.
//!
//! Everything works in the affine chart `W = 0` of tropical projective space, where the
//! projective plane `X + Y = Z + W` becomes `X + Y = Z`. A graph is a set of finite
//! vertices with bounded edges and rays, each carrying a primitive direction and a
//! positive weight.

mod divisibility;
mod gauss;
mod lines;
mod tangency;

pub use divisibility::{
    check_divisibility, midpoint_residual, DivisibilityReport, DivisibilityRule,
    DivisibilityVerdict,
};
pub use gauss::{dominant_exponent, log_gauss_vanishes};
pub use lines::{
    build_legendrian_line, on_support, support_violations, LegendrianLine, LineFamily,
};
pub use tangency::{check_tangency, classify_edge, detect_line_like, EdgeVerdict, HalfSpace};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tropical::parse_rational;

pub type Point = [BigRational; 3];
pub type Dir = [i64; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge}: vertex index {index} out of range")]
    BadVertex { edge: usize, index: usize },
    #[error("edge {edge}: direction {dir:?} is not primitive")]
    NotPrimitive { edge: usize, dir: Dir },
    #[error("edge {edge}: weight must be positive")]
    ZeroWeight { edge: usize },
    #[error("edge {edge}: endpoints are not separated by a positive multiple of {dir:?}")]
    DirectionMismatch { edge: usize, dir: Dir },
    #[error("vertex {vertex} is not balanced: weighted directions sum to {sum:?}")]
    Unbalanced { vertex: usize, sum: Dir },
    #[error("malformed graph: {0}")]
    Malformed(String),
}

/// Where an edge ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEnd {
    Vertex(usize),
    /// An unbounded leg.
    Ray,
}

/// An edge leaving vertex `a` in direction `dir`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub end: EdgeEnd,
    pub dir: Dir,
    pub weight: u64,
}

impl Edge {
    pub fn is_ray(&self) -> bool {
        self.end == EdgeEnd::Ray
    }

    /// Direction pointing away from vertex `v`, if `v` is an endpoint.
    pub fn outgoing(&self, v: usize) -> Option<Dir> {
        if self.a == v {
            Some(self.dir)
        } else if self.end == EdgeEnd::Vertex(v) {
            Some(self.dir.map(|x| -x))
        } else {
            None
        }
    }
}

/// A balanced tropical curve; construct through [`TropicalCurveGraph::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalCurveGraph {
    vertices: Vec<Point>,
    edges: Vec<Edge>,
}

pub fn gcd3(d: Dir) -> i64 {
    d[0].gcd(&d[1]).gcd(&d[2])
}

/// Primitive direction and lattice length of an integer vector.
pub fn primitive(d: Dir) -> (Dir, i64) {
    let g = gcd3(d);
    if g == 0 {
        return (d, 0);
    }
    (d.map(|x| x / g), g)
}

fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TropicalCurveGraph {
    /// Validate indices, directions and the balancing condition at every vertex.
    pub fn new(vertices: Vec<Point>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        for (k, e) in edges.iter().enumerate() {
            if e.a >= vertices.len() {
                return Err(GraphError::BadVertex {
                    edge: k,
                    index: e.a,
                });
            }
            if gcd3(e.dir) != 1 {
                return Err(GraphError::NotPrimitive {
                    edge: k,
                    dir: e.dir,
                });
            }
            if e.weight == 0 {
                return Err(GraphError::ZeroWeight { edge: k });
            }
            if let EdgeEnd::Vertex(b) = e.end {
                if b >= vertices.len() {
                    return Err(GraphError::BadVertex { edge: k, index: b });
                }
                if edge_length(&vertices[e.a], &vertices[b], e.dir).is_none() {
                    return Err(GraphError::DirectionMismatch {
                        edge: k,
                        dir: e.dir,
                    });
                }
            }
        }
        for v in 0..vertices.len() {
            let mut sum = [0i64; 3];
            for e in &edges {
                if let Some(d) = e.outgoing(v) {
                    for i in 0..3 {
                        sum[i] += d[i] * e.weight as i64;
                    }
                }
            }
            if sum != [0, 0, 0] {
                return Err(GraphError::Unbalanced { vertex: v, sum });
            }
        }
        Ok(TropicalCurveGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Indices of edges incident to `v`.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&k| self.edges[k].outgoing(v).is_some())
            .collect()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.incident(v).len()
    }

    /// Translate every vertex by `v`.
    pub fn translated(&self, v: &Point) -> Self {
        TropicalCurveGraph {
            vertices: self
                .vertices
                .iter()
                .map(|p| [0, 1, 2].map(|i| &p[i] + &v[i]))
                .collect(),
            edges: self.edges.clone(),
        }
    }

    pub fn to_json(&self) -> GraphJson {
        let mut edges = Vec::new();
        let mut rays = Vec::new();
        for e in &self.edges {
            match e.end {
                EdgeEnd::Vertex(b) => edges.push(EdgeJson {
                    a: e.a,
                    b: Some(b),
                    ray: None,
                    dir: e.dir,
                    weight: e.weight,
                }),
                EdgeEnd::Ray => rays.push(RayJson {
                    from: e.a,
                    dir: e.dir,
                    weight: e.weight,
                }),
            }
        }
        GraphJson {
            vertices: self
                .vertices
                .iter()
                .map(|p| p.each_ref().map(CoordJson::from_rational))
                .collect(),
            rays,
            edges,
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self, GraphError> {
        let mut vertices = Vec::new();
        for p in &j.vertices {
            let mut out = [qi(0), qi(0), qi(0)];
            for i in 0..3 {
                out[i] = p[i].to_rational().map_err(GraphError::Malformed)?;
            }
            vertices.push(out);
        }
        let mut edges = Vec::new();
        for e in &j.edges {
            let end = match (e.b, e.ray) {
                (Some(b), None | Some(false)) => EdgeEnd::Vertex(b),
                (None, Some(true)) => EdgeEnd::Ray,
                _ => {
                    return Err(GraphError::Malformed(
                        "an edge needs exactly one of `b` and `ray: true`".into(),
                    ))
                }
            };
            edges.push(Edge {
                a: e.a,
                end,
                dir: e.dir,
                weight: e.weight,
            });
        }
        for r in &j.rays {
            edges.push(Edge {
                a: r.from,
                end: EdgeEnd::Ray,
                dir: r.dir,
                weight: r.weight,
            });
        }
        Self::new(vertices, edges)
    }
}

/// `b - a = lambda dir` with `lambda > 0`.
fn edge_length(a: &Point, b: &Point, dir: Dir) -> Option<BigRational> {
    let mut lam: Option<BigRational> = None;
    for i in 0..3 {
        let diff = &b[i] - &a[i];
        if dir[i] == 0 {
            if !diff.is_zero() {
                return None;
            }
            continue;
        }
        let l = diff / qi(dir[i]);
        match &lam {
            None => lam = Some(l),
            Some(x) if *x == l => {}
            _ => return None,
        }
    }
    lam.filter(|l| *l > BigRational::zero())
}

/// `X + Y - Z`.
pub fn plane_value(p: &Point) -> BigRational {
    &p[0] + &p[1] - &p[2]
}

pub fn plane_slope(d: Dir) -> i64 {
    d[0] + d[1] - d[2]
}

/// A coordinate in JSON: an integer, or a string such as `"7/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordJson {
    Int(i64),
    Text(String),
}

impl CoordJson {
    pub fn from_rational(q: &BigRational) -> Self {
        match q.is_integer().then(|| q.to_integer().to_i64()).flatten() {
            Some(n) => CoordJson::Int(n),
            None => CoordJson::Text(q.to_string()),
        }
    }

    pub fn to_rational(&self) -> Result<BigRational, String> {
        match self {
            CoordJson::Int(n) => Ok(qi(*n)),
            CoordJson::Text(s) => parse_rational(s).ok_or_else(|| format!("bad coordinate {s:?}")),
        }
    }
}

fn one() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayJson {
    pub from: usize,
    pub dir: Dir,
    #[serde(default = "one")]
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub a: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ray: Option<bool>,
    pub dir: Dir,
    #[serde(default = "one")]
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<[CoordJson; 3]>,
    #[serde(default)]
    pub rays: Vec<RayJson>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
}
