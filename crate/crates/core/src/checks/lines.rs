use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Edge, EdgeEnd, GraphError, Point, TropicalCurveGraph};
use crate::contact::ParametrizedCurve;
use crate::field::Scalar;
use crate::poly::Poly;
use crate::sampling::sample_point;
use crate::tropical::TropicalNumber;
use crate::Series;

/// The three shapes of tropical lines with the divisibility property, by the direction
/// of their bounded edge: `(1,1,0)`, `(1,0,1)` and `(0,1,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineFamily {
    One,
    Two,
    Three,
}

impl LineFamily {
    pub const ALL: [LineFamily; 3] = [LineFamily::One, LineFamily::Two, LineFamily::Three];

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(LineFamily::One),
            2 => Some(LineFamily::Two),
            3 => Some(LineFamily::Three),
            _ => None,
        }
    }
}

/// A tropical line together with a legendrian line over series that tropicalizes to it.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendrianLine {
    pub graph: TropicalCurveGraph,
    pub lift: ParametrizedCurve<Series>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn tm(c: i64, e: i64) -> Series {
    Series::monomial(Scalar::from(c), e)
}

fn lin(c0: Series, c1: Series) -> Poly<Series> {
    Poly::from_coeffs(vec![c0, c1])
}

fn ray(a: usize, dir: [i64; 3]) -> Edge {
    Edge {
        a,
        end: EdgeEnd::Ray,
        dir,
        weight: 1,
    }
}

/// Build the line of `family` with parameters `(A, B, X)`. For `X = 0` the two vertices
/// merge into one four-valent vertex.
pub fn build_legendrian_line(
    family: LineFamily,
    a: i64,
    b: i64,
    x: i64,
) -> Result<LegendrianLine, GraphError> {
    if x < 0 {
        return Err(GraphError::Malformed(format!(
            "edge length must be nonnegative, got {x}"
        )));
    }
    type Legs = [[i64; 3]; 2];
    let (v1, v2, r1, r2, dir): (Point, Point, Legs, Legs, [i64; 3]) = match family {
        LineFamily::One => (
            [q(a), q(b), q(a + b + x)],
            [q(a + x), q(b + x), q(a + b + x)],
            [[-1, 0, 0], [0, -1, 0]],
            [[0, 0, -1], [1, 1, 1]],
            [1, 1, 0],
        ),
        LineFamily::Two => (
            [q(a), q(b), q(a + b)],
            [q(a + x), q(b), q(a + b + x)],
            [[-1, 0, 0], [0, 0, -1]],
            [[0, -1, 0], [1, 1, 1]],
            [1, 0, 1],
        ),
        LineFamily::Three => (
            [q(a), q(b), q(a + b)],
            [q(a), q(b + x), q(a + b + x)],
            [[0, -1, 0], [0, 0, -1]],
            [[-1, 0, 0], [1, 1, 1]],
            [0, 1, 1],
        ),
    };
    let graph = if x == 0 {
        TropicalCurveGraph::new(
            vec![v1],
            r1.iter().chain(r2.iter()).map(|d| ray(0, *d)).collect(),
        )?
    } else {
        let mut edges = vec![Edge {
            a: 0,
            end: EdgeEnd::Vertex(1),
            dir,
            weight: 1,
        }];
        edges.extend(r1.iter().map(|d| ray(0, *d)));
        edges.extend(r2.iter().map(|d| ray(1, *d)));
        TropicalCurveGraph::new(vec![v1, v2], edges)?
    };
    let one = Poly::constant(Series::one());
    let lift = match family {
        LineFamily::One => ParametrizedCurve::new([
            lin(tm(1, a), tm(1, a)),
            lin(tm(2, b), tm(1, b)),
            lin(tm(1, a + b + x), tm(-1, a + b)),
            one,
        ]),
        LineFamily::Two => ParametrizedCurve::new([
            lin(tm(1, a), tm(1, a)),
            lin(tm(1, b), tm(1, b - x)),
            lin(tm(1, a + b), tm(-1, a + b) + tm(1, a + b - x)),
            one,
        ]),
        LineFamily::Three => ParametrizedCurve::new([
            lin(tm(1, a), tm(1, a - x)),
            lin(tm(1, b), tm(1, b)),
            lin(tm(-1, a + b), tm(1, a + b) - tm(1, a + b - x)),
            one,
        ]),
    };
    Ok(LegendrianLine { graph, lift })
}

/// Whether a tropical point lies on the graph. Points with `-inf` coordinates must sit
/// at the end of a ray pointing that way.
pub fn on_support(g: &TropicalCurveGraph, p: &[TropicalNumber; 3]) -> bool {
    let inf: Vec<bool> = p.iter().map(|c| !c.is_finite()).collect();
    if inf.iter().any(|&b| b) {
        return g.edges().iter().any(|e| {
            e.is_ray()
                && (0..3).all(|i| {
                    if inf[i] {
                        e.dir[i] < 0
                    } else {
                        e.dir[i] == 0 && p[i].finite() == Some(&g.vertices()[e.a][i])
                    }
                })
        });
    }
    let p: Point = p.each_ref().map(|c| c.finite().unwrap().clone());
    if g.vertices().contains(&p) {
        return true;
    }
    g.edges().iter().any(|e| {
        let a = &g.vertices()[e.a];
        let mut lam: Option<BigRational> = None;
        for i in 0..3 {
            let diff = &p[i] - &a[i];
            if e.dir[i] == 0 {
                if !diff.is_zero() {
                    return false;
                }
                continue;
            }
            let l = diff / q(e.dir[i]);
            if lam.as_ref().is_some_and(|x| *x != l) {
                return false;
            }
            lam = Some(l);
        }
        let Some(lam) = lam else { return false };
        if lam < BigRational::zero() {
            return false;
        }
        match e.end {
            EdgeEnd::Ray => true,
            EdgeEnd::Vertex(b) => {
                let bv = &g.vertices()[b];
                (0..3).all(|i| e.dir[i] == 0 || (&bv[i] - &a[i]) / q(e.dir[i]) >= lam)
            }
        }
    })
}

/// Sample the lift at `s = c t^S` and return the samples that miss the graph.
pub fn support_violations(
    line: &LegendrianLine,
    coeffs: &[i64],
    exps: std::ops::RangeInclusive<i64>,
) -> Vec<(i64, i64, [TropicalNumber; 3])> {
    let mut bad = Vec::new();
    for &c in coeffs {
        for e in exps.clone() {
            let s = tm(c, e);
            match sample_point(&s, &line.lift, None) {
                Ok(sp) if on_support(&line.graph, &sp.point) => {}
                Ok(sp) => bad.push((c, e, sp.point)),
                Err(_) => bad.push((
                    c,
                    e,
                    [
                        TropicalNumber::NegInf,
                        TropicalNumber::NegInf,
                        TropicalNumber::NegInf,
                    ],
                )),
            }
        }
    }
    bad
}
