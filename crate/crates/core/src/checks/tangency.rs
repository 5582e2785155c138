use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::divisibility::DivisibilityVerdict;
use super::{plane_slope, plane_value, Dir, EdgeEnd, TropicalCurveGraph};

/// Position of an edge's relative interior with respect to `X + Y = Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HalfSpace {
    /// `X + Y > Z`
    Above,
    /// `X + Y < Z`
    Below,
    Crossing,
    InPlane,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeVerdict {
    pub edge: usize,
    pub class: HalfSpace,
    /// `None` for edges inside the plane, which are not judged.
    pub tangency: Option<bool>,
    pub line_like: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisibility: Option<DivisibilityVerdict>,
}

fn side(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn from_sides(a: i8, b: i8) -> HalfSpace {
    match (a, b) {
        (0, 0) => HalfSpace::InPlane,
        (1, 1) | (1, 0) | (0, 1) => HalfSpace::Above,
        (-1, -1) | (-1, 0) | (0, -1) => HalfSpace::Below,
        _ => HalfSpace::Crossing,
    }
}

pub fn classify_edge(g: &TropicalCurveGraph, edge: usize) -> HalfSpace {
    let e = &g.edges()[edge];
    let ha = side(&plane_value(&g.vertices()[e.a]));
    match e.end {
        EdgeEnd::Vertex(b) => from_sides(ha, side(&plane_value(&g.vertices()[b]))),
        // along the ray the value is h(a) + lambda h(dir)
        EdgeEnd::Ray => from_sides(ha, plane_slope(e.dir).signum() as i8),
    }
}

fn parallel(d: Dir, e: Dir) -> bool {
    d == e || d == e.map(|x| -x)
}

fn tangent(class: HalfSpace, d: Dir) -> Option<bool> {
    match class {
        HalfSpace::Above => Some(d[0] == d[1]),
        HalfSpace::Below => Some(d[2] == 0),
        HalfSpace::Crossing => Some(parallel(d, [1, 1, 0])),
        HalfSpace::InPlane => None,
    }
}

/// Other edges at `v` must be exactly two, parallel to `d1` and `d2` in some order.
fn trivalent_with(g: &TropicalCurveGraph, v: usize, skip: usize, d1: Dir, d2: Dir) -> bool {
    let inc = g.incident(v);
    if inc.len() != 3 {
        return false;
    }
    let others: Vec<Dir> = inc
        .into_iter()
        .filter(|&k| k != skip)
        .map(|k| g.edges()[k].dir)
        .collect();
    others.len() == 2
        && ((parallel(others[0], d1) && parallel(others[1], d2))
            || (parallel(others[0], d2) && parallel(others[1], d1)))
}

/// Whether the bounded edge has the local shape of a legendrian tropical line: parallel
/// to `(1,1,0)`, one trivalent endpoint below the plane with the other edges along `X`
/// and `Y`, the other trivalent endpoint above with edges along `Z` and `(1,1,1)`.
pub fn detect_line_like(g: &TropicalCurveGraph, edge: usize) -> bool {
    let e = &g.edges()[edge];
    let EdgeEnd::Vertex(b) = e.end else {
        return false;
    };
    if !parallel(e.dir, [1, 1, 0]) {
        return false;
    }
    let (ha, hb) = (
        side(&plane_value(&g.vertices()[e.a])),
        side(&plane_value(&g.vertices()[b])),
    );
    let (lo, hi) = match (ha, hb) {
        (-1, 1) => (e.a, b),
        (1, -1) => (b, e.a),
        _ => return false,
    };
    trivalent_with(g, lo, edge, [1, 0, 0], [0, 1, 0])
        && trivalent_with(g, hi, edge, [0, 0, 1], [1, 1, 1])
}

/// Judge every edge against the tangency rules: `X - Y` constant above the plane, `Z`
/// constant below it, crossing edges parallel to `(1,1,0)`.
pub fn check_tangency(g: &TropicalCurveGraph) -> Vec<EdgeVerdict> {
    (0..g.edges().len())
        .into_par_iter()
        .map(|k| {
            let class = classify_edge(g, k);
            EdgeVerdict {
                edge: k,
                class,
                tangency: tangent(class, g.edges()[k].dir),
                line_like: detect_line_like(g, k),
                divisibility: None,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{cubic_fragment, pt, ray, seg};
    use super::*;

    fn two_point(a: [i64; 3], b: [i64; 3], d: Dir) -> TropicalCurveGraph {
        TropicalCurveGraph::new(
            vec![pt(a[0], a[1], a[2]), pt(b[0], b[1], b[2])],
            vec![seg(0, 1, d), ray(0, d.map(|x| -x)), ray(1, d)],
        )
        .unwrap()
    }

    #[test]
    fn classes() {
        assert_eq!(
            classify_edge(&two_point([0, 0, 5], [1, 1, 5], [1, 1, 0]), 0),
            HalfSpace::Below
        );
        assert_eq!(classify_edge(&cubic_fragment(), 0), HalfSpace::Crossing);
        let g = two_point([0, 0, 0], [1, 0, 1], [1, 0, 1]);
        assert_eq!(classify_edge(&g, 0), HalfSpace::InPlane);
        assert_eq!(classify_edge(&g, 1), HalfSpace::InPlane);
        // a ray leaving the plane upward
        assert_eq!(classify_edge(&cubic_fragment(), 4), HalfSpace::Above);
    }

    #[test]
    fn tangency_rules() {
        let v = check_tangency(&cubic_fragment());
        assert!(v.iter().all(|x| x.tangency == Some(true)));
        assert!(v[0].line_like);
        let bad = two_point([0, 0, 10], [1, 0, 11], [1, 0, 1]);
        assert_eq!(check_tangency(&bad)[0].tangency, Some(false));
        let flat = two_point([0, 0, 0], [1, 0, 1], [1, 0, 1]);
        assert_eq!(check_tangency(&flat)[0].tangency, None);
    }

    #[test]
    fn horizontal_pieces_pass() {
        // horizontal pieces at heights 7, 9, 13 through the given points; the last ray
        // crosses the plane along (1,1,0)
        for (x, y, z) in [(1, 2, 7), (2, 3, 9), (5, 1, 13)] {
            let g = TropicalCurveGraph::new(
                vec![pt(x, y, z), pt(x + 1, y + 1, z)],
                vec![seg(0, 1, [1, 1, 0]), ray(0, [-1, -1, 0]), ray(1, [1, 1, 0])],
            )
            .unwrap();
            assert!(check_tangency(&g).iter().all(|v| v.tangency == Some(true)));
        }
    }

    #[test]
    fn four_valent_end_is_not_line_like() {
        let g = TropicalCurveGraph::new(
            vec![pt(22, 8, 32), pt(24, 10, 32)],
            vec![
                seg(0, 1, [1, 1, 0]),
                ray(0, [-1, 0, 0]),
                ray(0, [0, -1, 0]),
                ray(0, [0, 0, 1]),
                ray(0, [0, 0, -1]),
                ray(1, [0, 0, -1]),
                ray(1, [1, 1, 1]),
            ],
        )
        .unwrap();
        assert!(!detect_line_like(&g, 0));
    }
}
