use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::tangency::{check_tangency, EdgeVerdict};
use super::{Dir, EdgeEnd, Point, TropicalCurveGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "rule")]
pub enum DivisibilityRule {
    /// `P + Q` on the plane `X + Y = Z` (doubled), for line-like edges.
    Midpoint,
    /// `((k - l) P + p Q) / (k - l + p)` on the plane.
    Weighted { k: u64, l: u64, p: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivisibilityVerdict {
    #[serde(flatten)]
    pub rule: DivisibilityRule,
    /// `Z - X - Y` of the combination, exact.
    #[serde(with = "rational_string")]
    pub residual: BigRational,
    pub pass: bool,
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::tropical::parse_rational(&s).ok_or_else(|| serde::de::Error::custom("bad rational"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub verdicts: Vec<EdgeVerdict>,
    /// Edges parallel to `(1,1,0)` that match neither pattern, with the reason.
    pub diagnostics: Vec<String>,
    /// Pattern matches with more than one reading; none of them is judged.
    pub ambiguities: Vec<String>,
}

impl DivisibilityReport {
    /// Every judged edge passes and nothing was ambiguous.
    pub fn passes(&self) -> bool {
        self.ambiguities.is_empty()
            && self
                .verdicts
                .iter()
                .filter_map(|v| v.divisibility.as_ref())
                .all(|d| d.pass)
    }

    pub fn judged(&self) -> usize {
        self.verdicts
            .iter()
            .filter(|v| v.divisibility.is_some())
            .count()
    }
}

fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `Z - X - Y`.
fn offset(p: &Point) -> BigRational {
    &p[2] - &p[0] - &p[1]
}

fn scaled(d: Dir, w: u64) -> Dir {
    d.map(|x| x * w as i64)
}

enum Match {
    Hit(DivisibilityRule, BigRational),
    Miss(String),
    Ambiguous(String),
}

/// Try the weighted pattern on a bounded edge parallel to `(1,1,0)`.
fn weighted(g: &TropicalCurveGraph, edge: usize) -> Match {
    let e = &g.edges()[edge];
    let EdgeEnd::Vertex(b) = e.end else {
        return Match::Miss("unbounded".into());
    };
    let (p, q) = if e.dir == [1, 1, 0] {
        (e.a, b)
    } else {
        (b, e.a)
    };
    let k = e.weight;
    let others = |v: usize| -> Vec<(Dir, u64)> {
        g.incident(v)
            .into_iter()
            .filter(|&j| j != edge)
            .map(|j| (g.edges()[j].outgoing(v).unwrap(), g.edges()[j].weight))
            .collect()
    };
    let at_p = others(p);
    if at_p.len() != 2 {
        return Match::Miss(format!("P has valence {}", at_p.len() + 1));
    }
    let xs: Vec<&(Dir, u64)> = at_p.iter().filter(|(d, _)| *d == [-1, 0, 0]).collect();
    let wx = match xs.as_slice() {
        [] => return Match::Miss("P has no leg along -X".into()),
        [(_, w)] => *w,
        _ => return Match::Ambiguous("several legs along -X at P".into()),
    };
    if wx > k {
        return Match::Miss(format!("X-leg weight {wx} exceeds edge weight {k}"));
    }
    let l = k - wx;
    let rest = at_p.iter().find(|(d, _)| *d != [-1, 0, 0]).unwrap();
    if scaled(rest.0, rest.1) != [-(l as i64), -(k as i64), 0] {
        return Match::Miss(format!("second leg at P is not -({l},{k},0)"));
    }
    let at_q = others(q);
    if at_q.len() != 2 {
        return Match::Miss(format!("Q has valence {}", at_q.len() + 1));
    }
    let vs: Vec<&(Dir, u64)> = at_q.iter().filter(|(d, _)| *d == [0, 0, -1]).collect();
    let pw = match vs.as_slice() {
        [] => return Match::Miss("Q has no leg along -Z".into()),
        [(_, w)] => *w,
        _ => return Match::Ambiguous("several legs along -Z at Q".into()),
    };
    let verts = g.vertices();
    let (a, c) = (qi((k - l) as i64), qi(pw as i64));
    let combo: Point = [0, 1, 2].map(|i| &a * &verts[p][i] + &c * &verts[q][i]);
    let residual = offset(&combo) / (a + c);
    Match::Hit(DivisibilityRule::Weighted { k, l, p: pw }, residual)
}

/// `Z - X - Y` of `P + Q`; zero exactly when the midpoint lies on `X + Y = Z`.
pub fn midpoint_residual(p: &Point, q: &Point) -> BigRational {
    offset(&[0, 1, 2].map(|i| &p[i] + &q[i]))
}

/// Midpoint rule on line-like edges and the weighted rule on edges matching the
/// weighted pattern. Other edges parallel to `(1,1,0)` get a diagnostic.
pub fn check_divisibility(g: &TropicalCurveGraph) -> DivisibilityReport {
    let mut verdicts = check_tangency(g);
    let mut diagnostics = Vec::new();
    let mut ambiguities = Vec::new();
    for v in verdicts.iter_mut() {
        let e = &g.edges()[v.edge];
        let EdgeEnd::Vertex(b) = e.end else { continue };
        if v.line_like {
            let residual = midpoint_residual(&g.vertices()[e.a], &g.vertices()[b]);
            v.divisibility = Some(DivisibilityVerdict {
                rule: DivisibilityRule::Midpoint,
                pass: residual.is_zero(),
                residual,
            });
            continue;
        }
        if e.dir != [1, 1, 0] && e.dir != [-1, -1, 0] {
            continue;
        }
        match weighted(g, v.edge) {
            Match::Hit(rule, residual) => {
                v.divisibility = Some(DivisibilityVerdict {
                    rule,
                    pass: residual.is_zero(),
                    residual,
                })
            }
            Match::Miss(why) => diagnostics.push(format!("edge {}: {why}", v.edge)),
            Match::Ambiguous(why) => ambiguities.push(format!("edge {}: {why}", v.edge)),
        }
    }
    DivisibilityReport {
        verdicts,
        diagnostics,
        ambiguities,
    }
}
