//! Newton iteration for coordinate roots of curves over series, and tropical point sampling.
//!
//! Roots are approximated by adding one `t`-monomial correction per step, read off from
//! the leading terms of `f(s1)` and `f'(s1)`. Seeds come from the caller.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contact::ParametrizedCurve;
use crate::field::{ArithmeticError, Field, Scalar};
use crate::poly::Poly;
use crate::series::{poly_substitute, SeriesError};
use crate::tropical::TropicalNumber;
use crate::{Series, SeriesPoly};

/// Consecutive non-decreasing residual degrees tolerated before giving up.
pub const STAGNATION_LIMIT: usize = 3;

pub const COORD_NAMES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SamplingError {
    #[error("iteration budget must be at least 1")]
    ZeroBudget,
    #[error("cannot search for roots of the zero polynomial")]
    ZeroPolynomial,
    #[error("seed residual has no finite valuation")]
    SeedResidualUndetermined,
    #[error("derivative vanishes at iteration {iteration}; the root may need a field extension")]
    ExtensionRequired { iteration: usize },
    #[error("residual degree stagnated for {} iterations", STAGNATION_LIMIT)]
    Stagnation {
        trace: Vec<NewtonStep>,
        last: Series,
    },
    #[error("w-coordinate vanishes at the sample; cannot normalize")]
    WVanishes,
    #[error("insufficient samples: no root samples for {0}")]
    InsufficientSamples(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

/// An initial guess and an iteration budget.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonSeed {
    pub s0: Series,
    pub budget: usize,
}

impl NewtonSeed {
    pub fn new(s0: Series, budget: usize) -> Result<Self, SamplingError> {
        if budget == 0 {
            return Err(SamplingError::ZeroBudget);
        }
        Ok(NewtonSeed { s0, budget })
    }
}

/// One correction `s1 <- s1 - coeff * t^exp` and the residual degree after it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NewtonStep {
    pub iteration: usize,
    pub correction: (String, i64),
    /// `None` once the residual is zero (or undetermined in the window).
    pub residual_degree: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NewtonStatus {
    /// The residual vanished exactly.
    Exact,
    /// The residual fell below the truncation floor.
    BelowFloor,
    /// The budget ran out with a residual left.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonResult {
    pub root: Series,
    pub trace: Vec<NewtonStep>,
    pub status: NewtonStatus,
    pub seed_residual_degree: i64,
}

impl NewtonResult {
    pub fn residual_degree(&self) -> Option<i64> {
        self.trace
            .last()
            .map_or(Some(self.seed_residual_degree), |s| s.residual_degree)
    }

    /// Whether every step strictly lowered the residual degree.
    pub fn monotone(&self) -> bool {
        let mut prev = Some(self.seed_residual_degree);
        for st in &self.trace {
            match (prev, st.residual_degree) {
                (Some(a), Some(b)) if b >= a => return false,
                (None, _) => return false,
                _ => {}
            }
            prev = st.residual_degree;
        }
        true
    }
}

fn residual_degree(r: &Series) -> Option<i64> {
    r.degree()
}

/// Run Newton's method from `seed`, aborting after [`STAGNATION_LIMIT`] steps without a
/// strict decrease of the residual degree.
pub fn newton_root(f: &SeriesPoly, seed: &NewtonSeed) -> Result<NewtonResult, SamplingError> {
    newton(f, seed, Some(STAGNATION_LIMIT))
}

/// Run exactly `seed.budget` steps (or until the residual vanishes), never aborting on
/// stagnation. This is the fixed-count loop of the original scripts.
pub fn newton_fixed(f: &SeriesPoly, seed: &NewtonSeed) -> Result<NewtonResult, SamplingError> {
    newton(f, seed, None)
}

fn newton(
    f: &SeriesPoly,
    seed: &NewtonSeed,
    stagnation: Option<usize>,
) -> Result<NewtonResult, SamplingError> {
    if seed.budget == 0 {
        return Err(SamplingError::ZeroBudget);
    }
    if f.is_zero() {
        return Err(SamplingError::ZeroPolynomial);
    }
    let mut s1 = seed.s0.clone();
    let mut g = poly_substitute(f, &s1)?;
    let seed_res = g.coeff(0);
    if seed_res.is_undetermined() {
        return Err(SamplingError::SeedResidualUndetermined);
    }
    let Some(seed_deg) = residual_degree(&seed_res) else {
        return Ok(NewtonResult {
            root: s1,
            trace: Vec::new(),
            status: NewtonStatus::Exact,
            seed_residual_degree: i64::MIN,
        });
    };
    let mut trace = Vec::new();
    let mut best = seed_deg;
    let mut stalls = 0;
    for iteration in 1..=seed.budget {
        let r = g.coeff(0);
        let dr = g.coeff(1);
        let Some((d1, c1)) = r.leading().map(|(e, c)| (e, c.clone())) else {
            break;
        };
        let (d2, c2) = dr
            .leading()
            .map(|(e, c)| (e, c.clone()))
            .ok_or(SamplingError::ExtensionRequired { iteration })?;
        let q = c1.try_div(&c2)?;
        let corr = Series::monomial(q.clone(), d1 - d2);
        s1 = s1 - corr;
        g = poly_substitute(f, &s1)?;
        let res = g.coeff(0);
        let deg = residual_degree(&res);
        trace.push(NewtonStep {
            iteration,
            correction: (q.to_string(), d1 - d2),
            residual_degree: deg,
        });
        let Some(deg) = deg else {
            let status = if res.is_exact() {
                NewtonStatus::Exact
            } else {
                NewtonStatus::BelowFloor
            };
            return Ok(NewtonResult {
                root: s1,
                trace,
                status,
                seed_residual_degree: seed_deg,
            });
        };
        if deg < best {
            best = deg;
            stalls = 0;
        } else {
            stalls += 1;
            if stagnation.is_some_and(|lim| stalls >= lim) {
                return Err(SamplingError::Stagnation { trace, last: s1 });
            }
        }
    }
    Ok(NewtonResult {
        root: s1,
        trace,
        status: NewtonStatus::BudgetExhausted,
        seed_residual_degree: seed_deg,
    })
}

/// A sampled tropical point: valuations of `x, y, z` minus that of `w`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPoint {
    pub s1: Series,
    pub point: [TropicalNumber; 3],
    /// Index (0..4) of the coordinate whose root `s1` approximates, if any.
    pub root_of: Option<usize>,
}

impl SampledPoint {
    /// Integer coordinates, `None` standing for `-inf`.
    pub fn ints(&self) -> [Option<i64>; 3] {
        self.point.each_ref().map(|c| c.as_i64())
    }
}

impl fmt::Display for SampledPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.point[0], self.point[1], self.point[2]
        )
    }
}

/// Substitute a series for the parameter `m` of a one-parameter family of curves.
pub fn specialize(
    family: &ParametrizedCurve<Poly<Scalar>>,
    m: &Series,
) -> ParametrizedCurve<Series> {
    family.map_coeffs(|c| {
        let mut acc = Series::zero();
        for k in (0..c.coeffs().len()).rev() {
            acc = acc * m.clone() + Series::constant(c.coeff(k));
        }
        acc
    })
}

fn top_valuation(v: &Series) -> TropicalNumber {
    match v.degree() {
        Some(d) => TropicalNumber::from(d),
        None => TropicalNumber::NegInf,
    }
}

/// Evaluate the curve at `s1` and normalize valuations by the `w`-coordinate.
pub fn sample_point(
    s1: &Series,
    curve: &ParametrizedCurve<Series>,
    root_of: Option<usize>,
) -> Result<SampledPoint, SamplingError> {
    let vals = curve.coords().each_ref().map(|c| c.eval(s1));
    let lw = vals[3].degree().ok_or(SamplingError::WVanishes)?;
    let lw = TropicalNumber::from(-lw);
    let point = [0, 1, 2].map(|i| top_valuation(&vals[i]).times(&lw));
    Ok(SampledPoint {
        s1: s1.clone(),
        point,
        root_of,
    })
}

/// Sample at `s = t^i` for `i` in `lo..=hi`.
pub fn sweep(
    curve: &ParametrizedCurve<Series>,
    lo: i64,
    hi: i64,
) -> Vec<Result<SampledPoint, SamplingError>> {
    (lo..=hi)
        .map(|i| sample_point(&Series::monomial(Scalar::one(), i), curve, None))
        .collect()
}

/// Residual degrees for one monomial seed `c t^v`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedScan {
    pub coeff: Scalar,
    pub exp: i64,
    pub seed_residual: Option<i64>,
    pub outcome: Result<Option<i64>, String>,
}

/// Try every monomial seed `base + c t^v` on a grid and report residual degrees,
/// lowest final residual first.
pub fn scan_seeds(
    f: &SeriesPoly,
    base: &Series,
    grid: &[(Scalar, i64)],
    budget: usize,
) -> Vec<SeedScan> {
    let mut out: Vec<SeedScan> = grid
        .par_iter()
        .map(|(c, v)| {
            let s0 = base + &Series::monomial(c.clone(), *v);
            let seed_residual = poly_substitute(f, &s0)
                .ok()
                .and_then(|g| g.coeff(0).degree());
            let outcome = NewtonSeed::new(s0, budget)
                .and_then(|sd| newton_root(f, &sd))
                .map(|r| r.residual_degree())
                .map_err(|e| e.to_string());
            SeedScan {
                coeff: c.clone(),
                exp: *v,
                seed_residual,
                outcome,
            }
        })
        .collect();
    out.sort_by_key(|s| match &s.outcome {
        Ok(None) => (0, i64::MIN),
        Ok(Some(d)) => (1, *d),
        Err(_) => (2, 0),
    });
    out
}

/// Run `job` over primes in order until one succeeds without needing a field extension.
pub fn retry_primes<T>(
    primes: impl IntoIterator<Item = u64>,
    job: impl Fn(u64) -> Result<T, SamplingError>,
) -> Result<(u64, T), Vec<(u64, SamplingError)>> {
    let mut failures = Vec::new();
    for p in primes {
        match job(p) {
            Ok(v) => return Ok((p, v)),
            Err(e) => failures.push((p, e)),
        }
    }
    Err(failures)
}

type Q3 = [BigRational; 3];

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A leg hypothesis: the line through `through` with direction `dir`, where the
/// coordinate along `dir` is unreliable (it is the residual of the root search).
#[derive(Debug, Clone, PartialEq)]
pub struct LegLine {
    pub coordinate: usize,
    pub through: Q3,
    /// Outgoing direction of the leg: `-e_i` for `x, y, z` and `(1,1,1)` for `w`.
    pub dir: [i64; 3],
    /// Indices of the samples supporting this leg.
    pub samples: Vec<usize>,
}

impl LegLine {
    /// Coordinates that pin the line down (with `w` legs, the differences to `Z`).
    fn key(&self) -> Vec<BigRational> {
        let p = &self.through;
        match self.coordinate {
            3 => vec![&p[0] - &p[2], &p[1] - &p[2]],
            c => (0..3).filter(|&i| i != c).map(|i| p[i].clone()).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexSource {
    /// Two leg lines meet here.
    LegPair,
    /// Reached along the edge forced by balancing at an earlier vertex.
    Edge,
}

/// A proposed vertex with the legs and edges attached to it.
#[derive(Debug, Clone, PartialEq)]
pub struct ProposedVertex {
    pub point: Q3,
    pub legs: Vec<usize>,
    pub source: VertexSource,
    /// Outgoing directions the balancing condition still requires.
    pub open: Vec<[i64; 3]>,
}

/// A bounded edge between two proposed vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ProposedEdge {
    pub a: usize,
    pub b: usize,
    pub dir: [i64; 3],
}

/// Planes `X - Y = c` shared by several legs or vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneConstraint {
    pub c: BigRational,
    pub legs: Vec<usize>,
    pub vertices: Vec<usize>,
}

/// A partial curve proposal. Nothing here claims to be the whole curve.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Reconstruction {
    pub legs: Vec<LegLine>,
    pub vertices: Vec<ProposedVertex>,
    pub edges: Vec<ProposedEdge>,
    pub constraints: Vec<PlaneConstraint>,
    pub ambiguities: Vec<String>,
}

fn fmt_q3(p: &Q3) -> String {
    format!("({}, {}, {})", p[0], p[1], p[2])
}

fn add_dir(p: &Q3, d: [i64; 3], lam: &BigRational) -> Q3 {
    [0, 1, 2].map(|i| &p[i] + lam * q(d[i]))
}

/// Solve `p + lam d = r + mu e` for `(lam, mu)`; `None` for parallel or skew lines.
fn intersect(p: &Q3, d: [i64; 3], r: &Q3, e: [i64; 3]) -> Option<(BigRational, BigRational)> {
    // lam d - mu e = r - p, least-squares free: try each pair of rows
    let rhs: [BigRational; 3] = [0, 1, 2].map(|i| &r[i] - &p[i]);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let det = d[i] * (-e[j]) - (-e[i]) * d[j];
        if det == 0 {
            continue;
        }
        let det = q(det);
        let lam = (&rhs[i] * q(-e[j]) - q(-e[i]) * &rhs[j]) / &det;
        let mu = (q(d[i]) * &rhs[j] - q(d[j]) * &rhs[i]) / &det;
        let k = 3 - i - j;
        if &lam * q(d[k]) - &mu * q(e[k]) == rhs[k] {
            return Some((lam, mu));
        }
        return None;
    }
    None
}

/// Propose vertices from root samples by intersecting leg lines, then follow the edges
/// that balancing forces at each vertex found.
pub fn reconstruct_vertices(samples: &[SampledPoint]) -> Result<Reconstruction, SamplingError> {
    let mut missing = Vec::new();
    for (c, name) in COORD_NAMES.iter().enumerate() {
        if !samples.iter().any(|s| s.root_of == Some(c)) {
            missing.push(*name);
        }
    }
    if !missing.is_empty() {
        return Err(SamplingError::InsufficientSamples(missing.join(", ")));
    }
    let mut rec = Reconstruction::default();
    for (k, s) in samples.iter().enumerate() {
        let Some(c) = s.root_of else { continue };
        let mut through: Q3 = [q(0), q(0), q(0)];
        for (i, slot) in through.iter_mut().enumerate() {
            if i == c {
                continue;
            }
            match s.point[i].finite() {
                Some(v) => *slot = v.clone(),
                None => {
                    rec.ambiguities
                        .push(format!("sample {k} has -inf outside its root coordinate"));
                    continue;
                }
            }
        }
        if c == 3 {
            if let Some(v) = s.point[2].finite() {
                through[2] = v.clone();
            }
        }
        let dir = match c {
            3 => [1, 1, 1],
            _ => {
                let mut d = [0; 3];
                d[c] = -1;
                d
            }
        };
        let leg = LegLine {
            coordinate: c,
            through,
            dir,
            samples: vec![k],
        };
        match rec
            .legs
            .iter_mut()
            .find(|l| l.coordinate == c && l.key() == leg.key())
        {
            Some(l) => l.samples.push(k),
            None => rec.legs.push(leg),
        }
    }

    // pass 1: pairwise leg intersections
    let nl = rec.legs.len();
    let mut hits: Vec<Vec<Q3>> = vec![Vec::new(); nl];
    let mut cands: Vec<(Q3, Vec<usize>)> = Vec::new();
    for i in 0..nl {
        for j in i + 1..nl {
            let (a, b) = (&rec.legs[i], &rec.legs[j]);
            if a.coordinate == b.coordinate {
                continue;
            }
            if let Some((lam, _)) = intersect(&a.through, a.dir, &b.through, b.dir) {
                let p = add_dir(&a.through, a.dir, &lam);
                hits[i].push(p.clone());
                hits[j].push(p.clone());
                match cands.iter_mut().find(|(x, _)| *x == p) {
                    Some((_, ls)) => {
                        for l in [i, j] {
                            if !ls.contains(&l) {
                                ls.push(l);
                            }
                        }
                    }
                    None => cands.push((p, vec![i, j])),
                }
            }
        }
    }
    let mut used = vec![false; nl];
    for (p, legs) in cands {
        let contested: Vec<usize> = legs
            .iter()
            .copied()
            .filter(|&l| hits[l].iter().any(|h| *h != p))
            .collect();
        if !contested.is_empty() {
            for l in contested {
                let others: Vec<String> = hits[l].iter().map(fmt_q3).collect();
                let msg = format!(
                    "{}-leg through {} meets other legs at {}",
                    COORD_NAMES[rec.legs[l].coordinate],
                    fmt_q3(&rec.legs[l].through),
                    others.join(", ")
                );
                if !rec.ambiguities.contains(&msg) {
                    rec.ambiguities.push(msg);
                }
            }
            continue;
        }
        for &l in &legs {
            used[l] = true;
        }
        let open = balance_open(&legs.iter().map(|&l| rec.legs[l].dir).collect::<Vec<_>>());
        rec.vertices.push(ProposedVertex {
            point: p,
            legs,
            source: VertexSource::LegPair,
            open,
        });
    }

    // pass 2: follow the forced edge from each vertex to the nearest unused leg
    let mut frontier: Vec<usize> = (0..rec.vertices.len()).collect();
    let mut rounds = 0;
    while let Some(v) = frontier.pop() {
        rounds += 1;
        if rounds > 4 * nl + 8 {
            break;
        }
        let open = rec.vertices[v].open.clone();
        if open.len() != 1 {
            continue;
        }
        let d = open[0];
        let from = rec.vertices[v].point.clone();
        let mut found: Vec<(BigRational, usize)> = Vec::new();
        for (l, _) in used.iter().enumerate().filter(|(_, u)| !**u) {
            let leg = &rec.legs[l];
            if let Some((lam, _)) = intersect(&from, d, &leg.through, leg.dir) {
                if lam > BigRational::zero() {
                    found.push((lam, l));
                }
            }
        }
        found.sort();
        let Some((lam, l)) = found.first().cloned() else {
            continue;
        };
        if found.len() > 1 && found[1].0 == lam {
            rec.ambiguities.push(format!(
                "edge from {} along {:?} reaches several legs at once",
                fmt_q3(&from),
                d
            ));
            continue;
        }
        used[l] = true;
        let p = add_dir(&from, d, &lam);
        let back = d.map(|x| -x);
        let open = balance_open(&[back, rec.legs[l].dir]);
        rec.vertices.push(ProposedVertex {
            point: p,
            legs: vec![l],
            source: VertexSource::Edge,
            open,
        });
        let w = rec.vertices.len() - 1;
        rec.vertices[v].open.clear();
        rec.edges.push(ProposedEdge { a: v, b: w, dir: d });
        frontier.push(w);
    }

    // planes X - Y = c through w-legs, where the curve keeps X - Y fixed
    let mut planes: BTreeMap<BigRational, PlaneConstraint> = BTreeMap::new();
    for (l, leg) in rec.legs.iter().enumerate() {
        if leg.coordinate == 3 {
            let c = &leg.through[0] - &leg.through[1];
            planes
                .entry(c.clone())
                .or_insert_with(|| PlaneConstraint {
                    c,
                    legs: Vec::new(),
                    vertices: Vec::new(),
                })
                .legs
                .push(l);
        }
    }
    for (i, v) in rec.vertices.iter().enumerate() {
        let c = &v.point[0] - &v.point[1];
        if let Some(pc) = planes.get_mut(&c) {
            pc.vertices.push(i);
        }
    }
    rec.constraints = planes
        .into_values()
        .filter(|p| p.legs.len() + p.vertices.len() >= 2)
        .collect();
    Ok(rec)
}

/// The outgoing direction that balances the given (weight one) primitive directions.
fn balance_open(dirs: &[[i64; 3]]) -> Vec<[i64; 3]> {
    let mut s = [0i64; 3];
    for d in dirs {
        for i in 0..3 {
            s[i] -= d[i];
        }
    }
    if s == [0, 0, 0] {
        Vec::new()
    } else {
        vec![s]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(coeffs: &[Series]) -> SeriesPoly {
        Poly::from_coeffs(coeffs.to_vec())
    }

    fn mono(c: i64, e: i64) -> Series {
        Series::monomial(Scalar::from(c), e)
    }

    #[test]
    fn linear_root_in_one_step() {
        let f = sp(&[mono(-1, 3), mono(1, 0)]);
        let r = newton_root(&f, &NewtonSeed::new(Series::zero(), 1).unwrap()).unwrap();
        assert_eq!(r.root, mono(1, 3));
        assert_eq!(r.status, NewtonStatus::Exact);
        assert_eq!(r.residual_degree(), None);
    }

    #[test]
    fn wrong_basin_stagnates() {
        // s^2 - t^2 from s = 1: the roots are +-t, the iterates stall near 1
        let f = sp(&[mono(-1, 2), Series::zero(), mono(1, 0)]);
        let err = newton_root(&f, &NewtonSeed::new(mono(1, 0), 5).unwrap()).unwrap_err();
        let SamplingError::Stagnation { trace, .. } = err else {
            panic!("expected stagnation, got {err:?}");
        };
        assert_eq!(trace.len(), 3);
        assert_eq!(trace[0].correction, ("-1/2".to_string(), 2));
        assert_eq!(trace[0].residual_degree, Some(4));
    }

    #[test]
    fn double_root_needs_extension() {
        // (s - 1)^2 at s = 1 has vanishing derivative and residual
        let f = sp(&[mono(1, 0) + mono(1, -2), mono(-2, 0), mono(1, 0)]);
        let err = newton_root(&f, &NewtonSeed::new(mono(1, 0), 3).unwrap()).unwrap_err();
        assert_eq!(err, SamplingError::ExtensionRequired { iteration: 1 });
        assert!(NewtonSeed::new(Series::zero(), 0).is_err());
    }

    #[test]
    fn converging_root_is_monotone() {
        // s^2 - (t^2 + 1): root t + t^-1/2 - ...
        let f = sp(&[mono(-1, 2) + mono(-1, 0), Series::zero(), mono(1, 0)]);
        let r = newton_root(&f, &NewtonSeed::new(mono(1, 1), 8).unwrap()).unwrap();
        assert!(r.monotone());
        assert_eq!(r.root.leading().map(|(e, _)| e), Some(1));
        assert!(r.residual_degree().unwrap() < r.seed_residual_degree);
    }

    #[test]
    fn constant_curve_samples_origin() {
        let one = Poly::constant(Series::one());
        let c = ParametrizedCurve::new([one.clone(), one.clone(), one.clone(), one]);
        for e in [-3, 0, 7] {
            let p = sample_point(&mono(5, e), &c, None).unwrap();
            assert_eq!(p.ints(), [Some(0); 3]);
        }
        let zero = ParametrizedCurve::new([Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()]);
        assert_eq!(
            sample_point(&Series::one(), &zero, None),
            Err(SamplingError::WVanishes)
        );
    }

    #[test]
    fn reconstruction_needs_every_coordinate() {
        let p = SampledPoint {
            s1: Series::zero(),
            point: [TropicalNumber::NegInf, q(0).into(), q(0).into()],
            root_of: Some(0),
        };
        assert!(matches!(
            reconstruct_vertices(&[p]),
            Err(SamplingError::InsufficientSamples(_))
        ));
    }
}
