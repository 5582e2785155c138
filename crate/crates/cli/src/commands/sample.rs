use std::array;

use serde_json::{json, Value};
use tropleg_core::contact::{
    cubic_family_curve, cubic_family_psi_curve, cubic_family_psi_m_curve, transformation,
    ParametrizedCurve, ProjectiveMap,
};
use tropleg_core::sampling::{
    newton_fixed, newton_root, sample_point, scan_seeds, specialize, sweep, NewtonSeed,
    SampledPoint, COORD_NAMES,
};
use tropleg_core::{Series, SeriesPoly};

use crate::config::JobConfig;
use crate::error::{domain, CliError};
use crate::expr::parse_range;
use crate::output;
use crate::{Coord, CurveArgs, Family, Mode, SampleCmd};

fn index(c: Coord) -> usize {
    match c {
        Coord::X => 0,
        Coord::Y => 1,
        Coord::Z => 2,
        Coord::W => 3,
    }
}

/// The family at the given parameter, moved to the given points when asked.
fn build_curve(cfg: &JobConfig, a: &CurveArgs) -> Result<ParametrizedCurve<Series>, CliError> {
    let fam = match a.family {
        Family::L => cubic_family_curve(),
        Family::Psi => cubic_family_psi_curve(),
        Family::PsiM => cubic_family_psi_m_curve(),
    };
    let fam = fam.map_coeffs(|p| p.map(|c| cfg.field.embed(c).expect("small integers embed")));
    let m = cfg.series(&a.m)?;
    let curve = specialize(&fam, &m);
    let Some(points) = &a.points else {
        return Ok(curve);
    };
    let [p1, p2, p3] = cfg.three_points(points)?;
    let tr = transformation(&p1, &p2, &p3).map_err(domain)?;
    let e = tr.from_standard.entries();
    let mut flat = Vec::with_capacity(16);
    for row in e {
        for x in row {
            flat.push(x.to_series(cfg.floor()).map_err(domain)?);
        }
    }
    let m = ProjectiveMap::new(array::from_fn(|i| {
        array::from_fn(|j| flat[4 * i + j].clone())
    }));
    Ok(m.apply_curve(&curve))
}

fn point_json(p: &SampledPoint) -> Value {
    let coords: Vec<Value> = p
        .ints()
        .iter()
        .zip(&p.point)
        .map(|(i, t)| match i {
            Some(n) => json!(n),
            None => json!(t.to_string()),
        })
        .collect();
    json!({
        "point": coords,
        "root_of": p.root_of.map(|c| COORD_NAMES[c]),
        "s": output::series(&p.s1),
    })
}

fn coordinate(curve: &ParametrizedCurve<Series>, c: Coord) -> &SeriesPoly {
    &curve.coords()[index(c)]
}

pub fn run(cfg: &JobConfig, cmd: SampleCmd) -> Result<Value, CliError> {
    match cmd {
        SampleCmd::Newton {
            curve,
            coord,
            seed,
            budget,
            mode,
        } => {
            let c = build_curve(cfg, &curve)?;
            let sd = NewtonSeed::new(cfg.series(&seed)?, budget).map_err(domain)?;
            let f = coordinate(&c, coord);
            let r = match mode {
                Mode::Fixed => newton_fixed(f, &sd),
                Mode::Stop => newton_root(f, &sd),
            }
            .map_err(domain)?;
            let root = cfg.restrict(r.root.clone())?;
            let p = sample_point(&root, &c, Some(index(coord))).map_err(domain)?;
            Ok(json!({
                "root": output::series(&root),
                "status": r.status,
                "seed_residual_degree": r.seed_residual_degree,
                "residual_degree": r.residual_degree(),
                "monotone": r.monotone(),
                "trace": r.trace,
                "sample": point_json(&p),
            }))
        }
        SampleCmd::Point { curve, s } => {
            let c = build_curve(cfg, &curve)?;
            let p = sample_point(&cfg.series(&s)?, &c, None).map_err(domain)?;
            Ok(point_json(&p))
        }
        SampleCmd::Sweep { curve, range } => {
            let c = build_curve(cfg, &curve)?;
            let (lo, hi) = parse_range(&range).map_err(|e| CliError::Usage(e.to_string()))?;
            let pts: Vec<Value> = sweep(&c, lo, hi)
                .iter()
                .zip(lo..=hi)
                .map(|(r, i)| match r {
                    Ok(p) => json!({ "i": i, "sample": point_json(p) }),
                    Err(e) => json!({ "i": i, "error": e.to_string() }),
                })
                .collect();
            Ok(json!({ "samples": pts }))
        }
        SampleCmd::Scan {
            curve,
            coord,
            base,
            coeffs,
            exps,
            budget,
            top,
        } => {
            let c = build_curve(cfg, &curve)?;
            let bad = |e: crate::expr::ExprError| CliError::Usage(e.to_string());
            let (c0, c1) = parse_range(&coeffs).map_err(bad)?;
            let (e0, e1) = parse_range(&exps).map_err(bad)?;
            let grid: Vec<_> = (c0..=c1)
                .filter(|&k| k != 0)
                .flat_map(|k| (e0..=e1).map(move |v| (k, v)))
                .map(|(k, v)| (cfg.field.int(k), v))
                .collect();
            let base = cfg.series(&base)?;
            let res = scan_seeds(coordinate(&c, coord), &base, &grid, budget);
            let rows: Vec<Value> = res
                .iter()
                .take(top)
                .map(|s| {
                    let (fin, err) = match &s.outcome {
                        Ok(d) => (json!(d), Value::Null),
                        Err(e) => (Value::Null, json!(e)),
                    };
                    json!({
                        "coeff": output::scalar(&s.coeff),
                        "exp": s.exp,
                        "seed_residual": s.seed_residual,
                        "final_residual": fin,
                        "error": err,
                    })
                })
                .collect();
            Ok(json!({ "tried": grid.len(), "best": rows }))
        }
    }
}
