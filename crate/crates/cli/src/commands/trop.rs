use num_rational::BigRational;
use serde_json::{json, Value};
use tropleg_core::checks::CoordJson;
use tropleg_core::tropical::{
    corner_locus_cells, parse_rational, tropical_surface_pipeline, LinearConstraint,
};

use crate::config::JobConfig;
use crate::error::{domain, CliError};
use crate::TropCmd;

use super::tropical_input;

pub(crate) fn coord(q: &BigRational) -> Value {
    serde_json::to_value(CoordJson::from_rational(q)).expect("coordinate JSON")
}

fn constraint(c: &LinearConstraint) -> Value {
    json!({ "normal": c.normal.iter().map(coord).collect::<Vec<_>>(), "offset": coord(&c.offset) })
}

pub fn run(cfg: &JobConfig, cmd: TropCmd) -> Result<Value, CliError> {
    match cmd {
        TropCmd::Surface { points } => {
            let [p1, p2, p3] = cfg.three_points(&points)?;
            let r = tropical_surface_pipeline(&p1, &p2, &p3).map_err(domain)?;
            Ok(json!({
                "polynomial": r.polynomial.to_json(),
                "max": r.polynomial.to_string(),
                "homogeneous": r.homogeneous.to_json(),
                "dropped": r.dropped.iter().map(|d| d.exp.clone()).collect::<Vec<_>>(),
            }))
        }
        TropCmd::Eval { input, at } => {
            let f = tropical_input(&input)?;
            let pt = at
                .split(',')
                .map(|x| {
                    parse_rational(x)
                        .ok_or_else(|| CliError::Usage(format!("bad coordinate {x:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (v, arg) = f.eval(&pt).map_err(domain)?;
            Ok(json!({ "value": v, "argmax": arg, "on_corner_locus": arg.len() >= 2 }))
        }
        TropCmd::Cells { input } => {
            let f = tropical_input(&input)?;
            let bbox = cfg
                .bbox
                .as_ref()
                .ok_or_else(|| CliError::Usage("trop cells needs --bbox".into()))?;
            let cells = corner_locus_cells(&f, bbox).map_err(domain)?;
            let out: Vec<Value> = cells
                .iter()
                .map(|c| {
                    json!({
                        "terms": [c.terms.0, c.terms.1],
                        "equality": constraint(&c.equality),
                        "polygon": c.polygon.iter().map(|p| p.iter().map(coord).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({ "cells": out }))
        }
    }
}
