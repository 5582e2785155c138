use num_traits::Zero;
use serde_json::{json, Value};
use tropleg_core::checks::{
    build_legendrian_line, check_divisibility, check_tangency, GraphJson, LineFamily,
    TropicalCurveGraph,
};
use tropleg_core::contact::contact_eval;

use crate::error::{domain, usage, CliError};
use crate::expr::parse_ints;
use crate::output;
use crate::{BuildCmd, CheckCmd};

use super::read_file;

fn load(p: &std::path::Path) -> Result<TropicalCurveGraph, CliError> {
    let j: GraphJson = serde_json::from_str(&read_file(p)?).map_err(usage)?;
    TropicalCurveGraph::from_json(&j).map_err(domain)
}

pub fn run_check(cmd: CheckCmd) -> Result<Value, CliError> {
    match cmd {
        CheckCmd::Tangency { curve } => {
            let g = load(&curve)?;
            let v = check_tangency(&g);
            let pass = v.iter().all(|e| e.tangency != Some(false));
            Ok(json!({ "pass": pass, "edges": v }))
        }
        CheckCmd::Divisibility { curve } => {
            let g = load(&curve)?;
            let r = check_divisibility(&g);
            let mut v = serde_json::to_value(&r).expect("report JSON");
            v["pass"] = json!(r.passes());
            v["judged"] = json!(r.judged());
            Ok(v)
        }
    }
}

pub fn run_build(cmd: BuildCmd) -> Result<Value, CliError> {
    let BuildCmd::Line { family, abx } = cmd;
    let fam = LineFamily::from_index(family)
        .ok_or_else(|| CliError::Usage(format!("--family must be 1, 2 or 3, got {family}")))?;
    let [a, b, x] = parse_ints::<3>(&abx).map_err(usage)?;
    let l = build_legendrian_line(fam, a, b, x).map_err(domain)?;
    Ok(json!({
        "graph": l.graph.to_json(),
        "lift": l.lift.coords().iter().map(output::series_poly).collect::<Vec<_>>(),
        "legendrian": contact_eval(&l.lift).is_zero(),
    }))
}
