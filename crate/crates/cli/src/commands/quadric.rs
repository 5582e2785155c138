use serde_json::{json, Value};
use tropleg_core::quadric::{classify_quadric_curve, Algebraicity, NormalForm};

use crate::config::JobConfig;
use crate::error::{domain, CliError};
use crate::output;
use crate::QuadricCmd;

use super::contact::form;

fn normal(n: &NormalForm) -> Value {
    let opt = |s: &Option<tropleg_core::Scalar>| s.as_ref().map(output::scalar);
    json!({
        "tag": n.tag.to_string(),
        "scale": opt(&n.scale),
        "shift": opt(&n.shift),
        "c": opt(&n.c),
        "discriminant": output::scalar(&n.discriminant),
        "extension_required": n.extension_required,
    })
}

pub fn run(cfg: &JobConfig, cmd: QuadricCmd) -> Result<Value, CliError> {
    let QuadricCmd::Classify { form: f } = cmd;
    let f = form(cfg, Some(&f))?;
    let c = classify_quadric_curve(&f).map_err(domain)?;
    let alg = match c.algebraicity {
        Algebraicity::Algebraic => "algebraic",
        Algebraicity::NonAlgebraic => "non-algebraic",
        Algebraicity::Inconclusive => "inconclusive",
    };
    Ok(json!({
        "odes": {
            "mu": c.odes.mu.iter().map(output::scalar).collect::<Vec<_>>(),
            "nu": c.odes.nu.iter().map(output::scalar).collect::<Vec<_>>(),
        },
        "mu": normal(&c.mu),
        "nu": normal(&c.nu),
        "form": c.form.map(|s| json!({ "index": s.index(), "name": format!("{s:?}"), "equation": s.equation() })),
        "exponents": c.exponents,
        "reciprocal": c.reciprocal,
        "algebraicity": alg,
    }))
}
