use num_traits::Zero;
use serde_json::{json, Value};
use tropleg_core::contact::{
    cubic_family, cubic_family_curve, cubic_family_psi, cubic_family_psi_curve, cubic_surface_eval,
    cubics_through_line, general_contact_eval, standard_points, transformation, ContactForm,
    ParametrizedCurve,
};
use tropleg_core::Scalar;

use crate::config::JobConfig;
use crate::error::{domain, CliError};
use crate::output;
use crate::ContactCmd;

pub fn form(cfg: &JobConfig, s: Option<&str>) -> Result<ContactForm, CliError> {
    match s {
        Some(s) => Ok(ContactForm::new(cfg.scalars::<6>(s)?)),
        None => Ok(ContactForm::new(
            ContactForm::standard()
                .coeffs()
                .map(|c| cfg.field.embed(&c).unwrap()),
        )),
    }
}

fn curve(cfg: &JobConfig, s: &str) -> Result<ParametrizedCurve<Scalar>, CliError> {
    let c = s
        .split(',')
        .map(|p| cfg.poly(p, 's'))
        .collect::<Result<Vec<_>, _>>()?;
    let c: [_; 4] = c
        .try_into()
        .map_err(|_| CliError::Usage(format!("--curve needs four polynomials in s, got {s:?}")))?;
    Ok(ParametrizedCurve::new(c))
}

pub fn run(cfg: &JobConfig, cmd: ContactCmd) -> Result<Value, CliError> {
    match cmd {
        ContactCmd::Check { curve: c, form: f } => {
            let f = form(cfg, f.as_deref())?;
            let c = curve(cfg, &c)?;
            let r = general_contact_eval(&f, &c);
            Ok(json!({
                "legendrian": r.is_zero(),
                "contact_form": f.is_contact(),
                "residual": output::poly(&r),
            }))
        }
        ContactCmd::Transform { points } => {
            let [p1, p2, p3] = cfg.three_points(&points)?;
            let tr = transformation(&p1, &p2, &p3).map_err(domain)?;
            Ok(json!({
                "to_standard": output::matrix(&tr.to_standard, output::ratfun),
                "from_standard": output::matrix(&tr.from_standard, output::ratfun),
                "lambdas": tr.lambdas.iter().map(output::ratfun).collect::<Vec<_>>(),
                "special_point": tr.special_point.iter().map(output::ratfun).collect::<Vec<_>>(),
                "sends_to_standard": tr.sends_to_standard([&p1, &p2, &p3]),
            }))
        }
        ContactCmd::CubicFamily { t, mu, psi } => {
            let Some(t) = t else {
                let fam = if psi {
                    cubic_family_psi_curve()
                } else {
                    cubic_family_curve()
                };
                // rows are coordinates, entries the coefficients of s^k as polynomials in mu
                let rows: Vec<Value> = fam
                    .coords()
                    .iter()
                    .map(|c| Value::Array(c.coeffs().iter().map(output::poly).collect()))
                    .collect();
                return Ok(json!({ "family": if psi { "psi" } else { "l" }, "coords": rows }));
            };
            let (t, mu) = (cfg.scalar(&t)?, cfg.scalar(&mu)?);
            let p = if psi {
                cubic_family_psi(&t, &mu)
            } else {
                cubic_family(&t, &mu)
            };
            let standard = standard_points::<Scalar>()
                .iter()
                .position(|s| s.projectively_equal(&p));
            Ok(json!({
                "point": output::point(&p, output::scalar),
                "on_surface": cubic_surface_eval(p.coords()).is_zero(),
                "standard_point": standard,
            }))
        }
        ContactCmd::CubicsThroughLine { line } => {
            let [p1, q1, p2, q2, p3, q3] = cfg.scalars::<6>(&line)?;
            let r = cubics_through_line(&p1, &q1, &p2, &q2, &p3, &q3).map_err(domain)?;
            let sols: Vec<Value> = r
                .solutions
                .iter()
                .map(|s| {
                    json!({
                        "t": output::scalar(&s.t),
                        "mu": output::scalar(&s.mu),
                        "c": output::scalar(&s.c),
                        "multiplicity": s.multiplicity,
                        "on_line": s.lies_on_line(&p1, &q1, &p2, &q2, &p3, &q3),
                    })
                })
                .collect();
            Ok(json!({
                "polynomial": output::poly(&r.polynomial),
                "degree": r.polynomial.degree(),
                "solutions": sols,
            }))
        }
    }
}
