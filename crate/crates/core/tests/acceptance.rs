//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria listed in `KNOWN_RED` are reported as FAIL with their analysis and do not
//! fail the run; if one of them starts passing, the run fails so the list gets updated.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::fixtures::*;
use common::{gauss_oracle, q, s};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropleg_core::checks::*;
use tropleg_core::contact::*;
use tropleg_core::quadric::*;
use tropleg_core::tropical::tropical_surface_pipeline;
use tropleg_core::{Poly, Scalar};

/// Criteria expected to fail, with the reason.
const KNOWN_RED: &[(usize, &str)] = &[(
    5,
    "the +94/t z seed leaves residual t^-3 after ten Newton steps; the listed (13,-1,-1) is the eight-step value",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.pass &= took <= budget;
    o.detail = format!("{} ({:.2?}, budget {:?})", o.detail, took, budget);
    o
}

fn cubic_surface_identity() -> Outcome {
    timed(Duration::from_secs(1), || {
        let c = cubic_family_psi_curve();
        let f = cubic_surface_eval(c.coords());
        outcome(f.is_zero(), "F(psi(t, mu)) expanded over Q[t, mu]")
    })
}

fn standard_point_membership() -> Outcome {
    let vals: Vec<Scalar> = standard_points::<Scalar>()
        .iter()
        .map(|p| cubic_surface_eval(p.coords()))
        .collect();
    outcome(
        vals.iter().all(|v| v.is_zero()),
        format!("F at the standard points = {vals:?}"),
    )
}

fn cubic_family_theorem() -> Outcome {
    let omega1 = ContactForm::from_ints([3, 0, 0, 0, 0, 1]);
    let legendrian = general_contact_eval(&omega1, &cubic_family_curve()).is_zero();
    let mu = Poly::monomial(s(1), 1);
    let std = standard_points::<Poly<Scalar>>();
    let through = [0, 1, -1]
        .into_iter()
        .zip(&std)
        .all(|(t, p)| cubic_family(&Poly::constant(s(t)), &mu).projectively_equal(p));
    outcome(
        legendrian && through,
        format!("omega1 on l(t, mu) zero: {legendrian}; l(0|1|-1, mu) standard: {through}"),
    )
}

fn pipeline_reproduction() -> Outcome {
    timed(Duration::from_secs(30), || {
        let [p1, p2, p3] = pipeline_points();
        match tropical_surface_pipeline(&p1, &p2, &p3) {
            Ok(r) => {
                let want = expected_surface();
                let hits = want
                    .terms()
                    .iter()
                    .filter(|t| r.polynomial.terms().contains(t))
                    .count();
                let pass = r.polynomial == want;
                outcome(
                    pass,
                    format!(
                        "{hits}/{} terms match, {} produced",
                        want.terms().len(),
                        r.polynomial.terms().len()
                    ),
                )
            }
            Err(e) => outcome(false, format!("pipeline error: {e}")),
        }
    })
}

fn sampling_reproduction() -> Outcome {
    let got = run_samples(&example_curve());
    let mut misses = Vec::new();
    for (k, p) in got.iter().enumerate() {
        let have = p.ints().map(|c| c.unwrap_or(i64::MIN));
        let want = PUBLISHED[SEED_TO_PUBLISHED[k]];
        if have != want {
            misses.push(format!("seed {k}: {have:?} vs {want:?}"));
        }
    }
    let exact = got.len() - misses.len();
    outcome(
        misses.is_empty(),
        format!("{exact}/12 exact; {}", misses.join("; ")),
    )
}

fn divisibility_worked_example() -> Outcome {
    let json = r#"{
      "vertices": [[22, 8, 32], [24, 10, 32]],
      "edges": [{"a": 0, "b": 1, "dir": [1, 1, 0]}],
      "rays": [
        {"from": 0, "dir": [-1, 0, 0]},
        {"from": 0, "dir": [0, -1, 0]},
        {"from": 1, "dir": [0, 0, -1]},
        {"from": 1, "dir": [1, 1, 1]}
      ]
    }"#;
    let g = TropicalCurveGraph::from_json(&serde_json::from_str(json).unwrap());
    match g {
        Ok(g) => {
            let r = check_divisibility(&g);
            let res = r.verdicts[0]
                .divisibility
                .as_ref()
                .map(|d| d.residual.clone());
            let shown = res.as_ref().map_or("none".to_string(), |r| r.to_string());
            outcome(
                r.passes() && res == Some(q(0)),
                format!("(22+8)+(24+10) - (32+32) = {shown}"),
            )
        }
        Err(e) => outcome(false, format!("graph error: {e}")),
    }
}

fn gauss_lemma() -> Outcome {
    let t = gauss_oracle(2024, 200, 10);
    outcome(
        t.agree == t.total && t.total == 2000,
        format!(
            "{}/{} agree, {} tied draws redrawn",
            t.agree, t.total, t.ties
        ),
    )
}

fn line_realizability() -> Outcome {
    timed(Duration::from_secs(10), || {
        let mut bad = Vec::new();
        let mut n = 0;
        for fam in LineFamily::ALL {
            for a in 0..4 {
                for b in 0..4 {
                    for x in 0..4 {
                        n += 1;
                        let ok = build_legendrian_line(fam, a, b, x).is_ok_and(|l| {
                            contact_eval(&l.lift).is_zero()
                                && check_tangency(&l.graph)
                                    .iter()
                                    .all(|v| v.tangency != Some(false))
                                && check_divisibility(&l.graph).passes()
                        });
                        if !ok {
                            bad.push(format!("{fam:?}({a},{b},{x})"));
                        }
                    }
                }
            }
        }
        outcome(
            bad.is_empty(),
            format!("{}/{n} cases pass {}", n - bad.len(), bad.join(" ")),
        )
    })
}

fn cubics_through_lines() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let rat = |rng: &mut ChaCha8Rng| Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    let (mut lines, mut skipped, mut roots, mut planted, mut cubic) = (0, 0, 0, 0, 0);
    let mut bad = Vec::new();
    while lines < 50 {
        let (q1, q2, q3) = (rat(&mut rng), rat(&mut rng), rat(&mut rng));
        // every other line passes through a family point, so it has a rational root
        let plant = lines % 2 == 0;
        let target = plant.then(|| (rat(&mut rng), rat(&mut rng)));
        let (p1, p2, p3) = match &target {
            Some((t, mu)) => match cubic_family(t, mu).normalized() {
                Ok(p) => {
                    let [x, y, z, w] = p.coords().clone();
                    (&y - &(&q1 * &x), &z - &(&q2 * &x), &w - &(&q3 * &x))
                }
                Err(_) => continue,
            },
            None => (rat(&mut rng), rat(&mut rng), rat(&mut rng)),
        };
        let Ok(r) = cubics_through_line(&p1, &q1, &p2, &q2, &p3, &q3) else {
            skipped += 1;
            continue;
        };
        lines += 1;
        if r.polynomial.degree() == Some(3) {
            cubic += 1;
        } else {
            bad.push(format!("line {lines}: degree {:?}", r.polynomial.degree()));
        }
        for sol in &r.solutions {
            roots += 1;
            if !sol.lies_on_line(&p1, &q1, &p2, &q2, &p3, &q3) {
                bad.push(format!("line {lines}: root t={} misses the line", sol.t));
            }
        }
        if let Some((t, mu)) = target {
            if r.solutions.iter().any(|sol| sol.t == t && sol.mu == mu) {
                planted += 1;
            } else {
                bad.push(format!("line {lines}: planted root ({t}, {mu}) not found"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{cubic}/50 of degree 3; {roots} rational roots round-trip, {planted}/25 planted found, {skipped} non-generic redrawn {}", bad.join("; ")),
    )
}

fn quadric_spot_checks() -> Outcome {
    let power = classify_quadric_curve(&ContactForm::from_ints([3, 0, 0, 0, 0, 1]));
    let power_ok = power
        .as_ref()
        .is_ok_and(|c| c.form == Some(StandardForm::Power) && c.exponents == Some((1, 2)));
    // mu' = mu^2 - 1 and nu' = nu^2
    let mixed = classify_quadric_curve(&ContactForm::from_ints([0, 1, 1, 0, -1, 0]));
    let mixed_ok = mixed.as_ref().is_ok_and(|c| {
        c.mu.tag == NormalTag::SquareMinusOne
            && c.nu.tag == NormalTag::PureSquare
            && c.form.is_none()
            && c.algebraicity == Algebraicity::NonAlgebraic
    });
    outcome(
        power_ok && mixed_ok,
        format!("power nu ~ mu^2: {power_ok}; (mu^2-1, nu^2) non-algebraic: {mixed_ok}"),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("cubic surface identity", cubic_surface_identity),
        ("standard-point membership", standard_point_membership),
        ("cubic family theorem", cubic_family_theorem),
        (
            "transformation pipeline reproduction",
            pipeline_reproduction,
        ),
        ("curve sampling reproduction", sampling_reproduction),
        (
            "divisibility on the worked example",
            divisibility_worked_example,
        ),
        ("log-Gauss lemma oracle", gauss_lemma),
        ("tropical line realizability", line_realizability),
        ("cubics through a line", cubics_through_lines),
        ("quadric classification spot checks", quadric_spot_checks),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let o = f();
        let red = KNOWN_RED.iter().find(|(k, _)| *k == n);
        println!(
            "{} {n:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        match (o.pass, red) {
            (false, Some((_, why))) => println!("        known: {why}"),
            (true, Some(_)) => {
                println!("        listed as known red but passes; update KNOWN_RED");
                unexpected += 1;
            }
            (false, None) => unexpected += 1,
            (true, None) => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
