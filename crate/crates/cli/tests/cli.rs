use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;
use tropleg_cli::{run, EXIT_DOMAIN, EXIT_USAGE};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

/// Run in process with `--out` and parse what was written.
fn run_json(args: &[&str]) -> (i32, Option<Value>) {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out.json");
    let mut argv = vec![
        "tropleg".to_string(),
        "--out".into(),
        out.display().to_string(),
    ];
    argv.extend(args.iter().map(|s| s.to_string()));
    let code = run(argv);
    let v = std::fs::read_to_string(&out)
        .ok()
        .map(|t| serde_json::from_str(&t).unwrap());
    (code, v)
}

fn ok(args: &[&str]) -> Value {
    let (code, v) = run_json(args);
    assert_eq!(code, 0, "{args:?}");
    v.expect("output written")
}

fn code(args: &[&str]) -> i32 {
    run_json(args).0
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tropleg"))
}

#[test]
fn surface_through_series_points() {
    let v = ok(&[
        "trop",
        "surface",
        "--points",
        "2t^13,2t^20,t^33;2t^11,2t^5,t^31;2t^4,2t^13,2t^27",
    ]);
    let terms = v["polynomial"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 20);
    assert_eq!(terms[0]["exp"], serde_json::json!([3, 0, 0]));
    assert_eq!(terms[0]["coeff"], "228");
    assert_eq!(terms[19]["coeff"], "263");
    assert_eq!(v["polynomial"]["vars"], serde_json::json!(["X", "Y", "Z"]));
}

#[test]
fn divisibility_of_the_example_fragment() {
    let curve = data("example.json");
    let v = ok(&["check", "divisibility", "--curve", curve.to_str().unwrap()]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["judged"], 1);
    assert_eq!(v["verdicts"][0]["divisibility"]["residual"], "0");
    let v = ok(&["check", "tangency", "--curve", curve.to_str().unwrap()]);
    assert_eq!(v["pass"], true);
}

#[test]
fn built_lines_pass_the_checks() {
    let dir = TempDir::new().unwrap();
    for fam in ["1", "2", "3"] {
        let v = ok(&["build", "line", "--family", fam, "--abx", "2,-1,3"]);
        assert_eq!(v["legendrian"], true);
        let g = dir.path().join(format!("line{fam}.json"));
        std::fs::write(&g, v["graph"].to_string()).unwrap();
        for verb in ["tangency", "divisibility"] {
            let r = ok(&["check", verb, "--curve", g.to_str().unwrap()]);
            assert_eq!(r["pass"], true, "family {fam} {verb}");
        }
    }
    assert_eq!(
        ok(&["build", "line", "--family", "1", "--abx", "0,0,1"])["graph"]["vertices"],
        serde_json::json!([[0, 0, 1], [1, 1, 1]])
    );
}

#[test]
fn one_term_polynomial_gives_an_empty_mesh() {
    let v = ok(&[
        "export-mesh",
        "--poly",
        "max(x + 2*y + z + 3)",
        "--bbox",
        "-5:5,-5:5,-5:5",
    ]);
    assert_eq!(v["polygons"], serde_json::json!([]));
}

#[test]
fn mesh_files_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let obj = dir.path().join("m.obj");
    let args = |o: &Path| {
        vec![
            "tropleg".to_string(),
            "export-mesh".into(),
            "--poly".into(),
            "max(x, y, z, 0)".into(),
            "--bbox".into(),
            "-2:2,-2:2,-2:2".into(),
            "--points".into(),
            "0,0,0;1,1,-1".into(),
            "--out".into(),
            o.display().to_string(),
        ]
    };
    assert_eq!(run(args(&obj)), 0);
    let first = (
        std::fs::read(&obj).unwrap(),
        std::fs::read(obj.with_extension("json")).unwrap(),
    );
    assert_eq!(run(args(&obj)), 0);
    let second = (
        std::fs::read(&obj).unwrap(),
        std::fs::read(obj.with_extension("json")).unwrap(),
    );
    assert_eq!(first, second);
    let text = String::from_utf8(first.0).unwrap();
    assert!(text.lines().any(|l| l.starts_with("f ")));
    assert!(text.contains("g points"));
    let mesh: Value = serde_json::from_slice(&first.1).unwrap();
    assert_eq!(mesh["points"].as_array().unwrap().len(), 2);
}

#[test]
fn trop_eval_and_cells() {
    let v = ok(&[
        "trop",
        "eval",
        "--poly",
        "max(x, y, z, 0)",
        "--at",
        "1,1,-5",
    ]);
    assert_eq!(v["value"], "1");
    assert_eq!(v["argmax"], serde_json::json!([0, 1]));
    let v = ok(&[
        "trop",
        "cells",
        "--poly",
        "max(x + 0*y + 0*z, 0)",
        "--bbox",
        "-1:1,-1:1,-1:1",
    ]);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["polygon"].as_array().unwrap().len(), 4);
    assert_eq!(code(&["trop", "cells", "--poly", "max(x, 0)"]), EXIT_USAGE);
}

#[test]
fn contact_verbs() {
    let v = ok(&[
        "contact",
        "check",
        "--curve",
        "s,s^2,s^3,1",
        "--form",
        "3,0,0,0,0,1",
    ]);
    assert_eq!(v["legendrian"], true);
    let v = ok(&["contact", "check", "--curve", "s,1,0,1"]);
    assert_eq!(v["legendrian"], false);
    assert_eq!(v["residual"], serde_json::json!(["1"]));
    let v = ok(&[
        "contact",
        "transform",
        "--points",
        "0,0,0,1;1,1,1,1;-1,1,-1,1",
    ]);
    assert_eq!(v["sends_to_standard"], true);
    let v = ok(&["contact", "cubic-family", "--t", "1", "--mu", "5/3"]);
    assert_eq!(v["standard_point"], 1);
    assert_eq!(v["on_surface"], true);
    let v = ok(&[
        "contact",
        "cubic-family",
        "--t",
        "1/2",
        "--mu",
        "5/3",
        "--psi",
    ]);
    assert_eq!(v["on_surface"], true);
    let v = ok(&["contact", "cubics-through-line", "--line", "2,-1,5,3,1,4"]);
    assert_eq!(v["degree"], 3);
}

#[test]
fn quadric_classification() {
    let v = ok(&["quadric", "classify", "--form", "3,0,0,0,0,1"]);
    assert_eq!(v["form"]["index"], 2);
    assert_eq!(v["exponents"], serde_json::json!([1, 2]));
    let v = ok(&["quadric", "classify", "--form", "0,1,1,0,-1,0"]);
    assert_eq!(v["form"], Value::Null);
    assert_eq!(v["algebraicity"], "non-algebraic");
    let v = ok(&[
        "--field",
        "fp:101",
        "quadric",
        "classify",
        "--form",
        "3,0,0,0,0,1",
    ]);
    assert_eq!(v["algebraicity"], "inconclusive");
}

#[test]
fn sampling_over_a_prime_field() {
    let pts = "1/t^4,1/t^4,t^4;3t^12,4/t^8,5t^12;6t^16,7t^8,2t^32";
    let base = [
        "--field", "fp:2897", "sample", "newton", "--m", "t^2", "--points", pts,
    ];
    let with = |extra: &[&'static str]| {
        let mut a = base.to_vec();
        a.extend_from_slice(extra);
        ok(&a)
    };
    let v = with(&["--coord", "x", "--seed", "t^-18"]);
    assert_eq!(v["sample"]["point"], serde_json::json!([-24, -4, 4]));
    assert_eq!(v["sample"]["root_of"], "x");
    let v = with(&["--coord", "w", "--seed", "-1+t^-10"]);
    assert_eq!(v["sample"]["point"], serde_json::json!([44, 30, 52]));
    assert_eq!(v["monotone"], true);
    assert_eq!(v["trace"].as_array().unwrap().len(), 10);
    let v = with(&["--coord", "z", "--seed", "94t^-1", "--budget", "8"]);
    assert_eq!(v["sample"]["point"], serde_json::json!([13, -1, -1]));
    let s = ok(&[
        "--field", "fp:2897", "sample", "sweep", "--m", "t^2", "--points", pts, "--range", "-3:3",
    ]);
    assert_eq!(s["samples"].as_array().unwrap().len(), 7);
}

#[test]
fn seed_scan_ranks_candidates() {
    let v = ok(&[
        "--field", "fp:2897", "sample", "scan", "--m", "t^2", "--coord", "x", "--coeffs", "1:2",
        "--exps", "-18:-17", "--budget", "5", "--top", "4",
    ]);
    assert_eq!(v["tried"], 4);
    assert_eq!(v["best"].as_array().unwrap().len(), 4);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(code(&["trop", "surface", "--nope"]), EXIT_USAGE);
    assert_eq!(
        code(&[
            "--field",
            "fp:10",
            "quadric",
            "classify",
            "--form",
            "3,0,0,0,0,1"
        ]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["quadric", "classify", "--form", "3,0,0"]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["build", "line", "--family", "4", "--abx", "0,0,1"]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["--trunc", "5:1", "trop", "eval", "--poly", "max(x)", "--at", "1"]),
        EXIT_USAGE
    );
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"vertices\": [[1, 2]]").unwrap();
    assert_eq!(
        code(&["check", "tangency", "--curve", bad.to_str().unwrap()]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["trop", "eval", "--poly", "max(2x +)", "--at", "1"]),
        EXIT_USAGE
    );
    // domain errors
    assert_eq!(
        code(&["quadric", "classify", "--form", "0,0,0,2,3,0"]),
        EXIT_DOMAIN
    );
    assert_eq!(
        code(&[
            "contact",
            "transform",
            "--points",
            "1,0,0,1;1,0,0,1;1,0,0,1"
        ]),
        EXIT_DOMAIN
    );
    assert_eq!(code(&["export-mesh", "--poly", "max(x, 0)"]), EXIT_DOMAIN);
    let unbalanced = dir.path().join("unbalanced.json");
    std::fs::write(
        &unbalanced,
        r#"{"vertices": [[0, 0, 0]], "rays": [{"from": 0, "dir": [1, 0, 0]}]}"#,
    )
    .unwrap();
    assert_eq!(
        code(&["check", "tangency", "--curve", unbalanced.to_str().unwrap()]),
        EXIT_DOMAIN
    );
}

#[test]
fn binary_writes_json_to_stdout() {
    let out = bin()
        .args(["quadric", "classify", "--form", "3,0,0,0,0,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["form"]["name"], "Power");
    let out = bin().args(["contact", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn thread_cap_from_the_environment() {
    let args = [
        "trop",
        "cells",
        "--poly",
        "max(x, y, z, 0)",
        "--bbox",
        "-1:1,-1:1,-1:1",
    ];
    let out = bin()
        .env("TROPLEG_THREADS", "1")
        .args(args)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 6);
    let out = bin()
        .env("TROPLEG_THREADS", "zero")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
