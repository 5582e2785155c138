//! One function per verb. Each returns the JSON document to emit.

mod check;
mod contact;
mod mesh;
mod quadric;
mod sample;
mod trop;

use std::path::Path;

use serde_json::Value;
use tropleg_core::tropical::{TropicalPolynomial, TropicalPolynomialJson};

use crate::config::JobConfig;
use crate::error::{usage, CliError};
use crate::{Command, PolyInput};

/// What a verb produced: a document for stdout or `--out`, or a summary of files it
/// wrote itself.
pub enum Outcome {
    Document(Value),
    Written(Value),
}

pub fn dispatch(cfg: &JobConfig, cmd: Command) -> Result<Outcome, CliError> {
    let doc = match cmd {
        Command::Contact(c) => contact::run(cfg, c)?,
        Command::Quadric(c) => quadric::run(cfg, c)?,
        Command::Trop(c) => trop::run(cfg, c)?,
        Command::Sample(c) => sample::run(cfg, c)?,
        Command::Check(c) => check::run_check(c)?,
        Command::Build(c) => check::run_build(c)?,
        Command::ExportMesh(a) => return mesh::run(cfg, a),
    };
    Ok(Outcome::Document(doc))
}

pub(crate) fn read_file(p: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
}

/// A polynomial from `--poly` text or a `--poly-file` holding JSON or text.
pub(crate) fn tropical_input(input: &PolyInput) -> Result<TropicalPolynomial, CliError> {
    let text = match (&input.poly, &input.poly_file) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => read_file(p)?,
        (None, None) => return Err(CliError::Usage("give --poly or --poly-file".into())),
    };
    if text.trim_start().starts_with('{') {
        let j: TropicalPolynomialJson = serde_json::from_str(&text).map_err(usage)?;
        TropicalPolynomial::from_json(&j).map_err(usage)
    } else {
        TropicalPolynomial::parse(&text).map_err(usage)
    }
}
