use serde_json::json;
use tropleg_core::mesh::{export_mesh, MeshError};
use tropleg_core::tropical::corner_locus_cells;

use crate::config::JobConfig;
use crate::error::{domain, usage, CliError};
use crate::expr::parse_points3;
use crate::MeshArgs;

use super::{tropical_input, Outcome};

/// With `--out path.obj` the OBJ goes there and the JSON mirror next to it as
/// `path.json`; otherwise the JSON mirror goes to stdout.
pub fn run(cfg: &JobConfig, a: MeshArgs) -> Result<Outcome, CliError> {
    let f = tropical_input(&a.input)?;
    let points = a
        .points
        .as_deref()
        .map(parse_points3)
        .transpose()
        .map_err(usage)?
        .unwrap_or_default();
    let polyline = a
        .polyline
        .as_deref()
        .map(parse_points3)
        .transpose()
        .map_err(usage)?
        .unwrap_or_default();
    let bbox = cfg
        .bbox
        .as_ref()
        .ok_or_else(|| domain(MeshError::Unbounded))?;
    let cells = corner_locus_cells(&f, bbox).map_err(domain)?;
    let mesh = export_mesh(&cells, Some(bbox), &points, &polyline).map_err(domain)?;
    let doc = serde_json::to_value(&mesh).expect("mesh JSON");
    let Some(obj) = &cfg.out else {
        return Ok(Outcome::Document(doc));
    };
    let mirror = obj.with_extension("json");
    let write = |p: &std::path::Path, text: String| {
        std::fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
    };
    write(obj, mesh.to_obj())?;
    write(
        &mirror,
        serde_json::to_string_pretty(&doc).expect("mesh JSON") + "\n",
    )?;
    Ok(Outcome::Written(json!({
        "obj": obj.display().to_string(),
        "json": mirror.display().to_string(),
        "polygons": mesh.polygons.len(),
        "triangles": mesh.triangle_count(),
    })))
}
