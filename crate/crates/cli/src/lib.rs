//! The `tropleg` command line: exact computations on legendrian curves and their
//! tropicalizations, with JSON on stdout (or `--out`) and OBJ mesh export.
//!
//! Exit status: 0 on success, 1 on a domain error (degenerate input, stagnation, an
//! empty intersection), 2 on a usage error (bad flags, expressions or JSON).

pub mod commands;
pub mod config;
pub mod error;
pub mod expr;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::config::{parse_bbox, parse_field, parse_window, JobConfig};
pub use crate::error::{CliError, EXIT_DOMAIN, EXIT_USAGE};

/// Environment variable capping the worker threads.
pub const THREADS_VAR: &str = "TROPLEG_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "tropleg",
    version,
    about = "Legendrian curves in CP^3 and their tropicalizations"
)]
pub struct Cli {
    /// Base field: q or fp:<prime>.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Series truncation window lo:hi.
    #[arg(long, global = true)]
    pub trunc: Option<String>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Bounding box x0:x1,y0:y1,z0:z1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub bbox: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Contact forms, contactomorphisms and the cubic family.
    #[command(subcommand)]
    Contact(ContactCmd),
    /// Legendrian curves on the quadric xy = zw.
    #[command(subcommand)]
    Quadric(QuadricCmd),
    /// Tropical polynomials and surfaces.
    #[command(subcommand)]
    Trop(TropCmd),
    /// Newton roots and tropical point sampling.
    #[command(subcommand)]
    Sample(SampleCmd),
    /// Necessary conditions on tropical curves.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Constructions of tropical legendrian curves.
    #[command(subcommand)]
    Build(BuildCmd),
    /// Triangulate the corner locus in a box and write OBJ plus a JSON mirror.
    ExportMesh(MeshArgs),
}

#[derive(Debug, Subcommand)]
pub enum ContactCmd {
    /// Evaluate a contact form on a curve given by four polynomials in s.
    Check {
        /// Coordinates x,y,z,w as polynomials in s.
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Coefficients p,q,r,a,b,c; the standard form when omitted.
        #[arg(long, allow_hyphen_values = true)]
        form: Option<String>,
    },
    /// The symplectic maps between three points and the standard points.
    Transform {
        /// Three points x,y,z[,w] separated by ';', coordinates Laurent polynomials in t.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// A point of the cubic family, or the family itself when t is omitted.
    CubicFamily {
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        mu: String,
        /// Use the family legendrian for the standard form.
        #[arg(long)]
        psi: bool,
    },
    /// Cubics of the family meeting the line y = p1 + q1 x, z = p2 + q2 x, w = p3 + q3 x.
    CubicsThroughLine {
        /// p1,q1,p2,q2,p3,q3
        #[arg(long, allow_hyphen_values = true)]
        line: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum QuadricCmd {
    /// Classify the legendrian curves of a contact form on the quadric.
    Classify {
        /// Coefficients p,q,r,a,b,c.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
}

#[derive(Debug, Args)]
pub struct PolyInput {
    /// Tropical polynomial, e.g. "max(3*x + 228, 263)".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "poly_file")]
    pub poly: Option<String>,
    /// File holding the polynomial as JSON or text.
    #[arg(long)]
    pub poly_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum TropCmd {
    /// The tropical cubic surface swept by the cubics through three points.
    Surface {
        /// Three points x,y,z[,w] separated by ';', coordinates Laurent polynomials in t.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Value and maximizing terms at a point.
    Eval {
        #[command(flatten)]
        input: PolyInput,
        /// Comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Cells of the corner locus inside --bbox.
    Cells {
        #[command(flatten)]
        input: PolyInput,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// (t, t^2 + mu(t - t^3), t^3, 1 - 3mu(t - t^3))
    L,
    /// (3t - t^3, 2t^2 + 2mu(t - t^3), 2t^3, 1 + t^2 - 2mu(t - t^3))
    Psi,
    /// psi with m = 2 mu
    PsiM,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coord {
    X,
    Y,
    Z,
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Run the whole budget.
    Fixed,
    /// Stop when the residual degree stagnates.
    Stop,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, value_enum, default_value = "psi-m")]
    pub family: Family,
    /// Family parameter as a series in t.
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    /// Move the curve by the map taking the standard points to these three points.
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum SampleCmd {
    /// Approximate a root of one coordinate and sample the curve there.
    Newton {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_enum)]
        coord: Coord,
        /// Initial guess, a Laurent polynomial in t.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long, default_value_t = 10)]
        budget: usize,
        #[arg(long, value_enum, default_value = "fixed")]
        mode: Mode,
    },
    /// Sample the curve at a given parameter value.
    Point {
        #[command(flatten)]
        curve: CurveArgs,
        /// Parameter value, a Laurent polynomial in t.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Sample at s = t^i over a range lo:hi.
    Sweep {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// Try monomial seeds base + c t^v over a grid and rank them by final residual.
    Scan {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_enum)]
        coord: Coord,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        base: String,
        /// Coefficient range lo:hi (zero skipped).
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Exponent range lo:hi.
        #[arg(long, allow_hyphen_values = true)]
        exps: String,
        #[arg(long, default_value_t = 10)]
        budget: usize,
        /// Report only the best entries.
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Tangency on both sides of the plane X + Y = Z.
    Tangency {
        /// Curve graph as JSON.
        #[arg(long)]
        curve: PathBuf,
    },
    /// Divisibility of line-like edges.
    Divisibility {
        #[arg(long)]
        curve: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildCmd {
    /// A tropical legendrian line of one of the three families, with its lift.
    Line {
        /// Family 1, 2 or 3.
        #[arg(long)]
        family: u8,
        /// Parameters A,B,X.
        #[arg(long, allow_hyphen_values = true)]
        abx: String,
    },
}

#[derive(Debug, Args)]
pub struct MeshArgs {
    #[command(flatten)]
    pub input: PolyInput,
    /// Marked points x,y,z;x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,
    /// Marked polyline x,y,z;x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    pub polyline: Option<String>,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_VAR} must be a positive integer, got {v:?}"
        ))
    })?;
    // a pool may already exist when run is called repeatedly in one process
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn emit(cfg: &JobConfig, v: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n";
    match &cfg.out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
        }
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let cfg = JobConfig {
        field: parse_field(&cli.field)?,
        window: cli.trunc.as_deref().map(parse_window).transpose()?,
        out: cli.out,
        bbox: cli.bbox.as_deref().map(parse_bbox).transpose()?,
    };
    match commands::dispatch(&cfg, cli.command)? {
        commands::Outcome::Document(v) => emit(&cfg, &v),
        commands::Outcome::Written(summary) => {
            let text =
                serde_json::to_string_pretty(&summary).expect("JSON values serialize") + "\n";
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

/// Run the command line and return the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
