//! Options shared by all verbs: base field, truncation window, output path and box.

use std::path::PathBuf;

use num_rational::BigRational;
use tropleg_core::contact::ProjectivePoint;
use tropleg_core::tropical::{parse_rational, BoundingBox};
use tropleg_core::{FieldKind, Poly, PrimeField, RatFun, Scalar, Series, Window};

use crate::error::CliError;
use crate::expr::{parse_laurent, parse_range, Terms};

/// Exponent kept when a rational function is expanded without an explicit window.
pub const DEFAULT_FLOOR: i64 = -400;

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub field: FieldKind,
    pub window: Option<Window>,
    pub out: Option<PathBuf>,
    pub bbox: Option<BoundingBox>,
}

pub fn parse_field(s: &str) -> Result<FieldKind, CliError> {
    match s.trim() {
        "q" | "Q" => Ok(FieldKind::Rational),
        other => {
            let p = other
                .strip_prefix("fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| {
                    CliError::Usage(format!("--field expects q or fp:<prime>, got {s:?}"))
                })?;
            PrimeField::new(p)
                .map(|k| k.kind())
                .map_err(|e| CliError::Usage(format!("--field fp:{p}: {e}")))
        }
    }
}

pub fn parse_window(s: &str) -> Result<Window, CliError> {
    let (lo, hi) = parse_range(s).map_err(|e| CliError::Usage(format!("--trunc: {e}")))?;
    Window::new(lo, hi).map_err(|e| CliError::Usage(format!("--trunc: {e}")))
}

/// `x0:x1,y0:y1,z0:z1` with rational bounds.
pub fn parse_bbox(s: &str) -> Result<BoundingBox, CliError> {
    let bad = || CliError::Usage(format!("--bbox expects x0:x1,y0:y1,z0:z1, got {s:?}"));
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut lo: Vec<BigRational> = Vec::new();
    let mut hi: Vec<BigRational> = Vec::new();
    for p in parts {
        let (a, b) = p.split_once(':').ok_or_else(bad)?;
        lo.push(parse_rational(a).ok_or_else(bad)?);
        hi.push(parse_rational(b).ok_or_else(bad)?);
    }
    let arr = |v: Vec<BigRational>| -> [BigRational; 3] { v.try_into().unwrap() };
    BoundingBox::new(arr(lo), arr(hi)).map_err(|e| CliError::Usage(format!("--bbox: {e}")))
}

impl JobConfig {
    pub fn terms(&self, input: &str, var: char) -> Result<Vec<(i64, Scalar)>, CliError> {
        let t: Terms = parse_laurent(input, var).map_err(|e| CliError::Usage(e.to_string()))?;
        t.into_iter()
            .map(|(e, c)| {
                self.field
                    .rational(&c)
                    .map(|c| (e, c))
                    .map_err(|err| CliError::Usage(format!("{input:?} in {}: {err}", self.field)))
            })
            .collect()
    }

    pub fn scalar(&self, input: &str) -> Result<Scalar, CliError> {
        let q = parse_rational(input)
            .ok_or_else(|| CliError::Usage(format!("expected a rational number, got {input:?}")))?;
        self.field
            .rational(&q)
            .map_err(|e| CliError::Usage(format!("{input:?} in {}: {e}", self.field)))
    }

    pub fn scalars<const N: usize>(&self, input: &str) -> Result<[Scalar; N], CliError> {
        let v = input
            .split(',')
            .map(|x| self.scalar(x))
            .collect::<Result<Vec<_>, _>>()?;
        v.try_into().map_err(|_| {
            CliError::Usage(format!(
                "expected {N} comma-separated numbers, got {input:?}"
            ))
        })
    }

    fn zero(&self) -> Scalar {
        self.field.int(0)
    }

    /// A polynomial in `var`; negative powers are rejected.
    pub fn poly(&self, input: &str, var: char) -> Result<Poly<Scalar>, CliError> {
        let terms = self.terms(input, var)?;
        if terms.iter().any(|(e, _)| *e < 0) {
            return Err(CliError::Usage(format!(
                "{input:?} has a negative power of {var}"
            )));
        }
        let n = terms.first().map_or(0, |(e, _)| *e as usize);
        let mut v = vec![self.zero(); n + 1];
        for (e, c) in terms {
            v[e as usize] = c;
        }
        Ok(Poly::from_coeffs(v))
    }

    /// A Laurent polynomial in `t` as a rational function.
    pub fn ratfun(&self, input: &str) -> Result<RatFun, CliError> {
        let terms = self.terms(input, 't')?;
        let low = terms.last().map_or(0, |(e, _)| (*e).min(0));
        let n = terms.first().map_or(0, |(e, _)| (*e - low) as usize);
        let mut num = vec![self.zero(); n + 1];
        for (e, c) in terms {
            num[(e - low) as usize] = c;
        }
        let mut den = vec![self.zero(); (-low) as usize + 1];
        den[(-low) as usize] = self.field.int(1);
        RatFun::new(Poly::from_coeffs(num), Poly::from_coeffs(den))
            .map_err(|e| CliError::Usage(e.to_string()))
    }

    /// A series in `t`, restricted to the window when one is set.
    pub fn series(&self, input: &str) -> Result<Series, CliError> {
        let s = Series::from_terms(self.terms(input, 't')?, None);
        self.restrict(s)
    }

    pub fn restrict(&self, s: Series) -> Result<Series, CliError> {
        match self.window {
            Some(w) => s.restrict(w).map_err(|e| CliError::Domain(e.to_string())),
            None => Ok(s),
        }
    }

    /// Expansion floor for rational functions.
    pub fn floor(&self) -> i64 {
        self.window.map_or(DEFAULT_FLOOR, |w| w.lo)
    }

    /// Points `x,y,z[,w];...` with coordinates Laurent polynomials in `t`.
    pub fn points(&self, input: &str) -> Result<Vec<ProjectivePoint<RatFun>>, CliError> {
        input
            .split(';')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                let mut c = p
                    .split(',')
                    .map(|x| self.ratfun(x))
                    .collect::<Result<Vec<_>, _>>()?;
                if c.len() == 3 {
                    c.push(RatFun::constant(self.field.int(1)));
                }
                let [x, y, z, w]: [RatFun; 4] = c.try_into().map_err(|_| {
                    CliError::Usage(format!("a point needs 3 or 4 coordinates, got {p:?}"))
                })?;
                Ok(ProjectivePoint::new(x, y, z, w))
            })
            .collect()
    }

    pub fn three_points(&self, input: &str) -> Result<[ProjectivePoint<RatFun>; 3], CliError> {
        self.points(input)?.try_into().map_err(|_| {
            CliError::Usage(format!(
                "expected three points separated by ';', got {input:?}"
            ))
        })
    }
}
