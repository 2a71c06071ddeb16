//! Surface documents: JSON descriptions of a surface model.
//!
//! ```json
//! {"kind": "log_transform", "zetas": [{"m": 3, "u": 1, "v": 1}, ...]}
//! ```
//!
//! or an explicit presentation of `H^2` with its intersection form, Hodge
//! data and optional fibration / Albanese data.

use num_bigint::BigInt;
use serde::Deserialize;
use spsw_core::fgab::{GroupElement, IntMatrix};
use spsw_core::surface::{
    build_log_transform, FibrationPresentation, Hodge, LogTransformInput, SurfaceModel,
    SurfacePresentation, TorsionPoint,
};

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceDocument {
    LogTransform(LogTransformDoc),
    Explicit(ExplicitDoc),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogTransformDoc {
    #[serde(default)]
    pub name: Option<String>,
    pub zetas: Vec<ZetaDoc>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZetaDoc {
    pub m: u32,
    pub u: i64,
    pub v: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitDoc {
    #[serde(default)]
    pub name: Option<String>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub intersection_form: Vec<Vec<i64>>,
    pub hodge: HodgeDoc,
    #[serde(default)]
    pub fibration: Option<FibrationDoc>,
    #[serde(default)]
    pub albanese_degrees: Option<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeDoc {
    pub q: i64,
    pub p_g: i64,
    #[serde(rename = "chi_O")]
    pub chi_o: i64,
    pub c2: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationDoc {
    pub base_genus: i64,
    pub fiber: Vec<i64>,
    #[serde(default)]
    pub multiple_fibers: Vec<MultipleFiberDoc>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultipleFiberDoc {
    pub m: u32,
    pub class: Vec<i64>,
}

/// A parsed document together with its model.
#[derive(Clone, Debug)]
pub struct LoadedSurface {
    pub document: SurfaceDocument,
    pub model: SurfaceModel,
}

fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn check_len(field: &str, got: usize, n: usize) -> Result<(), CliError> {
    if got == n {
        Ok(())
    } else {
        Err(CliError::Schema(format!(
            "{field}: expected {n} entries, got {got}"
        )))
    }
}

fn matrix(field: &str, rows: &[Vec<i64>], cols: usize) -> Result<IntMatrix, CliError> {
    for (i, r) in rows.iter().enumerate() {
        check_len(&format!("{field}[{i}]"), r.len(), cols)?;
    }
    IntMatrix::from_rows(cols, rows).map_err(|e| CliError::Schema(format!("{field}: {e}")))
}

impl SurfaceDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
    }

    pub fn build(&self) -> Result<SurfaceModel, CliError> {
        match self {
            SurfaceDocument::LogTransform(d) => {
                let zetas = d
                    .zetas
                    .iter()
                    .map(|z| TorsionPoint {
                        m: z.m,
                        u: z.u,
                        v: z.v,
                    })
                    .collect();
                let mut model = build_log_transform(&LogTransformInput { zetas })?;
                if let Some(name) = &d.name {
                    model.name = name.clone();
                }
                Ok(model)
            }
            SurfaceDocument::Explicit(d) => {
                let n = d.generators.len();
                check_len("canonical", d.canonical.len(), n)?;
                check_len("intersection_form", d.intersection_form.len(), n)?;
                let fibration = match &d.fibration {
                    None => None,
                    Some(f) => {
                        check_len("fibration.fiber", f.fiber.len(), n)?;
                        let mut multiple = Vec::new();
                        for (i, mf) in f.multiple_fibers.iter().enumerate() {
                            check_len(
                                &format!("fibration.multiple_fibers[{i}].class"),
                                mf.class.len(),
                                n,
                            )?;
                            multiple.push((mf.m, big(&mf.class)));
                        }
                        Some(FibrationPresentation {
                            base_genus: f.base_genus,
                            fiber: big(&f.fiber),
                            multiple_fibers: multiple,
                        })
                    }
                };
                if let Some(a) = &d.albanese_degrees {
                    check_len("albanese_degrees", a.len(), n)?;
                }
                let hodge = Hodge::new(d.hodge.q, d.hodge.p_g, d.hodge.chi_o, d.hodge.c2)
                    .map_err(|e| CliError::Schema(format!("hodge: {e}")))?;
                let presentation = SurfacePresentation {
                    name: d.name.clone().unwrap_or_else(|| "explicit".into()),
                    generator_names: d.generators.clone(),
                    relations: matrix("relations", &d.relations, n)?,
                    canonical: big(&d.canonical),
                    intersection_form: matrix("intersection_form", &d.intersection_form, n)?,
                    hodge,
                    fibration,
                    albanese_degrees: d.albanese_degrees.as_deref().map(big),
                };
                Ok(SurfaceModel::from_presentation(presentation)?)
            }
        }
    }
}

impl LoadedSurface {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let document = SurfaceDocument::parse(text)?;
        let model = document.build()?;
        Ok(Self { document, model })
    }

    pub fn from_path(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
        Self::from_json(&text)
    }

    /// The class with the given coefficients over the generators. For
    /// logarithmic transforms the trailing `sigma` coefficient may be
    /// omitted.
    pub fn class(&self, coeffs: &[i64]) -> Result<GroupElement, CliError> {
        let n = self.model.generator_names.len();
        let mut c = coeffs.to_vec();
        if matches!(self.document, SurfaceDocument::LogTransform(_)) && c.len() + 1 == n {
            c.push(0);
        }
        if c.len() != n {
            return Err(CliError::Schema(format!(
                "--beta: expected {n} coefficients over [{}], got {}",
                self.model.generator_names.join(", "),
                coeffs.len()
            )));
        }
        Ok(self.model.class(&c)?)
    }
}

/// Parses `1,-2,0` into integers.
pub fn parse_int_vector(field: &str, s: &str) -> Result<Vec<i64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Schema(format!("{field}: not an integer: {t:?}")))
        })
        .collect()
}
