use clap::{Parser, Subcommand};
use spsw_core::invariants::{duality_check, euler_hilb, gw_series, gwpt_check, pt_generating};
use spsw_core::series::{bps_extract, u_transform};
use spsw_core::surface::numerical_invariants;
use spsw_core::swcalc::sw_elliptic;

use crate::document::{parse_int_vector, LoadedSurface};
use crate::error::CliError;
use crate::json::{ints, Int};
use crate::report::*;
use crate::reproduce::{default_expectations, parse_expectations, reproduce};

#[derive(Debug, Parser)]
#[command(
    name = "spsw",
    version,
    about = "Seiberg-Witten and stable-pair invariants of elliptic surfaces"
)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Truncation order for series in u.
    #[arg(long, global = true, default_value_t = 24)]
    pub order: i64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect a surface document.
    Surface {
        #[command(subcommand)]
        action: SurfaceAction,
    },
    /// Seiberg-Witten invariant of a fibre-like class.
    Sw(ClassArgs),
    /// Stable-pair generating series `t^m SW x^(2h-2)`.
    PtSeries(ClassArgs),
    /// BPS numbers of the stable-pair series.
    Bps(ClassArgs),
    /// Check the beta <-> k - beta duality.
    DualityCheck(ClassArgs),
    /// Compare the stable-pair series with the GW series in u.
    GwptCheck(ClassArgs),
    /// Euler numbers of symmetric products of a genus-h curve.
    EulerHilb {
        #[arg(long, allow_hyphen_values = true)]
        h: i64,
        #[arg(long)]
        n_max: u64,
    },
    /// Recompute the reference values and compare with the stored table.
    Reproduce {
        /// Only claims whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Replacement expectation table (JSON object id -> value).
        #[arg(long, hide = true)]
        expectations: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SurfaceAction {
    Show { file: String },
}

#[derive(Debug, clap::Args)]
pub struct ClassArgs {
    /// Surface document (JSON).
    pub file: String,
    /// Coefficients over the document's generators, e.g. `0,1,1,0,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(&cli, echo) {
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
        Ok(report) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                s.push('\n');
                s
            } else {
                report.to_string()
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: report.exit_code(),
            }
        }
    }
}

fn load_class(a: &ClassArgs) -> Result<(LoadedSurface, spsw_core::fgab::GroupElement), CliError> {
    let surface = LoadedSurface::from_path(&a.file)?;
    let coeffs = parse_int_vector("--beta", &a.beta)?;
    let beta = surface.class(&coeffs)?;
    Ok((surface, beta))
}

fn surface_summary(s: &LoadedSurface) -> Result<SurfaceSummary, CliError> {
    let m = &s.model;
    let coords = (0..m.h2.num_generators())
        .map(|i| m.h2.generator(i).map(|g| ElementJson::from(&g)))
        .collect::<Result<_, _>>()?;
    let form = &m.intersection_form;
    let fibration = m.fibration.as_ref().map(|f| FibrationJson {
        base_genus: f.base_genus,
        fiber: (&f.fiber).into(),
        multiple_fibers: f
            .multiple_fibers
            .iter()
            .map(|mf| MultipleFiberJson {
                m: mf.multiplicity,
                class: (&mf.class).into(),
            })
            .collect(),
    });
    let fiber_albanese = match (&m.fibration, &m.albanese_degree) {
        (Some(f), Some(_)) => Some(m.albanese(&f.fiber)?.into()),
        _ => None,
    };
    Ok(SurfaceSummary {
        name: m.name.clone(),
        generators: m.generator_names.clone(),
        h2: m.h2.to_string(),
        free_rank: m.h2.free_rank(),
        torsion_orders: ints(m.h2.torsion_orders()),
        generator_coordinates: coords,
        intersection_form: (0..form.rows()).map(|i| ints(form.row(i))).collect(),
        form_determinant: form.determinant()?.into(),
        canonical: (&m.canonical).into(),
        k_squared: m.pairing(&m.canonical, &m.canonical)?.into(),
        hodge: HodgeJson {
            q: m.hodge.q,
            p_g: m.hodge.p_g,
            chi_o: m.hodge.chi_o,
            c2: m.hodge.c2,
        },
        noether_defect: m.noether_defect()?.into(),
        fibration,
        albanese_degrees: m.albanese_degree.as_deref().map(ints),
        fiber_albanese_degree: fiber_albanese,
    })
}

pub fn execute(cli: &Cli, command: Vec<String>) -> Result<RunReport, CliError> {
    let result = match &cli.command {
        Command::Surface {
            action: SurfaceAction::Show { file },
        } => CommandResult::Surface(surface_summary(&LoadedSurface::from_path(file)?)?),
        Command::Sw(a) => {
            let (s, beta) = load_class(a)?;
            let inv = numerical_invariants(&s.model, &beta)?;
            let r = sw_elliptic(&s.model, &beta)?;
            CommandResult::Sw(SwReport {
                surface: s.model.name.clone(),
                beta: (&beta).into(),
                invariants: (&inv).into(),
                value: r.value.into(),
                solutions: r
                    .solutions
                    .iter()
                    .map(|x| SolutionJson {
                        d: (&x.d).into(),
                        a: x.a.clone(),
                    })
                    .collect(),
            })
        }
        Command::PtSeries(a) => {
            let (s, beta) = load_class(a)?;
            let inv = numerical_invariants(&s.model, &beta)?;
            let p = pt_generating(&s.model, &beta)?;
            CommandResult::PtSeries(PtSeriesReport {
                surface: s.model.name.clone(),
                beta: (&beta).into(),
                invariants: (&inv).into(),
                series: (&p).into(),
            })
        }
        Command::Bps(a) => {
            let (s, beta) = load_class(a)?;
            let spectrum = bps_extract(&pt_generating(&s.model, &beta)?)?;
            CommandResult::Bps(BpsReport::new(
                s.model.name.clone(),
                (&beta).into(),
                &spectrum,
            ))
        }
        Command::DualityCheck(a) => {
            let (s, beta) = load_class(a)?;
            let r = duality_check(&s.model, &beta)?;
            CommandResult::DualityCheck(DualityJson::new(s.model.name.clone(), (&beta).into(), &r))
        }
        Command::GwptCheck(a) => {
            let (s, beta) = load_class(a)?;
            let holds = gwpt_check(&s.model, &beta, cli.order)?;
            let pt = u_transform(&pt_generating(&s.model, &beta)?, cli.order)?;
            let gw = gw_series(&s.model, &beta, cli.order)?;
            CommandResult::GwptCheck(GwptReport {
                surface: s.model.name.clone(),
                beta: (&beta).into(),
                order: cli.order,
                pt_transformed: (&pt).into(),
                gw: (&gw).into(),
                holds,
            })
        }
        Command::EulerHilb { h, n_max } => CommandResult::EulerHilb(EulerReport {
            h: *h,
            values: (0..=*n_max).map(|n| (n, Int(euler_hilb(*h, n)))).collect(),
        }),
        Command::Reproduce {
            filter,
            expectations,
        } => {
            let expected = match expectations {
                None => default_expectations(),
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
                    parse_expectations(&text)?
                }
            };
            CommandResult::Reproduce(reproduce(&expected, filter.as_deref()))
        }
    };
    Ok(RunReport { command, result })
}
