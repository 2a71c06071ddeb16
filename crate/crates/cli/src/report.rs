//! Command results, as JSON documents and as human-readable text.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use spsw_core::fgab::GroupElement;
use spsw_core::invariants::{DualityDetails, DualityReport};
use spsw_core::series::{format_rational, BpsSpectrum, QLaurent, ULaurent, XPolynomial};
use spsw_core::surface::NumInv;

use crate::json::{ints, Int};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub free: Vec<Int>,
    pub torsion: Vec<Int>,
    pub text: String,
}

impl From<&GroupElement> for ElementJson {
    fn from(x: &GroupElement) -> Self {
        Self {
            free: ints(x.free_part()),
            torsion: ints(x.torsion_part()),
            text: x.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeJson {
    pub q: i64,
    pub p_g: i64,
    #[serde(rename = "chi_O")]
    pub chi_o: i64,
    pub c2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleFiberJson {
    pub m: u32,
    pub class: ElementJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationJson {
    pub base_genus: i64,
    pub fiber: ElementJson,
    pub multiple_fibers: Vec<MultipleFiberJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSummary {
    pub name: String,
    pub generators: Vec<String>,
    pub h2: String,
    pub free_rank: usize,
    pub torsion_orders: Vec<Int>,
    /// Coordinates of each generator in the canonical form of `h2`.
    pub generator_coordinates: Vec<ElementJson>,
    /// Gram matrix on the free canonical coordinates.
    pub intersection_form: Vec<Vec<Int>>,
    pub form_determinant: Int,
    pub canonical: ElementJson,
    pub k_squared: Int,
    pub hodge: HodgeJson,
    pub noether_defect: Int,
    pub fibration: Option<FibrationJson>,
    /// Albanese degree on the free canonical coordinates.
    pub albanese_degrees: Option<Vec<Int>>,
    /// `[F]`, the degree of the fibre over the Albanese curve.
    pub fiber_albanese_degree: Option<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub beta_sq: Int,
    pub beta_k: Int,
    pub k_sq: Int,
    pub h: Int,
    pub chi_beta: Int,
    pub m: Int,
    pub albanese_degree: Option<Int>,
}

impl From<&NumInv> for InvariantsJson {
    fn from(n: &NumInv) -> Self {
        Self {
            beta_sq: (&n.beta_sq).into(),
            beta_k: (&n.beta_k).into(),
            k_sq: (&n.k_sq).into(),
            h: (&n.h).into(),
            chi_beta: (&n.chi_beta).into(),
            m: (&n.m).into(),
            albanese_degree: n.alb_deg.as_ref().map(Int::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub d: Int,
    pub a: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwReport {
    pub surface: String,
    pub beta: ElementJson,
    pub invariants: InvariantsJson,
    pub value: Int,
    pub solutions: Vec<SolutionJson>,
}

/// A Laurent polynomial in `q^{1/2}`; `exp2` is twice the exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSeriesJson {
    pub t_power: i64,
    pub terms: Vec<(i64, Int)>,
    pub text: String,
}

impl From<&QLaurent> for QSeriesJson {
    fn from(p: &QLaurent) -> Self {
        Self {
            t_power: p.t_power(),
            terms: p.terms().map(|(e, c)| (e, c.into())).collect(),
            text: p.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XSeriesJson {
    pub t_power: i64,
    /// `(power of x, coefficient)`.
    pub terms: Vec<(i64, Int)>,
    pub text: String,
}

impl From<&XPolynomial> for XSeriesJson {
    fn from(p: &XPolynomial) -> Self {
        Self {
            t_power: p.t_power(),
            terms: p.terms().map(|(e, c)| (e, c.into())).collect(),
            text: p.to_string(),
        }
    }
}

/// Truncated series in `u`; rational coefficients as `p/q` strings, zero
/// coefficients omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct USeriesJson {
    pub t_power: i64,
    pub truncation: i64,
    pub terms: Vec<(i64, String)>,
    pub text: String,
}

impl From<&ULaurent> for USeriesJson {
    fn from(s: &ULaurent) -> Self {
        let terms = (s.min_order()..=s.trunc_order())
            .filter_map(|k| {
                let c = s.coeff(k)?;
                (c != Default::default()).then(|| (k, format_rational(&c)))
            })
            .collect();
        Self {
            t_power: s.t_power(),
            truncation: s.trunc_order(),
            terms,
            text: s.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PtSeriesReport {
    pub surface: String,
    pub beta: ElementJson,
    pub invariants: InvariantsJson,
    pub series: QSeriesJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpsReport {
    pub surface: String,
    pub beta: ElementJson,
    pub t_power: i64,
    /// `(g, n_g)` for the nonzero entries.
    pub entries: Vec<(i64, Int)>,
    pub text: String,
}

impl BpsReport {
    pub fn new(surface: String, beta: ElementJson, s: &BpsSpectrum) -> Self {
        Self {
            surface,
            beta,
            t_power: s.t_power,
            entries: s
                .entries
                .iter()
                .filter(|(_, n)| **n != Default::default())
                .map(|(g, n)| (*g, n.into()))
                .collect(),
            text: s.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityDetailsJson {
    pub beta_beta_minus_k: Int,
    pub m: Int,
    pub sw_beta: Option<Int>,
    pub sw_dual: Option<Int>,
    pub half_albanese: Option<Int>,
    pub exp_lhs: Int,
    pub exp_dual: Int,
    pub exp_shift: Int,
    pub exp_correction: Int,
    pub exponent_identity: bool,
    pub m_is_zero: bool,
    pub reason: Option<String>,
}

impl From<&DualityDetails> for DualityDetailsJson {
    fn from(d: &DualityDetails) -> Self {
        Self {
            beta_beta_minus_k: (&d.beta_beta_minus_k).into(),
            m: (&d.m).into(),
            sw_beta: d.sw_beta.as_ref().map(Int::from),
            sw_dual: d.sw_dual.as_ref().map(Int::from),
            half_albanese: d.half_albanese.as_ref().map(Int::from),
            exp_lhs: (&d.exp_lhs).into(),
            exp_dual: (&d.exp_dual).into(),
            exp_shift: (&d.exp_shift).into(),
            exp_correction: (&d.exp_correction).into(),
            exponent_identity: d.exponent_identity,
            m_is_zero: d.m_is_zero,
            reason: d.reason.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityJson {
    pub surface: String,
    pub beta: ElementJson,
    pub branch: String,
    pub lhs: Option<XSeriesJson>,
    pub rhs: Option<XSeriesJson>,
    pub holds: bool,
    pub details: DualityDetailsJson,
}

impl DualityJson {
    pub fn new(surface: String, beta: ElementJson, r: &DualityReport) -> Self {
        Self {
            surface,
            beta,
            branch: r.branch.as_str().into(),
            lhs: r.lhs.as_ref().map(XSeriesJson::from),
            rhs: r.rhs.as_ref().map(XSeriesJson::from),
            holds: r.holds,
            details: (&r.details).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwptReport {
    pub surface: String,
    pub beta: ElementJson,
    pub order: i64,
    pub pt_transformed: USeriesJson,
    pub gw: USeriesJson,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub h: i64,
    /// `(n, e(C^[n]))` for `n = 0..=n_max`.
    pub values: Vec<(u64, Int)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRow {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub status: String,
}

impl ClaimRow {
    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub claims: Vec<ClaimRow>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommandResult {
    Surface(SurfaceSummary),
    Sw(SwReport),
    PtSeries(PtSeriesReport),
    Bps(BpsReport),
    DualityCheck(DualityJson),
    GwptCheck(GwptReport),
    EulerHilb(EulerReport),
    Reproduce(ReproduceReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub result: CommandResult,
}

impl RunReport {
    /// True when a check was evaluated and did not hold. A duality check
    /// whose hypotheses fail is not a failure.
    pub fn failed(&self) -> bool {
        match &self.result {
            CommandResult::DualityCheck(d) => d.branch != "hypothesis_failure" && !d.holds,
            CommandResult::GwptCheck(g) => !g.holds,
            CommandResult::Reproduce(r) => r.failed > 0,
            _ => false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed() {
            1
        } else {
            0
        }
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn opt<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref()
        .map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn write_invariants(out: &mut String, inv: &InvariantsJson) {
    let _ = writeln!(
        out,
        "beta^2 = {}, beta.k = {}, k^2 = {}, h = {}, chi(beta) = {}, m = {}, [beta] = {}",
        inv.beta_sq,
        inv.beta_k,
        inv.k_sq,
        inv.h,
        inv.chi_beta,
        inv.m,
        opt(&inv.albanese_degree)
    );
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match &self.result {
            CommandResult::Surface(s) => {
                let _ = writeln!(out, "surface: {}", s.name);
                let _ = writeln!(out, "generators: {}", s.generators.join(", "));
                let _ = writeln!(out, "H^2 = {}", s.h2);
                for (g, c) in s.generators.iter().zip(&s.generator_coordinates) {
                    let _ = writeln!(out, "  {g} -> {}", c.text);
                }
                let rows: Vec<String> = s
                    .intersection_form
                    .iter()
                    .map(|r| format!("[{}]", join(r)))
                    .collect();
                let _ = writeln!(
                    out,
                    "intersection form: [{}] (det {})",
                    rows.join(", "),
                    s.form_determinant
                );
                let _ = writeln!(
                    out,
                    "canonical class: {}  (k^2 = {})",
                    s.canonical.text, s.k_squared
                );
                let h = &s.hodge;
                let _ = writeln!(
                    out,
                    "q = {}, p_g = {}, chi(O) = {}, c2 = {}",
                    h.q, h.p_g, h.chi_o, h.c2
                );
                let _ = writeln!(out, "noether defect: {}", s.noether_defect);
                if let Some(fib) = &s.fibration {
                    let _ = writeln!(
                        out,
                        "fibration over genus {}: F = {}",
                        fib.base_genus, fib.fiber.text
                    );
                    for mf in &fib.multiple_fibers {
                        let _ = writeln!(out, "  multiplicity {}: {}", mf.m, mf.class.text);
                    }
                }
                if let Some(a) = &s.albanese_degrees {
                    let _ = writeln!(out, "albanese degrees: [{}]", join(a));
                }
                if let Some(e) = &s.fiber_albanese_degree {
                    let _ = writeln!(out, "[F] = {e}");
                }
            }
            CommandResult::Sw(r) => {
                let _ = writeln!(out, "beta = {}", r.beta.text);
                write_invariants(&mut out, &r.invariants);
                for sol in &r.solutions {
                    let _ = writeln!(out, "  d = {}, a = [{}]", sol.d, join(&sol.a));
                }
                let _ = writeln!(out, "SW(beta) = {}", r.value);
            }
            CommandResult::PtSeries(r) => {
                let _ = writeln!(out, "beta = {}", r.beta.text);
                write_invariants(&mut out, &r.invariants);
                let _ = writeln!(out, "PT = {}", r.series.text);
            }
            CommandResult::Bps(r) => {
                let _ = writeln!(out, "beta = {}", r.beta.text);
                let _ = writeln!(out, "{}", r.text);
            }
            CommandResult::DualityCheck(r) => {
                let d = &r.details;
                let _ = writeln!(out, "beta = {}", r.beta.text);
                let _ = writeln!(out, "branch: {}", r.branch);
                let _ = writeln!(out, "beta(beta - k) = {}, m = {}", d.beta_beta_minus_k, d.m);
                let _ = writeln!(
                    out,
                    "SW(beta) = {}, SW(k - beta) = {}, [2beta - k]/2 = {}",
                    opt(&d.sw_beta),
                    opt(&d.sw_dual),
                    opt(&d.half_albanese)
                );
                let _ = writeln!(
                    out,
                    "exponents: lhs {}, dual {}, shift {}, correction {} (identity {})",
                    d.exp_lhs, d.exp_dual, d.exp_shift, d.exp_correction, d.exponent_identity
                );
                if let Some(reason) = &d.reason {
                    let _ = writeln!(out, "reason: {reason}");
                }
                let _ = writeln!(out, "lhs = {}", r.lhs.as_ref().map_or("-", |s| &s.text));
                let _ = writeln!(out, "rhs = {}", r.rhs.as_ref().map_or("-", |s| &s.text));
                let _ = writeln!(out, "holds: {}", r.holds);
            }
            CommandResult::GwptCheck(r) => {
                let _ = writeln!(out, "beta = {}", r.beta.text);
                let _ = writeln!(out, "PT(u) = {}", r.pt_transformed.text);
                let _ = writeln!(out, "GW(u) = {}", r.gw.text);
                let _ = writeln!(out, "holds to order u^{}: {}", r.order, r.holds);
            }
            CommandResult::EulerHilb(r) => {
                for (n, e) in &r.values {
                    let _ = writeln!(out, "e(C^[{n}]) = {e}");
                }
            }
            CommandResult::Reproduce(r) => {
                let width = r.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
                for c in &r.claims {
                    let _ = write!(out, "{:<4} {:<width$}  {}", c.status, c.id, c.computed);
                    if !c.passed() {
                        let _ = write!(out, "  (expected {})", c.expected);
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "{} passed, {} failed", r.passed, r.failed);
            }
        }
        f.write_str(&out)
    }
}
