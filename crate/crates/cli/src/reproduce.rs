//! Golden harness: recomputes reference values from embedded surface
//! documents and compares each value against a table of expectations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use spsw_core::fgab::GroupElement;
use spsw_core::invariants::{duality_check, gwpt_check, pt_generating, DualityBranch};
use spsw_core::series::bps_extract;
use spsw_core::surface::{canonical_class, numerical_invariants, SurfaceModel};
use spsw_core::swcalc::{sw_elliptic, wall_crossing_delta};

use crate::document::LoadedSurface;
use crate::error::CliError;
use crate::report::{ClaimRow, ReproduceReport};

pub const RATIONAL_ELLIPTIC: &str = include_str!("../fixtures/rational_elliptic.json");
pub const DOLGACHEV: &str = include_str!("../fixtures/dolgachev.json");
pub const HYPERELLIPTIC: &str = include_str!("../fixtures/hyperelliptic.json");
pub const TRIPLE_FIBRES: &str = include_str!("../fixtures/triple_fibres.json");
pub const NEGATIVE_CASE: &str = include_str!("../fixtures/negative_case.json");
pub const EXPECTED: &str = include_str!("../fixtures/expected.json");

pub type Expectations = BTreeMap<String, String>;

pub fn parse_expectations(text: &str) -> Result<Expectations, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(format!("expectations: {e}")))
}

pub fn default_expectations() -> Expectations {
    parse_expectations(EXPECTED).expect("embedded expectations are valid")
}

type Computed = Result<String, CliError>;

fn load(text: &str) -> Result<SurfaceModel, CliError> {
    Ok(LoadedSurface::from_json(text)?.model)
}

fn sw(s: &SurfaceModel, beta: &GroupElement) -> Computed {
    Ok(sw_elliptic(s, beta)?.value.to_string())
}

/// `label` when `s.class(coeffs)` equals `x`, otherwise the coordinates of
/// `x` so the mismatch is visible.
fn named(s: &SurfaceModel, x: &GroupElement, coeffs: &[i64], label: &str) -> Computed {
    Ok(if *x == s.class(coeffs)? {
        label.to_string()
    } else {
        x.to_string()
    })
}

/// The canonical class must agree with the one forced by the fibration.
fn canonical_from_fibration(s: &SurfaceModel) -> Result<GroupElement, CliError> {
    let fib = s
        .fibration
        .as_ref()
        .ok_or(spsw_core::Error::MissingFibration)?;
    let k = canonical_class(fib.base_genus, s.hodge.chi_o, fib)?;
    if k != s.canonical {
        return Err(CliError::Input(format!(
            "canonical class {} disagrees with the fibration formula {k}",
            s.canonical
        )));
    }
    Ok(k)
}

fn elliptic_over_line(out: &mut Vec<(String, Computed)>) {
    let push = |out: &mut Vec<(String, Computed)>, id: &str, v: Computed| out.push((id.into(), v));
    match load(RATIONAL_ELLIPTIC) {
        Err(e) => push(out, "rational_elliptic", Err(e)),
        Ok(s) => {
            let k = canonical_from_fibration(&s);
            push(
                out,
                "rational_elliptic.canonical",
                k.and_then(|k| named(&s, &k, &[-1], "-F")),
            );
            push(
                out,
                "rational_elliptic.sw_6k",
                sw(&s, &s.canonical.scale(&BigInt::from(6))),
            );
        }
    }
    match load(DOLGACHEV) {
        Err(e) => push(out, "dolgachev", Err(e)),
        Ok(s) => {
            let k = canonical_from_fibration(&s);
            push(
                out,
                "dolgachev.canonical",
                k.and_then(|k| named(&s, &k, &[-1, 1, 2], "-F + F1 + 2F2")),
            );
            let beta = s.canonical.scale(&BigInt::from(6));
            push(out, "dolgachev.sw_6k", sw(&s, &beta));
            push(
                out,
                "dolgachev.chi_beta",
                numerical_invariants(&s, &beta)
                    .map(|n| n.chi_beta.to_string())
                    .map_err(Into::into),
            );
            push(
                out,
                "dolgachev.wall_crossing",
                wall_crossing_delta(&s, &beta)
                    .map(|d| d.to_string())
                    .map_err(Into::into),
            );
        }
    }
}

fn hyperelliptic(out: &mut Vec<(String, Computed)>) {
    let s = match load(HYPERELLIPTIC) {
        Ok(s) => s,
        Err(e) => return out.push(("hyperelliptic".into(), Err(e))),
    };
    let f = s.class(&[1, 0]).expect("fixture has two generators");
    for d in 0..=5i64 {
        out.push((
            format!("hyperelliptic.sw.d{d}"),
            sw(&s, &f.scale(&BigInt::from(d))),
        ));
    }
    let all_zero = || -> Result<String, CliError> {
        let k = &s.canonical;
        let mut vals = vec![s.pairing(k, k)?, BigInt::from(s.hodge.c2), s.albanese(k)?];
        for d in 0..=5i64 {
            let beta = f.scale(&BigInt::from(d));
            vals.extend([
                s.pairing(&beta, &beta)?,
                s.pairing(&beta, k)?,
                s.albanese(&beta)?,
            ]);
        }
        Ok(if vals.iter().all(|v| *v == BigInt::from(0)) {
            "beta^2 = beta.k = k^2 = c2 = [beta] = [k] = 0".into()
        } else {
            format!("nonzero among {vals:?}")
        })
    };
    out.push(("hyperelliptic.invariants".into(), all_zero()));
}

fn triple_fibres(out: &mut Vec<(String, Computed)>) {
    let s = match load(TRIPLE_FIBRES) {
        Ok(s) => s,
        Err(e) => return out.push(("triple".into(), Err(e))),
    };
    out.push(("triple.h2".into(), Ok(s.h2.to_string())));
    out.push((
        "triple.canonical".into(),
        named(&s, &s.canonical, &[0, 2, 0, 0, 0, 0], "2F1"),
    ));
    let relations = || -> Computed {
        let fib = s
            .fibration
            .as_ref()
            .ok_or(spsw_core::Error::MissingFibration)?;
        let mut ok = fib.multiple_fibers.len() == 4;
        for mf in &fib.multiple_fibers {
            ok &= mf.multiplicity == 3 && mf.class.scale(&BigInt::from(3)) == fib.fiber;
        }
        Ok(if ok {
            "3F1 = 3F2 = 3F3 = 3F4 = F".into()
        } else {
            "relations differ".into()
        })
    };
    out.push(("triple.relations".into(), relations()));
    let fiber = s.fibration.as_ref().map(|f| f.fiber.clone());
    out.push((
        "triple.lattice_index".into(),
        match fiber {
            Some(f) => s.albanese(&f).map(|v| v.to_string()).map_err(Into::into),
            None => Err(spsw_core::Error::MissingFibration.into()),
        },
    ));

    let grid: Vec<(String, GroupElement)> = (0..=6)
        .flat_map(|n| (0..=2).map(move |e| (n, e)))
        .map(|(n, e)| {
            (
                format!("n{n}e{e}"),
                s.class(&[0, n, e, 0, 0, 0]).expect("six generators"),
            )
        })
        .collect();
    for (key, beta) in &grid {
        out.push((
            format!("triple.alb.{key}"),
            s.albanese(beta).map(|v| v.to_string()).map_err(Into::into),
        ));
    }
    for (key, beta) in &grid {
        out.push((format!("triple.sw.{key}"), sw(&s, beta)));
    }
    for (key, beta) in &grid {
        let v = duality_check(&s, beta).map_err(CliError::from).map(|r| {
            if r.branch == DualityBranch::MainCase && r.holds && r.details.exponent_identity {
                "holds".to_string()
            } else {
                format!(
                    "{} holds={} exponents={}",
                    r.branch.as_str(),
                    r.holds,
                    r.details.exponent_identity
                )
            }
        });
        out.push((format!("triple.duality.{key}"), v));
    }
    for (key, beta) in &grid {
        let v = pt_generating(&s, beta)
            .and_then(|p| bps_extract(&p))
            .map(|b| b.to_string())
            .map_err(Into::into);
        out.push((format!("triple.bps.{key}"), v));
    }
    for (key, beta) in &grid {
        let v = gwpt_check(&s, beta, 24)
            .map(|b| b.to_string())
            .map_err(Into::into);
        out.push((format!("triple.gwpt.{key}"), v));
    }
}

fn custom(out: &mut Vec<(String, Computed)>) {
    let v = load(NEGATIVE_CASE).and_then(|s| {
        let x = s.class(&[1])?;
        let r = duality_check(&s, &x)?;
        let zero = r.lhs.as_ref().is_some_and(|l| l.is_zero())
            && r.rhs.as_ref().is_some_and(|r| r.is_zero());
        Ok(if zero && r.holds {
            r.branch.as_str().to_string()
        } else {
            format!("{} with nonzero sides", r.branch.as_str())
        })
    });
    out.push(("negative_square.duality".into(), v));
}

/// Every computed claim, in a fixed order.
pub fn compute_claims() -> Vec<(String, Computed)> {
    let mut out = Vec::new();
    elliptic_over_line(&mut out);
    hyperelliptic(&mut out);
    triple_fibres(&mut out);
    custom(&mut out);
    out
}

/// Compares the computed claims whose id starts with `filter` against
/// `expected`. Expectations without a computed value also fail.
pub fn reproduce(expected: &Expectations, filter: Option<&str>) -> ReproduceReport {
    let keep = |id: &str| filter.is_none_or(|f| id.starts_with(f));
    let computed = compute_claims();
    let mut claims = Vec::new();
    for (id, value) in &computed {
        if !keep(id) {
            continue;
        }
        let computed = match value {
            Ok(v) => v.clone(),
            Err(e) => format!("error: {e}"),
        };
        let exp = expected
            .get(id)
            .cloned()
            .unwrap_or_else(|| "<missing>".into());
        let status = if value.is_ok() && exp == computed {
            "PASS"
        } else {
            "FAIL"
        };
        claims.push(ClaimRow {
            id: id.clone(),
            expected: exp,
            computed,
            status: status.into(),
        });
    }
    for (id, exp) in expected {
        if keep(id) && !computed.iter().any(|(c, _)| c == id) {
            claims.push(ClaimRow {
                id: id.clone(),
                expected: exp.clone(),
                computed: "<not computed>".into(),
                status: "FAIL".into(),
            });
        }
    }
    let passed = claims.iter().filter(|c| c.passed()).count();
    let failed = claims.len() - passed;
    ReproduceReport {
        claims,
        passed,
        failed,
    }
}
