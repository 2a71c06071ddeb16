//! Stable-pair series, the `beta <-> k - beta` duality, the GW/PT change of
//! variables, and Euler numbers of Hilbert schemes of points on curves.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fgab::GroupElement;
use crate::series::{sin_power, u_transform, x_power_expand, QLaurent, ULaurent, XPolynomial};
use crate::surface::{numerical_invariants, NumInv, SurfaceModel};
use crate::swcalc::{fm_binomial, sw_elliptic};

fn to_i64(x: &BigInt, what: &str) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Unsupported(format!("{what} = {x} does not fit in 64 bits")))
}

/// `(t^m, SW(beta), 2h - 2)` shared by the PT and GW series.
fn series_data(s: &SurfaceModel, beta: &GroupElement) -> Result<(NumInv, BigInt, i64)> {
    let inv = numerical_invariants(s, beta)?;
    let sw = sw_elliptic(s, beta)?.value;
    let t = to_i64(&inv.m, "point-insertion count")?;
    Ok((inv, sw, t))
}

/// `t^m SW(beta) x^{2h-2}` expanded in `q^{1/2}`, with `m = beta(beta-k)/2`.
pub fn pt_generating(s: &SurfaceModel, beta: &GroupElement) -> Result<QLaurent> {
    let (inv, sw, t) = series_data(s, beta)?;
    if inv.h < BigInt::from(1) {
        return Err(Error::GenusTooSmall(inv.h));
    }
    let e = (&inv.h - 1u32) * 2u32;
    let e = e
        .to_u32()
        .ok_or_else(|| Error::Unsupported(format!("x-power {e} is too large")))?;
    Ok(x_power_expand(e).scale(&sw).with_t_power(t))
}

/// `t^m SW(beta) (2 sin(u/2))^{2h-2}` through order `u^trunc`. Any genus is
/// allowed; `h <= 0` gives a pole at `u = 0`.
pub fn gw_series(s: &SurfaceModel, beta: &GroupElement, trunc: i64) -> Result<ULaurent> {
    let (inv, sw, t) = series_data(s, beta)?;
    let e = to_i64(&((&inv.h - 1u32) * 2u32), "2h - 2")?;
    Ok(sin_power(e, trunc)?.scale(&sw.into()).with_t_power(t))
}

/// Compares the transformed PT series against the GW series to order
/// `u^trunc`. Only `h >= 1` is supported: below that the PT side is not a
/// Laurent polynomial.
pub fn gwpt_check(s: &SurfaceModel, beta: &GroupElement, trunc: i64) -> Result<bool> {
    let pt = pt_generating(s, beta)?;
    let lhs = u_transform(&pt, trunc)?;
    let rhs = gw_series(s, beta, trunc)?;
    Ok(lhs.t_power() == rhs.t_power() && lhs == rhs)
}

/// Coefficient of `q^n` in `(1 - q)^{2h-2}`; equal to the Euler number of
/// `C^{[n]}` for a smooth curve of genus `h`.
pub fn euler_hilb(h: i64, n: u64) -> BigInt {
    let v = fm_binomial(&BigInt::from(2 * h - 2), n);
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualityBranch {
    /// `beta(beta - k) < 0`: both invariants vanish.
    NegativeCase,
    /// `beta(beta - k) = 0` and `q = 1`.
    MainCase,
    HypothesisFailure,
}

impl DualityBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            DualityBranch::NegativeCase => "negative_case",
            DualityBranch::MainCase => "main_case",
            DualityBranch::HypothesisFailure => "hypothesis_failure",
        }
    }
}

/// Per-term values of the duality identity. Exponents are powers of `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityDetails {
    /// `beta(beta - k)`.
    pub beta_beta_minus_k: BigInt,
    pub m: BigInt,
    pub sw_beta: Option<BigInt>,
    pub sw_dual: Option<BigInt>,
    /// `[2beta - k] / 2`.
    pub half_albanese: Option<BigInt>,
    /// `beta(beta + k)`, the exponent on the left.
    pub exp_lhs: BigInt,
    /// `(k - beta)(2k - beta)`, the exponent of the dual series.
    pub exp_dual: BigInt,
    /// `2k(2beta - k)`, the shift applied to the dual series.
    pub exp_shift: BigInt,
    /// `2 beta^2`, the exponent of the correction term.
    pub exp_correction: BigInt,
    /// `exp_dual + exp_shift = exp_lhs = exp_correction`.
    pub exponent_identity: bool,
    /// The vanishing for `m > 0` is vacuous here: `m = 0` in the main case.
    pub m_is_zero: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub branch: DualityBranch,
    /// Both sides in the `x` basis; the shift `x^{2k(2beta-k)}` can be a
    /// negative power. `None` when the hypotheses fail.
    pub lhs: Option<XPolynomial>,
    pub rhs: Option<XPolynomial>,
    pub holds: bool,
    pub details: DualityDetails,
}

/// Checks `PT_beta = PT_{k-beta} x^{2k(2beta-k)} + [2beta-k]/2 x^{2beta^2}`
/// (no point insertions) for surfaces with `p_g = 0`.
pub fn duality_check(s: &SurfaceModel, beta: &GroupElement) -> Result<DualityReport> {
    if s.hodge.p_g != 0 {
        return Err(Error::Unsupported(format!(
            "duality needs p_g = 0, surface has p_g = {}",
            s.hodge.p_g
        )));
    }
    let k = &s.canonical;
    let dual = k.sub(beta)?;
    let two = BigInt::from(2);
    let two_beta_minus_k = beta.scale(&two).sub(k)?;
    let two_k_minus_beta = k.scale(&two).sub(beta)?;

    let inv = numerical_invariants(s, beta)?;
    let bbk = inv.beta_dot_beta_minus_k();
    let exp_lhs = &inv.beta_sq + &inv.beta_k;
    let exp_dual = s.pairing(&dual, &two_k_minus_beta)?;
    let exp_shift = &two * s.pairing(k, &two_beta_minus_k)?;
    let exp_correction = &two * &inv.beta_sq;
    let mut details = DualityDetails {
        beta_beta_minus_k: bbk.clone(),
        m: inv.m.clone(),
        exponent_identity: &exp_dual + &exp_shift == exp_lhs && exp_lhs == exp_correction,
        m_is_zero: inv.m.is_zero(),
        exp_lhs,
        exp_dual,
        exp_shift,
        exp_correction,
        ..Default::default()
    };

    if bbk.is_negative() {
        // Point insertions would be needed to cut the moduli space down to
        // dimension zero; without them both invariants vanish.
        let zero = XPolynomial::zero(0);
        return Ok(DualityReport {
            branch: DualityBranch::NegativeCase,
            lhs: Some(zero.clone()),
            rhs: Some(zero),
            holds: true,
            details,
        });
    }
    if !bbk.is_zero() || s.hodge.q != 1 {
        details.reason = Some(if bbk.is_zero() {
            format!("needs q = 1, surface has q = {}", s.hodge.q)
        } else {
            format!("needs beta(beta - k) <= 0, got {bbk}")
        });
        return Ok(DualityReport {
            branch: DualityBranch::HypothesisFailure,
            lhs: None,
            rhs: None,
            holds: false,
            details,
        });
    }

    let sw_beta = sw_elliptic(s, beta)?.value;
    let sw_dual = sw_elliptic(s, &dual)?.value;
    let alb = s.albanese(&two_beta_minus_k)?;
    if (&alb % &two) != BigInt::zero() {
        return Err(Error::OddAlbanese(alb));
    }
    let half_alb = &alb / &two;

    let e = |x: &BigInt, what| to_i64(x, what);
    let lhs = XPolynomial::monomial(sw_beta.clone(), e(&details.exp_lhs, "exponent")?, 0);
    let rhs = XPolynomial::monomial(sw_dual.clone(), e(&details.exp_dual, "exponent")?, 0)
        .mul(&XPolynomial::monomial(
            BigInt::from(1),
            e(&details.exp_shift, "exponent")?,
            0,
        ))
        .add(&XPolynomial::monomial(
            half_alb.clone(),
            e(&details.exp_correction, "exponent")?,
            0,
        ))?;
    details.sw_beta = Some(sw_beta);
    details.sw_dual = Some(sw_dual);
    details.half_albanese = Some(half_alb);
    Ok(DualityReport {
        branch: DualityBranch::MainCase,
        holds: lhs == rhs,
        lhs: Some(lhs),
        rhs: Some(rhs),
        details,
    })
}
