//! Seiberg-Witten invariants of elliptic fibrations and the scalar
//! wall-crossing term for surfaces with `p_g = 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fgab::{solve_fiber_representations, FiberRepresentation, GroupElement};
use crate::surface::{numerical_invariants, SurfaceModel};

/// Binomial coefficient for arbitrary integer top:
/// `binom(a, b) = a (a-1) ... (a-b+1) / b!`.
pub fn fm_binomial(a: &BigInt, b: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwResult {
    pub value: BigInt,
    pub solutions: Vec<FiberRepresentation>,
}

/// Friedman-Morgan sum
/// `SW(beta) = sum (-1)^d binom(2g - 2 + chi(O_S), d)` over all
/// `d[F] + sum a_i [F_i] = beta` with `d >= 0`, `0 <= a_i < m_i`.
///
/// Requires `beta^2 = beta.[F] = 0`.
pub fn sw_elliptic(s: &SurfaceModel, beta: &GroupElement) -> Result<SwResult> {
    let fib = s.fibration.as_ref().ok_or(Error::MissingFibration)?;
    let beta_sq = s.pairing(beta, beta)?;
    let beta_f = s.pairing(beta, &fib.fiber)?;
    if !beta_sq.is_zero() || !beta_f.is_zero() {
        return Err(Error::NotFiberLike { beta_sq, beta_f });
    }
    let top = BigInt::from(2 * fib.base_genus - 2 + s.hodge.chi_o);
    let solutions = solve_fiber_representations(&fib.fiber, &fib.multiple_fibers, beta)?;
    let mut value = BigInt::zero();
    for rep in &solutions {
        let d = rep.d.to_u64().ok_or_else(|| {
            Error::Unsupported(format!("fibre multiple d = {} is too large", rep.d))
        })?;
        let term = fm_binomial(&top, d);
        if d.is_odd() {
            value -= term;
        } else {
            value += term;
        }
    }
    Ok(SwResult { value, solutions })
}

/// Scalar part of `P^+(beta) - P^-(beta)` for `p_g = 0`.
///
/// For `q = 0` the Picard variety is a point and only `s_0 = 1` can
/// contribute, which it does when `chi(beta) >= 1`. For `q = 1` the degree-2
/// part is `s_1(p_! P) = [2beta - k] / 2`, contributing when `chi(beta) >= 0`.
pub fn wall_crossing_delta(s: &SurfaceModel, beta: &GroupElement) -> Result<BigInt> {
    if s.hodge.p_g != 0 {
        return Err(Error::Unsupported(format!(
            "wall-crossing needs p_g = 0, surface has p_g = {}",
            s.hodge.p_g
        )));
    }
    let inv = numerical_invariants(s, beta)?;
    match s.hodge.q {
        0 => Ok(if inv.chi_beta >= BigInt::one() {
            BigInt::one()
        } else {
            BigInt::zero()
        }),
        1 => {
            let alb = s.albanese(&beta.scale(&BigInt::from(2)).sub(&s.canonical)?)?;
            let (half, rem) = alb.div_rem(&BigInt::from(2));
            if !rem.is_zero() {
                return Err(Error::OddAlbanese(alb));
            }
            Ok(if inv.chi_beta.is_negative() {
                BigInt::zero()
            } else {
                half
            })
        }
        q => Err(Error::Unsupported(format!(
            "wall-crossing implemented for q <= 1, got q = {q}"
        ))),
    }
}
