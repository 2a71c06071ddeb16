//! Representations `target = d[F] + sum_i a_i [F_i]` with `d >= 0` and
//! `0 <= a_i < m_i`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::group::{elements_equal, GroupElement};
use crate::error::{Error, Result};

/// A multiple fibre `m F_i` of an elliptic fibration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipleFiber {
    pub multiplicity: u32,
    pub class: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberRepresentation {
    pub d: BigInt,
    pub a: Vec<u32>,
}

/// All representations of `target`, ordered by the residue tuple
/// `(a_1, ..., a_r)` lexicographically.
///
/// For every residue tuple the remainder `target - sum a_i [F_i]` must be a
/// nonnegative multiple of `[F]`; the multiple is read off one nonzero free
/// coordinate of `[F]` and then checked on all coordinates.
pub fn solve_fiber_representations(
    fiber: &GroupElement,
    multiple_fibers: &[MultipleFiber],
    target: &GroupElement,
) -> Result<Vec<FiberRepresentation>> {
    let pivot = fiber
        .free_part()
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(Error::FiniteOrderFiber)?;
    if multiple_fibers.iter().any(|mf| mf.multiplicity == 0) {
        return Err(Error::InvalidSurface(
            "multiple fibre of multiplicity 0".into(),
        ));
    }
    // group consistency up front, so an empty fibre list still reports a mismatch
    elements_equal(fiber, target)?;
    for mf in multiple_fibers {
        elements_equal(fiber, &mf.class)?;
    }

    let mut out = Vec::new();
    let mut a = vec![0u32; multiple_fibers.len()];
    loop {
        let mut rest = target.clone();
        for (ai, mf) in a.iter().zip(multiple_fibers) {
            if *ai > 0 {
                rest = rest.sub(&mf.class.scale(&BigInt::from(*ai)))?;
            }
        }
        let (d, r) = rest.free_part()[pivot].div_rem(&fiber.free_part()[pivot]);
        if r.is_zero() && !d.is_negative() && elements_equal(&fiber.scale(&d), &rest)? {
            out.push(FiberRepresentation { d, a: a.clone() });
        }

        // odometer, last index fastest
        let mut i = a.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            a[i] += 1;
            if a[i] < multiple_fibers[i].multiplicity {
                break;
            }
            a[i] = 0;
        }
    }
}
