//! Index of a plane lattice in a rational refinement of it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

pub type PlaneVector = (BigRational, BigRational);

/// `[Gamma' : Gamma]` where `Gamma` is spanned by `base` and `Gamma'` by
/// `base` together with `extra_generators`.
///
/// All vectors are rewritten in the coordinates of `base`, so `Gamma` becomes
/// `Z^2`. After clearing a common denominator `L`, the Smith diagonal
/// `d_1, d_2` of the generator matrix gives `[Z^2 : L Gamma'] = d_1 d_2`, and
/// the index is `L^2 / (d_1 d_2)`.
pub fn lattice_index(base: &[PlaneVector; 2], extra_generators: &[PlaneVector]) -> Result<BigInt> {
    let [(ax, ay), (bx, by)] = base;
    let det = ax * by - bx * ay;
    if det.is_zero() {
        return Err(Error::DegenerateLattice);
    }
    let in_base = |(vx, vy): &PlaneVector| -> [BigRational; 2] {
        [(vx * by - bx * vy) / &det, (ax * vy - vx * ay) / &det]
    };

    let one = BigRational::one();
    let zero = BigRational::zero();
    let mut coords = vec![[one.clone(), zero.clone()], [zero, one]];
    coords.extend(extra_generators.iter().map(in_base));

    let denom = coords
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let rows: Vec<Vec<BigInt>> = coords
        .iter()
        .map(|c| c.iter().map(|x| (x * &denom).to_integer()).collect())
        .collect();
    let m = IntMatrix::from_rows(2, &rows)?;
    let diag = smith_normal_form(&m).diagonal();
    let covolume = &diag[0] * &diag[1];
    let (index, rem) = (&denom * &denom).div_rem(&covolume);
    if !rem.is_zero() {
        return Err(Error::Consistency(format!(
            "lattice index {denom}^2 / {covolume} is not an integer"
        )));
    }
    Ok(index)
}
