use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("fiber class has finite order; the multiple d of [F] is not determined")]
    FiniteOrderFiber,

    #[error("lattice base vectors are linearly dependent")]
    DegenerateLattice,

    #[error("invalid logarithmic transform datum #{index}: {reason}")]
    InvalidZeta { index: usize, reason: String },

    #[error(
        "surface is not projective: the torsion points must sum to zero, \
         got {sum_u} + ({sum_v})*omega"
    )]
    NonProjective {
        sum_u: Box<BigRational>,
        sum_v: Box<BigRational>,
    },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("invalid surface model: {0}")]
    InvalidSurface(String),

    #[error("intersection numbers give a non-integral {quantity} (numerator {numerator})")]
    NonIntegral {
        quantity: &'static str,
        numerator: BigInt,
    },

    #[error("surface has no elliptic fibration data")]
    MissingFibration,

    #[error("surface has no Albanese degree form")]
    MissingAlbanese,

    #[error("Friedman-Morgan formula needs beta^2 = beta.F = 0, got beta^2 = {beta_sq}, beta.F = {beta_f}")]
    NotFiberLike { beta_sq: BigInt, beta_f: BigInt },

    #[error("unsupported surface for this operation: {0}")]
    Unsupported(String),

    #[error("parity failure: [2beta - k] = {0} is odd")]
    OddAlbanese(BigInt),

    #[error("t-power mismatch: {0} vs {1}")]
    TPowerMismatch(i64, i64),

    #[error("series is not palindromic under q <-> 1/q")]
    NotPalindromic,

    #[error("odd power x^{0} of q^(1/2) + q^(-1/2) in the expansion")]
    OddXPower(i64),

    #[error("negative power x^{0} has no Laurent polynomial expansion")]
    NegativeXPower(i64),

    #[error("exponent {0} is odd; expected an even power")]
    OddExponent(i64),

    #[error("series with leading coefficient zero cannot be inverted")]
    NotInvertible,

    #[error("arithmetic genus h = {0} < 1: the generating series is not a Laurent polynomial")]
    GenusTooSmall(BigInt),
}
