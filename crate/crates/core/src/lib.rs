//! Exact enumerative invariants of surfaces.
//!
//! The crate computes Seiberg-Witten invariants of elliptic fibrations
//! (including logarithmic transforms of `P^1 x F`), the stable-pair
//! generating series they determine, BPS spectra, the GW/PT change of
//! variables `-q = e^{iu}`, and the duality identity relating the classes
//! `beta` and `k - beta` on surfaces with `p_g = 0`.
//!
//! Everything is exact: integers are arbitrary precision and series
//! coefficients are integers or rationals.
//!
//! Module map:
//! - [`fgab`]: integer matrices, Smith normal form, finitely generated abelian
//!   groups, fiber-class representations, plane lattice indices.
//! - [`surface`]: numerical surface models and curve-class invariants.
//! - [`swcalc`]: Friedman-Morgan sums and scalar wall-crossing.
//! - [`series`]: Laurent polynomials in `q^{1/2}`, truncated `u`-series, BPS
//!   extraction.
//! - [`invariants`]: PT series, duality, GW/PT comparison, Hilbert scheme
//!   Euler numbers.

pub mod error;
pub mod fgab;
pub mod invariants;
pub mod series;
pub mod surface;
pub mod swcalc;

pub use error::{Error, Result};
