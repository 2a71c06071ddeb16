use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::swcalc::fm_binomial;

/// Finite Laurent polynomial in `q^{1/2}` with integer coefficients, times a
/// power `t^m` of the equivariant parameter.
///
/// Exponents are stored doubled: key `a` stands for `q^{a/2}`. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, BigInt>,
    t_power: i64,
}

impl QLaurent {
    pub fn zero(t_power: i64) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            t_power,
        }
    }

    pub fn constant(c: BigInt, t_power: i64) -> Self {
        Self::from_terms([(0, c)], t_power)
    }

    /// Sums duplicate exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I, t_power: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert_with(BigInt::zero) += c;
        }
        coeffs.retain(|_, c: &mut BigInt| !c.is_zero());
        Self { coeffs, t_power }
    }

    pub fn t_power(&self) -> i64 {
        self.t_power
    }

    pub fn with_t_power(mut self, t_power: i64) -> Self {
        self.t_power = t_power;
        self
    }

    /// `(doubled exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, doubled_exp: i64) -> BigInt {
        self.coeffs.get(&doubled_exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn top_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    pub fn add(&self, other: &QLaurent) -> Result<QLaurent> {
        if self.t_power != other.t_power {
            return Err(Error::TPowerMismatch(self.t_power, other.t_power));
        }
        Ok(Self::from_terms(
            self.terms()
                .chain(other.terms())
                .map(|(e, c)| (e, c.clone())),
            self.t_power,
        ))
    }

    pub fn sub(&self, other: &QLaurent) -> Result<QLaurent> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &QLaurent) -> QLaurent {
        let terms = self
            .terms()
            .flat_map(|(a, x)| other.terms().map(move |(b, y)| (a + b, x * y)));
        Self::from_terms(terms, self.t_power + other.t_power)
    }

    pub fn scale(&self, k: &BigInt) -> QLaurent {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * k)), self.t_power)
    }
}

/// `(q^{1/2} + q^{-1/2})^e = sum_j binom(e, j) q^{j - e/2}`.
pub fn x_power_expand(e: u32) -> QLaurent {
    let e64 = i64::from(e);
    QLaurent::from_terms(
        (0..=e64).map(|j| (2 * j - e64, fm_binomial(&BigInt::from(e), j as u64))),
        0,
    )
}

impl fmt::Display for QLaurent {
    /// `c*q^(a/2)` terms in increasing exponent, with a `t^m*(...)` wrapper
    /// when `m != 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let term = format!("{}*q^({e}/2)", c.abs());
            match (i, c.is_negative()) {
                (0, false) => body.push_str(&term),
                (0, true) => body.push_str(&format!("-{term}")),
                (_, false) => body.push_str(&format!(" + {term}")),
                (_, true) => body.push_str(&format!(" - {term}")),
            }
        }
        if body.is_empty() {
            body.push('0');
        }
        if self.t_power == 0 {
            write!(f, "{body}")
        } else {
            write!(f, "t^{}*({body})", self.t_power)
        }
    }
}
