//! The basis `x^j`, `x = q^{1/2} + q^{-1/2}`, and BPS spectra.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::qlaurent::{x_power_expand, QLaurent};
use crate::error::{Error, Result};

/// Finite sum `t^m * sum_j c_j x^j` with integer `j` of either sign.
///
/// Negative powers of `x` are formal here: they have no Laurent polynomial
/// expansion in `q`, but products and comparisons in this basis are exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
    t_power: i64,
}

impl XPolynomial {
    pub fn zero(t_power: i64) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            t_power,
        }
    }

    /// `c * x^j * t^m`.
    pub fn monomial(c: BigInt, j: i64, t_power: i64) -> Self {
        Self::from_terms([(j, c)], t_power)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I, t_power: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (j, c) in terms {
            *coeffs.entry(j).or_insert_with(BigInt::zero) += c;
        }
        coeffs.retain(|_, c: &mut BigInt| !c.is_zero());
        Self { coeffs, t_power }
    }

    pub fn t_power(&self) -> i64 {
        self.t_power
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(j, c)| (*j, c))
    }

    pub fn coeff(&self, j: i64) -> BigInt {
        self.coeffs.get(&j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &XPolynomial) -> Result<XPolynomial> {
        if self.t_power != other.t_power {
            return Err(Error::TPowerMismatch(self.t_power, other.t_power));
        }
        Ok(Self::from_terms(
            self.terms()
                .chain(other.terms())
                .map(|(j, c)| (j, c.clone())),
            self.t_power,
        ))
    }

    pub fn mul(&self, other: &XPolynomial) -> XPolynomial {
        let terms = self
            .terms()
            .flat_map(|(a, x)| other.terms().map(move |(b, y)| (a + b, x * y)));
        Self::from_terms(terms, self.t_power + other.t_power)
    }

    /// Expansion in `q^{1/2}`; fails on negative powers of `x`.
    pub fn to_q_laurent(&self) -> Result<QLaurent> {
        let mut acc = QLaurent::zero(0);
        for (j, c) in self.terms() {
            let e = u32::try_from(j).map_err(|_| Error::NegativeXPower(j))?;
            acc = acc.add(&x_power_expand(e).scale(c))?;
        }
        Ok(acc.with_t_power(self.t_power))
    }

    /// Inverse of [`to_q_laurent`](Self::to_q_laurent): peels the top term
    /// `c q^{j/2}` off with `c x^j` until nothing is left. Defined exactly on
    /// palindromic input.
    pub fn from_q_laurent(p: &QLaurent) -> Result<XPolynomial> {
        if !p.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let mut rest = p.clone().with_t_power(0);
        let mut terms = Vec::new();
        while let Some(top) = rest.top_exponent() {
            let c = rest.coeff(top);
            let basis = x_power_expand(top as u32).scale(&c);
            rest = rest.sub(&basis)?;
            terms.push((top, c));
        }
        Ok(Self::from_terms(terms, p.t_power()))
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.is_zero() {
            "0".to_string()
        } else {
            self.terms()
                .map(|(j, c)| format!("{c}*x^{j}"))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        if self.t_power == 0 {
            write!(f, "{body}")
        } else {
            write!(f, "t^{}*({body})", self.t_power)
        }
    }
}

/// BPS numbers `n_g` with `P = t^m sum_g n_g x^{2g-2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BpsSpectrum {
    pub entries: BTreeMap<i64, BigInt>,
    pub t_power: i64,
}

impl BpsSpectrum {
    pub fn get(&self, g: i64) -> BigInt {
        self.entries.get(&g).cloned().unwrap_or_default()
    }
}

/// Writes a palindromic `P` as `sum_g n_g x^{2g-2}`; every power of `x` that
/// occurs must be even.
pub fn bps_extract(p: &QLaurent) -> Result<BpsSpectrum> {
    let x = XPolynomial::from_q_laurent(p)?;
    let mut entries = BTreeMap::new();
    // largest odd power first, matching the peeling order
    if let Some((j, _)) = x.terms().filter(|(j, _)| j.is_odd()).last() {
        return Err(Error::OddXPower(j));
    }
    for (j, c) in x.terms() {
        entries.insert(j / 2 + 1, c.clone());
    }
    Ok(BpsSpectrum {
        entries,
        t_power: p.t_power(),
    })
}

/// `t^m sum_g n_g x^{2g-2}` expanded in `q`. Requires `g >= 1` for every
/// nonzero entry.
pub fn bps_reconstruct(spectrum: &BpsSpectrum) -> Result<QLaurent> {
    XPolynomial::from_terms(
        spectrum
            .entries
            .iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(g, n)| (2 * g - 2, n.clone())),
        spectrum.t_power,
    )
    .to_q_laurent()
}

impl fmt::Display for BpsSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .entries
            .iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(g, n)| format!("n_{g} = {n}"))
            .collect();
        let body = if items.is_empty() {
            "(empty)".to_string()
        } else {
            items.join(", ")
        };
        if self.t_power == 0 {
            write!(f, "{body}")
        } else {
            write!(f, "{body} [t^{}]", self.t_power)
        }
    }
}
