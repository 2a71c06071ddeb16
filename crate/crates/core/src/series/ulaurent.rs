use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Truncated Laurent series `sum_{k = min_order}^{trunc} c_k u^k + O(u^{trunc+1})`
/// with rational coefficients, times `t^m`.
#[derive(Clone, Debug)]
pub struct ULaurent {
    min_order: i64,
    trunc: i64,
    coeffs: Vec<BigRational>,
    t_power: i64,
}

impl ULaurent {
    pub fn new(min_order: i64, trunc: i64, coeffs: Vec<BigRational>, t_power: i64) -> Result<Self> {
        let expected = (trunc - min_order + 1).max(0) as usize;
        if coeffs.len() != expected {
            return Err(Error::Shape(format!(
                "{} coefficients for orders {min_order}..={trunc}",
                coeffs.len()
            )));
        }
        Ok(Self {
            min_order,
            trunc,
            coeffs,
            t_power,
        })
    }

    fn from_fn(min_order: i64, trunc: i64, t_power: i64, f: impl Fn(i64) -> BigRational) -> Self {
        let coeffs = (min_order..=trunc).map(f).collect();
        Self {
            min_order,
            trunc,
            coeffs,
            t_power,
        }
    }

    pub fn zero(trunc: i64) -> Self {
        Self::from_fn(0, trunc, 0, |_| BigRational::zero())
    }

    pub fn constant(c: BigRational, trunc: i64) -> Self {
        Self::from_fn(0, trunc, 0, |k| {
            if k == 0 {
                c.clone()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn min_order(&self) -> i64 {
        self.min_order
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc
    }

    pub fn t_power(&self) -> i64 {
        self.t_power
    }

    pub fn with_t_power(mut self, t_power: i64) -> Self {
        self.t_power = t_power;
        self
    }

    /// Coefficient of `u^k`; zero below the stored range. Orders above the
    /// truncation are unknown and reported as `None`.
    pub fn coeff(&self, k: i64) -> Option<BigRational> {
        if k > self.trunc {
            None
        } else if k < self.min_order {
            Some(BigRational::zero())
        } else {
            Some(self.coeffs[(k - self.min_order) as usize].clone())
        }
    }

    fn at(&self, k: i64) -> BigRational {
        self.coeff(k).unwrap_or_default()
    }

    /// Lowest order with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_order + i as i64)
    }

    pub fn add(&self, other: &ULaurent) -> Result<ULaurent> {
        if self.t_power != other.t_power {
            return Err(Error::TPowerMismatch(self.t_power, other.t_power));
        }
        let lo = self.min_order.min(other.min_order);
        let hi = self.trunc.min(other.trunc);
        Ok(Self::from_fn(lo, hi, self.t_power, |k| {
            self.at(k) + other.at(k)
        }))
    }

    pub fn neg(&self) -> ULaurent {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &ULaurent) -> Result<ULaurent> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigRational) -> ULaurent {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &ULaurent) -> ULaurent {
        let lo = self.min_order + other.min_order;
        let hi = (self.trunc + other.min_order).min(other.trunc + self.min_order);
        Self::from_fn(lo, hi, self.t_power + other.t_power, |n| {
            let mut acc = BigRational::zero();
            for i in self.min_order..=(n - other.min_order).min(self.trunc) {
                let a = &self.coeffs[(i - self.min_order) as usize];
                if a.is_zero() {
                    continue;
                }
                acc += a * other.at(n - i);
            }
            acc
        })
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i64) -> ULaurent {
        Self {
            min_order: self.min_order + k,
            trunc: self.trunc + k,
            ..self.clone()
        }
    }

    /// Multiplicative inverse; the relative precision is preserved.
    pub fn inverse(&self) -> Result<ULaurent> {
        let v = self.valuation().ok_or(Error::NotInvertible)?;
        let rel = self.trunc - v;
        let a = |k: i64| self.at(v + k);
        let lead_inv = a(0).recip();
        let mut b: Vec<BigRational> = Vec::with_capacity(rel as usize + 1);
        for n in 0..=rel {
            if n == 0 {
                b.push(lead_inv.clone());
                continue;
            }
            let s: BigRational = (1..=n).map(|k| a(k) * &b[(n - k) as usize]).sum();
            b.push(-&lead_inv * s);
        }
        Ok(Self {
            min_order: -v,
            trunc: rel - v,
            coeffs: b,
            t_power: -self.t_power,
        })
    }

    /// Integer power; negative exponents go through [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<ULaurent> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut result = Self::constant(BigRational::one(), base.trunc - base.min_order);
        let mut sq = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(result)
    }

    /// Drops orders above `trunc` (no-op if already coarser).
    pub fn truncate_to(&self, trunc: i64) -> ULaurent {
        let hi = trunc.min(self.trunc);
        Self::from_fn(self.min_order, hi, self.t_power, |k| self.at(k))
    }
}

impl PartialEq for ULaurent {
    /// Equal truncation, equal `t`-power, equal coefficients on every order
    /// up to the truncation.
    fn eq(&self, other: &Self) -> bool {
        self.t_power == other.t_power
            && self.trunc == other.trunc
            && (self.min_order.min(other.min_order)..=self.trunc).all(|k| self.at(k) == other.at(k))
    }
}

impl Eq for ULaurent {}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ULaurent {
    /// `r*u^k + ... + O(u^{N+1})`, rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.min_order + i as i64;
            let term = format!("{}*u^{k}", format_rational(&c.abs()));
            if body.is_empty() {
                if c.is_negative() {
                    body.push('-');
                }
                body.push_str(&term);
            } else {
                body.push_str(if c.is_negative() { " - " } else { " + " });
                body.push_str(&term);
            }
        }
        let tail = format!("O(u^{})", self.trunc + 1);
        let full = if body.is_empty() {
            tail
        } else {
            format!("{body} + {tail}")
        };
        if self.t_power == 0 {
            write!(f, "{full}")
        } else {
            write!(f, "t^{}*({full})", self.t_power)
        }
    }
}

/// `(2 - 2cos u) / u^2 = sum_k 2 (-1)^k u^{2k} / (2k+2)!` through order `rel`.
fn two_minus_two_cos_over_u2(rel: i64) -> ULaurent {
    ULaurent::from_fn(0, rel, 0, |n| {
        if n % 2 != 0 {
            return BigRational::zero();
        }
        let k = n / 2;
        let fact: BigInt = (1..=2 * k + 2).map(BigInt::from).product();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        BigRational::new(BigInt::from(2 * sign), fact)
    })
}

/// `(2 sin(u/2))^e = (2 - 2cos u)^{e/2}` through order `u^trunc`, `e` even.
pub fn sin_power(e: i64, trunc: i64) -> Result<ULaurent> {
    if e % 2 != 0 {
        return Err(Error::OddExponent(e));
    }
    let half = e / 2;
    let rel = trunc - e;
    if rel < 0 {
        return ULaurent::new(e, trunc, Vec::new(), 0);
    }
    Ok(two_minus_two_cos_over_u2(rel).pow(half)?.shift(e))
}
