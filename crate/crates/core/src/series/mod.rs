//! Exact series algebra.
//!
//! - [`QLaurent`]: finite Laurent polynomials in `q^{1/2}`.
//! - [`XPolynomial`]: sums of powers of `x = q^{1/2} + q^{-1/2}`; the BPS
//!   basis is `x^{2g-2}`.
//! - [`ULaurent`]: truncated Laurent series in `u` over the rationals.
//!
//! The change of variables `-q = e^{iu}` sends `q + 2 + q^{-1}` to
//! `2 - 2cos u = (2 sin(u/2))^2`, so `x^2` becomes `(2 sin(u/2))^2`. Only even
//! powers of `x` are transformed; odd powers would need a branch of
//! `q^{1/2}`.

mod qlaurent;
mod ulaurent;
mod xbasis;

pub use qlaurent::{x_power_expand, QLaurent};
pub use ulaurent::{format_rational, sin_power, ULaurent};
pub use xbasis::{bps_extract, bps_reconstruct, BpsSpectrum, XPolynomial};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Substitutes `x^2 -> 2 - 2cos u` into `P`, through order `u^trunc`.
pub fn u_transform(p: &QLaurent, trunc: i64) -> Result<ULaurent> {
    let x = XPolynomial::from_q_laurent(p)?;
    let mut acc = ULaurent::zero(trunc);
    for (j, c) in x.terms() {
        if j.is_odd() {
            return Err(Error::OddXPower(j));
        }
        let term = sin_power(j, trunc)?.scale(&BigRational::from_integer(c.clone()));
        acc = acc.add(&term)?;
    }
    Ok(acc.with_t_power(p.t_power()))
}

/// Convenience for tests and reports: `c * x^e` in `q`.
pub fn scaled_x_power(c: &BigInt, e: u32) -> QLaurent {
    x_power_expand(e).scale(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn constants_and_x_squared() {
        let c = QLaurent::constant(BigInt::from(5), 0);
        assert_eq!(
            u_transform(&c, 24).unwrap(),
            ULaurent::constant(r(5, 1), 24)
        );

        let y = u_transform(&x_power_expand(2), 8).unwrap();
        assert_eq!(y.coeff(0), Some(r(0, 1)));
        assert_eq!(y.coeff(2), Some(r(1, 1)));
        assert_eq!(y.coeff(4), Some(r(-1, 12)));
        assert_eq!(y.coeff(6), Some(r(1, 360)));

        let y2 = u_transform(&x_power_expand(4), 8).unwrap();
        assert_eq!(y2.coeff(4), Some(r(1, 1)));
        assert_eq!(y2.coeff(6), Some(r(-1, 6)));
    }

    #[test]
    fn matches_sin_power() {
        for k in 0..=10u32 {
            let lhs = u_transform(&x_power_expand(2 * k), 24).unwrap();
            assert_eq!(lhs, sin_power(2 * k as i64, 24).unwrap(), "x^{}", 2 * k);
        }
    }

    #[test]
    fn odd_powers_rejected() {
        assert_eq!(
            u_transform(&x_power_expand(1), 10),
            Err(Error::OddXPower(1))
        );
        let lopsided = QLaurent::from_terms([(2, BigInt::from(1))], 0);
        assert_eq!(u_transform(&lopsided, 10), Err(Error::NotPalindromic));
    }

    #[test]
    fn t_power_carried() {
        let p = x_power_expand(2).with_t_power(3);
        assert_eq!(u_transform(&p, 6).unwrap().t_power(), 3);
    }

    fn even_x_poly() -> impl Strategy<Value = QLaurent> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(|cs| {
            XPolynomial::from_terms(
                cs.iter()
                    .enumerate()
                    .map(|(k, &c)| (2 * k as i64, BigInt::from(c))),
                0,
            )
            .to_q_laurent()
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_morphism(p in even_x_poly(), q in even_x_poly()) {
            let n = 16;
            let lhs = u_transform(&p.mul(&q), n).unwrap();
            let rhs = u_transform(&p, n).unwrap().mul(&u_transform(&q, n).unwrap());
            prop_assert_eq!(lhs, rhs);
            let sum = u_transform(&p.add(&q).unwrap(), n).unwrap();
            prop_assert_eq!(sum, u_transform(&p, n).unwrap().add(&u_transform(&q, n).unwrap()).unwrap());
        }
    }
}
