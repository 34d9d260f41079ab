//! q-Pochhammer symbols `(a; q^step)_n` and `(a; q^step)_inf` with monomial `a`.

use crate::error::{Error, Result};
use crate::series::LaurentQSeries;
use crate::xseries::{Monomial, XSeries};

/// Factor `k` of `(a; q^step)_n` is `1 - a q^(step k)`.
fn factor(a: &Monomial, step: i64, k: i64) -> Monomial {
    Monomial::new(a.sign, a.xpow, a.qpow + step * k)
}

/// Truncation headroom needed so that multiplying by factors with negative
/// q-exponents still leaves the product exact below the requested trunc.
fn negative_margin<I: IntoIterator<Item = Monomial>>(factors: I) -> i64 {
    factors.into_iter().map(|m| (-m.qpow).max(0)).sum()
}

fn product_of_binomials(factors: &[Monomial], trunc: i64, xdeg_bound: usize) -> XSeries {
    let margin = negative_margin(factors.iter().copied());
    let mut acc = XSeries::one(trunc + margin, xdeg_bound);
    for m in factors {
        acc = acc.mul_one_minus(m);
    }
    acc.truncate(trunc, xdeg_bound)
}

/// `(a; q^step)_n`.
///
/// For `n < 0` this uses `(a;q)_n = 1 / (a q^n; q)_{-n}`, which fails with
/// [`Error::NotAUnit`] when one of those factors is not invertible.
pub fn poch_finite(a: &Monomial, step: i64, n: i64, trunc: i64, xdeg_bound: usize) -> Result<XSeries> {
    check_step(step)?;
    if n >= 0 {
        let factors: Vec<Monomial> = (0..n).map(|k| factor(a, step, k)).collect();
        Ok(product_of_binomials(&factors, trunc, xdeg_bound))
    } else {
        // the denominator has valuation <= 0, so its inverse is known at least to trunc
        recip_negative(a, step, n, trunc, xdeg_bound)
            .invert_unit()
            .map(|s| s.truncate(trunc, xdeg_bound))
    }
}

/// `1 / (a; q^step)_n`, with the convention that this vanishes whenever the
/// finite product for negative `n` has a zero factor (in particular
/// `1/(q;q)_n = 0` for `n < 0`).
pub fn recip_poch(a: &Monomial, step: i64, n: i64, trunc: i64, xdeg_bound: usize) -> Result<XSeries> {
    check_step(step)?;
    if n < 0 {
        return Ok(recip_negative(a, step, n, trunc, xdeg_bound));
    }
    // Dividing by factors with negative q-exponent raises the valuation, never lowers it.
    let mut acc = XSeries::one(trunc, xdeg_bound);
    for k in 0..n {
        acc = acc.div_one_minus(&factor(a, step, k))?;
    }
    Ok(acc.truncate(trunc, xdeg_bound))
}

/// `1/(a;q)_n` for `n < 0` is the finite product `prod_{k=1}^{-n} (1 - a q^{-step k})`.
fn recip_negative(a: &Monomial, step: i64, n: i64, trunc: i64, xdeg_bound: usize) -> XSeries {
    let factors: Vec<Monomial> = (1..=-n).map(|k| factor(a, step, -k)).collect();
    product_of_binomials(&factors, trunc, xdeg_bound)
}

/// `(a; q^step)_inf`, using exactly the factors that can reach exponents below `trunc`.
pub fn poch_infinite(a: &Monomial, step: i64, trunc: i64, xdeg_bound: usize) -> Result<XSeries> {
    check_step(step)?;
    if a.xpow == 0 && a.qpow <= 0 {
        return Err(Error::Divergent(format!(
            "({a}; q^{step})_inf has a factor of q-order <= 0"
        )));
    }
    // Each factor beyond the negative ones only matters if its exponent, lowered by
    // everything the negative factors can subtract, still falls below trunc.
    let negatives: Vec<Monomial> = (0..).map(|k| factor(a, step, k)).take_while(|m| m.qpow < 0).collect();
    let margin = negative_margin(negatives.iter().copied());
    let factors: Vec<Monomial> = (0..)
        .map(|k| factor(a, step, k))
        .take_while(|m| m.qpow < trunc + margin)
        .filter(|m| m.xpow as usize <= xdeg_bound)
        .collect();
    Ok(product_of_binomials(&factors, trunc, xdeg_bound))
}

/// Product of several infinite Pochhammer symbols sharing a base, e.g. `(q, q^4, q^7; q^8)_inf`.
pub fn poch_infinite_many(params: &[Monomial], step: i64, trunc: i64, xdeg_bound: usize) -> Result<XSeries> {
    params.iter().try_fold(XSeries::one(trunc, xdeg_bound), |acc, a| {
        Ok(&acc * &poch_infinite(a, step, trunc, xdeg_bound)?)
    })
}

/// `1 / (a; q^step)_inf` for x-free `a` of positive q-order.
pub fn recip_poch_infinite_q(a: &Monomial, step: i64, trunc: i64) -> Result<LaurentQSeries> {
    check_step(step)?;
    if !a.is_q_only() || a.qpow <= 0 {
        return Err(Error::Divergent(format!("1/({a}; q^{step})_inf")));
    }
    let mut acc = LaurentQSeries::one(trunc);
    let mut e = a.qpow;
    while e < trunc {
        acc = acc.div_binomial(a.sign, e)?;
        e += step;
    }
    Ok(acc)
}

/// q-only finite Pochhammer as a [`LaurentQSeries`].
pub fn poch_q(a: &Monomial, step: i64, n: i64, trunc: i64) -> Result<LaurentQSeries> {
    Ok(poch_finite(a, step, n, trunc, 0)?.x_coeff(0))
}

/// q-only reciprocal Pochhammer as a [`LaurentQSeries`].
pub fn recip_poch_q(a: &Monomial, step: i64, n: i64, trunc: i64) -> Result<LaurentQSeries> {
    Ok(recip_poch(a, step, n, trunc, 0)?.x_coeff(0))
}

fn check_step(step: i64) -> Result<()> {
    if step < 1 {
        return Err(Error::InvalidInput(format!("Pochhammer step must be >= 1, got {step}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn empty_product() {
        assert_eq!(poch_finite(&Monomial::q(1), 1, 0, 10, 0).unwrap(), XSeries::one(10, 0));
    }

    #[test]
    fn odd_distinct_product() {
        // (-q; q^2)_3 = (1+q)(1+q^3)(1+q^5)
        let p = poch_q(&Monomial::neg_q(1), 2, 3, 50).unwrap();
        let expect = LaurentQSeries::from_terms([(0, 1), (1, 1), (3, 1), (4, 1), (5, 1), (6, 1), (8, 1), (9, 1)], 50);
        assert_eq!(p, expect);
    }

    #[test]
    fn reciprocal_vanishes_at_negative_order() {
        let r = recip_poch_q(&Monomial::q(1), 1, -2, 20).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.trunc(), 20);
        let r2 = recip_poch_q(&Monomial::q(2), 2, -1, 20).unwrap();
        assert!(r2.is_zero());
    }

    #[test]
    fn negative_order_general_definition() {
        // (q^3;q)_{-1} = 1/(1 - q^2)
        let p = poch_q(&Monomial::q(3), 1, -1, 12).unwrap();
        let expect = LaurentQSeries::from_terms((0..6).map(|k| (2 * k, 1)), 12);
        assert_eq!(p, expect);
        assert_eq!(poch_q(&Monomial::q(1), 1, -1, 12), Err(Error::NotAUnit));
    }

    #[test]
    fn laurent_factor_keeps_requested_trunc() {
        // (-q^-1; q^2)_2 = (1 + q^-1)(1 + q) = q^-1 + 2 + q
        let p = poch_q(&Monomial::neg_q(-1), 2, 2, 10).unwrap();
        assert_eq!(p.trunc(), 10);
        assert_eq!(p, LaurentQSeries::from_terms([(-1, 1), (0, 2), (1, 1)], 10));
    }

    #[test]
    fn infinite_truncation_edge() {
        let p = poch_infinite(&Monomial::q(1), 1, 1, 0).unwrap();
        assert_eq!(p, XSeries::one(1, 0));
        assert!(matches!(
            poch_infinite(&Monomial::q(0), 1, 10, 0),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn distinct_odd_single_part() {
        let p = poch_infinite(&Monomial::new(-1, 1, 1), 2, 20, 3).unwrap();
        let one_part = p.x_coeff(1);
        let expect = LaurentQSeries::from_terms((0..10).map(|k| (2 * k + 1, 1)), 20);
        assert_eq!(one_part, expect);
    }

    #[test]
    fn recip_infinite_matches_general_inverse() {
        let a = poch_infinite(&Monomial::q(1), 3, 40, 0).unwrap().x_coeff(0);
        let inv = recip_poch_infinite_q(&Monomial::q(1), 3, 40).unwrap();
        assert_eq!(a.invert().unwrap(), inv);
        // parts from {1, 4, 7, ...}: 1^6 and 4+1+1
        assert_eq!(inv.coeff(6).unwrap(), BigInt::from(2));
    }
}
