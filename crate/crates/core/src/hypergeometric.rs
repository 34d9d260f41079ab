//! Basic hypergeometric sums with signed-monomial parameters, and the summation
//! identities they satisfy.
//!
//! Parameters are q-only monomials `+-q^b`; the base is `p = q^base_scale`, so
//!
//! ```text
//! phi(a_1..a_r+1; b_1..b_r; p; t) = sum_n (a_1..a_r+1; p)_n t^n / (p, b_1..b_r; p)_n
//! ```

use serde::{Deserialize, Serialize};

use crate::check::{self, Outcome};
use crate::double_series::{quotient, r_value};
use crate::error::{Error, Result};
use crate::pochhammer::{poch_finite, poch_q, recip_poch_infinite_q, recip_poch_q};
use crate::series::LaurentQSeries;
use crate::xseries::{Monomial, XSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiSpec {
    pub upper: Vec<Monomial>,
    pub lower: Vec<Monomial>,
    pub base_scale: i64,
    /// `None` is the zero argument.
    pub argument: Option<Monomial>,
}

impl PhiSpec {
    /// A `2phi1` in base `q^base_scale`.
    pub fn two_phi_one(a: Monomial, b: Monomial, c: Monomial, base_scale: i64, t: Monomial) -> Self {
        PhiSpec {
            upper: vec![a, b],
            lower: vec![c],
            base_scale,
            argument: Some(t),
        }
    }

    /// Last index with a nonzero term, if some upper parameter is `p^-N`.
    pub fn terminates_at(&self) -> Option<i64> {
        self.upper
            .iter()
            .filter(|a| a.sign > 0 && a.qpow <= 0 && a.qpow % self.base_scale == 0)
            .map(|a| -a.qpow / self.base_scale)
            .min()
    }
}

/// Lower bound on the valuation of `(a; q^step)_n`: the sum of its negative factor exponents.
fn dip(a: &Monomial, step: i64, n: i64) -> i64 {
    (0..n.max(0)).map(|k| (a.qpow + step * k).min(0)).sum()
}

fn q_only(params: &[&Monomial]) -> Result<()> {
    match params.iter().find(|m| !m.is_q_only()) {
        Some(m) => Err(Error::InvalidInput(format!(
            "hypergeometric parameter {m} must be x-free"
        ))),
        None => Ok(()),
    }
}

/// Product of the factors built by `pieces(work)`, known at least below `trunc`.
///
/// Factors with negative valuation cost precision in the product; the working trunc is
/// raised by the observed deficit until the product is known far enough.
pub(crate) fn exact_product<F>(trunc: i64, pieces: F) -> Result<LaurentQSeries>
where
    F: Fn(i64) -> Result<Vec<LaurentQSeries>>,
{
    let mut work = trunc;
    for _ in 0..8 {
        let mut iter = pieces(work)?.into_iter();
        let first = iter.next().expect("at least one factor");
        let prod = iter.fold(first, |acc, p| &acc * &p);
        if prod.trunc() >= trunc {
            return Ok(prod.truncate(trunc));
        }
        work += trunc - prod.trunc();
    }
    Err(Error::InsufficientPrecision {
        needed: trunc,
        available: work,
    })
}

/// Evaluates the series below `trunc`.
///
/// A terminating series is summed exactly. Otherwise the argument must have positive
/// q-order so that only finitely many terms reach below `trunc`; else
/// [`Error::NonTerminating`].
pub fn phi_eval(spec: &PhiSpec, trunc: i64) -> Result<LaurentQSeries> {
    let s = spec.base_scale;
    if s < 1 {
        return Err(Error::InvalidInput("base scale must be >= 1".into()));
    }
    let params: Vec<&Monomial> = spec.upper.iter().chain(&spec.lower).chain(&spec.argument).collect();
    q_only(&params)?;
    let Some(t) = spec.argument else {
        return Ok(LaurentQSeries::one(trunc));
    };
    let last = spec.terminates_at();
    if last.is_none() && t.qpow <= 0 {
        return Err(Error::NonTerminating);
    }
    let base = Monomial::q(s);
    let mut acc = LaurentQSeries::zero(trunc);
    let mut n = 0;
    loop {
        if last.is_some_and(|l| n > l) {
            break;
        }
        let margin: i64 = -spec.upper.iter().map(|a| dip(a, s, n)).sum::<i64>();
        let e = t.qpow * n;
        if last.is_none() && e - margin >= trunc {
            break;
        }
        let sign = if t.sign < 0 && n % 2 == 1 { -1 } else { 1 };
        let term = exact_product(trunc - e, |work| {
            let mut pieces = vec![LaurentQSeries::monomial(sign, 0, work)];
            for a in &spec.upper {
                pieces.push(poch_q(a, s, n, work)?);
            }
            for b in spec.lower.iter().chain([&base]) {
                pieces.push(recip_poch_q(b, s, n, work)?);
            }
            Ok(pieces)
        })?
        .shift(e);
        acc = &acc + &term;
        n += 1;
    }
    Ok(acc)
}

/// The Gaussian binomial `[n m]_q`; zero unless `0 <= m <= n`.
pub fn qbinom(n: i64, m: i64, trunc: i64) -> LaurentQSeries {
    // a polynomial with constant term 1: nothing is visible below trunc <= 0
    if n < 0 || m < 0 || m > n || trunc <= 0 {
        return LaurentQSeries::zero(trunc);
    }
    let num = poch_q(&Monomial::q(1), 1, n, trunc).expect("positive factors");
    &num * &quotient(1, 0, &[(1, m), (1, n - m)], trunc)
}

/// `(a)_n = sum_j [n j] (-1)^j a^j q^(j(j-1)/2)`; `a` may involve `x`.
pub fn check_qbinomial_theorem(a: &Monomial, n: i64, trunc: i64, xdeg_bound: usize) -> Result<Outcome> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("q-binomial theorem needs n >= 0, got {n}")));
    }
    let lhs = poch_finite(a, 1, n, trunc, xdeg_bound)?;
    let mut coeffs = vec![LaurentQSeries::zero(trunc); xdeg_bound + 1];
    for j in 0..=n {
        let aj = a.pow(j as u32);
        let d = aj.xpow as usize;
        if d > xdeg_bound {
            continue;
        }
        let e = aj.qpow + j * (j - 1) / 2;
        let sign = aj.sign * if j % 2 == 0 { 1 } else { -1 };
        let term = qbinom(n, j, trunc - e).scale(&sign.into()).shift(e);
        coeffs[d] = &coeffs[d] + &term;
    }
    let rhs = XSeries::new(coeffs, xdeg_bound);
    check::compare_x(&lhs, &rhs, trunc, xdeg_bound)
}

/// `(q^-n)_j = (-1)^j q^(-nj + j(j-1)/2) (q)_n / (q)_(n-j)`.
pub fn check_qnegn(n: i64, j: i64, trunc: i64) -> Result<Outcome> {
    if n < 0 || j < 0 {
        return Err(Error::InvalidInput(format!("need n, j >= 0, got n = {n}, j = {j}")));
    }
    let lhs = poch_q(&Monomial::q(-n), 1, j, trunc)?;
    let e = -n * j + j * (j - 1) / 2;
    let sign = if j % 2 == 0 { 1 } else { -1 };
    let rhs = exact_product(trunc - e, |work| {
        Ok(vec![
            LaurentQSeries::monomial(sign, 0, work),
            poch_q(&Monomial::q(1), 1, n, work)?,
            recip_poch_q(&Monomial::q(1), 1, n - j, work)?,
        ])
    })?
    .shift(e);
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("n={n}, j={j}")))
}

/// `t^j (-q/t)_j = prod_{k=1}^j (t + q^k)` as a polynomial in `t`; its `t^0` term is
/// the limit `t -> 0`, which must be `q^(j(j+1)/2)`.
pub fn check_qtlim(j: i64, trunc: i64) -> Result<Outcome> {
    if j < 0 {
        return Err(Error::InvalidInput(format!("need j >= 0, got {j}")));
    }
    let deg = j as usize;
    let mut poly = XSeries::one(trunc, deg);
    for k in 1..=j {
        let factor = XSeries::from_terms([(1, 1, 0), (1, 0, k)], trunc, deg);
        poly = &poly * &factor;
    }
    let rhs = LaurentQSeries::monomial(1, j * (j + 1) / 2, trunc);
    Ok(check::compare(&poly.x_coeff(0), &rhs, trunc)?.with_context(|| format!("j={j}")))
}

fn ratio(c: &Monomial, a: &Monomial) -> Result<Monomial> {
    c.over(a)
        .ok_or_else(|| Error::InvalidInput(format!("{c}/{a} is not a monomial")))
}

/// `(a; p)_n / (c; p)_n` below `trunc`.
fn poch_ratio(a: &Monomial, c: &Monomial, s: i64, n: i64, trunc: i64) -> Result<LaurentQSeries> {
    exact_product(trunc, |work| {
        Ok(vec![poch_q(a, s, n, work)?, recip_poch_q(c, s, n, work)?])
    })
}

/// `2phi1(a, p^-n; c; p; c p^n / a) = (c/a; p)_n / (c; p)_n` with `p = q^base_scale`.
pub fn check_chu_vandermonde(a: &Monomial, c: &Monomial, n: i64, base_scale: i64, trunc: i64) -> Result<Outcome> {
    q_only(&[a, c])?;
    let s = base_scale;
    let t = ratio(&c.times(&Monomial::q(s * n)), a)?;
    let lhs = phi_eval(&PhiSpec::two_phi_one(*a, Monomial::q(-s * n), *c, s, t), trunc)?;
    let rhs = poch_ratio(&ratio(c, a)?, c, s, n, trunc)?;
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("a={a}, c={c}, n={n}, base q^{s}")))
}

/// `2phi1(a, p^-n; c; p; c p^(n-1)/a)
///   = (c/a)_(n-1)/(c)_(n-1) - (c/(ap)) (1-a) (c/a)_(n-1)/(c)_n`, for `n >= 1`.
pub fn check_chu2(a: &Monomial, c: &Monomial, n: i64, base_scale: i64, trunc: i64) -> Result<Outcome> {
    q_only(&[a, c])?;
    if n < 1 {
        return Err(Error::InvalidInput(format!(
            "second Chu-Vandermonde form needs n >= 1, got {n}"
        )));
    }
    let s = base_scale;
    let t = ratio(&c.times(&Monomial::q(s * (n - 1))), a)?;
    let lhs = phi_eval(&PhiSpec::two_phi_one(*a, Monomial::q(-s * n), *c, s, t), trunc)?;
    let ca = ratio(c, a)?;
    let first = poch_ratio(&ca, c, s, n - 1, trunc)?;
    // c/(ap) (1 - a) (c/a)_(n-1) / (c)_n
    let lead = ratio(c, &a.times(&Monomial::q(s)))?;
    let second = exact_product(trunc - lead.qpow, |work| {
        Ok(vec![
            LaurentQSeries::monomial(lead.sign, 0, work),
            LaurentQSeries::one(work).mul_binomial(a.sign, a.qpow),
            poch_q(&ca, s, n - 1, work)?,
            recip_poch_q(c, s, n, work)?,
        ])
    })?
    .shift(lead.qpow);
    let rhs = &first - &second;
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("a={a}, c={c}, n={n}, base q^{s}")))
}

/// The terminating specialization of Heine's transformation, `i` in `{0, 1}`:
///
/// ```text
/// 2phi1(a, p^-n; c; p; c p^(n-i)/a)
///   = (c p^-i / a)_n / (c)_n  2phi1(p^-i, p^-n; c p^-i / a; p; c p^n)
/// ```
pub fn check_heine_special(a: &Monomial, c: &Monomial, n: i64, i: i64, base_scale: i64, trunc: i64) -> Result<Outcome> {
    q_only(&[a, c])?;
    if !(0..=1).contains(&i) || n < 0 {
        return Err(Error::InvalidInput(format!(
            "need i in {{0,1}} and n >= 0, got i = {i}, n = {n}"
        )));
    }
    let s = base_scale;
    let t = ratio(&c.times(&Monomial::q(s * (n - i))), a)?;
    let lhs = phi_eval(&PhiSpec::two_phi_one(*a, Monomial::q(-s * n), *c, s, t), trunc)?;
    let b = ratio(&c.times(&Monomial::q(-s * i)), a)?;
    let inner_spec = PhiSpec::two_phi_one(
        Monomial::q(-s * i),
        Monomial::q(-s * n),
        b,
        s,
        c.times(&Monomial::q(s * n)),
    );
    let rhs = exact_product(trunc, |work| {
        Ok(vec![
            poch_q(&b, s, n, work)?,
            recip_poch_q(c, s, n, work)?,
            phi_eval(&inner_spec, work)?,
        ])
    })?;
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("a={a}, c={c}, n={n}, i={i}, base q^{s}")))
}

/// `sum_n q^(m n(n+1)/2) = (q^2m; q^2m)_inf / (q^m; q^2m)_inf`.
pub fn check_gauss_triangular(m: i64, trunc: i64) -> Result<Outcome> {
    if m < 1 {
        return Err(Error::InvalidInput(format!("need m >= 1, got {m}")));
    }
    let lhs = LaurentQSeries::from_terms(
        (0..)
            .map(|n| m * n * (n + 1) / 2)
            .take_while(|&e| e < trunc)
            .map(|e| (e, 1)),
        trunc,
    );
    let num = crate::pochhammer::poch_infinite(&Monomial::q(2 * m), 2 * m, trunc, 0)?.x_coeff(0);
    let rhs = &num * &recip_poch_infinite_q(&Monomial::q(m), 2 * m, trunc)?;
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("m={m}")))
}

/// `1/(q)_(n-2j) = q^(2nj - j(2j-1)) (q^-n, q^(1-n); q^2)_j / (q)_n`.
pub fn check_bridge(n: i64, j: i64, trunc: i64) -> Result<Outcome> {
    let lhs = recip_poch_q(&Monomial::q(1), 1, n - 2 * j, trunc)?;
    let e = 2 * n * j - j * (2 * j - 1);
    let (a1, a2) = (Monomial::q(-n), Monomial::q(1 - n));
    let rhs = exact_product(trunc - e, |work| {
        Ok(vec![
            poch_q(&a1, 2, j, work)?,
            poch_q(&a2, 2, j, work)?,
            recip_poch_q(&Monomial::q(1), 1, n, work)?,
        ])
    })?
    .shift(e);
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("n={n}, j={j}")))
}

/// `r(u,2,2,2;n) = 2phi1(q^-n, q^(1-n); -q^2; q^2; -q^(1+2n-2u)) / (q)_n` for `u >= 0`.
pub fn check_phi_bridge(u: i64, n: i64, trunc: i64) -> Result<Outcome> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("need n >= 0, got {n}")));
    }
    let spec = PhiSpec::two_phi_one(
        Monomial::q(-n),
        Monomial::q(1 - n),
        Monomial::neg_q(2),
        2,
        Monomial::neg_q(1 + 2 * n - 2 * u),
    );
    let rhs = exact_product(trunc, |work| {
        Ok(vec![phi_eval(&spec, work)?, recip_poch_q(&Monomial::q(1), 1, n, work)?])
    })?;
    let lhs = r_value(u, 2, 2, 2, n, trunc)?;
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("u={u}, n={n}")))
}

/// The parity-split evaluation of `r(0,2,2,2;N)` through Chu–Vandermonde in base `q^2`:
/// for even `N` take `a = q^(1-N)`, `n = N/2`; for odd `N` take `a = q^-N`, `n = (N-1)/2`;
/// in both cases `c = -q^2`, and `(c/a)_n/(c)_n / (q)_N` must equal `(-q;q^2)_N/(q^2;q^2)_N`.
pub fn check_gg_parity_evaluation(big_n: i64, trunc: i64) -> Result<Outcome> {
    if big_n < 0 {
        return Err(Error::InvalidInput(format!("need N >= 0, got {big_n}")));
    }
    let (a, n) = if big_n % 2 == 0 {
        (Monomial::q(1 - big_n), big_n / 2)
    } else {
        (Monomial::q(-big_n), (big_n - 1) / 2)
    };
    let c = Monomial::neg_q(2);
    let chu = check_chu_vandermonde(&a, &c, n, 2, trunc)?;
    if !chu.holds() {
        return Ok(chu);
    }
    let ca = ratio(&c, &a)?;
    let lhs = exact_product(trunc, |work| {
        Ok(vec![
            poch_ratio(&ca, &c, 2, n, work)?,
            recip_poch_q(&Monomial::q(1), 1, big_n, work)?,
        ])
    })?;
    let rhs = exact_product(trunc, |work| {
        Ok(vec![
            poch_q(&Monomial::neg_q(1), 2, big_n, work)?,
            quotient(1, 0, &[(2, big_n)], work),
        ])
    })?;
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("N={big_n}")))
}
