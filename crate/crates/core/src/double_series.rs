//! The inner sums `r(l,u,v,w;n)`, the family `R(s,t,l,u,v,w)`, and the two-variable
//! double series for Schur, Göllnitz–Gordon and Göllnitz partitions.
//!
//! ```text
//! r(l,u,v,w;n) = sum_j (-1)^j q^(uv j(j-1)/2 + (w - u l) j) / ((q;q)_(n-uj) (q^uv;q^uv)_j)
//! R(s,t,l,u,v,w) = sum_n q^(s n(n-1)/2 + t n) r(l,u,v,w;n)
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bounds::{convex_indices_below, convex_pairs_below};
use crate::check::{self, Outcome};
use crate::error::{Error, Result};
use crate::pochhammer::{poch_infinite_many, poch_q, recip_poch_infinite_q};
use crate::series::LaurentQSeries;
use crate::xseries::{Monomial, XSeries};

/// `sign q^exp / prod (q^step; q^step)_count`, exact below `trunc`.
///
/// A negative count makes the term vanish.
pub(crate) fn quotient(sign: i64, exp: i64, denominators: &[(i64, i64)], trunc: i64) -> LaurentQSeries {
    if exp >= trunc || denominators.iter().any(|&(_, c)| c < 0) {
        return LaurentQSeries::zero(trunc);
    }
    let mut acc = LaurentQSeries::monomial(sign, 0, trunc - exp);
    for &(step, count) in denominators {
        for k in 1..=count {
            if step * k >= trunc - exp {
                break;
            }
            acc = acc
                .div_binomial(1, step * k)
                .expect("positive exponent binomials are units");
        }
    }
    acc.shift(exp)
}

fn check_uv(u: i64, v: i64) -> Result<()> {
    if u < 1 || v < 1 {
        return Err(Error::InvalidInput(format!(
            "r(l,u,v,w;n) needs u, v >= 1, got u = {u}, v = {v}"
        )));
    }
    Ok(())
}

fn r_exponent(l: i64, u: i64, v: i64, w: i64, j: i64) -> i64 {
    u * v * j * (j - 1) / 2 + (w - u * l) * j
}

/// `r(l,u,v,w;n)` below `trunc`; zero for `n < 0`.
pub fn r_value(l: i64, u: i64, v: i64, w: i64, n: i64, trunc: i64) -> Result<LaurentQSeries> {
    check_uv(u, v)?;
    let mut acc = LaurentQSeries::zero(trunc);
    if n < 0 {
        return Ok(acc);
    }
    for j in 0..=n / u {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let e = r_exponent(l, u, v, w, j);
        acc = &acc + &quotient(sign, e, &[(1, n - u * j), (u * v, j)], trunc);
    }
    Ok(acc)
}

/// Memoized `r` values at one fixed trunc.
#[derive(Debug, Default)]
pub struct RCache {
    trunc: i64,
    values: HashMap<(i64, i64, i64, i64, i64), LaurentQSeries>,
}

impl RCache {
    pub fn new(trunc: i64) -> Self {
        RCache {
            trunc,
            values: HashMap::new(),
        }
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn get(&mut self, l: i64, u: i64, v: i64, w: i64, n: i64) -> Result<LaurentQSeries> {
        if let Some(s) = self.values.get(&(l, u, v, w, n)) {
            return Ok(s.clone());
        }
        let s = r_value(l, u, v, w, n, self.trunc)?;
        self.values.insert((l, u, v, w, n), s.clone());
        Ok(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubleSeriesParams {
    pub s: i64,
    pub t: i64,
    pub l: i64,
    pub u: i64,
    pub v: i64,
    pub w: i64,
}

impl DoubleSeriesParams {
    pub fn new(s: i64, t: i64, l: i64, u: i64, v: i64, w: i64) -> Self {
        DoubleSeriesParams { s, t, l, u, v, w }
    }
}

/// `R(s,t,l,u,v,w)` below `trunc`.
///
/// Requires `s, t >= 0` and `s + t >= 1`; otherwise the n-sum is not finite at any
/// fixed q-order and [`Error::Divergent`] is returned.
pub fn r_series(p: &DoubleSeriesParams, trunc: i64) -> Result<LaurentQSeries> {
    check_uv(p.u, p.v)?;
    if p.s < 0 || p.t < 0 || p.s + p.t == 0 {
        return Err(Error::Divergent(format!(
            "R({},{},..) needs s, t >= 0, not both zero",
            p.s, p.t
        )));
    }
    // lowest exponent any j-term of any r(n) can reach
    let j_min = {
        let mut j = 0;
        while r_exponent(p.l, p.u, p.v, p.w, j + 1) < r_exponent(p.l, p.u, p.v, p.w, j) {
            j += 1;
        }
        r_exponent(p.l, p.u, p.v, p.w, j)
    };
    let outer = |n: i64| p.s * n * (n - 1) / 2 + p.t * n;
    let mut acc = LaurentQSeries::zero(trunc);
    for n in convex_indices_below(|n| outer(n) + j_min, trunc) {
        let a = outer(n);
        let r = r_value(p.l, p.u, p.v, p.w, n, trunc - a)?;
        acc = &acc + &r.shift(a);
    }
    Ok(acc)
}

/// `sum_n x^n q^(s n(n-1)/2 + t n) r(l,u,v,w;n)` for `n <= xdeg_bound`; at `x = 1` this is
/// [`r_series`], and `x = q^(t'-1)` shifts `t` to `t + t' - 1`.
pub fn r_series_x(p: &DoubleSeriesParams, trunc: i64, xdeg_bound: usize) -> Result<XSeries> {
    let mut by_deg = Vec::with_capacity(xdeg_bound + 1);
    for n in 0..=xdeg_bound as i64 {
        let a = p.s * n * (n - 1) / 2 + p.t * n;
        by_deg.push(r_value(p.l, p.u, p.v, p.w, n, trunc - a)?.shift(a));
    }
    Ok(XSeries::new(by_deg, xdeg_bound))
}

/// Which of the two Göllnitz-type double series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GgFamily {
    GollnitzGordon,
    Gollnitz,
}

fn schur_exponent(m: i64, n: i64) -> i64 {
    3 * n * (3 * n + 2 * m) + m * (3 * m - 1) / 2
}

fn gg_exponent(family: GgFamily, m: i64, k: i64) -> i64 {
    let base = m * m + 4 * m * k + 6 * k * k;
    match family {
        GgFamily::GollnitzGordon => base,
        GgFamily::Gollnitz => base - 2 * k,
    }
}

/// Sum of terms `(xdeg, sign, exp, denominators)` into an x-series.
fn collect_x<I>(terms: I, trunc: i64, xdeg_bound: usize) -> XSeries
where
    I: IntoIterator<Item = (usize, i64, i64, Vec<(i64, i64)>)>,
{
    let mut by_deg = vec![LaurentQSeries::zero(trunc); xdeg_bound + 1];
    for (d, sign, e, dens) in terms {
        if d <= xdeg_bound {
            by_deg[d] = &by_deg[d] + &quotient(sign, e, &dens, trunc);
        }
    }
    XSeries::new(by_deg, xdeg_bound)
}

fn alternating(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `sum_{m,n} (-1)^n x^(m+2n) q^(3n(3n+2m) + m(3m-1)/2) / ((q;q)_m (q^6;q^6)_n)`.
pub fn theorem1_double(trunc: i64, xdeg_bound: usize) -> XSeries {
    let d = xdeg_bound as i64;
    let terms = (0..=d / 2).flat_map(move |n| {
        (0..=d - 2 * n).map(move |m| {
            (
                (m + 2 * n) as usize,
                alternating(n),
                schur_exponent(m, n),
                vec![(1, m), (6, n)],
            )
        })
    });
    collect_x(terms, trunc, xdeg_bound)
}

/// [`theorem1_double`] at `x = q^x_qpow`, with no bound on the x-degree.
pub fn theorem1_at(x_qpow: i64, trunc: i64) -> LaurentQSeries {
    let exp = |n: i64, m: i64| schur_exponent(m, n) + x_qpow * (m + 2 * n);
    let mut acc = LaurentQSeries::zero(trunc);
    for (n, m) in convex_pairs_below(exp, trunc) {
        acc = &acc + &quotient(alternating(n), exp(n, m), &[(1, m), (6, n)], trunc);
    }
    acc
}

/// `sum_{k,m} (-1)^k x^(m+2k) q^(m^2+4mk+6k^2 [-2k]) / ((q;q)_m (q^4;q^4)_k)`.
pub fn theorem2_double(family: GgFamily, trunc: i64, xdeg_bound: usize) -> XSeries {
    let d = xdeg_bound as i64;
    let terms = (0..=d / 2).flat_map(move |k| {
        (0..=d - 2 * k).map(move |m| {
            (
                (m + 2 * k) as usize,
                alternating(k),
                gg_exponent(family, m, k),
                vec![(1, m), (4, k)],
            )
        })
    });
    collect_x(terms, trunc, xdeg_bound)
}

/// [`theorem2_double`] at `x = q^x_qpow`.
pub fn theorem2_at(family: GgFamily, x_qpow: i64, trunc: i64) -> LaurentQSeries {
    let exp = |k: i64, m: i64| gg_exponent(family, m, k) + x_qpow * (m + 2 * k);
    let mut acc = LaurentQSeries::zero(trunc);
    for (k, m) in convex_pairs_below(exp, trunc) {
        acc = &acc + &quotient(alternating(k), exp(k, m), &[(1, m), (4, k)], trunc);
    }
    acc
}

/// `sum_n x^n q^(n^2 + c n) (a;q^2)_n / (q^2;q^2)_n` for a q-only `a`.
fn single_sum_x(c: i64, a: &Monomial, trunc: i64, xdeg_bound: usize) -> Result<XSeries> {
    let mut by_deg = Vec::with_capacity(xdeg_bound + 1);
    for n in 0..=xdeg_bound as i64 {
        let e = n * n + c * n;
        // the numerator may dip below q^0 by at most |a.qpow| once
        let slack = if n > 0 { (-a.qpow).max(0) } else { 0 };
        if e - slack >= trunc {
            by_deg.push(LaurentQSeries::zero(trunc));
            continue;
        }
        let num = poch_q(a, 2, n, trunc - e + slack)?;
        let den = quotient(1, 0, &[(2, n)], trunc - e + slack);
        by_deg.push((&num * &den).truncate(trunc - e).shift(e));
    }
    Ok(XSeries::new(by_deg, xdeg_bound))
}

/// `sum_n x^n q^(n^2) (-q;q^2)_n / (q^2;q^2)_n`, the Göllnitz–Gordon single sum.
pub fn gg_single_sum(trunc: i64, xdeg_bound: usize) -> XSeries {
    single_sum_x(0, &Monomial::neg_q(1), trunc, xdeg_bound).expect("finite products of units")
}

/// `sum_n x^n q^(n^2+n) (-q^-1;q^2)_n / (q^2;q^2)_n`, the Göllnitz single sum for parts >= 1.
pub fn g1_single_sum(trunc: i64, xdeg_bound: usize) -> XSeries {
    single_sum_x(1, &Monomial::neg_q(-1), trunc, xdeg_bound).expect("finite products of units")
}

/// The Göllnitz–Gordon single sum at `x = q^x_qpow`; `x_qpow >= 0` keeps it finite per order.
pub fn gg_single_sum_at(x_qpow: i64, trunc: i64) -> Result<LaurentQSeries> {
    if x_qpow < 0 {
        return Err(Error::Divergent(format!("single sum at x = q^{x_qpow}")));
    }
    let mut acc = LaurentQSeries::zero(trunc);
    for n in convex_indices_below(|n| n * n + x_qpow * n, trunc) {
        let e = n * n + x_qpow * n;
        let num = poch_q(&Monomial::neg_q(1), 2, n, trunc - e)?;
        let den = quotient(1, 0, &[(2, n)], trunc - e);
        acc = &acc + &(&num * &den).shift(e);
    }
    Ok(acc)
}

/// `r(l,u,v,w;n) - r(l,u,v,w;n-1) = q^n r(l+1,u,v,w;n)`.
pub fn check_rec1(l: i64, u: i64, v: i64, w: i64, n: i64, trunc: i64) -> Result<Outcome> {
    let lhs = &r_value(l, u, v, w, n, trunc)? - &r_value(l, u, v, w, n - 1, trunc)?;
    let rhs = r_value(l + 1, u, v, w, n, trunc - n)?.shift(n);
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("(l,u,v,w)=({l},{u},{v},{w}), n={n}")))
}

/// `r(v,u,v,w;n) - r(0,u,v,w;n) = -q^(w-uv) r(0,u,v,w;n-u)`.
pub fn check_rec2(u: i64, v: i64, w: i64, n: i64, trunc: i64) -> Result<Outcome> {
    let lhs = &r_value(v, u, v, w, n, trunc)? - &r_value(0, u, v, w, n, trunc)?;
    let e = w - u * v;
    let rhs = -r_value(0, u, v, w, n - u, trunc - e)?.shift(e);
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("(u,v,w)=({u},{v},{w}), n={n}")))
}

/// `r(l,u,v,w;n) = r(0,u,v,w-ul;n)`.
pub fn normalization_shift(l: i64, u: i64, v: i64, w: i64, n: i64, trunc: i64) -> Result<Outcome> {
    let lhs = r_value(l, u, v, w, n, trunc)?;
    let rhs = r_value(0, u, v, w - u * l, n, trunc)?;
    Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("(l,u,v,w)=({l},{u},{v},{w}), n={n}")))
}

/// The four closed evaluations of `r` at a given `n >= 0`:
///
/// ```text
/// r(0,2,2,2;n) = (-q;q^2)_n / (q^2;q^2)_n
/// r(1,2,2,2;n) = q^n (-q^-1;q^2)_n / (q^2;q^2)_n
/// r(1,1,2,2;n) = 1 / (q^2;q^2)_n
/// r(1,1,1,2;n) = 1
/// ```
pub fn closed_forms(n: i64, trunc: i64) -> Result<Outcome> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("closed forms need n >= 0, got {n}")));
    }
    let inv_q2 = |t: i64| quotient(1, 0, &[(2, n)], t);
    let gg = &poch_q(&Monomial::neg_q(1), 2, n, trunc)? * &inv_q2(trunc);
    // (-q^-1;q^2)_n has valuation -1 for n >= 1, so both factors need one extra order
    let g = if n > trunc {
        LaurentQSeries::zero(trunc)
    } else {
        (&poch_q(&Monomial::neg_q(-1), 2, n, trunc - n + 1)? * &inv_q2(trunc - n + 1))
            .truncate(trunc - n)
            .shift(n)
    };
    type Case<'a> = (&'a str, (i64, i64, i64, i64), LaurentQSeries);
    let cases: [Case; 4] = [
        ("r(0,2,2,2;n)", (0, 2, 2, 2), gg),
        ("r(1,2,2,2;n)", (1, 2, 2, 2), g),
        ("r(1,1,2,2;n)", (1, 1, 2, 2), inv_q2(trunc)),
        ("r(1,1,1,2;n)", (1, 1, 1, 2), LaurentQSeries::one(trunc)),
    ];
    check::all(cases.into_iter().map(|(name, (l, u, v, w), rhs)| {
        let lhs = r_value(l, u, v, w, n, trunc)?;
        Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("{name}, n={n}")))
    }))
}

/// Which Alladi–Berkovich identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AbCase {
    /// exponent `... + m - k`, product `(-w q, -q^2, -q^4; q^4)_inf`; at `w = 1` the
    /// Little Göllnitz product `1/(q, q^5, q^6; q^8)_inf`
    First,
    /// exponent `... + m + k`, product `(-q^2, -w q^3, -q^4; q^4)_inf`; at `w = 1` the
    /// Little Göllnitz product `1/(q^2, q^3, q^7; q^8)_inf`
    Second,
}

/// Both sides of an Alladi–Berkovich identity as series in `w` (stored as the x-variable).
pub fn alladi_berkovich(case: AbCase, trunc: i64, wdeg_bound: usize) -> Result<(XSeries, XSeries)> {
    let sk = match case {
        AbCase::First => -1,
        AbCase::Second => 1,
    };
    let exp = move |k: i64, m: i64| m * m + 2 * m * k + 2 * k * k + m + sk * k;
    let terms = (0..=wdeg_bound as i64).flat_map(move |k| {
        convex_indices_below(move |m| exp(k, m), trunc)
            .into_iter()
            .map(move |m| (k as usize, 1, exp(k, m), vec![(2, m), (2, k)]))
    });
    let lhs = collect_x(terms, trunc, wdeg_bound);
    let params = match case {
        AbCase::First => [Monomial::new(-1, 1, 1), Monomial::neg_q(2), Monomial::neg_q(4)],
        AbCase::Second => [Monomial::neg_q(2), Monomial::new(-1, 1, 3), Monomial::neg_q(4)],
    };
    let rhs = poch_infinite_many(&params, 4, trunc, wdeg_bound)?;
    Ok((lhs, rhs))
}

/// The mod-3 Legendre symbol.
pub fn legendre3(n: i64) -> i64 {
    match n.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Both sides of Sills' Capparelli identity:
/// `sum_n sum_{j=0}^{2n} (n-j+1 / 3) q^(n^2) / ((q;q)_(2n-j) (q;q)_j)` and
/// `1/(q^2,q^3,q^9,q^10;q^12)_inf`.
pub fn capparelli_sills(trunc: i64) -> Result<(LaurentQSeries, LaurentQSeries)> {
    let mut lhs = LaurentQSeries::zero(trunc);
    for n in convex_indices_below(|n| n * n, trunc) {
        for j in 0..=2 * n {
            let chi = legendre3(n - j + 1);
            if chi != 0 {
                lhs = &lhs + &quotient(chi, n * n, &[(1, 2 * n - j), (1, j)], trunc);
            }
        }
    }
    let mut rhs = LaurentQSeries::one(trunc);
    for a in [2, 3, 9, 10] {
        rhs = &rhs * &recip_poch_infinite_q(&Monomial::q(a), 12, trunc)?;
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{generating_function, GapRule};
    use crate::pochhammer::poch_infinite;
    use num_bigint::BigInt;

    #[test]
    fn r_at_zero_and_negative() {
        assert_eq!(r_value(3, 2, 3, 4, 0, 20).unwrap(), LaurentQSeries::one(20));
        assert!(r_value(1, 2, 2, 2, -3, 20).unwrap().is_zero());
        assert!(r_value(0, 0, 1, 0, 1, 20).is_err());
    }

    #[test]
    fn r_1112_is_one() {
        for n in 0..=20 {
            assert_eq!(r_value(1, 1, 1, 2, n, 30).unwrap(), LaurentQSeries::one(30), "n={n}");
        }
    }

    #[test]
    fn r_laurent_terms_keep_trunc() {
        // w - ul < 0 puts negative exponents into the j = 1 term
        let r = r_value(3, 1, 1, 0, 2, 10).unwrap();
        assert_eq!(r.trunc(), 10);
        assert!(r.valuation() < 0);
    }

    #[test]
    fn r_series_edge_cases() {
        let p = DoubleSeriesParams::new(2, 1, 1, 1, 2, 2);
        assert_eq!(r_series(&p, 1).unwrap(), LaurentQSeries::one(1));
        let e = r_series(&DoubleSeriesParams::new(0, 0, 0, 1, 1, 0), 10);
        assert!(matches!(e, Err(Error::Divergent(_))));
    }

    #[test]
    fn r_series_euler_product() {
        let p = DoubleSeriesParams::new(2, 1, 1, 1, 2, 2);
        let lhs = r_series(&p, 50).unwrap();
        let rhs = poch_q(&Monomial::neg_q(1), 2, 25, 50).unwrap();
        assert!(check::compare(&lhs, &rhs, 50).unwrap().holds());
    }

    #[test]
    fn theorem1_low_degrees() {
        let f = theorem1_double(30, 4);
        assert_eq!(f.x_coeff(0), LaurentQSeries::one(30));
        let single = LaurentQSeries::from_terms((1..30).map(|k| (k, 1)), 30);
        assert_eq!(f.x_coeff(1), single);
        let enumerated = generating_function(&GapRule::schur(), 30, 4);
        assert!(check::compare_x(&f, &enumerated, 30, 4).unwrap().holds());
    }

    #[test]
    fn theorem1_specialization_matches_dp() {
        for k in 0..3 {
            let lhs = theorem1_at(k, 40);
            let rhs = crate::partitions::specialized_series(&GapRule::schur(), k as u64, 40);
            assert!(check::compare(&lhs, &rhs, 40).unwrap().holds(), "k={k}");
        }
    }

    #[test]
    fn x_weighted_r_sums_match_double_series() {
        let rho = r_series_x(&DoubleSeriesParams::new(3, 1, 0, 2, 3, 4), 30, 6).unwrap();
        assert!(check::compare_x(&rho, &theorem1_double(30, 6), 30, 6).unwrap().holds());
        let gg = r_series_x(&DoubleSeriesParams::new(2, 1, 0, 2, 2, 2), 30, 6).unwrap();
        let gg2 = theorem2_double(GgFamily::GollnitzGordon, 30, 6);
        assert!(check::compare_x(&gg, &gg2, 30, 6).unwrap().holds());
    }

    #[test]
    fn rec_checks_small() {
        for n in 0..=8 {
            assert!(check_rec1(0, 2, 3, 4, n, 30).unwrap().holds());
            assert!(check_rec2(2, 2, 2, n, 30).unwrap().holds());
        }
    }

    #[test]
    fn closed_forms_small() {
        for n in 0..=10 {
            assert!(closed_forms(n, 30).unwrap().holds(), "n={n}");
        }
    }

    #[test]
    fn capparelli_low_order() {
        let (lhs, rhs) = capparelli_sills(30).unwrap();
        assert!(check::compare(&lhs, &rhs, 30).unwrap().holds());
        assert_eq!(lhs.coeff(0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn alladi_berkovich_low_order() {
        for case in [AbCase::First, AbCase::Second] {
            let (lhs, rhs) = alladi_berkovich(case, 30, 4).unwrap();
            assert!(check::compare_x(&lhs, &rhs, 30, 4).unwrap().holds(), "{case:?}");
        }
    }

    #[test]
    fn euler_x_family() {
        // sum x^n q^(n^2) r(0,1,2,1;n) = (-xq; q^2)_inf
        let t = 30;
        let d = 5;
        let lhs = r_series_x(&DoubleSeriesParams::new(2, 1, 0, 1, 2, 1), t, d).unwrap();
        let rhs = poch_infinite(&Monomial::new(-1, 1, 1), 2, t, d).unwrap();
        assert!(check::compare_x(&lhs, &rhs, t, d).unwrap().holds());
    }
}
