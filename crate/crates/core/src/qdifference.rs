//! Linear q-difference equations `f(x) = sum_i c_i(x,q) f(x q^k_i)` and coefficient
//! recurrences in `n` with Laurent-polynomial coefficients `sum c q^(a n + b)`.

use serde::{Deserialize, Serialize};

use crate::check::{self, Outcome};
use crate::double_series::{r_value, RCache};
use crate::error::{Error, Result};
use crate::series::LaurentQSeries;
use crate::xseries::{Monomial, XSeries};

/// `coeff(x, q) * f(x q^dilation)`. Coefficients are polynomials given as
/// `(integer, x-power, q-power)` terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilationTerm {
    pub coeff: Vec<(i64, usize, i64)>,
    pub dilation: i64,
}

impl DilationTerm {
    pub fn new(coeff: &[(i64, usize, i64)], dilation: i64) -> Self {
        assert!(dilation >= 0, "dilations are x -> x q^k with k >= 0");
        DilationTerm {
            coeff: coeff.to_vec(),
            dilation,
        }
    }
}

/// Right-hand side `sum coeff * f(x q^k)` of a q-difference equation.
pub fn apply_dilations(terms: &[DilationTerm], f: &XSeries) -> Result<XSeries> {
    let (trunc, d) = (f.trunc(), f.xdeg_bound());
    let mut acc = XSeries::zero(trunc, d);
    for t in terms {
        let shifted = f.substitute(&Monomial::xq(t.dilation), 1)?;
        // the coefficient is a polynomial, exact to any order; known past `trunc` is enough
        let degree = t.coeff.iter().map(|c| c.2).max().unwrap_or(0);
        let known = trunc.max(degree + 1) - f.valuation().min(0);
        let coeff = XSeries::from_terms(t.coeff.iter().copied(), known, d);
        acc = &acc + &(&coeff * &shifted);
    }
    Ok(acc)
}

/// Compares `f` with the right-hand side for x-degrees `<= xdeg` and q-exponents below
/// `trunc`, reporting the first nonzero residual coefficient.
///
/// Dilations by `x q^k` with `k >= 0` never lower the known region, so the residual is
/// meaningful everywhere that `f` itself is known.
pub fn check_qdiff(terms: &[DilationTerm], f: &XSeries, trunc: i64, xdeg: usize) -> Result<Outcome> {
    let rhs = apply_dilations(terms, f)?;
    check::compare_x(f, &rhs, trunc, xdeg)
}

/// `f = (1 + xq + xq^2) f(xq^3) + xq^3 (1 - xq^3) f(xq^6)`.
pub fn schur_short() -> Vec<DilationTerm> {
    vec![
        DilationTerm::new(&[(1, 0, 0), (1, 1, 1), (1, 1, 2)], 3),
        DilationTerm::new(&[(1, 1, 3), (-1, 2, 6)], 6),
    ]
}

/// `f = (1 + xq + xq^2 + xq^3) f(xq^3) - (x^2q^6 + x^2q^7 + x^2q^8) f(xq^6) + (x^3q^15 - x^2q^9) f(xq^9)`.
pub fn schur_long() -> Vec<DilationTerm> {
    vec![
        DilationTerm::new(&[(1, 0, 0), (1, 1, 1), (1, 1, 2), (1, 1, 3)], 3),
        DilationTerm::new(&[(-1, 2, 6), (-1, 2, 7), (-1, 2, 8)], 6),
        DilationTerm::new(&[(1, 3, 15), (-1, 2, 9)], 9),
    ]
}

/// `f = (1 + xq + xq^2) f(xq^2) - x^2q^5 f(xq^4) - x^2q^6 f(xq^6)`.
pub fn gg_long() -> Vec<DilationTerm> {
    vec![
        DilationTerm::new(&[(1, 0, 0), (1, 1, 1), (1, 1, 2)], 2),
        DilationTerm::new(&[(-1, 2, 5)], 4),
        DilationTerm::new(&[(-1, 2, 6)], 6),
    ]
}

/// `f = (1 + xq) f(xq^2) + xq^2 f(xq^4)`.
pub fn gg_short() -> Vec<DilationTerm> {
    vec![
        DilationTerm::new(&[(1, 0, 0), (1, 1, 1)], 2),
        DilationTerm::new(&[(1, 1, 2)], 4),
    ]
}

/// `f = (1 + xq + xq^2) f(xq^2) - x^2q^5 f(xq^4) - x^2q^4 f(xq^6)`.
pub fn g_long() -> Vec<DilationTerm> {
    vec![
        DilationTerm::new(&[(1, 0, 0), (1, 1, 1), (1, 1, 2)], 2),
        DilationTerm::new(&[(-1, 2, 5)], 4),
        DilationTerm::new(&[(-1, 2, 4)], 6),
    ]
}

/// `f = (1 + xq^2) f(xq^2) + xq f(xq^4)`.
pub fn g_short() -> Vec<DilationTerm> {
    vec![
        DilationTerm::new(&[(1, 0, 0), (1, 1, 2)], 2),
        DilationTerm::new(&[(1, 1, 1)], 4),
    ]
}

/// `f(x) - f(xq^2) = (1+q) xq f(xq^2) - q^2 x f(xq^4) - x^2 q^5 f(xq^4)`, solved for `f(x)`.
pub fn euler_long() -> Vec<DilationTerm> {
    vec![
        DilationTerm::new(&[(1, 0, 0), (1, 1, 1), (1, 1, 2)], 2),
        DilationTerm::new(&[(-1, 1, 2), (-1, 2, 5)], 4),
    ]
}

/// One `(c, a, b)` term `c q^(a n + b)`.
pub type QnTerm = (i64, i64, i64);

/// `sum c q^(a n + b)` over `(c, a, b)` terms: a Laurent polynomial depending on `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QnPoly(pub Vec<QnTerm>);

impl QnPoly {
    pub fn new(terms: &[QnTerm]) -> Self {
        QnPoly(terms.to_vec())
    }

    fn exponents(&self, n: i64) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(move |&(c, a, b)| (a * n + b, c))
    }

    /// The polynomial at `n`, recorded as known below `trunc` (or its degree, if higher).
    pub fn eval(&self, n: i64, trunc: i64) -> LaurentQSeries {
        let deg = self.exponents(n).map(|(e, _)| e).max().unwrap_or(0);
        LaurentQSeries::from_terms(self.exponents(n), trunc.max(deg + 1))
    }

    /// `self(n) * u`, known as far as `u` permits.
    pub fn times(&self, n: i64, u: &LaurentQSeries) -> LaurentQSeries {
        let p = self.eval(n, i64::MIN);
        if p.is_zero() {
            return LaurentQSeries::zero(u.trunc());
        }
        let vp = p.valuation();
        let needed = if u.is_zero() {
            vp
        } else {
            u.trunc() + vp - u.valuation()
        };
        &self.eval(n, needed) * u
    }
}

/// `lhs(n) U(n) = sum_i coeff_i(n) U(n - shift_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecurrence {
    pub lhs: QnPoly,
    pub terms: Vec<(i64, QnPoly)>,
}

impl CoeffRecurrence {
    fn value(seq: &[LaurentQSeries], k: i64, trunc: i64) -> LaurentQSeries {
        if k < 0 {
            LaurentQSeries::zero(trunc)
        } else {
            seq[k as usize].clone()
        }
    }

    fn rhs(&self, seq: &[LaurentQSeries], n: i64, trunc: i64) -> LaurentQSeries {
        // negative indices are exact zeros, not zeros known only below trunc
        self.terms
            .iter()
            .filter(|(s, _)| n - s >= 0)
            .fold(LaurentQSeries::zero(trunc), |acc, (s, c)| {
                &acc + &c.times(n, &Self::value(seq, n - s, trunc))
            })
    }
}

/// Extends `init` (values at `n = 0, 1, ..`; negative indices are zero) to `0..=n_max`.
///
/// Each step divides by `lhs(n)`, whose lowest coefficient must be `+-1`; otherwise
/// [`Error::NotAUnit`].
pub fn solve_recurrence(
    rec: &CoeffRecurrence,
    init: &[LaurentQSeries],
    n_max: i64,
    trunc: i64,
) -> Result<Vec<LaurentQSeries>> {
    let mut seq: Vec<LaurentQSeries> = init.iter().map(|s| s.truncate(trunc)).collect();
    for n in init.len() as i64..=n_max {
        let num = rec.rhs(&seq, n, trunc);
        let den = rec.lhs.eval(n, i64::MIN);
        if den.is_zero() {
            return Err(Error::NotAUnit);
        }
        let vd = den.valuation();
        let next = if num.is_zero() {
            LaurentQSeries::zero(num.trunc() - vd)
        } else {
            // divide by the valuation-0 unit q^-vd lhs(n), then shift back
            let unit = rec.lhs.eval(n, num.trunc() - num.valuation() + vd).shift(-vd);
            (&num * &unit.invert()?).shift(-vd)
        };
        seq.push(next);
    }
    Ok(seq)
}

/// Checks `lhs(n) a(n) = sum coeff_i(n) a(n - shift_i)` for `n` in `ns`, below `trunc`.
pub fn check_recurrence(
    rec: &CoeffRecurrence,
    seq: &[LaurentQSeries],
    ns: impl IntoIterator<Item = i64>,
    trunc: i64,
) -> Result<Outcome> {
    check::all(ns.into_iter().map(|n| {
        let lhs = rec.lhs.times(n, &CoeffRecurrence::value(seq, n, trunc));
        let rhs = rec.rhs(seq, n, trunc);
        Ok(check::compare(&lhs, &rhs, trunc)?.with_context(|| format!("n={n}")))
    }))
}

fn rec(lhs: &[QnTerm], terms: &[(i64, &[QnTerm])]) -> CoeffRecurrence {
    CoeffRecurrence {
        lhs: QnPoly::new(lhs),
        terms: terms.iter().map(|&(s, c)| (s, QnPoly::new(c))).collect(),
    }
}

/// `(1-q^3n) U(n) = (q^(3n-2) + q^(3n-1) + q^(6n-3)) U(n-1) - q^(6n-6) U(n-2)`.
pub fn schur_u_short() -> CoeffRecurrence {
    rec(
        &[(1, 0, 0), (-1, 3, 0)],
        &[(1, &[(1, 3, -2), (1, 3, -1), (1, 6, -3)]), (2, &[(-1, 6, -6)])],
    )
}

/// `(1-q^3n) U(n) = q^(3n-2)(1+q+q^2) U(n-1) - q^(6n-6)(1+q+q^2+q^(3n-3)) U(n-2) + q^(9n-12) U(n-3)`.
pub fn schur_u_long() -> CoeffRecurrence {
    rec(
        &[(1, 0, 0), (-1, 3, 0)],
        &[
            (1, &[(1, 3, -2), (1, 3, -1), (1, 3, 0)]),
            (2, &[(-1, 6, -6), (-1, 6, -5), (-1, 6, -4), (-1, 9, -9)]),
            (3, &[(1, 9, -12)]),
        ],
    )
}

/// `(1-q^3n) rho(n) = (1+q+q^2) rho(n-1) - q(1+q+q^2+q^(3n-3)) rho(n-2) + q^3 rho(n-3)`
/// for `rho(n) = r(0,2,3,4;n)`.
pub fn schur_rho() -> CoeffRecurrence {
    rec(
        &[(1, 0, 0), (-1, 3, 0)],
        &[
            (1, &[(1, 0, 0), (1, 0, 1), (1, 0, 2)]),
            (2, &[(-1, 0, 1), (-1, 0, 2), (-1, 0, 3), (-1, 3, -2)]),
            (3, &[(1, 0, 3)]),
        ],
    )
}

/// `(1-q^2n) rho(n) = (1+q) rho(n-1) - (q + q^(2n-2-shift)) rho(n-2)`; `shift` is 0 for
/// `r(0,2,2,2;n)` and 2 for `r(0,2,2,0;n)`.
pub fn gg_rho(shift: i64) -> CoeffRecurrence {
    rec(
        &[(1, 0, 0), (-1, 2, 0)],
        &[(1, &[(1, 0, 0), (1, 0, 1)]), (2, &[(-1, 0, 1), (-1, 2, -2 - shift)])],
    )
}

/// `(1-q^2n) u(n) = q^(2n-1)(1+q) u(n-1) - q^(4n-3)(1 + q^(2n-3)) u(n-2)`.
pub fn gg_u() -> CoeffRecurrence {
    rec(
        &[(1, 0, 0), (-1, 2, 0)],
        &[(1, &[(1, 2, -1), (1, 2, 0)]), (2, &[(-1, 4, -3), (-1, 6, -6)])],
    )
}

/// `(1-q^2n) rho(n) = (1 + q - q^(2n-1)) rho(n-1) - q rho(n-2)` for `rho(n) = r(0,1,2,1;n)`.
pub fn euler_rho() -> CoeffRecurrence {
    rec(
        &[(1, 0, 0), (-1, 2, 0)],
        &[(1, &[(1, 0, 0), (1, 0, 1), (-1, 2, -1)]), (2, &[(-1, 0, 1)])],
    )
}

/// `r(0,u,v,w;n)` for `n = 0..=n_max`.
pub fn rho_values(u: i64, v: i64, w: i64, n_max: i64, trunc: i64) -> Result<Vec<LaurentQSeries>> {
    (0..=n_max).map(|n| r_value(0, u, v, w, n, trunc)).collect()
}

/// The seven relations among `rho_l(n) = r(l,2,3,4;n)` obtained from the two
/// `r`-recurrences, then the eliminated third-order recurrence for `rho_0`, for `n <= n_max`.
pub fn check_rho_system(trunc: i64, n_max: i64) -> Result<Outcome> {
    // -q^-2 rho_0(n-2) loses two orders
    let mut cache = RCache::new(trunc + 2);
    let mut rho = |l: i64, n: i64| cache.get(l, 2, 3, 4, n);
    let mut out = Vec::new();
    for n in 0..=n_max {
        let step = |a: LaurentQSeries, b: LaurentQSeries, lifted: LaurentQSeries, k: i64| {
            // a - b = q^k lifted
            check::compare(&(&a - &b), &lifted.shift(k), trunc)
        };
        let relations = [
            step(rho(0, n)?, rho(0, n - 1)?, rho(1, n)?, n)?,
            step(rho(0, n - 1)?, rho(0, n - 2)?, rho(1, n - 1)?, n - 1)?,
            step(rho(0, n - 2)?, rho(0, n - 3)?, rho(1, n - 2)?, n - 2)?,
            step(rho(1, n)?, rho(1, n - 1)?, rho(2, n)?, n)?,
            step(rho(1, n - 1)?, rho(1, n - 2)?, rho(2, n - 1)?, n - 1)?,
            step(rho(2, n)?, rho(2, n - 1)?, rho(3, n)?, n)?,
            check::compare(&(&rho(3, n)? - &rho(0, n)?), &(-rho(0, n - 2)?.shift(-2)), trunc)?,
        ];
        for (i, o) in relations.into_iter().enumerate() {
            out.push(o.with_context(|| format!("relation {} of 7, n={n}", i + 1)));
        }
    }
    if let Some(bad) = out.into_iter().find(|o| !o.holds()) {
        return Ok(bad);
    }
    let seq = rho_values(2, 3, 4, n_max, trunc)?;
    Ok(check_recurrence(&schur_rho(), &seq, 1..=n_max, trunc)?.with_context(|| "eliminated recurrence".into()))
}

/// `u_S(n) = q^(n(3n-1)/2) r(0,2,3,4;n)` agrees with the solutions `U_S(n)` of both the
/// short and the long recurrence, for `n <= n_max`.
pub fn check_schur_u(trunc: i64, n_max: i64) -> Result<Outcome> {
    let one = [LaurentQSeries::one(trunc)];
    let short = solve_recurrence(&schur_u_short(), &one, n_max, trunc)?;
    let long = solve_recurrence(&schur_u_long(), &one, n_max, trunc)?;
    check::all((0..=n_max).flat_map(|n| {
        let e = n * (3 * n - 1) / 2;
        let u = r_value(0, 2, 3, 4, n, trunc - e).map(|r| r.shift(e));
        let (s, l) = (&short[n as usize], &long[n as usize]);
        [
            check::compare(s, l, trunc).map(|o| o.with_context(|| format!("short vs long, n={n}"))),
            u.and_then(|u| check::compare(&u, s, trunc))
                .map(|o| o.with_context(|| format!("u_S vs U_S, n={n}"))),
        ]
    }))
}

/// `u_GG(n) = q^(n^2) r(0,2,2,2;n)` satisfies its recurrence, and equals its solution
/// from `u(0) = 1`, for `n <= n_max`.
pub fn check_gg_u(trunc: i64, n_max: i64) -> Result<Outcome> {
    let u: Vec<LaurentQSeries> = (0..=n_max)
        .map(|n| r_value(0, 2, 2, 2, n, trunc - n * n).map(|r| r.shift(n * n)))
        .collect::<Result<_>>()?;
    let solved = solve_recurrence(&gg_u(), &[LaurentQSeries::one(trunc)], n_max, trunc)?;
    check::all(
        [check_recurrence(&gg_u(), &u, 1..=n_max, trunc)]
            .into_iter()
            .chain((0..=n_max).map(|n| {
                check::compare(&u[n as usize], &solved[n as usize], trunc)
                    .map(|o| o.with_context(|| format!("u_GG vs solution, n={n}")))
            })),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{generating_function, GapRule};
    use num_bigint::BigInt;

    #[test]
    fn schur_equations_hold_on_enumeration() {
        let f = generating_function(&GapRule::schur(), 40, 8);
        assert!(check_qdiff(&schur_short(), &f, 40, 8).unwrap().holds());
        assert!(check_qdiff(&schur_long(), &f, 40, 8).unwrap().holds());
        // a wrong equation must be caught
        let wrong = vec![DilationTerm::new(&[(1, 0, 0), (1, 1, 1)], 3)];
        assert!(!check_qdiff(&wrong, &f, 40, 8).unwrap().holds());
    }

    #[test]
    fn zero_satisfies_homogeneous() {
        let z = XSeries::zero(20, 5);
        assert!(check_qdiff(&schur_short(), &z, 20, 5).unwrap().holds());
    }

    #[test]
    fn u_s_first_values() {
        let u = solve_recurrence(&schur_u_short(), &[LaurentQSeries::one(30)], 3, 30).unwrap();
        assert_eq!(u[0], LaurentQSeries::one(30));
        assert_eq!(u[1], LaurentQSeries::from_terms((1..30).map(|k| (k, 1)), 30));
        assert_eq!(u[2].coeff(5).unwrap(), BigInt::from(1));
    }

    #[test]
    fn rho_systems_small() {
        assert!(check_rho_system(30, 6).unwrap().holds());
        assert!(check_schur_u(30, 6).unwrap().holds());
        assert!(check_gg_u(30, 6).unwrap().holds());
        for (rec, (u, v, w)) in [(gg_rho(0), (2, 2, 2)), (gg_rho(2), (2, 2, 0)), (euler_rho(), (1, 2, 1))] {
            let seq = rho_values(u, v, w, 8, 30).unwrap();
            assert!(check_recurrence(&rec, &seq, 1..=8, 30).unwrap().holds(), "{u}{v}{w}");
        }
    }

    #[test]
    fn qn_poly_times_keeps_precision() {
        let p = QnPoly::new(&[(-1, 0, -2)]);
        let u = LaurentQSeries::one(10);
        let r = p.times(0, &u);
        assert_eq!(r.trunc(), 8);
        assert_eq!(r.coeff(-2).unwrap(), BigInt::from(-1));
    }
}
