//! The identity registry: every verifiable statement, by stable id.
//!
//! Each entry checks both sides coefficientwise below a truncation order and up to
//! an x-degree bound. Entries that are not series identities read `order` as the
//! largest partition size (bijections) or ignore it where noted in their citation.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::check::{self, Discrepancy, Outcome};
use crate::double_series::{
    alladi_berkovich, capparelli_sills, check_rec1, check_rec2, closed_forms, g1_single_sum, gg_single_sum,
    gg_single_sum_at, normalization_shift, r_series, r_series_x, theorem1_at, theorem1_double, theorem2_at,
    theorem2_double, AbCase, DoubleSeriesParams, GgFamily,
};
use crate::error::{Error, Result};
use crate::hypergeometric::{
    check_bridge, check_chu2, check_chu_vandermonde, check_gauss_triangular, check_gg_parity_evaluation,
    check_heine_special, check_phi_bridge, check_qbinomial_theorem, check_qnegn, check_qtlim,
};
use crate::partitions::{
    generating_function, remove_triangle, specialized_series, verify_bijection, GapRule, Partition,
};
use crate::pochhammer::{poch_infinite, poch_infinite_many, recip_poch_infinite_q};
use crate::qdifference::{
    check_gg_u, check_qdiff, check_recurrence, check_rho_system, check_schur_u, euler_long, euler_rho, g_long, g_short,
    gg_long, gg_rho, gg_short, rho_values, schur_long, schur_short, DilationTerm,
};
use crate::series::LaurentQSeries;
use crate::xseries::{Monomial, XSeries};

/// One registered identity.
#[derive(Clone, Copy)]
pub struct Identity {
    pub id: &'static str,
    /// The statement being checked, as a formula.
    pub citation: &'static str,
    run: fn(i64, usize) -> Result<Outcome>,
}

impl Identity {
    /// Checks the identity below q^`order` and up to x^`xdeg`.
    pub fn check(&self, order: i64, xdeg: usize) -> Result<Outcome> {
        if order < 1 {
            return Err(Error::InvalidInput(format!("order must be at least 1, got {order}")));
        }
        (self.run)(order, xdeg)
    }

    /// Runs the check and times it.
    pub fn verify(&self, order: i64, xdeg: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let outcome = self.check(order, xdeg)?;
        Ok(VerificationReport::new(
            self,
            order,
            xdeg,
            outcome,
            start.elapsed().as_millis() as u64,
        ))
    }
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Result of one registry check. `status` is `fail` exactly when `first_discrepancy` is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub citation: String,
    pub trunc: i64,
    pub xdeg_bound: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(identity: &Identity, trunc: i64, xdeg_bound: usize, outcome: Outcome, elapsed_ms: u64) -> Self {
        let first_discrepancy = outcome.discrepancy().cloned();
        VerificationReport {
            identity_id: identity.id.to_string(),
            citation: identity.citation.to_string(),
            trunc,
            xdeg_bound,
            status: if first_discrepancy.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_discrepancy,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Looks up an identity by id.
pub fn find(id: &str) -> Result<&'static Identity> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity {
            id: id.to_string(),
            valid: ids().join(", "),
        })
}

/// All registered ids, in registry order.
pub fn ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.id).collect()
}

pub fn registry() -> &'static [Identity] {
    REGISTRY
}

// ---- helpers ----

fn q_only(x: XSeries) -> LaurentQSeries {
    x.x_coeff(0)
}

/// `(a_1, .., a_k; q^step)_inf` for q-only parameters.
fn product(params: &[Monomial], step: i64, trunc: i64) -> Result<LaurentQSeries> {
    Ok(q_only(poch_infinite_many(params, step, trunc, 0)?))
}

/// `1 / (q^a_1, .., q^a_k; q^step)_inf`.
fn recip_product(exps: &[i64], step: i64, trunc: i64) -> Result<LaurentQSeries> {
    exps.iter().try_fold(LaurentQSeries::one(trunc), |acc, &a| {
        Ok(&acc * &recip_poch_infinite_q(&Monomial::q(a), step, trunc)?)
    })
}

fn compare_ctx(
    lhs: &LaurentQSeries,
    rhs: &LaurentQSeries,
    trunc: i64,
    ctx: impl FnOnce() -> String,
) -> Result<Outcome> {
    Ok(check::compare(lhs, rhs, trunc)?.with_context(ctx))
}

fn compare_x_ctx(
    lhs: &XSeries,
    rhs: &XSeries,
    trunc: i64,
    xdeg: usize,
    ctx: impl FnOnce() -> String,
) -> Result<Outcome> {
    Ok(check::compare_x(lhs, rhs, trunc, xdeg)?.with_context(ctx))
}

/// Generating function of a family with parts at least `t`, at `x = 1`.
fn family_at_one(rule: GapRule, t: u64, trunc: i64) -> Result<LaurentQSeries> {
    Ok(specialized_series(&rule.with_min_part(t)?, 0, trunc))
}

fn r_params(s: i64, t: i64, l: i64, u: i64, v: i64, w: i64) -> DoubleSeriesParams {
    DoubleSeriesParams::new(s, t, l, u, v, w)
}

fn qdiff_on(terms: &[DilationTerm], fs: Vec<(&str, XSeries)>, trunc: i64, xdeg: usize) -> Result<Outcome> {
    check::all(
        fs.into_iter()
            .map(|(name, f)| Ok(check_qdiff(terms, &f, trunc, xdeg)?.with_context(|| format!("applied to {name}")))),
    )
}

/// A bijection failure as a discrepancy at `x^length q^size`.
fn bijection(source: GapRule, target: GapRule, d: u64, max_size: i64) -> Result<Outcome> {
    let report = verify_bijection(&source, &target, d, max_size as u64);
    Ok(match report.failure {
        None => Outcome::Agree,
        Some((n, len, failure)) => {
            let (a, b) = match failure {
                crate::partitions::BijectionFailure::CountMismatch {
                    source_count,
                    target_count,
                } => (source_count, target_count),
                _ => (1, 0),
            };
            let detail = serde_json::to_string(&failure).unwrap_or_default();
            Outcome::Disagree(Discrepancy::new(len as i64, n as i64, a.into(), b.into()).with_context(detail))
        }
    })
}

/// Monomial pairs `(a, c)` for the terminating summations, with no vanishing
/// denominators in base `q^s`: `c`, `c/a` and `c/(a q^s)` are never `+-1` or `q^k` with `k < 0`.
fn summation_grid(s: i64) -> Vec<(Monomial, Monomial)> {
    let a_vals = [
        Monomial::q(1),
        Monomial::q(2),
        Monomial::neg_q(1),
        Monomial::neg_q(-1),
        Monomial::q(-2),
    ];
    let c_vals = [Monomial::q(5), Monomial::neg_q(2), Monomial::q(4), Monomial::neg_q(3)];
    // 1 - m must be a unit: not 0 and not 2
    let bad = |m: Monomial| m.qpow == 0 || (m.sign == 1 && m.qpow < 0);
    let mut out = Vec::new();
    for a in a_vals {
        for c in c_vals {
            let ok = |m: &Monomial| c.over(m).is_some_and(|b| !bad(b));
            if !bad(c) && ok(&a) && ok(&a.times(&Monomial::q(s))) {
                out.push((a, c));
            }
        }
    }
    out
}

// ---- entries ----

fn theorem1(t: i64, d: usize) -> Result<Outcome> {
    let enumerated = generating_function(&GapRule::schur(), t, d);
    check::compare_x(&theorem1_double(t, d), &enumerated, t, d)
}

fn schur_product(t: i64, _: usize) -> Result<Outcome> {
    let rhs = product(&[Monomial::neg_q(1), Monomial::neg_q(2)], 3, t)?;
    check::all([
        compare_ctx(&specialized_series(&GapRule::schur(), 0, t), &rhs, t, || {
            "enumeration".into()
        }),
        compare_ctx(&theorem1_at(0, t), &rhs, t, || "double series at x = 1".into()),
    ])
}

fn theorem2(family: GgFamily, rule: GapRule, t: i64, d: usize) -> Result<Outcome> {
    let enumerated = generating_function(&rule, t, d);
    check::compare_x(&theorem2_double(family, t, d), &enumerated, t, d)
}

fn theorem2_gg(t: i64, d: usize) -> Result<Outcome> {
    theorem2(GgFamily::GollnitzGordon, GapRule::gollnitz_gordon(), t, d)
}

fn theorem2_g(t: i64, d: usize) -> Result<Outcome> {
    theorem2(GgFamily::Gollnitz, GapRule::gollnitz(), t, d)
}

fn gg_single(t: i64, d: usize) -> Result<Outcome> {
    check::all([
        compare_x_ctx(
            &theorem2_double(GgFamily::GollnitzGordon, t, d),
            &gg_single_sum(t, d),
            t,
            d,
            || "as series in x".into(),
        ),
        compare_ctx(
            &theorem2_at(GgFamily::GollnitzGordon, 0, t),
            &gg_single_sum_at(0, t)?,
            t,
            || "at x = 1".into(),
        ),
    ])
}

fn gollnitz_gordon(tp: u64, t: i64) -> Result<Outcome> {
    let rhs = recip_product(&[tp as i64, 4, 8 - tp as i64], 8, t)?;
    check::all([
        compare_ctx(&family_at_one(GapRule::gollnitz_gordon(), tp, t)?, &rhs, t, || {
            "enumeration".into()
        }),
        compare_ctx(
            &theorem2_at(GgFamily::GollnitzGordon, tp as i64 - 1, t),
            &rhs,
            t,
            || "double series".into(),
        ),
    ])
}

fn gollnitz_gordon_1(t: i64, _: usize) -> Result<Outcome> {
    gollnitz_gordon(1, t)
}

fn gollnitz_gordon_3(t: i64, _: usize) -> Result<Outcome> {
    gollnitz_gordon(3, t)
}

fn little_gollnitz_1(t: i64, _: usize) -> Result<Outcome> {
    let rhs = recip_product(&[1, 5, 6], 8, t)?;
    check::all([
        compare_ctx(&family_at_one(GapRule::gollnitz(), 1, t)?, &rhs, t, || {
            "enumeration".into()
        }),
        compare_ctx(&theorem2_at(GgFamily::Gollnitz, 0, t), &rhs, t, || {
            "double series".into()
        }),
    ])
}

fn little_gollnitz_2(t: i64, _: usize) -> Result<Outcome> {
    let rhs = recip_product(&[2, 3, 7], 8, t)?;
    check::all([
        compare_ctx(&family_at_one(GapRule::gollnitz(), 2, t)?, &rhs, t, || {
            "enumeration".into()
        }),
        compare_ctx(&gg_single_sum_at(1, t)?, &rhs, t, || "f_GG(q)".into()),
    ])
}

fn g1_single(t: i64, d: usize) -> Result<Outcome> {
    let rule = GapRule::gollnitz().with_min_part(1)?;
    check::compare_x(&g1_single_sum(t, d), &generating_function(&rule, t, d), t, d)
}

fn g2_shift(t: i64, d: usize) -> Result<Outcome> {
    // f_G2(x) = f_GG(xq)
    let rule = GapRule::gollnitz().with_min_part(2)?;
    let shifted = gg_single_sum(t, d).substitute(&Monomial::xq(1), 1)?;
    check::compare_x(&shifted, &generating_function(&rule, t, d), t, d)
}

fn r_specializations(t: i64, _: usize) -> Result<Outcome> {
    let cases = [
        ("S", (3, 0, 2, 3, 4), GapRule::schur()),
        ("GG", (2, 0, 2, 2, 2), GapRule::gollnitz_gordon()),
        ("G", (2, 1, 2, 2, 2), GapRule::gollnitz()),
    ];
    check::all(cases.into_iter().flat_map(|(name, (s, l, u, v, w), rule)| {
        (1..=3).map(move |tp| {
            let lhs = r_series(&r_params(s, tp, l, u, v, w), t)?;
            let rhs = specialized_series(&rule, (tp - 1) as u64, t);
            compare_ctx(&lhs, &rhs, t, || format!("f_{name} at x = q^{}", tp - 1))
        })
    }))
}

fn euler_odd(t: i64, _: usize) -> Result<Outcome> {
    check::compare(
        &r_series(&r_params(2, 1, 1, 1, 2, 2), t)?,
        &product(&[Monomial::neg_q(1)], 2, t)?,
        t,
    )
}

fn euler_even(t: i64, _: usize) -> Result<Outcome> {
    check::compare(
        &r_series(&r_params(2, 2, 1, 1, 2, 2), t)?,
        &product(&[Monomial::neg_q(2)], 2, t)?,
        t,
    )
}

fn triangular_product(t: i64, _: usize) -> Result<Outcome> {
    check::all((1..=6).map(|m| {
        let lhs = r_series(&r_params(m, m, 1, 1, 1, 2), t)?;
        let num = product(&[Monomial::q(2 * m)], 2 * m, t)?;
        let rhs = &num * &recip_poch_infinite_q(&Monomial::q(m), 2 * m, t)?;
        compare_ctx(&lhs, &rhs, t, || format!("m={m}"))
    }))
}

fn euler_x(t: i64, d: usize) -> Result<Outcome> {
    let lhs = r_series_x(&r_params(2, 1, 0, 1, 2, 1), t, d)?;
    check::compare_x(&lhs, &poch_infinite(&Monomial::new(-1, 1, 1), 2, t, d)?, t, d)
}

const REC_GRID_N: i64 = 12;

fn rec_grid() -> impl Iterator<Item = (i64, i64, i64, i64, i64)> {
    (0..=3).flat_map(|l| {
        (1..=2).flat_map(move |u| {
            (1..=3).flat_map(move |v| (0..=4).flat_map(move |w| (0..=REC_GRID_N).map(move |n| (l, u, v, w, n))))
        })
    })
}

fn r_recurrence_1(t: i64, _: usize) -> Result<Outcome> {
    check::all(rec_grid().map(|(l, u, v, w, n)| {
        Ok(check_rec1(l, u, v, w, n, t)?.with_context(|| format!("(l,u,v,w;n) = ({l},{u},{v},{w};{n})")))
    }))
}

fn r_recurrence_2(t: i64, _: usize) -> Result<Outcome> {
    check::all(rec_grid().filter(|&(l, ..)| l == 0).map(|(_, u, v, w, n)| {
        Ok(check_rec2(u, v, w, n, t)?.with_context(|| format!("(u,v,w;n) = ({u},{v},{w};{n})")))
    }))
}

fn r_normalization(t: i64, _: usize) -> Result<Outcome> {
    check::all(rec_grid().map(|(l, u, v, w, n)| {
        Ok(normalization_shift(l, u, v, w, n, t)?.with_context(|| format!("(l,u,v,w;n) = ({l},{u},{v},{w};{n})")))
    }))
}

fn f_s_sides(t: i64, d: usize) -> Vec<(&'static str, XSeries)> {
    vec![
        ("the enumeration", generating_function(&GapRule::schur(), t, d)),
        ("the double series", theorem1_double(t, d)),
    ]
}

fn qdiff_schur_short(t: i64, d: usize) -> Result<Outcome> {
    qdiff_on(&schur_short(), f_s_sides(t, d), t, d)
}

fn qdiff_schur_long(t: i64, d: usize) -> Result<Outcome> {
    qdiff_on(&schur_long(), f_s_sides(t, d), t, d)
}

fn gg_sides(t: i64, d: usize) -> Result<Vec<(&'static str, XSeries)>> {
    Ok(vec![
        (
            "the enumeration",
            generating_function(&GapRule::gollnitz_gordon(), t, d),
        ),
        ("the single sum", gg_single_sum(t, d)),
        (
            "sum x^n q^(n^2) r(0,2,2,2;n)",
            r_series_x(&r_params(2, 1, 0, 2, 2, 2), t, d)?,
        ),
    ])
}

fn g_sides(t: i64, d: usize) -> Result<Vec<(&'static str, XSeries)>> {
    Ok(vec![
        ("the enumeration", generating_function(&GapRule::gollnitz(), t, d)),
        (
            "sum x^n q^(n^2) r(1,2,2,2;n)",
            r_series_x(&r_params(2, 1, 1, 2, 2, 2), t, d)?,
        ),
    ])
}

fn qdiff_gg_long(t: i64, d: usize) -> Result<Outcome> {
    qdiff_on(&gg_long(), gg_sides(t, d)?, t, d)
}

fn qdiff_gg_short(t: i64, d: usize) -> Result<Outcome> {
    qdiff_on(&gg_short(), gg_sides(t, d)?, t, d)
}

fn qdiff_g_long(t: i64, d: usize) -> Result<Outcome> {
    qdiff_on(&g_long(), g_sides(t, d)?, t, d)
}

fn qdiff_g_short(t: i64, d: usize) -> Result<Outcome> {
    qdiff_on(&g_short(), g_sides(t, d)?, t, d)
}

fn qdiff_euler(t: i64, d: usize) -> Result<Outcome> {
    let sides = vec![
        (
            "sum x^n q^(n^2) r(0,1,2,1;n)",
            r_series_x(&r_params(2, 1, 0, 1, 2, 1), t, d)?,
        ),
        ("(-xq;q^2)_inf", poch_infinite(&Monomial::new(-1, 1, 1), 2, t, d)?),
    ];
    qdiff_on(&euler_long(), sides, t, d)
}

const RHO_N: i64 = 12;
const U_N: i64 = 20;

fn rho_recurrence(rec: crate::qdifference::CoeffRecurrence, (u, v, w): (i64, i64, i64), t: i64) -> Result<Outcome> {
    let seq = rho_values(u, v, w, RHO_N, t)?;
    check_recurrence(&rec, &seq, 1..=RHO_N, t)
}

fn rho_euler(t: i64, _: usize) -> Result<Outcome> {
    rho_recurrence(euler_rho(), (1, 2, 1), t)
}

fn rho_gg(t: i64, _: usize) -> Result<Outcome> {
    rho_recurrence(gg_rho(0), (2, 2, 2), t)
}

fn rho_g(t: i64, _: usize) -> Result<Outcome> {
    rho_recurrence(gg_rho(2), (2, 2, 0), t)
}

fn rho_system(t: i64, _: usize) -> Result<Outcome> {
    check_rho_system(t, RHO_N)
}

fn u_schur(t: i64, _: usize) -> Result<Outcome> {
    check_schur_u(t, U_N)
}

fn u_gg(t: i64, _: usize) -> Result<Outcome> {
    check_gg_u(t, U_N)
}

fn r_closed_forms(t: i64, _: usize) -> Result<Outcome> {
    check::all((0..=15).map(|n| closed_forms(n, t)))
}

fn pochhammer_bridge(t: i64, _: usize) -> Result<Outcome> {
    check::all((0..=12).flat_map(|n| (0..=n / 2).map(move |j| check_bridge(n, j, t))))
}

fn phi_bridge(t: i64, _: usize) -> Result<Outcome> {
    check::all((0..=12).flat_map(|n| (0..=1).map(move |u| check_phi_bridge(u, n, t))))
}

fn chu_vandermonde(t: i64, _: usize) -> Result<Outcome> {
    let grid = [1, 2].into_iter().flat_map(|s| {
        summation_grid(s)
            .into_iter()
            .flat_map(move |(a, c)| (0..=6).map(move |n| check_chu_vandermonde(&a, &c, n, s, t)))
    });
    check::all(grid.chain((0..=10).map(|big_n| check_gg_parity_evaluation(big_n, t))))
}

fn chu_second(t: i64, _: usize) -> Result<Outcome> {
    check::all([1, 2].into_iter().flat_map(|s| {
        summation_grid(s)
            .into_iter()
            .flat_map(move |(a, c)| (1..=6).map(move |n| check_chu2(&a, &c, n, s, t)))
    }))
}

fn heine_special(t: i64, _: usize) -> Result<Outcome> {
    check::all([1, 2].into_iter().flat_map(|s| {
        summation_grid(s).into_iter().flat_map(move |(a, c)| {
            (0..=5).flat_map(move |n| (0..=1).map(move |i| check_heine_special(&a, &c, n, i, s, t)))
        })
    }))
}

fn gauss_triangular(t: i64, _: usize) -> Result<Outcome> {
    check::all((1..=6).map(|m| check_gauss_triangular(m, t)))
}

fn qbinomial_theorem(t: i64, d: usize) -> Result<Outcome> {
    let params = [
        Monomial::q(1),
        Monomial::neg_q(2),
        Monomial::xq(0),
        Monomial::new(-1, 1, 2),
    ];
    check::all(params.into_iter().flat_map(|a| {
        (0..=10).map(move |n| Ok(check_qbinomial_theorem(&a, n, t, d)?.with_context(|| format!("a={a}, n={n}"))))
    }))
}

fn negative_power(t: i64, _: usize) -> Result<Outcome> {
    check::all((0..=10).flat_map(|n| (0..=n + 2).map(move |j| check_qnegn(n, j, t))))
}

fn t_limit(t: i64, _: usize) -> Result<Outcome> {
    check::all((0..=12).map(|j| check_qtlim(j, t)))
}

fn bijection_schur(max_size: i64, _: usize) -> Result<Outcome> {
    bijection(GapRule::schur(), GapRule::schur_image(), 3, max_size)
}

fn bijection_gg(max_size: i64, _: usize) -> Result<Outcome> {
    bijection(
        GapRule::gollnitz_gordon(),
        GapRule::gollnitz_gordon_image(),
        2,
        max_size,
    )
}

fn bijection_g(max_size: i64, _: usize) -> Result<Outcome> {
    bijection(GapRule::gollnitz(), GapRule::gollnitz_image(), 2, max_size)
}

fn triangle_example(_: i64, _: usize) -> Result<Outcome> {
    let source = Partition::new(vec![30, 26, 23, 18, 12, 8, 4, 1])?;
    let expected = Partition::new(vec![9, 8, 8, 6, 3, 2, 1, 1])?;
    let image = remove_triangle(&source, 3)?;
    if image == expected && GapRule::schur().admits(&source) && GapRule::schur_image().admits(&image) {
        return Ok(Outcome::Agree);
    }
    let d = Discrepancy::new(source.len() as i64, source.size() as i64, 1.into(), 0.into());
    Ok(Outcome::Disagree(d.with_context(format!(
        "{source} maps to {image}, expected {expected}"
    ))))
}

fn image_product(
    rule: GapRule,
    num: Vec<Monomial>,
    num_step: i64,
    den: Vec<Monomial>,
    den_step: i64,
    t: i64,
    d: usize,
) -> Result<Outcome> {
    let n = poch_infinite_many(&num, num_step, t, d)?;
    let inv = poch_infinite_many(&den, den_step, t, d)?.invert_unit()?;
    check::compare_x(&generating_function(&rule, t, d), &(&n * &inv), t, d)
}

fn schur_image_product(t: i64, d: usize) -> Result<Outcome> {
    image_product(
        GapRule::schur_image(),
        vec![Monomial::new(1, 2, 6)],
        6,
        vec![Monomial::xq(1)],
        1,
        t,
        d,
    )
}

fn gg_image_product(t: i64, d: usize) -> Result<Outcome> {
    image_product(
        GapRule::gollnitz_gordon_image(),
        vec![Monomial::new(-1, 1, 2)],
        2,
        vec![Monomial::xq(1)],
        2,
        t,
        d,
    )
}

fn g_image_product(t: i64, d: usize) -> Result<Outcome> {
    image_product(
        GapRule::gollnitz_image(),
        vec![Monomial::new(-1, 1, 1)],
        2,
        vec![Monomial::xq(2)],
        2,
        t,
        d,
    )
}

fn ab(case: AbCase, t: i64, d: usize) -> Result<Outcome> {
    let (lhs, rhs) = alladi_berkovich(case, t, d)?;
    let at_one = |s: &XSeries| -> Result<LaurentQSeries> {
        // w = 1 needs every w-degree that reaches below trunc
        Ok(s.x_coeffs().iter().fold(LaurentQSeries::zero(t), |acc, c| &acc + c))
    };
    let little = match case {
        AbCase::First => recip_product(&[1, 5, 6], 8, t)?,
        AbCase::Second => recip_product(&[2, 3, 7], 8, t)?,
    };
    let (full, _) = alladi_berkovich(case, t, t.max(0) as usize)?;
    check::all([
        compare_x_ctx(&lhs, &rhs, t, d, || "as series in w".into()),
        compare_ctx(&at_one(&full)?, &little, t, || "at w = 1".into()),
    ])
}

fn alladi_berkovich_1(t: i64, d: usize) -> Result<Outcome> {
    ab(AbCase::First, t, d)
}

fn alladi_berkovich_2(t: i64, d: usize) -> Result<Outcome> {
    ab(AbCase::Second, t, d)
}

fn capparelli(t: i64, _: usize) -> Result<Outcome> {
    let (lhs, rhs) = capparelli_sills(t)?;
    check::compare(&lhs, &rhs, t)
}

macro_rules! entry {
    ($id:literal, $cite:literal, $f:path) => {
        Identity {
            id: $id,
            citation: $cite,
            run: $f,
        }
    };
}

static REGISTRY: &[Identity] = &[
    entry!("theorem1", "f_S(x) = sum_{m,n>=0} (-1)^n x^(m+2n) q^(3n(3n+2m)+m(3m-1)/2) / ((q;q)_m (q^6;q^6)_n)", theorem1),
    entry!("schur-product", "f_S(1;q) = (-q;q^3)_inf (-q^2;q^3)_inf", schur_product),
    entry!("theorem2-gg", "f_GG(x) = sum_{k,m>=0} (-1)^k x^(m+2k) q^(m^2+4mk+6k^2) / ((q;q)_m (q^4;q^4)_k)", theorem2_gg),
    entry!("theorem2-g", "f_G(x) = sum_{k,m>=0} (-1)^k x^(m+2k) q^(m^2+4mk+6k^2-2k) / ((q;q)_m (q^4;q^4)_k)", theorem2_g),
    entry!("gg-single-sum", "f_GG(x) = sum_{n>=0} x^n q^(n^2) (-q;q^2)_n / (q^2;q^2)_n", gg_single),
    entry!("gollnitz-gordon-1", "f_GG1(1;q) = 1/(q,q^4,q^7;q^8)_inf", gollnitz_gordon_1),
    entry!("gollnitz-gordon-3", "f_GG3(1;q) = 1/(q^3,q^4,q^5;q^8)_inf", gollnitz_gordon_3),
    entry!("little-gollnitz-1", "f_G1(1;q) = 1/(q,q^5,q^6;q^8)_inf", little_gollnitz_1),
    entry!("little-gollnitz-2", "f_G2(1;q) = 1/(q^2,q^3,q^7;q^8)_inf", little_gollnitz_2),
    entry!("g1-single-sum", "f_G1(x) = sum_{n>=0} x^n q^(n^2+n) (-q^-1;q^2)_n / (q^2;q^2)_n", g1_single),
    entry!("g2-shift", "f_G2(x) = f_GG(xq)", g2_shift),
    entry!("r-specializations", "R(3,t,0,2,3,4) = f_S(q^(t-1)), R(2,t,0,2,2,2) = f_GG(q^(t-1)), R(2,t,1,2,2,2) = f_G(q^(t-1)) for t = 1, 2, 3", r_specializations),
    entry!("euler-odd", "R(2,1,1,1,2,2) = (-q;q^2)_inf", euler_odd),
    entry!("euler-even", "R(2,2,1,1,2,2) = (-q^2;q^2)_inf", euler_even),
    entry!("triangular-product", "R(m,m,1,1,1,2) = (q^2m;q^2m)_inf / (q^m;q^2m)_inf for m = 1..6", triangular_product),
    entry!("euler-x", "sum_{n>=0} x^n q^(n^2) r(0,1,2,1;n) = (-xq;q^2)_inf", euler_x),
    entry!("r-recurrence-1", "r(l,u,v,w;n) - r(l,u,v,w;n-1) = q^n r(l+1,u,v,w;n) on l <= 3, u <= 2, v <= 3, w <= 4, n <= 12", r_recurrence_1),
    entry!("r-recurrence-2", "r(v,u,v,w;n) - r(0,u,v,w;n) = -q^(w-uv) r(0,u,v,w;n-u) on u <= 2, v <= 3, w <= 4, n <= 12", r_recurrence_2),
    entry!("r-normalization", "r(l,u,v,w;n) = r(0,u,v,w-ul;n) on l <= 3, u <= 2, v <= 3, w <= 4, n <= 12", r_normalization),
    entry!("qdiff-schur-short", "f(x) = (1+xq+xq^2) f(xq^3) + xq^3 (1-xq^3) f(xq^6), for f_S and its double series", qdiff_schur_short),
    entry!("qdiff-schur-long", "f(x) = (1+xq+xq^2+xq^3) f(xq^3) - x^2q^6 (1+q+q^2) f(xq^6) + x^2q^9 (xq^6-1) f(xq^9), for f_S and its double series", qdiff_schur_long),
    entry!("rho-system", "rho_l(n) = r(l,2,3,4;n): the seven first-order relations and the eliminated third-order recurrence for rho_0, n <= 12", rho_system),
    entry!("u-schur", "u_S(n) = q^(n(3n-1)/2) r(0,2,3,4;n) equals the solutions of both recurrences for U_S(n), n <= 20", u_schur),
    entry!("qdiff-gg-long", "f(x) = (1+xq+xq^2) f(xq^2) - x^2q^5 f(xq^4) - x^2q^6 f(xq^6), for f_GG, its single sum and sum x^n q^(n^2) r(0,2,2,2;n)", qdiff_gg_long),
    entry!("qdiff-gg-short", "f(x) = (1+xq) f(xq^2) + xq^2 f(xq^4), for f_GG, its single sum and sum x^n q^(n^2) r(0,2,2,2;n)", qdiff_gg_short),
    entry!("rho-gg", "(1-q^2n) rho(n) = (1+q) rho(n-1) - (q+q^(2n-2)) rho(n-2) for rho(n) = r(0,2,2,2;n), n <= 12", rho_gg),
    entry!("u-gg", "u_GG(n) = q^(n^2) r(0,2,2,2;n) solves (1-q^2n) u(n) = q^(2n-1)(1+q) u(n-1) - q^(4n-3)(1+q^(2n-3)) u(n-2), n <= 20", u_gg),
    entry!("qdiff-g-long", "f(x) = (1+xq+xq^2) f(xq^2) - x^2q^5 f(xq^4) - x^2q^4 f(xq^6), for f_G and sum x^n q^(n^2) r(1,2,2,2;n)", qdiff_g_long),
    entry!("qdiff-g-short", "f(x) = (1+xq^2) f(xq^2) + xq f(xq^4), for f_G and sum x^n q^(n^2) r(1,2,2,2;n)", qdiff_g_short),
    entry!("rho-g", "(1-q^2n) rho(n) = (1+q) rho(n-1) - (q+q^(2n-4)) rho(n-2) for rho(n) = r(0,2,2,0;n), n <= 12", rho_g),
    entry!("rho-euler", "(1-q^2n) rho(n) = (1+q-q^(2n-1)) rho(n-1) - q rho(n-2) for rho(n) = r(0,1,2,1;n), n <= 12", rho_euler),
    entry!("qdiff-euler", "f(x) - f(xq^2) = (1+q) xq f(xq^2) - q^2 x f(xq^4) - x^2q^5 f(xq^4), for sum x^n q^(n^2) r(0,1,2,1;n) and (-xq;q^2)_inf", qdiff_euler),
    entry!("r-closed-forms", "r(0,2,2,2;n) = (-q;q^2)_n/(q^2;q^2)_n, r(1,2,2,2;n) = q^n (-q^-1;q^2)_n/(q^2;q^2)_n, r(1,1,2,2;n) = 1/(q^2;q^2)_n, r(1,1,1,2;n) = 1, n <= 15", r_closed_forms),
    entry!("pochhammer-bridge", "1/(q)_(n-2j) = q^(2nj-j(2j-1)) (q^-n,q^(1-n);q^2)_j / (q)_n, n <= 12", pochhammer_bridge),
    entry!("phi-bridge", "r(u,2,2,2;n) = 2phi1(q^-n, q^(1-n); -q^2; q^2; -q^(1+2n-2u)) / (q)_n, u in {0,1}, n <= 12", phi_bridge),
    entry!("chu-vandermonde", "2phi1(a, p^-n; c; p; c p^n/a) = (c/a;p)_n / (c;p)_n, p in {q, q^2}, n <= 6, with the parity-split evaluation of r(0,2,2,2;N), N <= 10", chu_vandermonde),
    entry!("chu-second", "2phi1(a, p^-n; c; p; c p^(n-1)/a) = (c/a)_(n-1)/(c)_(n-1) - c/(ap) (1-a) (c/a)_(n-1)/(c)_n, p in {q, q^2}, 1 <= n <= 6", chu_second),
    entry!("heine-special", "2phi1(a, p^-n; c; p; c p^(n-i)/a) = (c p^-i/a)_n/(c)_n 2phi1(p^-i, p^-n; c p^-i/a; p; c p^n), i in {0,1}, p in {q, q^2}, n <= 5", heine_special),
    entry!("gauss-triangular", "sum_{n>=0} q^(m n(n+1)/2) = (q^2m;q^2m)_inf / (q^m;q^2m)_inf for m = 1..6", gauss_triangular),
    entry!("qbinomial-theorem", "(a)_n = sum_{j=0}^n [n j]_q (-1)^j a^j q^(j(j-1)/2), n <= 10", qbinomial_theorem),
    entry!("negative-pochhammer", "(q^-n)_j = (-1)^j q^(-nj+j(j-1)/2) (q)_n/(q)_(n-j), n <= 10", negative_power),
    entry!("t-limit", "lim_{t->0} t^j (-q/t)_j = q^(j(j+1)/2), j <= 12", t_limit),
    entry!("bijection-schur", "removing the 3-triangle maps Schur partitions of length l bijectively onto partitions with distinct multiples of 3 (sizes up to the order)", bijection_schur),
    entry!("bijection-gg", "removing the 2-triangle maps Gollnitz-Gordon partitions of length l bijectively onto partitions with distinct even parts (sizes up to the order)", bijection_gg),
    entry!("bijection-g", "removing the 2-triangle maps Gollnitz partitions of length l bijectively onto partitions with distinct odd parts (sizes up to the order)", bijection_g),
    entry!("triangle-example", "30+26+23+18+12+8+4+1 maps to 9+8+8+6+3+2+1+1 under 3-triangle removal (order unused)", triangle_example),
    entry!("schur-image-product", "partitions with distinct multiples of 3: sum x^len q^size = (x^2q^6;q^6)_inf / (xq;q)_inf", schur_image_product),
    entry!("gg-image-product", "partitions with distinct even parts: sum x^len q^size = (-xq^2;q^2)_inf / (xq;q^2)_inf", gg_image_product),
    entry!("g-image-product", "partitions with distinct odd parts: sum x^len q^size = (-xq;q^2)_inf / (xq^2;q^2)_inf", g_image_product),
    entry!("alladi-berkovich-1", "sum_{k,m>=0} w^k q^(m^2+2mk+2k^2+m-k) / ((q^2;q^2)_m (q^2;q^2)_k) = (-wq,-q^2,-q^4;q^4)_inf, and at w = 1 equals 1/(q,q^5,q^6;q^8)_inf", alladi_berkovich_1),
    entry!("alladi-berkovich-2", "sum_{k,m>=0} w^k q^(m^2+2mk+2k^2+m+k) / ((q^2;q^2)_m (q^2;q^2)_k) = (-q^2,-wq^3,-q^4;q^4)_inf, and at w = 1 equals 1/(q^2,q^3,q^7;q^8)_inf", alladi_berkovich_2),
    entry!("capparelli-sills", "sum_{n>=0} sum_{j=0}^{2n} ((n-j+1)/3) q^(n^2) / ((q;q)_(2n-j) (q;q)_j) = 1/(q^2,q^3,q^9,q^10;q^12)_inf", capparelli),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique() {
        let mut v = ids();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), REGISTRY.len());
    }

    #[test]
    fn every_entry_passes_at_low_order() {
        for e in registry() {
            let report = e.verify(24, 4).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            assert!(report.passed(), "{}: {:?}", e.id, report.first_discrepancy);
        }
    }

    /// Orders near the degrees where terms first appear exercise the truncation edges.
    #[test]
    fn every_entry_passes_at_tiny_orders() {
        for order in [1, 2, 3, 5, 8, 13] {
            for xdeg in [0, 1, 3] {
                for e in registry() {
                    let report = e
                        .verify(order, xdeg)
                        .unwrap_or_else(|err| panic!("{} at {order}/{xdeg}: {err}", e.id));
                    assert!(
                        report.passed(),
                        "{} at {order}/{xdeg}: {:?}",
                        e.id,
                        report.first_discrepancy
                    );
                }
            }
        }
    }

    #[test]
    fn unknown_id_lists_valid_ones() {
        match find("no-such-id") {
            Err(Error::UnknownIdentity { valid, .. }) => assert!(valid.contains("theorem1")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn report_json_round_trip() {
        let e = find("theorem1").unwrap();
        let d = Discrepancy::new(2, 7, 3.into(), (-1).into()).with_context("n=2");
        for outcome in [Outcome::Agree, Outcome::Disagree(d)] {
            let r = VerificationReport::new(e, 10, 2, outcome, 5);
            let s = serde_json::to_string(&r).unwrap();
            let back: VerificationReport = serde_json::from_str(&s).unwrap();
            assert_eq!(back, r);
            assert_eq!(serde_json::to_string(&back).unwrap(), s);
        }
    }

    #[test]
    fn rejects_nonpositive_order() {
        assert!(find("theorem1").unwrap().check(0, 3).is_err());
    }
}
