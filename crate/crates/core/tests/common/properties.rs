//! Randomized property suites with fixed seeds, shared by the property tests and
//! the acceptance runner.

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qpartition_core::check;
use qpartition_core::hypergeometric::{check_qbinomial_theorem, check_qnegn, check_qtlim, qbinom};
use qpartition_core::pochhammer::{poch_finite, poch_infinite, recip_poch, recip_poch_q};
use qpartition_core::{LaurentQSeries, Monomial, XSeries};

pub const NAMES: &[&str] = &[
    "ring-axioms",
    "unit-inverse",
    "poch-recurrence",
    "poch-infinite-vs-finite",
    "euler-reciprocal",
    "euler-product",
    "reciprocal-vanishing",
    "negative-power",
    "t-limit",
    "qbinomial-theorem",
];

pub fn run(name: &str) -> Result<(), String> {
    match name {
        "ring-axioms" => ring_axioms(),
        "unit-inverse" => unit_inverse(),
        "poch-recurrence" => poch_recurrence(),
        "poch-infinite-vs-finite" => poch_infinite_vs_finite(),
        "euler-reciprocal" => euler_reciprocal(),
        "euler-product" => euler_product(),
        "reciprocal-vanishing" => reciprocal_vanishing(),
        "negative-power" => negative_power(),
        "t-limit" => t_limit(),
        "qbinomial-theorem" => qbinomial_theorem(),
        other => Err(format!("no property suite `{other}`")),
    }
}

fn runner(seed: u8, cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn run_with<S: Strategy>(
    seed: u8,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(seed, cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn series() -> impl Strategy<Value = LaurentQSeries> {
    (-3i64..=3, prop::collection::vec(-5i64..=5, 0..8), 0i64..8).prop_map(|(lo, cs, extra)| {
        let trunc = lo + cs.len() as i64 + extra;
        LaurentQSeries::new(lo, cs.into_iter().map(BigInt::from).collect(), trunc)
    })
}

fn monomial(max_xpow: u32) -> impl Strategy<Value = Monomial> {
    (prop::bool::ANY, 0..=max_xpow, -3i64..=5)
        .prop_map(|(neg, xpow, qpow)| Monomial::new(if neg { -1 } else { 1 }, xpow, qpow))
}

fn same(lhs: &LaurentQSeries, rhs: &LaurentQSeries) -> Result<(), TestCaseError> {
    let t = lhs.trunc().min(rhs.trunc());
    let o = check::compare(lhs, rhs, t).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(o.holds(), "{lhs} vs {rhs}: {o:?}");
    Ok(())
}

fn same_x(lhs: &XSeries, rhs: &XSeries, trunc: i64, xdeg: usize) -> Result<(), TestCaseError> {
    let o = check::compare_x(lhs, rhs, trunc, xdeg).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(o.holds(), "{o:?}");
    Ok(())
}

fn lift<T>(r: qpartition_core::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn ring_axioms() -> Result<(), String> {
    run_with(1, 256, (series(), series(), series()), |(a, b, c)| {
        same(&(&(&a + &b) + &c), &(&a + &(&b + &c)))?;
        same(&(&a + &b), &(&b + &a))?;
        same(&(&a * &b), &(&b * &a))?;
        same(&(&(&a * &b) * &c), &(&a * &(&b * &c)))?;
        same(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)))?;
        let same_a = a.clone();
        prop_assert!((&a - &same_a).is_zero());
        same(&(&a * &LaurentQSeries::one(a.trunc())), &a)?;
        Ok(())
    })
}

fn unit_inverse() -> Result<(), String> {
    let unit = (series(), prop::bool::ANY, -3i64..=3).prop_map(|(tail, neg, lead)| {
        // +-q^lead below every term of the tail
        let tail = tail.shift(lead + 1 - tail.valuation());
        &LaurentQSeries::monomial(if neg { -1 } else { 1 }, lead, tail.trunc()) + &tail
    });
    run_with(2, 256, unit, |f| {
        let inv = lift(f.invert())?;
        let prod = &f * &inv;
        same(&prod, &LaurentQSeries::one(prod.trunc()))?;
        prop_assert_eq!(prod.trunc(), f.trunc() - f.valuation());
        Ok(())
    })
}

fn poch_recurrence() -> Result<(), String> {
    run_with(
        3,
        64,
        (monomial(2), 1i64..=3, 10i64..=30, 0usize..=4),
        |(a, step, trunc, d)| {
            for n in 0..=20 {
                let next = lift(poch_finite(&a, step, n + 1, trunc, d))?;
                let prev = lift(poch_finite(&a, step, n, trunc, d))?;
                let stepped = prev.mul_one_minus(&a.times(&Monomial::q(step * n)));
                same_x(&next, &stepped, next.trunc().min(stepped.trunc()), d)?;
            }
            Ok(())
        },
    )
}

fn poch_infinite_vs_finite() -> Result<(), String> {
    let positive = (prop::bool::ANY, 0u32..=2, 1i64..=5)
        .prop_map(|(neg, xpow, qpow)| Monomial::new(if neg { -1 } else { 1 }, xpow, qpow));
    run_with(
        4,
        64,
        (positive, 1i64..=4, 1i64..=60, 0usize..=4),
        |(a, step, trunc, d)| {
            let inf = lift(poch_infinite(&a, step, trunc, d))?;
            let k = ((trunc - a.qpow).max(0) + step - 1) / step;
            for extra in 0..3 {
                let fin = lift(poch_finite(&a, step, k + extra, trunc, d))?;
                same_x(&inf, &fin, trunc, d)?;
            }
            Ok(())
        },
    )
}

/// `1/(x;q)_inf = sum x^n/(q;q)_n`, for `n <= 10` at `T = 60` and at random orders.
fn euler_reciprocal() -> Result<(), String> {
    let check = |t: i64| -> Result<(), TestCaseError> {
        let inv = lift(lift(poch_infinite(&Monomial::xq(0), 1, t, 10))?.invert_unit())?;
        for n in 0..=10 {
            same(&inv.x_coeff(n), &lift(recip_poch_q(&Monomial::q(1), 1, n as i64, t))?)?;
            prop_assert_eq!(inv.x_coeff(n).trunc(), t);
        }
        Ok(())
    };
    check(60).map_err(|e| e.to_string())?;
    run_with(5, 16, 1i64..=80, check)
}

/// `(x;q)_inf = sum (-1)^n x^n q^(n(n-1)/2)/(q;q)_n`, for `n <= 10`.
fn euler_product() -> Result<(), String> {
    let check = |t: i64| -> Result<(), TestCaseError> {
        let p = lift(poch_infinite(&Monomial::xq(0), 1, t, 10))?;
        for n in 0..=10i64 {
            let e = n * (n - 1) / 2;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let rhs = lift(recip_poch_q(&Monomial::q(1), 1, n, t - e))?
                .scale(&sign.into())
                .shift(e);
            same(&p.x_coeff(n as usize), &rhs)?;
        }
        Ok(())
    };
    check(60).map_err(|e| e.to_string())?;
    run_with(6, 16, 1i64..=80, check)
}

/// `1/(q;q)_n = 0` for `n < 0`; more generally `1/(q^k;q)_n = 0` once `n <= -k`,
/// and otherwise equals `(q^(k+n);q)_(-n)`.
fn reciprocal_vanishing() -> Result<(), String> {
    run_with(7, 128, (1i64..=6, -20i64..=-1, 1i64..=40), |(k, n, t)| {
        let r = lift(recip_poch(&Monomial::q(k), 1, n, t, 0))?.x_coeff(0);
        if n <= -k {
            prop_assert!(r.is_zero(), "1/(q^{k};q)_{n} = {r}");
        } else {
            let direct = lift(poch_finite(&Monomial::q(k + n), 1, -n, t, 0))?.x_coeff(0);
            same(&r, &direct)?;
        }
        prop_assert!(lift(recip_poch_q(&Monomial::q(1), 1, n, t))?.is_zero());
        Ok(())
    })
}

fn negative_power() -> Result<(), String> {
    run_with(8, 128, (0i64..=12, 0i64..=15, 1i64..=50), |(n, j, t)| {
        prop_assert!(lift(check_qnegn(n, j, t))?.holds(), "n={n}, j={j}, trunc={t}");
        Ok(())
    })
}

fn t_limit() -> Result<(), String> {
    run_with(9, 64, (0i64..=15, 1i64..=150), |(j, t)| {
        prop_assert!(lift(check_qtlim(j, t))?.holds());
        Ok(())
    })
}

fn qbinomial_theorem() -> Result<(), String> {
    run_with(
        10,
        128,
        (monomial(2), 0i64..=9, 1i64..=40, 0usize..=5),
        |(a, n, t, d)| {
            prop_assert!(lift(check_qbinomial_theorem(&a, n, t, d))?.holds(), "a={a}, n={n}");
            // symmetry of the Gaussian binomial, as a separate sanity check
            for m in 0..=n {
                prop_assert_eq!(qbinom(n, m, t), qbinom(n, n - m, t));
            }
            Ok(())
        },
    )
}
