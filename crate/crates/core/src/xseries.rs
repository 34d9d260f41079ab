//! Polynomials in a second variable `x` over [`LaurentQSeries`].
//!
//! An [`XSeries`] keeps the coefficients of `x^0 ..= x^xdeg_bound`; higher
//! powers of `x` are unknown, exactly like exponents of `q` at or above
//! `trunc`. Binary operations therefore take the smaller of the two bounds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::LaurentQSeries;

/// `sign * x^xpow * q^qpow`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub sign: i64,
    pub xpow: u32,
    pub qpow: i64,
}

impl Monomial {
    pub fn new(sign: i64, xpow: u32, qpow: i64) -> Self {
        assert!(sign == 1 || sign == -1, "monomial sign must be +1 or -1");
        Monomial { sign, xpow, qpow }
    }

    /// `q^k`
    pub fn q(k: i64) -> Self {
        Self::new(1, 0, k)
    }

    /// `-q^k`
    pub fn neg_q(k: i64) -> Self {
        Self::new(-1, 0, k)
    }

    /// `x q^k`
    pub fn xq(k: i64) -> Self {
        Self::new(1, 1, k)
    }

    pub fn one() -> Self {
        Self::q(0)
    }

    pub fn is_q_only(&self) -> bool {
        self.xpow == 0
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.sign * other.sign, self.xpow + other.xpow, self.qpow + other.qpow)
    }

    /// `self / other`, if the quotient is still a monomial (no negative x-power).
    pub fn over(&self, other: &Monomial) -> Option<Monomial> {
        let xpow = self.xpow.checked_sub(other.xpow)?;
        Some(Monomial::new(self.sign * other.sign, xpow, self.qpow - other.qpow))
    }

    pub fn neg(&self) -> Monomial {
        Monomial::new(-self.sign, self.xpow, self.qpow)
    }

    /// Multiplies the q-exponent by `k` (the substitution `q -> q^k`).
    pub fn scale_q(&self, k: i64) -> Monomial {
        Monomial::new(self.sign, self.xpow, self.qpow * k)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        let sign = if self.sign < 0 && n % 2 == 1 { -1 } else { 1 };
        Monomial::new(sign, self.xpow * n, self.qpow * n as i64)
    }

    pub fn to_xseries(&self, trunc: i64, xdeg_bound: usize) -> XSeries {
        XSeries::monomial(self.sign, self.xpow as usize, self.qpow, trunc, xdeg_bound)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        match (self.xpow, self.qpow) {
            (0, 0) => write!(f, "1"),
            (0, b) => write!(f, "q^{b}"),
            (1, 0) => write!(f, "x"),
            (a, 0) => write!(f, "x^{a}"),
            (1, b) => write!(f, "xq^{b}"),
            (a, b) => write!(f, "x^{a}q^{b}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct XSeries {
    xdeg_bound: usize,
    trunc: i64,
    /// `coeffs[i]` is the coefficient of `x^i`; all share `trunc`. Trailing zeros trimmed.
    coeffs: Vec<LaurentQSeries>,
}

impl XSeries {
    pub fn new(coeffs: Vec<LaurentQSeries>, xdeg_bound: usize) -> Self {
        let trunc = coeffs.iter().map(LaurentQSeries::trunc).min().unwrap_or(i64::MAX);
        assert!(trunc != i64::MAX, "XSeries::new needs at least one component");
        Self::with_trunc(coeffs, trunc, xdeg_bound)
    }

    fn with_trunc(mut coeffs: Vec<LaurentQSeries>, trunc: i64, xdeg_bound: usize) -> Self {
        coeffs.truncate(xdeg_bound + 1);
        for c in coeffs.iter_mut() {
            if c.trunc() != trunc {
                *c = c.truncate(trunc);
            }
        }
        while coeffs.last().is_some_and(LaurentQSeries::is_zero) {
            coeffs.pop();
        }
        XSeries {
            xdeg_bound,
            trunc,
            coeffs,
        }
    }

    pub fn zero(trunc: i64, xdeg_bound: usize) -> Self {
        XSeries {
            xdeg_bound,
            trunc,
            coeffs: Vec::new(),
        }
    }

    pub fn one(trunc: i64, xdeg_bound: usize) -> Self {
        Self::from_q(LaurentQSeries::one(trunc), xdeg_bound)
    }

    /// Embeds a q-series as the x^0 coefficient.
    pub fn from_q(s: LaurentQSeries, xdeg_bound: usize) -> Self {
        let trunc = s.trunc();
        Self::with_trunc(vec![s], trunc, xdeg_bound)
    }

    pub fn monomial(sign: i64, xpow: usize, qpow: i64, trunc: i64, xdeg_bound: usize) -> Self {
        if xpow > xdeg_bound {
            return Self::zero(trunc, xdeg_bound);
        }
        let mut coeffs = vec![LaurentQSeries::zero(trunc); xpow + 1];
        coeffs[xpow] = LaurentQSeries::monomial(sign, qpow, trunc);
        Self::with_trunc(coeffs, trunc, xdeg_bound)
    }

    /// Sum of `(coefficient, x-power, q-power)` terms.
    pub fn from_terms<I>(terms: I, trunc: i64, xdeg_bound: usize) -> Self
    where
        I: IntoIterator<Item = (i64, usize, i64)>,
    {
        let mut by_deg: Vec<Vec<(i64, BigInt)>> = vec![Vec::new(); xdeg_bound + 1];
        for (c, a, b) in terms {
            if a <= xdeg_bound {
                by_deg[a].push((b, BigInt::from(c)));
            }
        }
        let coeffs = by_deg
            .into_iter()
            .map(|t| LaurentQSeries::from_terms(t, trunc))
            .collect();
        Self::with_trunc(coeffs, trunc, xdeg_bound)
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn xdeg_bound(&self) -> usize {
        self.xdeg_bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^n` as a q-series (zero beyond the stored degree).
    pub fn x_coeff(&self, n: usize) -> LaurentQSeries {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(|| LaurentQSeries::zero(self.trunc))
    }

    pub fn x_coeffs(&self) -> &[LaurentQSeries] {
        &self.coeffs
    }

    pub fn coeff(&self, xpow: i64, qpow: i64) -> Result<BigInt> {
        if xpow < 0 || xpow as usize > self.xdeg_bound || qpow >= self.trunc {
            return Err(Error::OutOfRange {
                xpow,
                qpow,
                trunc: self.trunc,
                xdeg_bound: self.xdeg_bound,
            });
        }
        Ok(self.x_coeff(xpow as usize).coeff_unchecked(qpow))
    }

    /// Lowest q-valuation over all x-degrees (`trunc` if zero).
    pub fn valuation(&self) -> i64 {
        self.coeffs
            .iter()
            .map(LaurentQSeries::valuation)
            .min()
            .unwrap_or(self.trunc)
            .min(self.trunc)
    }

    pub fn truncate(&self, trunc: i64, xdeg_bound: usize) -> Self {
        Self::with_trunc(
            self.coeffs.clone(),
            self.trunc.min(trunc),
            self.xdeg_bound.min(xdeg_bound),
        )
    }

    /// Multiplication by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let shift = m.xpow as usize;
        let sign = BigInt::from(m.sign);
        let mut coeffs = vec![LaurentQSeries::zero(self.trunc + m.qpow); shift];
        coeffs.extend(self.coeffs.iter().map(|c| c.shift(m.qpow).scale(&sign)));
        Self::with_trunc(coeffs, self.trunc + m.qpow, self.xdeg_bound)
    }

    /// Multiplication by `1 - m`.
    pub fn mul_one_minus(&self, m: &Monomial) -> Self {
        if m.xpow == 0 {
            let coeffs: Vec<_> = self.coeffs.iter().map(|c| c.mul_binomial(m.sign, m.qpow)).collect();
            let trunc = self.trunc + m.qpow.min(0);
            return Self::with_trunc(coeffs, trunc, self.xdeg_bound);
        }
        self - &self.mul_monomial(m)
    }

    /// Division by `1 - m`; for `m` free of x this needs `m != +-1`.
    pub fn div_one_minus(&self, m: &Monomial) -> Result<Self> {
        if m.xpow == 0 {
            let coeffs = self
                .coeffs
                .iter()
                .map(|c| c.div_binomial(m.sign, m.qpow))
                .collect::<Result<Vec<_>>>()?;
            let trunc = self.trunc - m.qpow.min(0);
            return Ok(Self::with_trunc(coeffs, trunc, self.xdeg_bound));
        }
        // 1/(1 - s x^p q^e) = sum_k s^k x^(pk) q^(ek); finitely many k below the x-bound
        let p = m.xpow as usize;
        let mut coeffs: Vec<LaurentQSeries> = (0..=self.xdeg_bound).map(|n| self.x_coeff(n)).collect();
        for n in p..coeffs.len() {
            let carried = coeffs[n - p].shift(m.qpow);
            let carried = if m.sign < 0 { -carried } else { carried };
            coeffs[n] = &coeffs[n] + &carried;
        }
        let trunc = coeffs.iter().map(LaurentQSeries::trunc).min().unwrap_or(self.trunc);
        Ok(Self::with_trunc(coeffs, trunc, self.xdeg_bound))
    }

    /// Inverse in the x-truncated ring; the x^0 coefficient must be a unit.
    pub fn invert_unit(&self) -> Result<Self> {
        let a0 = self.coeffs.first().ok_or(Error::NotAUnit)?;
        let b0 = a0.invert()?;
        let mut b = vec![b0.clone()];
        for n in 1..=self.xdeg_bound {
            let mut acc = LaurentQSeries::zero(self.trunc);
            for i in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                acc = &acc + &(&self.coeffs[i] * &b[n - i]);
            }
            b.push(-(&b0 * &acc));
        }
        let trunc = b.iter().map(LaurentQSeries::trunc).min().unwrap_or(self.trunc);
        Ok(Self::with_trunc(b, trunc, self.xdeg_bound))
    }

    /// The substitution `x -> x_to`, `q -> q^q_scale`, with `x_to = +-x q^k`.
    pub fn substitute(&self, x_to: &Monomial, q_scale: i64) -> Result<Self> {
        if x_to.xpow != 1 {
            return Err(Error::InvalidInput(format!(
                "substitution target must be +-x q^k, got {x_to}"
            )));
        }
        if q_scale < 1 {
            return Err(Error::InvalidInput("q-scale must be positive".into()));
        }
        let coeffs: Vec<LaurentQSeries> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let c = c.scale_q(q_scale).shift(x_to.qpow * n as i64);
                if x_to.sign < 0 && n % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        // x^n picks up q^(kn); the conservative common trunc is the minimum over all
        // degrees up to the bound.
        let base = self.trunc * q_scale;
        let trunc = (0..=self.xdeg_bound as i64)
            .map(|n| base + x_to.qpow * n)
            .min()
            .unwrap_or(base);
        Ok(Self::with_trunc(coeffs, trunc, self.xdeg_bound))
    }

    /// First `(xpow, qpow, lhs, rhs)` where the two differ, scanning x-degrees up to
    /// `xdeg` and q-exponents below `trunc`.
    pub fn first_difference(&self, other: &Self, trunc: i64, xdeg: usize) -> Option<(usize, i64, BigInt, BigInt)> {
        (0..=xdeg).find_map(|n| {
            self.x_coeff(n)
                .first_difference(&other.x_coeff(n), trunc)
                .map(|(e, a, b)| (n, e, a, b))
        })
    }
}

impl fmt::Debug for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                writeln!(f, "x^{n}: {c}")?;
            }
        }
        write!(f, "(trunc q^{}, x-degree <= {})", self.trunc, self.xdeg_bound)
    }
}

impl Add for &XSeries {
    type Output = XSeries;

    fn add(self, rhs: &XSeries) -> XSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let bound = self.xdeg_bound.min(rhs.xdeg_bound);
        let len = self.coeffs.len().max(rhs.coeffs.len()).min(bound + 1);
        let coeffs = (0..len).map(|n| &self.x_coeff(n) + &rhs.x_coeff(n)).collect();
        XSeries::with_trunc(coeffs, trunc, bound)
    }
}

impl Neg for &XSeries {
    type Output = XSeries;

    fn neg(self) -> XSeries {
        XSeries {
            xdeg_bound: self.xdeg_bound,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &XSeries {
    type Output = XSeries;

    fn sub(self, rhs: &XSeries) -> XSeries {
        self + &(-rhs)
    }
}

impl Mul for &XSeries {
    type Output = XSeries;

    fn mul(self, rhs: &XSeries) -> XSeries {
        let bound = self.xdeg_bound.min(rhs.xdeg_bound);
        let trunc = (self.trunc + rhs.valuation()).min(rhs.trunc + self.valuation());
        let len = (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(1).min(bound + 1);
        let mut coeffs = vec![LaurentQSeries::zero(trunc); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b).truncate(trunc);
                }
            }
        }
        XSeries::with_trunc(coeffs, trunc, bound)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XSeries {
            type Output = XSeries;
            fn $m(self, rhs: XSeries) -> XSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_product() {
        let a = XSeries::from_terms([(1, 0, 0), (1, 1, 1)], 20, 4);
        let b = XSeries::from_terms([(1, 0, 0), (1, 1, 2)], 20, 4);
        let expect = XSeries::from_terms([(1, 0, 0), (1, 1, 1), (1, 1, 2), (1, 2, 3)], 20, 4);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn substitute_examples() {
        let f = XSeries::from_terms([(1, 0, 0), (1, 1, 1)], 20, 3);
        let g = f.substitute(&Monomial::xq(3), 1).unwrap();
        assert_eq!(g, XSeries::from_terms([(1, 0, 0), (1, 1, 4)], 20, 3));
        assert_eq!(f.substitute(&Monomial::xq(0), 1).unwrap(), f);

        let geo = XSeries::from_terms((0..=5).map(|n| (1, n, n as i64)), 30, 5);
        let sub = geo.substitute(&Monomial::xq(2), 1).unwrap();
        assert_eq!(sub, XSeries::from_terms((0..=5).map(|n| (1, n, 3 * n as i64)), 30, 5));
        assert!(f.substitute(&Monomial::q(2), 1).is_err());
    }

    #[test]
    fn coeff_out_of_range() {
        let f = XSeries::one(10, 2);
        assert!(f.coeff(3, 0).is_err());
        assert!(f.coeff(0, 10).is_err());
        assert_eq!(f.coeff(2, 9).unwrap(), BigInt::from(0));
        assert_eq!(XSeries::zero(10, 4).coeff(3, 7).unwrap(), BigInt::from(0));
    }

    #[test]
    fn div_one_minus_with_x() {
        // 1/(1 - x q) = sum x^n q^n
        let one = XSeries::one(25, 6);
        let g = one.div_one_minus(&Monomial::xq(1)).unwrap();
        assert_eq!(g, XSeries::from_terms((0..=6).map(|n| (1, n, n as i64)), 25, 6));
        let back = g.mul_one_minus(&Monomial::xq(1));
        assert_eq!(back, one);
    }

    #[test]
    fn invert_with_x_components() {
        let a = XSeries::from_terms([(1, 0, 0), (-1, 0, 1), (1, 1, 1), (3, 2, 2)], 30, 5);
        let b = a.invert_unit().unwrap();
        let p = &a * &b;
        assert_eq!(p.first_difference(&XSeries::one(30, 5), p.trunc(), 5), None);
        assert_eq!(p.trunc(), 30);
        let not_unit = XSeries::from_terms([(2, 0, 0)], 30, 5);
        assert_eq!(not_unit.invert_unit(), Err(Error::NotAUnit));
    }

    #[test]
    fn monomial_algebra() {
        let a = Monomial::new(-1, 1, 3);
        assert_eq!(a.pow(3), Monomial::new(-1, 3, 9));
        assert_eq!(a.over(&Monomial::xq(1)), Some(Monomial::neg_q(2)));
        assert_eq!(Monomial::q(1).over(&Monomial::xq(1)), None);
        assert_eq!(a.to_string(), "-xq^3");
    }
}
