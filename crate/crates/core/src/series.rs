//! Truncated Laurent series in `q` with arbitrary-precision integer coefficients.
//!
//! A [`LaurentQSeries`] is known exactly for every exponent below its `trunc`;
//! nothing is known at or above it. Every operation computes the largest
//! `trunc` it can guarantee, so two series are only ever compared on the
//! region where both are exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentQSeries {
    /// Exponent of `coeffs[0]`. Equals `trunc` for the zero series.
    min_exp: i64,
    coeffs: Vec<BigInt>,
    trunc: i64,
}

impl LaurentQSeries {
    /// Builds `sum coeffs[i] q^(min_exp + i)`, dropping everything at or above `trunc`.
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>, trunc: i64) -> Self {
        let mut s = LaurentQSeries { min_exp, coeffs, trunc };
        s.normalize();
        s
    }

    pub fn zero(trunc: i64) -> Self {
        LaurentQSeries {
            min_exp: trunc,
            coeffs: Vec::new(),
            trunc,
        }
    }

    pub fn one(trunc: i64) -> Self {
        Self::monomial(1, 0, trunc)
    }

    /// `c q^exp`, known below `trunc`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64, trunc: i64) -> Self {
        Self::new(exp, vec![c.into()], trunc)
    }

    /// Sums an arbitrary list of `(exponent, coefficient)` terms.
    pub fn from_terms<I, C>(terms: I, trunc: i64) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms
            .into_iter()
            .filter(|(e, _)| *e < trunc)
            .map(|(e, c)| (e, c.into()))
            .collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero(trunc);
        };
        let mut coeffs = vec![BigInt::zero(); (trunc - lo) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::new(lo, coeffs, trunc)
    }

    fn normalize(&mut self) {
        let keep = (self.trunc - self.min_exp).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = self.trunc;
        }
    }

    /// Strict upper bound on the exponents that are known.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Lowest exponent with a nonzero coefficient; `trunc` for the zero series.
    pub fn valuation(&self) -> i64 {
        self.min_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent carrying a nonzero coefficient, if any.
    pub fn degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, exp: i64) -> Result<BigInt> {
        if exp >= self.trunc {
            return Err(Error::OutOfRange {
                xpow: 0,
                qpow: exp,
                trunc: self.trunc,
                xdeg_bound: 0,
            });
        }
        Ok(self.coeff_unchecked(exp))
    }

    pub(crate) fn coeff_unchecked(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Lowers `trunc` to `min(trunc, new_trunc)`.
    pub fn truncate(&self, new_trunc: i64) -> Self {
        Self::new(self.min_exp, self.coeffs.clone(), self.trunc.min(new_trunc))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentQSeries {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
            trunc: self.trunc + k,
        }
    }

    /// The substitution `q -> q^scale`.
    pub fn scale_q(&self, scale: i64) -> Self {
        assert!(scale >= 1, "q-scale must be positive");
        let terms: Vec<(i64, BigInt)> = self.terms().map(|(e, c)| (e * scale, c.clone())).collect();
        // Exponents strictly between multiples of `scale` are exact zeros, so the
        // unknown region starts at the image of the old trunc.
        Self::from_terms(terms, self.trunc * scale)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x * c).collect(), self.trunc)
    }

    /// Multiplication by the binomial `1 - sign q^exp`.
    pub fn mul_binomial(&self, sign: i64, exp: i64) -> Self {
        let trunc = self.trunc + exp.min(0);
        let lo = self.min_exp.min(self.min_exp + exp);
        if lo >= trunc {
            return Self::zero(trunc);
        }
        let mut out = vec![BigInt::zero(); (trunc - lo) as usize];
        for (e, c) in self.terms() {
            if e < trunc {
                out[(e - lo) as usize] += c;
            }
            let e2 = e + exp;
            if e2 < trunc {
                if sign > 0 {
                    out[(e2 - lo) as usize] -= c;
                } else {
                    out[(e2 - lo) as usize] += c;
                }
            }
        }
        Self::new(lo, out, trunc)
    }

    /// Division by the binomial `1 - sign q^exp`.
    pub fn div_binomial(&self, sign: i64, exp: i64) -> Result<Self> {
        match exp.cmp(&0) {
            std::cmp::Ordering::Greater => {
                if self.is_zero() {
                    return Ok(self.clone());
                }
                let mut c = self.coeffs.clone();
                c.resize((self.trunc - self.min_exp) as usize, BigInt::zero());
                let step = exp as usize;
                for i in step..c.len() {
                    let prev = c[i - step].clone();
                    if sign > 0 {
                        c[i] += prev;
                    } else {
                        c[i] -= prev;
                    }
                }
                Ok(Self::new(self.min_exp, c, self.trunc))
            }
            // 1 - s q^e = -s q^e (1 - s q^-e) for e < 0
            std::cmp::Ordering::Less => {
                let inner = self.div_binomial(sign, -exp)?;
                Ok(inner.shift(-exp).scale(&BigInt::from(-sign)))
            }
            std::cmp::Ordering::Equal => Err(Error::NotAUnit),
        }
    }

    /// Multiplicative inverse; the lowest coefficient must be `+-1`.
    pub fn invert(&self) -> Result<Self> {
        let Some(lead) = self.coeffs.first() else {
            return Err(Error::NotAUnit);
        };
        if lead.abs() != BigInt::one() {
            return Err(Error::NotAUnit);
        }
        let v = self.min_exp;
        let len = (self.trunc - v) as usize;
        // a = lead q^v u with u = 1 + ..., known to `len` terms, and 1/lead = lead.
        let u: Vec<BigInt> = self.coeffs.iter().map(|c| c * lead).collect();
        let mut inv = vec![BigInt::zero(); len];
        inv[0] = BigInt::one();
        for n in 1..len {
            let mut acc = BigInt::zero();
            for i in 1..=n.min(u.len() - 1) {
                if !u[i].is_zero() && !inv[n - i].is_zero() {
                    acc += &u[i] * &inv[n - i];
                }
            }
            inv[n] = -acc;
        }
        let inv: Vec<BigInt> = inv.into_iter().map(|c| c * lead).collect();
        Ok(Self::new(-v, inv, self.trunc - 2 * v))
    }

    /// Integer power, `k >= 0`.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one(self.trunc - self.min_exp);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = &acc * self;
        }
        acc
    }

    /// First exponent below `trunc` where the two series differ.
    pub fn first_difference(&self, other: &Self, trunc: i64) -> Option<(i64, BigInt, BigInt)> {
        let lo = self.min_exp.min(other.min_exp);
        (lo..trunc).find_map(|e| {
            let a = self.coeff_unchecked(e);
            let b = other.coeff_unchecked(e);
            (a != b).then_some((e, a, b))
        })
    }
}

impl fmt::Debug for LaurentQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc)
    }
}

impl Add for &LaurentQSeries {
    type Output = LaurentQSeries;

    fn add(self, rhs: &LaurentQSeries) -> LaurentQSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let lo = self.min_exp.min(rhs.min_exp);
        if lo >= trunc {
            return LaurentQSeries::zero(trunc);
        }
        let mut out = vec![BigInt::zero(); (trunc - lo) as usize];
        for s in [self, rhs] {
            for (e, c) in s.terms() {
                if e < trunc {
                    out[(e - lo) as usize] += c;
                }
            }
        }
        LaurentQSeries::new(lo, out, trunc)
    }
}

impl Neg for &LaurentQSeries {
    type Output = LaurentQSeries;

    fn neg(self) -> LaurentQSeries {
        LaurentQSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            trunc: self.trunc,
        }
    }
}

impl Sub for &LaurentQSeries {
    type Output = LaurentQSeries;

    fn sub(self, rhs: &LaurentQSeries) -> LaurentQSeries {
        self + &(-rhs)
    }
}

impl Mul for &LaurentQSeries {
    type Output = LaurentQSeries;

    fn mul(self, rhs: &LaurentQSeries) -> LaurentQSeries {
        // a = O(q^Ta) contributes error O(q^(Ta + val b)), and symmetrically.
        let trunc = (self.trunc + rhs.min_exp).min(rhs.trunc + self.min_exp);
        if self.is_zero() || rhs.is_zero() {
            return LaurentQSeries::zero(trunc);
        }
        let lo = self.min_exp + rhs.min_exp;
        if lo >= trunc {
            return LaurentQSeries::zero(trunc);
        }
        let mut out = vec![BigInt::zero(); (trunc - lo) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.min_exp + i as i64;
            if ea + rhs.min_exp >= trunc {
                break;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let e = ea + rhs.min_exp + j as i64;
                if e >= trunc {
                    break;
                }
                if !b.is_zero() {
                    out[(e - lo) as usize] += a * b;
                }
            }
        }
        LaurentQSeries::new(lo, out, trunc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentQSeries {
            type Output = LaurentQSeries;
            fn $m(self, rhs: LaurentQSeries) -> LaurentQSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentQSeries {
    type Output = LaurentQSeries;
    fn neg(self) -> LaurentQSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ser(min: i64, c: &[i64], trunc: i64) -> LaurentQSeries {
        LaurentQSeries::new(min, c.iter().map(|&x| BigInt::from(x)).collect(), trunc)
    }

    #[test]
    fn normalization_strips_zeros() {
        let s = ser(-2, &[0, 0, 1, 0, 3, 0, 0], 10);
        assert_eq!(s.valuation(), 0);
        assert_eq!(s.degree(), Some(2));
        let z = ser(0, &[0, 0], 5);
        assert!(z.is_zero());
        assert_eq!(z.valuation(), 5);
    }

    #[test]
    fn small_hand_sum() {
        let a = ser(0, &[1, 1], 10);
        let b = ser(1, &[1, 1], 10);
        assert_eq!(&a + &b, ser(0, &[1, 2, 1], 10));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn geometric_series() {
        let geo = ser(0, &[1; 20], 20);
        let one_minus_q = ser(0, &[1, -1], 100);
        assert_eq!(&one_minus_q * &geo, LaurentQSeries::one(20));
        assert_eq!(one_minus_q.truncate(20).invert().unwrap(), geo);
    }

    #[test]
    fn mul_trunc_accounts_for_negative_valuation() {
        let a = ser(-3, &[1], 100);
        let b = ser(0, &[1, 1, 1], 10);
        let p = &a * &b;
        assert_eq!(p.trunc(), 7);
        assert_eq!(p.valuation(), -3);
    }

    #[test]
    fn coeff_boundary() {
        let s = ser(0, &[1, 2, 3], 3);
        assert_eq!(s.coeff(2).unwrap(), BigInt::from(3));
        assert!(matches!(s.coeff(3), Err(Error::OutOfRange { .. })));
        assert_eq!(LaurentQSeries::zero(10).coeff(7).unwrap(), BigInt::zero());
    }

    #[test]
    fn invert_laurent() {
        // 1 - q^-2 = -q^-2(1 - q^2), inverse -q^2/(1-q^2)
        let a = ser(-2, &[-1, 0, 1], 30);
        let inv = a.invert().unwrap();
        assert_eq!(inv.valuation(), 2);
        let prod = &a * &inv;
        assert_eq!(
            prod.first_difference(&LaurentQSeries::one(prod.trunc()), prod.trunc()),
            None
        );
        assert!(prod.trunc() >= 30);
        assert!(a.div_binomial(1, -2).is_ok());
    }

    #[test]
    fn invert_requires_unit() {
        assert_eq!(ser(0, &[2, 1], 10).invert(), Err(Error::NotAUnit));
        assert_eq!(LaurentQSeries::zero(10).invert(), Err(Error::NotAUnit));
    }

    #[test]
    fn binomial_helpers_agree_with_general_ops() {
        let f = ser(-1, &[1, 3, -2, 5, 7, 1], 12);
        for &(s, e) in &[(1, 1), (-1, 3), (1, -2), (-1, 0)] {
            let b = LaurentQSeries::from_terms([(0, 1), (e, -s)], 1000);
            assert_eq!(f.mul_binomial(s, e), &f * &b, "mul by 1 - {s}q^{e}");
            if e != 0 {
                let d = f.div_binomial(s, e).unwrap();
                let expect = &f * &b.invert().unwrap();
                let t = d.trunc().min(expect.trunc());
                assert_eq!(d.first_difference(&expect, t), None);
            }
        }
    }

    #[test]
    fn scale_q_trunc() {
        let s = ser(0, &[1, 1, 1], 3).scale_q(3);
        assert_eq!(s.trunc(), 9);
        assert_eq!(s.coeff(6).unwrap(), BigInt::one());
        assert_eq!(s.coeff(4).unwrap(), BigInt::zero());
    }

    #[test]
    fn display() {
        assert_eq!(ser(-1, &[1, -2, 0, 1], 5).to_string(), "q^-1 - 2 + q^2 + O(q^5)");
    }
}
