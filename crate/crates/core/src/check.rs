//! Coefficientwise comparison of series on their common known region.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::LaurentQSeries;
use crate::xseries::XSeries;

/// First coefficient where the two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub xpow: i64,
    pub qpow: i64,
    #[serde(with = "decimal")]
    pub lhs_coeff: BigInt,
    #[serde(with = "decimal")]
    pub rhs_coeff: BigInt,
    /// Which instance of a parameterized family failed, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

impl Discrepancy {
    pub fn new(xpow: i64, qpow: i64, lhs_coeff: BigInt, rhs_coeff: BigInt) -> Self {
        Discrepancy {
            xpow,
            qpow,
            lhs_coeff,
            rhs_coeff,
            context: None,
        }
    }

    pub fn with_context(mut self, context: impl Into<String>) -> Self {
        self.context = Some(match self.context.take() {
            Some(inner) => format!("{}; {inner}", context.into()),
            None => context.into(),
        });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree(Discrepancy),
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Agree)
    }

    pub fn discrepancy(&self) -> Option<&Discrepancy> {
        match self {
            Outcome::Agree => None,
            Outcome::Disagree(d) => Some(d),
        }
    }

    pub fn with_context(self, context: impl FnOnce() -> String) -> Self {
        match self {
            Outcome::Agree => Outcome::Agree,
            Outcome::Disagree(d) => Outcome::Disagree(d.with_context(context())),
        }
    }
}

/// Runs checks in order and stops at the first disagreement.
pub fn all<I>(checks: I) -> Result<Outcome>
where
    I: IntoIterator<Item = Result<Outcome>>,
{
    for c in checks {
        let c = c?;
        if !c.holds() {
            return Ok(c);
        }
    }
    Ok(Outcome::Agree)
}

/// Compares two q-series below `trunc`; both must be known that far.
pub fn compare(lhs: &LaurentQSeries, rhs: &LaurentQSeries, trunc: i64) -> Result<Outcome> {
    for s in [lhs, rhs] {
        if s.trunc() < trunc {
            return Err(Error::InsufficientPrecision {
                needed: trunc,
                available: s.trunc(),
            });
        }
    }
    Ok(match lhs.first_difference(rhs, trunc) {
        None => Outcome::Agree,
        Some((e, a, b)) => Outcome::Disagree(Discrepancy::new(0, e, a, b)),
    })
}

/// Compares two x-series for x-degrees `<= xdeg` and q-exponents below `trunc`.
pub fn compare_x(lhs: &XSeries, rhs: &XSeries, trunc: i64, xdeg: usize) -> Result<Outcome> {
    for s in [lhs, rhs] {
        if s.trunc() < trunc {
            return Err(Error::InsufficientPrecision {
                needed: trunc,
                available: s.trunc(),
            });
        }
        if s.xdeg_bound() < xdeg {
            return Err(Error::InvalidInput(format!(
                "x-degree bound {} below the requested {xdeg}",
                s.xdeg_bound()
            )));
        }
    }
    Ok(match lhs.first_difference(rhs, trunc, xdeg) {
        None => Outcome::Agree,
        Some((n, e, a, b)) => Outcome::Disagree(Discrepancy::new(n as i64, e, a, b)),
    })
}

/// Big integers as decimal strings, so JSON consumers never round them.
mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_refuses_unknown_region() {
        let a = LaurentQSeries::one(10);
        let b = LaurentQSeries::one(5);
        assert!(matches!(
            compare(&a, &b, 8),
            Err(Error::InsufficientPrecision {
                needed: 8,
                available: 5
            })
        ));
        assert!(compare(&a, &b, 5).unwrap().holds());
    }

    #[test]
    fn reports_first_difference() {
        let a = LaurentQSeries::from_terms([(0, 1), (3, 2)], 10);
        let b = LaurentQSeries::from_terms([(0, 1), (3, 5)], 10);
        let d = compare(&a, &b, 10).unwrap();
        assert_eq!(d, Outcome::Disagree(Discrepancy::new(0, 3, 2.into(), 5.into())));
    }
}
