//! Exact q-series machinery for gap-condition partitions.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`] and [`xseries`]: truncated Laurent series in `q` with big-integer
//!   coefficients, and polynomials in a second variable `x` over them.
//! - [`pochhammer`]: finite and infinite q-Pochhammer symbols.
//! - [`partitions`]: gap rules, brute-force enumeration, modular diagrams and
//!   triangle-removal bijections. This is the combinatorial oracle.
//! - [`double_series`]: the inner sums `r(l,u,v,w;n)`, the family `R(s,t,l,u,v,w)`
//!   and the two-variable double sums for Schur, Göllnitz–Gordon and Göllnitz partitions.
//! - [`hypergeometric`]: terminating basic hypergeometric sums and summation identities.
//! - [`qdifference`]: linear q-difference equations and coefficient recurrences.
//! - [`identities`]: the named identity registry and verification reports.

pub mod bounds;
pub mod check;
pub mod double_series;
pub mod error;
pub mod hypergeometric;
pub mod identities;
pub mod partitions;
pub mod pochhammer;
pub mod qdifference;
pub mod series;
pub mod xseries;

pub use check::{Discrepancy, Outcome};
pub use error::{Error, Result};
pub use series::LaurentQSeries;
pub use xseries::{Monomial, XSeries};
