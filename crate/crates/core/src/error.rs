use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Requested coefficient lies in the region the series does not know.
    #[error("coefficient x^{xpow} q^{qpow} is outside the known region (trunc {trunc}, x-degree bound {xdeg_bound})")]
    OutOfRange {
        xpow: i64,
        qpow: i64,
        trunc: i64,
        xdeg_bound: usize,
    },

    #[error("series is not a unit: lowest coefficient must be +1 or -1 times a power of q")]
    NotAUnit,

    #[error("infinite product does not converge coefficientwise: {0}")]
    Divergent(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A basic hypergeometric sum that neither terminates nor has an argument of positive q-order.
    #[error("hypergeometric series neither terminates nor converges q-adically")]
    NonTerminating,

    /// A comparison was asked to look further than one of its operands is known.
    #[error("insufficient precision: needed trunc {needed}, operand known only below {available}")]
    InsufficientPrecision { needed: i64, available: i64 },

    #[error("unknown identity `{id}`; valid ids: {valid}")]
    UnknownIdentity { id: String, valid: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
