//! Error type shared across the crate.

use std::path::PathBuf;

use crate::mask::SubsetMask;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("ground set of {n} elements exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid circuit family: {reason} (witness: {witness:?})")]
    InvalidCircuits {
        reason: String,
        witness: Vec<SubsetMask>,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("{0:?} is not a flat")]
    NotAFlat(SubsetMask),

    #[error("not a modular cut: {0}")]
    NotAModularCut(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("extension fails to block the cocircuit {0:?}")]
    BlockerFailsBlocking(SubsetMask),

    /// A structural fact the library relies on was contradicted by an
    /// instance. This should be unreachable; the instance is dumped as a
    /// counterexample artifact when possible.
    #[error("internal invariant '{check}' violated (counterexample: {artifact:?})")]
    InvariantViolation {
        check: String,
        artifact: Option<PathBuf>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
