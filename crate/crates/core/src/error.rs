//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),

    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("precondition failed: {condition} (witness: {witness})")]
    PreconditionFailed { condition: String, witness: String },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("parse error at position {position}: {message}")]
    ParseError { position: usize, message: String },

    #[error("signature error: {0}")]
    SignatureError(String),

    #[error("unbound variable: {0}")]
    UnboundVariable(String),

    #[error("variable split error: {0}")]
    VariableSplit(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("not a congruence: {0}")]
    NotACongruence(String),

    #[error("not a quasi-Stone algebra: {0}")]
    NotQuasiStone(String),

    #[error("not a weak Lukasiewicz algebra: {0}")]
    NotWeakLukasiewicz(String),

    #[error("not a distributive PBZ*-lattice: {0}")]
    NotDistributivePbz(String),

    #[error("diamond-free reduct is not a De Morgan algebra: {0}")]
    NotDeMorgan(String),

    #[error("format error at line {line}: {message}")]
    FormatError { line: usize, message: String },

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
