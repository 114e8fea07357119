use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("index {index} at line {line} is outside [0, {norb}]")]
    Index { line: usize, index: i64, norb: usize },

    #[error("invalid integrals: {0}")]
    InvalidIntegrals(String),

    #[error("imaginary residue {residue:e} exceeds tolerance (operator is not real)")]
    ImaginaryResidue { residue: f64 },

    #[error("{qubits} qubits exceeds the limit of {limit} for this operation")]
    DimensionTooLarge { qubits: usize, limit: usize },

    #[error("dense diagonalization above {limit} qubits needs a particle-number sector")]
    SectorRequired { limit: usize },

    #[error("shift state norm {norm} is not 1")]
    NonUnitState { norm: f64 },

    #[error("invalid deflation shift: {0}")]
    InvalidShift(String),

    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("empty distribution")]
    EmptyDistribution,

    #[error("invalid trial state: {0}")]
    InvalidState(String),

    #[error("sign pattern does not cover the distribution support")]
    SignMismatch,

    #[error("exhaustive enumeration of {size} ansatz exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("invalid ansatz parameters: {0}")]
    InvalidAnsatz(String),

    #[error("unsupported conversion from {from} to {to}")]
    UnsupportedConversion { from: String, to: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn in_file(self, path: impl AsRef<std::path::Path>) -> Self {
        Error::File {
            path: path.as_ref().display().to_string(),
            source: Box::new(self),
        }
    }
}
