//! Error type shared by every module.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes do not match the operation.
    DimensionMismatch(String),
    /// Square matrix with no inverse.
    SingularMatrix,
    /// Right-hand side outside the column space of the coefficient matrix.
    NoSolution,
    /// det(sF - G) vanishes identically; no slow/fast split exists.
    IrregularPencil,
    /// A matrix expected to be nilpotent is not.
    NotNilpotent,
    /// Horizon too short for the requested operation.
    BadHorizon(String),
    /// Target state lies outside the reachable set.
    NotReachable,
    /// No input sequence attains the target at the chosen time point.
    NotAchievable,
    /// Input file lacks a field required by the command.
    MissingData(String),
    /// Malformed input file or rational literal.
    Parse(String),
    /// An internal self-check failed; indicates a bug, never expected.
    Internal(String),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::NoSolution => f.write_str("linear system has no solution"),
            Error::IrregularPencil => f.write_str("pencil sF - G is not regular"),
            Error::NotNilpotent => f.write_str("matrix is not nilpotent"),
            Error::BadHorizon(msg) => write!(f, "bad horizon: {msg}"),
            Error::NotReachable => f.write_str("target is not reachable"),
            Error::NotAchievable => f.write_str("target is not achievable"),
            Error::MissingData(msg) => write!(f, "missing data: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Internal(msg) => write!(f, "internal verification failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
