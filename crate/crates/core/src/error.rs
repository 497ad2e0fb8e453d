use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("field size {p}^{e} exceeds 65536")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("field of size {size} is not GF({base}^2)")]
    NotSquareField { size: u32, base: u32 },
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("rows have different lengths")]
    RaggedRows,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("enumeration budget of {budget} candidates exceeded")]
    Infeasible { budget: u64 },
    #[error("code has no nonzero codeword")]
    NoNonzeroCodeword,
    #[error("second code is not a subcode of the first")]
    NotSubcode,
    #[error("d2 = q-1: dual is not a PRM code")]
    DualNotPrm,
    #[error("excluded parameters: {0}")]
    Excluded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        detail: detail.into(),
    }
}
