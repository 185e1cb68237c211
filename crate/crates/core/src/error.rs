use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Su3Error {
    #[error("negative radicand: {0}")]
    NegativeRadicand(String),

    #[error("radicand too large for square-free extraction: {0}")]
    RadicandTooLarge(String),

    #[error("({p},{q}) has q > p; use negative-transpose path")]
    RequiresPGeQ { p: u32, q: u32 },

    #[error("invalid spin arguments: 2s = {doubled_spin}, 2σ = {doubled_sigma}")]
    InvalidSpin { doubled_spin: u32, doubled_sigma: i64 },

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("oracle system is inconsistent for ({p},{q}): {detail}")]
    OracleInconsistent { p: u32, q: u32, detail: String },

    #[error("oracle system is underdetermined for ({p},{q}); free blocks: {free:?}")]
    OracleUnderdetermined { p: u32, q: u32, free: Vec<(usize, usize)> },

    #[error("oracle limited to d <= {limit}; ({p},{q}) has d = {d}")]
    OracleTooLarge { p: u32, q: u32, d: u64, limit: u64 },

    #[error("unknown matrix name: {0}")]
    UnknownMatrix(String),

    #[error("malformed serialized value: {0}")]
    Wire(String),
}

pub type Result<T> = std::result::Result<T, Su3Error>;
