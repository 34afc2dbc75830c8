use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("undecided after {refinements} refinements: {what}")]
    Undecided { what: String, refinements: u32 },
    #[error("element cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("generator {index} is singular")]
    SingularGenerator { index: usize },
    #[error("{name} is not simple: {reason}")]
    NotSimple { name: String, reason: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("unavailable: {0}")]
    Unavailable(String),
}
