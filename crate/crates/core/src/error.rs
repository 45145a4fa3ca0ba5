use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("quadratic character undefined at 0")]
    CharacterAtZero,
    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("mixed moduli: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("galois automorphism index must be a nonzero residue, got {0}")]
    BadGaloisIndex(u64),
    #[error("space of {requested} points exceeds the budget of {budget}")]
    BudgetExceeded { requested: u128, budget: u64 },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("variable x{index} out of range (n = {n})")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("bad function file: {0}")]
    FunctionFile(String),
    #[error("unknown catalog entry '{0}'")]
    UnknownCatalogEntry(String),
    #[error("function is not bent")]
    NotBent,
    #[error("dual is not bent; c_j/d_j level sets are undefined")]
    NonDualBent,
    #[error("family {family} inapplicable: {reason}")]
    Inapplicable { family: String, reason: String },
    #[error("family {family}: cell {label} is empty")]
    EmptyCell { family: String, label: String },
    #[error("fusion recipe {target} does not apply to a {base} base partition")]
    FusionMismatch { base: String, target: String },
    #[error("not an association scheme: p^{{{w}}}_{{{u},{v}}} differs between representatives {c1} and {c2} ({count1} vs {count2})")]
    NotAScheme {
        u: usize,
        v: usize,
        w: usize,
        c1: usize,
        c2: usize,
        count1: u64,
        count2: u64,
    },
    #[error("invalid parameters for {what}: {reason}")]
    BadParams { what: String, reason: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
