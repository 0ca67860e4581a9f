//! Exact computation of graded Betti tables, purity verdicts, generalized
//! Hamming weights, and weight distributions of linear codes over finite
//! fields, together with constructors for the geometric code families
//! (Reed-Muller, simplex, hyperoval, maximal-arc, ovoid, Hermitian,
//! subfield systems) that make good test subjects.
//!
//! Everything is exact: field arithmetic is table-backed GF(p^e), matrix
//! work is fraction-free elimination over the field, and Betti values are
//! arbitrary-precision integers. Two independent pipelines produce Betti
//! numbers (a full subset scan via nullity strata, and shift enumeration
//! plus an exact linear solve of the alternating power-sum equations), and
//! the test suite insists they agree wherever both are feasible.

pub mod algebra;
pub mod betti;
pub mod cache;
pub mod code;
pub mod families;
pub mod json;
pub mod matroid;
pub mod verify;

pub use algebra::field::{FieldElement, FiniteField};
pub use algebra::matrix::MatrixGF;
pub use betti::{BettiTable, PurityReport};
pub use code::{LinearCode, Subcode, WeightDistribution};
pub use families::ProjectiveSystem;
pub use matroid::MatroidView;

use num_bigint::BigInt;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual operations; the CLI maps them onto its exit-code contract.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("code has dimension zero")]
    ZeroCode,
    #[error("budget exceeded: {what} needs {needed}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: BigInt,
        limit: BigInt,
    },
    #[error("subset is not a minimal element of its nullity stratum")]
    NotMinimal,
    #[error("shift sequence is not strictly increasing")]
    RepeatedShift,
    #[error("solved Betti value is not a positive integer")]
    NonIntegralBetti,
    #[error("Betti equation system is singular or inconsistent")]
    SingularSystem,
    #[error("{unknowns} unknowns exceed the {equations} available equations")]
    TooManyUnknowns { unknowns: usize, equations: usize },
    #[error("solved Betti value is negative")]
    NegativeBetti,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("polynomial degree too high in some variable")]
    DegreeTooHigh,
    #[error("code length exceeds q+1")]
    LengthTooLong,
    #[error("construction requires even characteristic")]
    OddCharacteristic,
    #[error("h must be a proper power-of-two divisor of q")]
    InvalidDivisor,
    #[error("construction requires q > 2")]
    UnsupportedQ,
    #[error("projective system is degenerate")]
    Degenerate,
    #[error("unknown family: {0}")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Explicit enumeration budgets. Exceeding any of them is a hard error,
/// never silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of codewords enumerated by weight distributions.
    pub max_codewords: u64,
    /// Maximum number of subcodes enumerated per dimension.
    pub max_subcodes: u64,
    /// Maximum code length for full 2^n subset scans.
    pub scan_limit: usize,
    /// Maximum subset size for the explicit homology oracle.
    pub homology_limit: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_codewords: 1 << 24,
            max_subcodes: 1 << 20,
            scan_limit: 22,
            homology_limit: 12,
        }
    }
}
