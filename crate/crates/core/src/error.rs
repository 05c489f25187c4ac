use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is constant and has no leader")]
    ConstantPolynomial,

    #[error("derivation index {index} out of range (ring has {n} derivations)")]
    DerivationOutOfRange { index: usize, n: usize },

    #[error("indeterminate index {index} out of range (ring has {m} indeterminates)")]
    IndeterminateOutOfRange { index: usize, m: usize },

    #[error("multi-index has length {found}, expected {expected}")]
    MultiIndexLength { expected: usize, found: usize },

    #[error("set is not triangular: {0}")]
    NotTriangular(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error(
        "inclusion-exclusion over {generators} generators of indeterminate {indeterminate} \
         exceeds the subset limit {limit}"
    )]
    SubsetBlowup {
        indeterminate: usize,
        generators: usize,
        limit: usize,
    },

    #[error("omega algorithms disagree: janet gives {janet}, inclusion-exclusion gives {incl_excl}")]
    InternalDisagreement { janet: String, incl_excl: String },

    #[error("chains use different rankings")]
    RankingMismatch,

    #[error("{line}:{column}: parse error: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: multi-index has {found} entries, ring has {expected} derivations")]
    ArityMismatch {
        line: usize,
        column: usize,
        expected: usize,
        found: usize,
    },

    #[error("{line}:{column}: unknown identifier `{name}`")]
    UnknownIdentifier {
        line: usize,
        column: usize,
        name: String,
    },
}
