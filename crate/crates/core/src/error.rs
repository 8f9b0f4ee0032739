use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("index error: {0}")]
    Index(String),

    #[error("ambient size mismatch: n = {0} vs n = {1}")]
    AmbientMismatch(usize, usize),

    #[error("monomial {0} does not appear in the polynomial")]
    MonomialAbsent(String),

    #[error("x[{i},{j}]*x[{j},{k}] does not divide {monomial}")]
    DivisorAbsent {
        monomial: String,
        i: usize,
        j: usize,
        k: usize,
    },

    #[error("malformed triple ({0},{1},{2}) for n = {3}: need 1 <= i < j < k <= n")]
    MalformedTriple(usize, usize, usize, usize),

    #[error("script exhausted after {0} steps but the polynomial is not pathless")]
    ScriptExhausted(usize),

    #[error("script step {step} is inapplicable: {reason}")]
    ScriptInapplicable { step: usize, reason: String },

    #[error("the zero polynomial has no head term")]
    ZeroPolynomial,

    #[error("monomial {monomial} is not S-friendly for S = {subset:?}")]
    NotSFriendly { monomial: String, subset: Vec<usize> },

    #[error("count does not fit in 128 bits: {0}")]
    Overflow(String),

    #[error("basis element {0} is not monic")]
    NotMonic(String),

    #[error("monomial {0} is not pathless")]
    NotPathless(String),

    #[error("indices must be distinct elements of [1, {n}], got {indices:?}")]
    RepeatedIndex { indices: Vec<usize>, n: usize },

    #[error("not a permutation of 1..={0}: {1:?}")]
    InvalidPermutation(usize, Vec<usize>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
