use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    InvalidModulus,
    #[error("k and n must be coprime (k={k}, n={n})")]
    NotCoprime { k: usize, n: usize },
    #[error("{what} out of range: {value} not in [{lo}..{hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("not a permutation of [1..n]")]
    InvalidPermutation,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(&'static str),
    #[error("permutation does not belong to the requested case: {0}")]
    WrongCase(&'static str),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("alphabet of size {sigma} is too small, need at least {sigma_min}")]
    AlphabetTooSmall { sigma: u32, sigma_min: u32 },
    #[error("slope is degenerate (p={p}, q={q})")]
    DegenerateSlope { p: usize, q: usize },
    #[error("empty word")]
    EmptyWord,
    #[error("word is not a Lyndon word")]
    NotLyndon,
    #[error("word is not over the binary alphabet {{a, b}}")]
    NonBinary,
    #[error("expected an even index >= 4, got {0}")]
    WrongParity(u32),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("instance too large: {size} candidates exceed the limit of {limit}")]
    InstanceTooLarge { size: u128, limit: u128 },
    #[error("split refinement produced a string whose suffix array differs from the permutation")]
    RefinementCounterexample,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
