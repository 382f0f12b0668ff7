use thiserror::Error;

/// Errors produced by the word engine, the graded-class machinery and the
/// mapping-class layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter x{index} is outside the alphabet of size {size}")]
    AlphabetMismatch { index: u32, size: u32 },

    #[error("alphabet sizes differ: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("invalid generator index {index} (indices start at 1)")]
    InvalidIndex { index: u32 },

    #[error("word is not in the commutator subgroup: exponent vector {exponents:?}")]
    NotInDerived { exponents: Vec<i64> },

    #[error("element is not in term {weight} of the lower central series: nonzero degree-{degree} term {term}")]
    NotInLcs {
        weight: usize,
        degree: usize,
        term: String,
    },

    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("degree cap {cap} is outside the supported range 1..={max}")]
    CapOutOfRange { cap: usize, max: usize },

    #[error("coefficient overflow in {context}")]
    Overflow { context: &'static str },

    #[error("fast module action is only defined for powers of t1, got {monomial}")]
    FastModeUnsupported { monomial: String },

    #[error("invalid braid generator A{i},{n}")]
    InvalidBraidGenerator { i: u32, n: u32 },

    #[error("generator c{generator} does not cross the embedded disk")]
    NotCrossing { generator: u32 },

    #[error("mapping class is only at Johnson level {actual}, need {required}")]
    JohnsonLevel { required: usize, actual: String },

    #[error("unknown embedding {0:?}")]
    UnknownEmbedding(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
