use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input set is empty")]
    EmptyInput,
    #[error("dilation factor must be nonzero")]
    ZeroDilation,
    #[error("value leaves the supported range (|a| <= 2^40, h <= 64)")]
    Overflow,
    #[error("set has {size} elements, subset-sum enumeration is capped at {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("set needs at least 2 elements, got {0}")]
    TooSmall(usize),
    #[error("fold count must be at least 1")]
    ZeroFold,
    #[error("fold count h = {h} exceeds set size k = {k} for a restricted variant")]
    FoldTooLarge { h: u32, k: usize },
    #[error("oracle would enumerate {count} coefficient vectors (cap {cap})")]
    CostCapExceeded { count: u128, cap: u128 },
    #[error("set contains 0, its independence number is degenerate")]
    ZeroElement,
    #[error("no catalogue bounds apply to variant {0}")]
    VariantMismatch(String),
    #[error("bad parameters for {kind}: {reason}")]
    BadParams { kind: String, reason: String },
    #[error("no theorem in the catalogue covers k = {k}, h = {h} for this set")]
    RegimeUnsupported { k: usize, h: u32 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("search space holds {count} sets (limit {limit})")]
    SpaceTooLarge { count: u128, limit: u128 },
    #[error("invalid search space: {0}")]
    BadSpace(String),
    #[error("{0}")]
    Parse(String),
}
