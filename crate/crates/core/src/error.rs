use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    Empty,
    #[error("monomial has {found} exponents, expected {expected}")]
    VarsMismatch { expected: usize, found: usize },
    #[error("at most {max} variables are supported, got {found}")]
    TooManyVars { max: usize, found: usize },
    #[error("variable index {index} out of range for {vars} variables")]
    VarOutOfRange { index: usize, vars: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("the unit ideal has no associated primes")]
    UnitIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolymatroidError {
    #[error("ideal is not polymatroidal")]
    NotPolymatroidal,
    #[error("Veronese-type caps sum to {sum}, below the degree {degree}")]
    CapsTooSmall { sum: u64, degree: u32 },
    #[error("Veronese-type caps must satisfy 1 <= a_i <= d, got {cap} with d = {degree}")]
    BadCap { cap: u32, degree: u32 },
    #[error("expected {expected} caps, got {found}")]
    CapsLength { expected: usize, found: usize },
    #[error("transversal needs at least one prime")]
    NoPrimes,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error("the unit ideal has no depth")]
    UnitIdeal,
    /// Neither the reverse-lexicographic nor the lexicographic order of the
    /// generators yields linear quotients.
    #[error("colon ideal at position {position} is not generated by variables ({order} order)")]
    ColonNotLinear {
        position: usize,
        order: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error(
        "ideal is not polymatroidal; stability indices are only certified for polymatroidal ideals"
    )]
    NotPolymatroidal,
    #[error("power {power}: {source}")]
    Depth { power: usize, source: DepthError },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("horizon must be at least 1")]
    ZeroHorizon,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("candidate pool has {pool} monomials; exhaustive mode allows at most {max}")]
    PoolTooLarge { pool: usize, max: usize },
    #[error("invalid search space: {0}")]
    InvalidSpace(String),
    #[error("cross-check disagreement on {ideal}: {detail}")]
    CrossCheck { ideal: String, detail: String },
    #[error(transparent)]
    Stability(#[from] StabilityError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(
        "line {line}, column {column}: variable x{index} exceeds the {vars} declared variables"
    )]
    IndexOutOfRange {
        line: usize,
        column: usize,
        index: usize,
        vars: usize,
    },
    #[error("empty input")]
    Empty,
    #[error("no variables occur; give the number of variables explicitly")]
    NoVariables,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}
