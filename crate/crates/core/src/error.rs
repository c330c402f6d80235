use thiserror::Error;

/// Why a proposed gluing `d2·S1 + d1·S2` was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GluingFault {
    /// `d1` is not an element of `S1`, or it is one of its minimal generators.
    D1NotInterior,
    /// `d2` is not an element of `S2`, or it is one of its minimal generators.
    D2NotInterior,
    /// `gcd(d1, d2) != 1`.
    NotCoprime,
}

impl std::fmt::Display for GluingFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            GluingFault::D1NotInterior => "d1 must be a non-generator element of S1",
            GluingFault::D2NotInterior => "d2 must be a non-generator element of S2",
            GluingFault::NotCoprime => "d1 and d2 must be coprime",
        };
        f.write_str(msg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("at least one generator is required")]
    EmptyInput,
    #[error("generators must be positive, got {0}")]
    InvalidGenerator(u64),
    #[error("gcd of generators must be 1 (got {0})")]
    GcdNotOne(u64),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("modulus {0} is too large for an Apéry table")]
    TooLarge(u64),
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(i64),
    #[error("negative element {0}")]
    NegativeElement(i64),
    #[error("embedding dimension must be at least 2")]
    EmbeddingDimensionOne,
    #[error("arrangement is not a permutation of the minimal generators")]
    NotAPermutation,
    #[error("the Apéry set is not gamma-rectangular")]
    NotGammaRectangular,
    #[error("the Apéry set is not alpha-rectangular")]
    NotAlphaRectangular,
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("invalid gluing: {0}")]
    InvalidGluing(GluingFault),
    #[error("gluing hypothesis violated: {0}")]
    ApertureViolation(&'static str),
    #[error("the semigroup is the natural numbers")]
    IsNaturals,
    #[error("m = {m} has {omega} prime factors, need at least {needed}")]
    LengthTooSmall { m: u64, omega: u32, needed: u32 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
