use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ideal exponent {0} is outside 0..=6")]
    IdealExponent(usize),

    #[error("invalid DNA base {ch:?} at position {pos}")]
    InvalidBase { ch: char, pos: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("the zero polynomial has no reciprocal")]
    ZeroPolynomial,

    #[error("length must be positive")]
    ZeroLength,

    #[error("divisor enumeration would produce {count} divisors (guard {guard})")]
    DivisorGuard { count: u128, guard: u128 },

    #[error("modulus {0} must be odd")]
    EvenModulus(u64),

    #[error("invalid generator tower: {0}")]
    Tower(String),

    #[error("enumeration guard exceeded: code has 2^{size_log2} words, guard is {guard}")]
    GuardExceeded { size_log2: u32, guard: u64 },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("edit cost for {0} is negative")]
    NegativeCost(String),

    #[error("at least two words are needed, got {0}")]
    TooFewWords(usize),

    #[error("right division needs a monic divisor")]
    NonMonicDivisor,

    #[error("skew cyclic codes need an even length, got {0}")]
    OddLength(usize),

    #[error("invalid skew generator: {0}")]
    SkewGenerator(String),

    #[error("codon table: {0}")]
    CodonTable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
