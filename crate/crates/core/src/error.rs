use thiserror::Error;

/// Errors raised by the algebra and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size p^m overflows 64 bits (p = {p}, m = {m})")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("element index {index} out of range for field of order {q}")]
    ElementOutOfRange { index: u64, q: u64 },
    #[error("zero has no multiplicative order or inverse")]
    ZeroElement,
    #[error("field GF({q}) is not a quadratic extension; sigma is undefined")]
    NotSquareField { q: u64 },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial: {0}")]
    ZeroPolynomial(String),
    #[error("both inputs are constant in the eliminated variable")]
    ConstantResultantInputs,
    #[error("polynomial vanishes identically mod {0}")]
    VanishesModP(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("computation exceeds supported size: {0}")]
    TooLarge(String),
    #[error("element order exceeds cap {0}")]
    CapExceeded(u64),
    #[error("closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("matrix entries cannot be packed into a 128-bit key (q = {q}, n = {n})")]
    EncodingOverflow { q: u64, n: usize },
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("claim falsified: {0}")]
    Falsified(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
