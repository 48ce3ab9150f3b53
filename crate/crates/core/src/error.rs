use thiserror::Error;

/// Errors raised by the engine.
///
/// `CapExceeded` is an internal error: principalization of a coprime pair always
/// terminates, so hitting the cap points at a bookkeeping bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent must be a non-negative integer at position {0}")]
    NonIntegerExponent(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("wrong order: expected {expected}, got {given}")]
    WrongOrder { expected: u32, given: u32 },
    #[error("degree {degree} exceeds homogenization degree {target}")]
    DegreeTooSmall { degree: u32, target: u32 },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("NotABasePoint: both generators must vanish at the center")]
    NotABasePoint,
    #[error(
        "NonRationalPoint: a common zero needs a degree-{degree} extension of {field}; \
         rerun over a prime field (--field Fp:<p>)"
    )]
    NonRationalPoint { field: String, degree: usize },
    #[error("CapExceeded: resolution deeper than {0} (internal error)")]
    CapExceeded(usize),
    #[error("NotCoprime: generators share the factor {0}")]
    NotCoprime(String),
    #[error("BothConstant: at least one generator must be nonconstant")]
    BothConstant,
    #[error("ShearExhausted: no admissible shear after {0} attempts")]
    ShearExhausted(usize),
    #[error("NotMonomial: {0}")]
    NotMonomial(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field or variable mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
