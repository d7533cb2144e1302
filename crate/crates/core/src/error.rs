use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator set")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the generated set has infinite complement")]
    NotCofinite(i64),
    #[error("0 is missing from the member list")]
    ZeroMissing,
    #[error("negative member {0} in a semigroup")]
    NegativeMember(i64),
    #[error("not closed under addition: {a} + {b} = {} is missing", a + b)]
    NotClosed { a: i64, b: i64 },
    #[error("operands live over different semigroups")]
    CarrierMismatch,
    #[error("second operand is not contained in the first (witness {witness})")]
    NotNested { witness: i64 },
    #[error("ideal is not contained in the ring (witness {witness})")]
    NotIntegral { witness: i64 },
    #[error("ideal is not contained in the maximal ideal (witness {witness})")]
    NotProper { witness: i64 },
    #[error("ideal is principal")]
    PrincipalIdeal,
    #[error("the semigroup is all of N (regular ring)")]
    RegularRing,
    #[error("blow-up equals the ring itself")]
    DegenerateBlowup,
    #[error("equivalent conditions disagree in group {group}: {detail}")]
    EquivalenceViolation { group: String, detail: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("unknown statement id {0:?}")]
    UnknownStatement(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

impl Error {
    /// Whether the error comes from malformed text rather than from the
    /// mathematics of the input.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
