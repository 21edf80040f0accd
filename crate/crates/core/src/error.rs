use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("duplicate ground-set label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown ground-set label {0:?}")]
    UnknownLabel(String),

    #[error("invalid sign character {0:?} (expected '+', '-' or '0')")]
    InvalidSign(char),

    #[error("covector family is empty")]
    EmptyFamily,

    #[error("not a conditional oriented matroid: {0}")]
    AxiomViolation(String),

    #[error("{0} is not a flat")]
    NotAFlat(String),

    #[error("{what} exceeds the configured cap ({got} > {limit})")]
    CapExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("region is empty")]
    EmptyRegion,

    #[error("arrangement forms have inconsistent dimension (expected {expected}, got {got})")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("degree {d} out of range 0..={n}")]
    DegreeOutOfRange { d: usize, n: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("membership is only defined for degree >= 1")]
    DegreeZero,

    #[error("locus is empty")]
    EmptyLocus,

    #[error("locus has a repeated point {0:?}")]
    DuplicatePoint(String),

    #[error("rank loop did not terminate by degree {0}; arithmetic bug")]
    NonTermination(usize),

    #[error("size mismatch: {monomials} monomials for {points} points")]
    SizeMismatch { monomials: usize, points: usize },

    #[error("subspace is not invariant under the permutation")]
    NotInvariant,

    #[error("signed permutation is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("character value is not an integer: {0}")]
    NonIntegralCharacter(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid choice: {0}")]
    InvalidChoice(String),

    #[error("{0} is not a prime below 2^62")]
    NotPrime(u64),

    #[error("{value} is not invertible modulo {p}")]
    NotInvertible { value: String, p: u64 },

    #[error("field characteristic {p} must exceed {needed}")]
    CharacteristicTooSmall { p: u64, needed: usize },

    #[error("this locus requires a characteristic-zero field")]
    CharacteristicZeroRequired,
}
