use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown group spec `{0}`")]
    UnknownGroupSpec(String),

    #[error("group spec `{spec}` out of supported range: {reason}")]
    SpecOutOfRange { spec: String, reason: String },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("group would have order {order}, above the configured cap of {cap} elements")]
    SizeLimit { order: BigUint, cap: u64 },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("subgroup is not normal: conjugating {n} by {g} leaves the subgroup")]
    NonNormalSubgroup { g: usize, n: usize },

    #[error("map is not a homomorphism: fails on the pair ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("homomorphism is not injective: {a} and {b} have the same image")]
    NotInjective { a: usize, b: usize },

    #[error("map is not an isomorphism")]
    NotIsomorphism,

    #[error("section does not invert the surjection at {at}")]
    SectionMismatch { at: usize },

    #[error("bijection is not equivariant at group element {h}, point {point}")]
    NotEquivariant { h: usize, point: usize },

    #[error("value {value} at point {point} does not lie in the base subgroup")]
    NotWellDefined { point: usize, value: usize },

    #[error("search budget of {budget} nodes exhausted before a decision was reached")]
    SearchBudgetExceeded { budget: u64 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("group has no permutation representation")]
    MissingPermutationData,

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("prime {0} is not supported (only 2 and 3)")]
    UnsupportedPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("radical quotient is not a unit: {0}")]
    NonUnitQuotient(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid tower: {0}")]
    InvalidTower(String),

    #[error("{numerator} is not divisible by {divisor}")]
    DivisibilityViolation { numerator: u64, divisor: u64 },

    #[error("parse error at position {position} in `{input}`: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}
