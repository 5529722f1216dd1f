use thiserror::Error;

use crate::syntax::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("tuple length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("a tuple must have at least one entry")]
    EmptyTuple,

    #[error("duplicate frequency generator `{0}`")]
    DuplicateGenerator(String),

    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),

    #[error("function is not in almost-periodic form: {0}")]
    NotApForm(String),

    #[error("rational function is not strictly proper (numerator degree {numerator_degree}, denominator degree {denominator_degree})")]
    NotStrictlyProper {
        numerator_degree: usize,
        denominator_degree: usize,
    },

    #[error("nonzero numerator over an empty denominator")]
    EmptyDenominator,

    #[error("residue at pole {pole} (order {order}) does not lie in the coefficient ring")]
    ResidueOutsideRing { pole: String, order: u32 },

    #[error("unbound generator `{0}`")]
    UnboundGenerator(String),

    #[error("generator `{name}` bound to non-positive value {value}")]
    NonPositiveBinding { name: String, value: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search resolution too coarse: {0}")]
    SearchResolution(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("exponential argument is not linear in t: {0}")]
    NonLinearExponent(String),

    #[error("exponential argument has a constant offset: exp({0})")]
    ExponentOffset(String),

    #[error("frequency generator `{0}` must be multiplied by i inside exp")]
    RealGeneratorCoefficient(String),

    #[error("frequency generators may only appear inside exp: {0}")]
    GeneratorOutsideExponent(String),

    #[error("invalid json: {0}")]
    Json(String),
}
