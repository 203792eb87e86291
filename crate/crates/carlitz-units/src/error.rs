//! Error type shared by every layer of the crate.

use thiserror::Error;

/// Everything that can go wrong in constructions and operations.
///
/// Logic faults that theory rules out (non-exact divisions, a norm that
/// leaves the base ring, a vanishing resolvent) are not represented here;
/// they are hard assertions and abort the process.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("modulus shape does not match the extension degree: {0}")]
    DegreeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("element is not coprime to the modulus")]
    NotCoprime,
    #[error("element does not generate the residue group")]
    NotGenerator,
    #[error("Carlitz index must be nonzero")]
    ZeroIndex,
    #[error("q = 2 with a degree-1 prime is excluded")]
    StarViolated,
    #[error("elements belong to different ring contexts")]
    ContextMismatch,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("zero element")]
    ZeroElement,
    #[error("unit does not have norm 1")]
    NotNormOne,
    #[error("constant term is not 1 modulo the prime: not a quotient of conjugate units")]
    NotInG,
    #[error("witness polynomial does not evaluate to a unit")]
    WitnessNotUnit,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
