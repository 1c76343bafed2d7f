use std::fmt;

/// Which validity check a candidate automorphism failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// `c·τ(z) + ε·δ(τ(z)) = τ(z)·c + τ(δ(z))` fails on some generator `z`.
    Eq1,
    /// The substitution does not map `f` to itself.
    FixesF,
    /// `ε` is not a central unit.
    UnitEpsilon,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Eq1 => f.write_str("Eq1"),
            Condition::FixesF => f.write_str("FixesF"),
            Condition::UnitEpsilon => f.write_str("UnitEpsilon"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),
    #[error("operands live over different prime fields")]
    ModulusMismatch,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("the derivation is zero")]
    ZeroDerivation,
    #[error("no p-polynomial of exponent at most {max_e} annihilates the derivation")]
    PPolynomialNotFound { max_e: usize },
    #[error("leading coefficient is not invertible")]
    NonInvertibleLeadingCoefficient,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("g(δ) is not an inner derivation")]
    NotInner,
    #[error("element is not in the nucleus")]
    NotNuclear,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element does not lie in the coefficient ring")]
    NotInCoefficientRing,
    #[error("automorphism condition {0} failed")]
    ConditionFailed(Condition),
    #[error("unsupported instance: {0}")]
    UnsupportedInstance(String),
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("t may not appear in a denominator")]
    TInDenominator,
    #[error("declared g does not annihilate the derivation")]
    GNotAnnihilating,
    #[error("not a p-polynomial: {0}")]
    NotPPolynomial(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
