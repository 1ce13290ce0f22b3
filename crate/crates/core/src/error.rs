use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in ratio")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("nodes {first} and {second} coincide")]
    DuplicateNode { first: usize, second: usize },
    #[error("need {needed} nodes, only {available} available")]
    InsufficientNodes { needed: usize, available: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("{nodes} nodes but {values} values")]
    LengthMismatch { nodes: usize, values: usize },
    #[error("samples do not match the pole nodes of V_{0}")]
    InconsistentSamples(usize),
    #[error("degenerate interpolant: alpha_{0} = 0")]
    DegenerateInterpolant(usize),
    #[error("degenerate recurrence input: alpha_{0} = 0")]
    DegenerateInput(usize),
    #[error("leading coefficient nu_{0} of T_{0} vanishes")]
    NuVanishes(usize),
    #[error("sample value A_{0} is zero")]
    ZeroSampleValue(usize),
    #[error("lower hypergeometric parameter vanishes at term {0}")]
    LowerParameterPole(usize),
    #[error("evaluation at a pole")]
    PoleEvaluation,
    #[error("non-finite integrand at quadrature node {0}")]
    NonFiniteSample(usize),
    #[error("invalid circle: {0}")]
    InvalidCircle(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// The offending index for errors that carry one.
    pub fn index(&self) -> Option<usize> {
        match self {
            Error::IndexOutOfRange { index, .. } => Some(*index),
            Error::InconsistentSamples(i)
            | Error::DegenerateInterpolant(i)
            | Error::DegenerateInput(i)
            | Error::NuVanishes(i)
            | Error::ZeroSampleValue(i)
            | Error::LowerParameterPole(i)
            | Error::NonFiniteSample(i) => Some(*i),
            _ => None,
        }
    }
}
