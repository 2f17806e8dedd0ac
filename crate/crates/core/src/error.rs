//! Error types shared across the crate.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoeffError {
    DivisionByZero,
    /// Dividing by a series with strictly higher lowest nonzero order.
    SeriesValuation,
    /// Operands from different coefficient rings.
    RingMismatch,
}

impl fmt::Display for CoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffError::DivisionByZero => write!(f, "division by zero"),
            CoeffError::SeriesValuation => {
                write!(f, "series division below valuation (would need Laurent terms)")
            }
            CoeffError::RingMismatch => write!(f, "scalar ring mismatch"),
        }
    }
}

impl std::error::Error for CoeffError {}

#[derive(Clone, Debug)]
pub enum AlgError {
    Coeff(CoeffError),
    /// Rewriting exceeded its step budget; signals a bad rule orientation.
    NonTerminating { budget: u64 },
    /// Letter not present in the presentation.
    UnknownLetter(String),
    /// Operands belong to different presentations.
    MixedPresentation,
    /// Antipode table is missing an entry reachable from the input.
    AntipodeUndefined(String),
    /// No pairing registered for the requested pair of presentations.
    UnregisteredPair,
    /// Action table has no entry for the letter.
    UnregisteredLetter(String),
    /// S^-1 could not be solved from the antipode tables.
    AntipodeNotInvertible(String),
    /// A derived cross relation cannot be expressed in the target alphabet.
    NonPolynomialCrossRelation(String),
    /// The 2-cocycle condition failed where it was required.
    CocycleFailed(String),
    /// q_exp_conjugate precondition violated; refusing a wrong closed form.
    RelationNotSatisfied(String),
    /// Locally finite action series did not terminate within budget.
    NonTerminatingActionSeries,
    /// Operation not available in the requested mode.
    ModeUnsupported(String),
    /// Chart name not registered for the model.
    UnknownChart(String),
    /// Series element whose order-0 part is not the unit.
    NotUnital,
    /// Twist compatibility condition failed.
    TwistConditionFailed(String),
}

impl From<CoeffError> for AlgError {
    fn from(e: CoeffError) -> Self {
        AlgError::Coeff(e)
    }
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::Coeff(e) => write!(f, "{}", e),
            AlgError::NonTerminating { budget } => {
                write!(f, "rewriting exceeded {} steps", budget)
            }
            AlgError::UnknownLetter(n) => write!(f, "unknown letter: {}", n),
            AlgError::MixedPresentation => write!(f, "operands from different presentations"),
            AlgError::AntipodeUndefined(n) => write!(f, "antipode undefined on letter {}", n),
            AlgError::UnregisteredPair => write!(f, "no pairing registered for this pair"),
            AlgError::UnregisteredLetter(n) => write!(f, "no action entry for letter {}", n),
            AlgError::AntipodeNotInvertible(n) => {
                write!(f, "antipode not invertible on letter {}", n)
            }
            AlgError::NonPolynomialCrossRelation(m) => {
                write!(f, "derived cross relation not expressible: {}", m)
            }
            AlgError::CocycleFailed(m) => write!(f, "cocycle condition failed: {}", m),
            AlgError::RelationNotSatisfied(m) => {
                write!(f, "conjugation precondition not satisfied: {}", m)
            }
            AlgError::NonTerminatingActionSeries => {
                write!(f, "action series did not terminate within budget")
            }
            AlgError::ModeUnsupported(m) => write!(f, "mode unsupported: {}", m),
            AlgError::UnknownChart(n) => write!(f, "unknown chart: {}", n),
            AlgError::NotUnital => write!(f, "order-0 part is not the unit"),
            AlgError::TwistConditionFailed(m) => write!(f, "twist condition failed: {}", m),
        }
    }
}

impl std::error::Error for AlgError {}
