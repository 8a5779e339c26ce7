//! Error type shared by every module in the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A hypothesis was evaluated on a point it is not defined on.
    #[error("point {point} is outside the hypothesis domain")]
    DomainMismatch { point: String },

    /// An operation that needs at least one example got an empty sample.
    #[error("operation requires a nonempty sample")]
    EmptySample,

    #[error("label {label} out of range for k = {k}")]
    LabelOutOfRange { label: u32, k: u32 },

    /// Base classes need at least two labels.
    #[error("invalid label arity k = {k}, need k >= 2")]
    InvalidArity { k: u32 },

    /// A probability vector failed validation (negative weight, bad sum,
    /// duplicate support entry, ...).
    #[error("invalid probabilities: {reason}")]
    InvalidProbabilities { reason: String },

    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    /// An exact enumeration would exceed the configured term budget.
    #[error("enumeration budget exceeded: {required} terms needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    /// Signals that the input is below the smallest size the block
    /// schedule is defined for; callers fall back to the base case.
    #[error("sample of size {m} is below the schedule minimum {min}")]
    SampleTooSmall { m: u64, min: u64 },

    /// A base learner failed inside the wrapper; carries the stage index.
    #[error("base learner failed at stage {stage}: {source}")]
    LearnerFailure {
        stage: u32,
        #[source]
        source: Box<Error>,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
