use thiserror::Error;

/// Errors surfaced by analytic evaluators, samplers and sweep execution.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value violates a documented invariant.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Input outside the domain of a special function or closed form.
    #[error("domain error: {0}")]
    Domain(String),

    /// An unscaled evaluation overflowed; a scaled variant exists.
    #[error("overflow in {0}; use the scaled variant")]
    Overflow(&'static str),

    /// A contour integral or series failed to reach its accuracy target.
    #[error("numerical evaluation did not converge: {0}")]
    NonConvergent(String),

    /// An alternating sum lost all significant digits.
    #[error("catastrophic cancellation in {context}: |terms|/|sum| = {ratio:.3e}")]
    CancellationLoss { context: &'static str, ratio: f64 },

    /// A Monte-Carlo sample evaluated to a non-finite value.
    #[error("non-finite sample in chunk {chunk}, index {index}: {detail}")]
    NonFiniteSample {
        chunk: u64,
        index: u64,
        detail: String,
    },

    /// Closed-form term count exceeds the tractable budget.
    #[error("closed form intractable: {0}")]
    Intractable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
