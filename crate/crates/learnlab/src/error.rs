//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gap-density exponents below -1 make the density non-normalizable
    /// near zero.
    #[error("gap-density exponent must be greater than -1, got {0}")]
    BetaOutOfRange(f64),

    #[error("gap values must lie in (0, 1], got {0}")]
    GapOutOfRange(f64),

    #[error("an empirical gap distribution needs at least one gap value")]
    EmptyGaps,

    #[error("a learner instance needs at least 2 sets, got {0}")]
    TooFewSets(usize),

    #[error("overlap vector must start with 1 and keep all later entries in [0, 1)")]
    MalformedOverlaps,

    #[error("input must not be empty")]
    EmptyInput,

    #[error("coefficient expansion is capped at n = {cap}, got n = {n}")]
    SizeCapExceeded { n: usize, cap: usize },

    /// The second eigenvalue is too close to the rest of the spectrum for
    /// the eigenvector pair (and hence the eigen constant) to be reliable.
    #[error("second eigenvalue separated from the rest of the spectrum by only {0:.3e}")]
    NearDegenerateEigenvalue(f64),

    #[error("inverse iteration did not reach the residual tolerance")]
    EigenvectorNotConverged,

    #[error("delta must lie in (0, 1), got {0}")]
    DeltaOutOfRange(f64),

    #[error("stable exponent must lie in (0, 1), got {0}")]
    AlphaOutOfRange(f64),

    /// Law-of-large-numbers checks only cover beta >= 0.
    #[error("operation is not defined for beta = {0}")]
    UnsupportedRegime(f64),

    #[error("operation requires a power-law gap family")]
    RequiresPowerGap,

    #[error("mean reciprocal gap is infinite for beta <= 0")]
    InfiniteMeanReciprocal,

    #[error("n grid must be non-empty and strictly increasing")]
    BadGrid,

    #[error("scaling fit needs at least {need} grid points, got {got}")]
    DegenerateGrid { need: usize, got: usize },

    #[error("at least one trial is required")]
    ZeroTrials,
}
