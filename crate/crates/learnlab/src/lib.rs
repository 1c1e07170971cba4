//! Numerical laboratory for a pair of set-learning algorithms and the
//! machinery that governs how fast they converge.
//!
//! The setting: a teacher draws samples from a hidden target set out of `n`
//! candidates. The learner holds a guess until a sample contradicts it. The
//! *memoryless* learner then jumps to a uniformly random other set, which
//! makes the process a Markov chain with a diagonal-plus-rank-one transition
//! matrix; the *full-memory* learner never revisits a rejected set and walks
//! a uniformly random permutation instead.
//!
//! Convergence speed of the memoryless chain is set by the second-largest
//! eigenvalue of the transition matrix. That eigenvalue is tied to the
//! smallest root of the derivative of the polynomial whose roots are the
//! overlap gaps, which in turn is sandwiched by the harmonic mean of the
//! gaps, a heavy-tailed statistic whose limit laws are one-sided stable
//! laws. Each link in that chain lives in its own module:
//!
//! - [`distributions`]: gap laws (power-law density near zero, exponent
//!   `beta`) and reproducible instance sampling.
//! - [`spectral`]: transition matrix, characteristic-polynomial identity,
//!   second eigenvalue via the log-derivative root, harmonic mean, and the
//!   eigen-expansion constant of the success probability.
//! - [`harmonic`]: reciprocal-mean statistics, regime centerings, limit
//!   constants, laws of large numbers, distributional self-consistency, and
//!   a one-sided stable reference sampler.
//! - [`learners`]: exact and simulated success probabilities and
//!   sample-complexity thresholds for both algorithms.
//! - [`experiments`]: n-sweeps of the threshold and scaling-law fits.
//! - [`stats`]: the small statistical toolbox (KS tests, Hill estimator,
//!   quantiles, least squares) the rest of the crate leans on.
//!
//! Everything stochastic takes an explicit 64-bit seed and derives per-trial
//! sub-seeds through the fixed mixing function in [`seed`], so runs are
//! reproducible bit-for-bit regardless of thread count.

pub mod distributions;
pub mod error;
pub mod experiments;
pub mod harmonic;
pub mod instance;
pub mod learners;
pub mod seed;
pub mod spectral;
pub mod stats;

pub use distributions::OverlapDistribution;
pub use error::{Error, Result};
pub use instance::LearnerInstance;
pub use spectral::{SpectralSummary, TransitionMatrix};
