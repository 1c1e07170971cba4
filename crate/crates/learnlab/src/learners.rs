//! The two learning algorithms: exact success probabilities, jump-chain
//! simulation, and sample-complexity thresholds.
//!
//! Memoryless learner: hold the current guess until a teacher sample
//! contradicts it, then jump uniformly to one of the other `n - 1` sets.
//! Starting from the uniform distribution, the probability of sitting on the
//! target after `N` samples is `Q_11(N) = [(p^0)^T T^N]_1`, which expands as
//! `1 - C lambda_*^N` up to terms of order `lambda_3^N`.
//!
//! Full-memory learner: identical, except rejected sets are never revisited,
//! so the visit order is a uniform random permutation and the target is
//! reached after a uniform number of rejections.
//!
//! Simulations use the embedded jump chain: the time spent in a wrong set
//! `i` is geometric with success probability `1 - a_i` (counting the
//! rejecting sample), so the cost per trial is the number of jumps, not the
//! number of samples.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::LearnerInstance;
use crate::seed::derive_seed;
use crate::spectral;
use crate::stats::empirical_quantile;

/// Above this `N * n` work bound the exact evaluation abandons the O(N n)
/// iterated products for the spectral form or repeated squaring.
const ITERATE_WORK_BUDGET: u64 = 50_000_000;

/// Relative tail tolerance for using the two-eigenvalue spectral form: the
/// discarded remainder, bounded by `(n-2) lambda_3^N`, must be below this
/// fraction of `C lambda_*^N`.
const SPECTRAL_TAIL_TOL: f64 = 1e-12;

/// How a sample-complexity number was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LearnMethod {
    MemorylessExact,
    MemorylessSim,
    FullMemoryExact,
    FullMemorySim,
}

impl LearnMethod {
    pub fn name(&self) -> &'static str {
        match self {
            LearnMethod::MemorylessExact => "memoryless_exact",
            LearnMethod::MemorylessSim => "memoryless_sim",
            LearnMethod::FullMemoryExact => "full_memory_exact",
            LearnMethod::FullMemorySim => "full_memory_sim",
        }
    }
}

/// One sample-complexity result.
#[derive(Debug, Clone, Serialize)]
pub struct LearnOutcome {
    pub method: LearnMethod,
    pub n: usize,
    pub delta: f64,
    pub n_delta: f64,
    pub trials: Option<u64>,
    pub ci_halfwidth: Option<f64>,
}

/// Simulated threshold with a distribution-free confidence half-width from
/// the order statistics around the quantile rank.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SimulatedNDelta {
    pub n_delta: f64,
    pub ci_halfwidth: f64,
}

/// The transition matrix decomposed as `T = diag(d) + u 1^T`, which is all
/// the row-vector iteration needs.
struct StructuredChain {
    /// d_i = (n a_i - 1)/(n - 1)
    d: Vec<f64>,
    /// u_i = (1 - a_i)/(n - 1), zero for the target
    u: Vec<f64>,
}

impl StructuredChain {
    fn new(inst: &LearnerInstance) -> Self {
        let nf = inst.n() as f64;
        let d = inst
            .overlaps()
            .iter()
            .map(|&a| (nf * a - 1.0) / (nf - 1.0))
            .collect();
        let mut u = Vec::with_capacity(inst.n());
        u.push(0.0);
        u.extend(inst.gaps().iter().map(|&x| x / (nf - 1.0)));
        Self { d, u }
    }

    /// One step of `p := p^T T` in place, O(n) through `T = D + u 1^T`.
    /// Returns the new mass on the target.
    fn step(&self, p: &mut [f64]) -> f64 {
        let s: f64 = p.iter().zip(&self.u).map(|(a, b)| a * b).sum();
        for (pj, &dj) in p.iter_mut().zip(&self.d) {
            let next = *pj * dj + s;
            // d_j < 0 when a_j < 1/n; cancellation can undershoot zero by an
            // ulp, which must not leak into later steps.
            *pj = if next < 0.0 { 0.0 } else { next };
        }
        p[0]
    }
}

/// Exact success trajectory: `Q_11` at each requested checkpoint
/// (checkpoints must be sorted ascending). Computed by iterated
/// vector-matrix products at O(n) per step; the absorbing state makes
/// `Q_11` nondecreasing, which is asserted along the way.
pub fn exact_success_trajectory(inst: &LearnerInstance, checkpoints: &[u64]) -> Vec<f64> {
    debug_assert!(checkpoints.windows(2).all(|w| w[0] <= w[1]));
    let n = inst.n();
    let chain = StructuredChain::new(inst);
    let mut p = vec![1.0 / n as f64; n];
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = checkpoints.iter().peekable();
    let mut q = p[0];
    let mut step = 0u64;
    while let Some(&&target) = next.peek() {
        while step < target {
            let q_next = chain.step(&mut p);
            assert!(
                q_next >= q,
                "success probability must be nondecreasing: {q_next} < {q} at step {step}"
            );
            q = q_next;
            step += 1;
        }
        out.push(q);
        next.next();
    }
    out
}

/// Exact success probability `Q_11` after `steps` teacher samples, from the
/// uniform start.
///
/// Routes by cost: iterated products for `steps * n` within budget, the
/// two-eigenvalue spectral form once the discarded tail (bounded by
/// `(n-2) lambda_3^N`) is negligible against `C lambda_*^N`, and repeated
/// squaring of the dense matrix otherwise.
pub fn exact_success_probability(inst: &LearnerInstance, steps: u64) -> f64 {
    let n = inst.n() as u64;
    if steps.saturating_mul(n) <= ITERATE_WORK_BUDGET {
        return exact_success_trajectory(inst, &[steps])[0];
    }
    if let Some(q) = q11_spectral(inst, steps) {
        return q;
    }
    q11_matrix_power(inst, steps)
}

/// Two-eigenvalue form `1 - C lambda_*^N`; `None` when the eigen constant is
/// unavailable or the discarded tail is not yet negligible at this `N`.
fn q11_spectral(inst: &LearnerInstance, steps: u64) -> Option<f64> {
    let c = spectral::eigen_constant(inst).ok()?;
    let lambda = spectral::second_eigenvalue(inst);
    let lambda3 = spectral::third_eigenvalue(inst).unwrap_or(0.0).max(0.0);
    let nf = inst.n() as f64;
    let signal = c * lambda.powf(steps as f64);
    let tail = (nf - 2.0).max(0.0) * lambda3.powf(steps as f64);
    if tail <= SPECTRAL_TAIL_TOL * signal {
        Some((1.0 - signal).clamp(0.0, 1.0))
    } else {
        None
    }
}

fn q11_matrix_power(inst: &LearnerInstance, steps: u64) -> f64 {
    let n = inst.n();
    let mut base = spectral::build_transition_matrix(inst).as_matrix().clone();
    let mut result = nalgebra::DMatrix::<f64>::identity(n, n);
    let mut e = steps;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    // Uniform start: the mean of the first column.
    result.column(0).sum() / n as f64
}

/// Geometric holding time with stay probability `a`: the number of samples
/// consumed in the state, counting the rejecting one, so the mean is
/// `1/(1 - a)`.
fn geometric_dwell<R: Rng>(rng: &mut R, stay: f64) -> u64 {
    if stay <= 0.0 {
        return 1;
    }
    let u: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
    let d = (u.ln() / stay.ln()).ceil();
    if d >= 1.0 {
        d as u64
    } else {
        1
    }
}

/// Number of samples after which the memoryless learner sits on the target,
/// simulated through the jump chain.
fn memoryless_absorption_time<R: Rng>(inst: &LearnerInstance, rng: &mut R) -> u64 {
    let n = inst.n();
    let a = inst.overlaps();
    let mut state = rng.random_range(0..n);
    let mut t = 0u64;
    while state != 0 {
        t = t.saturating_add(geometric_dwell(rng, a[state]));
        let r = rng.random_range(0..n - 1);
        state = if r >= state { r + 1 } else { r };
    }
    t
}

/// Per-trial absorption times of the memoryless learner.
pub fn simulate_memoryless_absorption(inst: &LearnerInstance, trials: u64, seed: u64) -> Vec<u64> {
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, t));
            memoryless_absorption_time(inst, &mut rng)
        })
        .collect()
}

/// Simulated success fractions of the memoryless learner at the given
/// checkpoints (sorted ascending): the fraction of trials absorbed by each
/// checkpoint.
pub fn simulate_memoryless(
    inst: &LearnerInstance,
    checkpoints: &[u64],
    trials: u64,
    seed: u64,
) -> Vec<f64> {
    let mut times = simulate_memoryless_absorption(inst, trials, seed);
    times.sort_unstable();
    checkpoints
        .iter()
        .map(|&cp| times.partition_point(|&t| t <= cp) as f64 / trials as f64)
        .collect()
}

/// Result of the exact memoryless threshold search.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MemorylessNDelta {
    /// Smallest `N` with `Q_11(N) >= 1 - delta` (weak inequality).
    pub n_delta: u64,
    /// The spectral prediction `|log delta| / mu_*` for comparison.
    pub spectral_estimate: f64,
}

/// Smallest `N` with `Q_11(N) >= 1 - delta`, by doubling then binary search
/// over the exact success probability, plus the spectral prediction.
///
/// Resolution is limited by f64: a `delta` below roughly 1e-15 saturates
/// against `1 - Q` rounding to zero.
pub fn n_delta_memoryless(inst: &LearnerInstance, delta: f64) -> Result<MemorylessNDelta> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    let threshold = 1.0 - delta;
    let mu_star = spectral::smallest_derivative_root(inst.gaps())?;
    let spectral_estimate = delta.ln().abs() / mu_star;

    let n_delta = if exact_success_probability(inst, 0) >= threshold {
        0
    } else {
        let mut lo = 0u64; // Q(lo) < threshold
        let mut hi = 1u64;
        while exact_success_probability(inst, hi) < threshold {
            lo = hi;
            hi = hi.saturating_mul(2);
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if exact_success_probability(inst, mid) >= threshold {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    Ok(MemorylessNDelta {
        n_delta,
        spectral_estimate,
    })
}

fn quantile_with_ci(times: &mut [u64], q: f64, trials: u64) -> SimulatedNDelta {
    times.sort_unstable();
    let as_f: Vec<f64> = times.iter().map(|&t| t as f64).collect();
    let n_delta = empirical_quantile(&as_f, q);
    // Distribution-free CI from the binomial fluctuation of the quantile
    // rank: rank +- 1.96 sqrt(m q (1-q)).
    let m = trials as f64;
    let half = 1.96 * (m * q * (1.0 - q)).sqrt();
    let rank = q * m;
    let lo_idx = ((rank - half).floor().max(0.0)) as usize;
    let hi_idx = (((rank + half).ceil()) as usize).min(times.len() - 1);
    SimulatedNDelta {
        n_delta,
        ci_halfwidth: 0.5 * (as_f[hi_idx] - as_f[lo_idx]),
    }
}

/// Simulated memoryless threshold: the empirical `(1 - delta)` quantile of
/// absorption times.
pub fn simulated_n_delta_memoryless(
    inst: &LearnerInstance,
    delta: f64,
    trials: u64,
    seed: u64,
) -> Result<SimulatedNDelta> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut times = simulate_memoryless_absorption(inst, trials, seed);
    Ok(quantile_with_ci(&mut times, 1.0 - delta, trials))
}

/// Per-trial outcome of the full-memory learner.
#[derive(Debug, Clone)]
pub struct FullMemoryTrials {
    /// Samples consumed before the target was adopted.
    pub total_samples: Vec<u64>,
    /// Wrong sets rejected before the target (the target's position in the
    /// visit permutation minus one).
    pub rejections: Vec<u32>,
}

/// Simulate the full-memory learner: a uniform random visit permutation
/// walked with geometric dwell times until the target is reached.
pub fn simulate_full_memory(inst: &LearnerInstance, trials: u64, seed: u64) -> FullMemoryTrials {
    let n = inst.n();
    let a = inst.overlaps();
    let per_trial: Vec<(u64, u32)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, t));
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut total = 0u64;
            let mut rejections = 0u32;
            for &set in &order {
                if set == 0 {
                    break;
                }
                total = total.saturating_add(geometric_dwell(&mut rng, a[set]));
                rejections += 1;
            }
            (total, rejections)
        })
        .collect();
    FullMemoryTrials {
        total_samples: per_trial.iter().map(|&(t, _)| t).collect(),
        rejections: per_trial.iter().map(|&(_, r)| r).collect(),
    }
}

/// Expected samples consumed by the full-memory learner before adopting the
/// target: `(1/2) sum_i 1/(1 - a_i) = (n-1)/(2H)`. Each wrong set precedes
/// the target in a uniform permutation with probability 1/2 and holds the
/// learner for `1/(1 - a_i)` samples on average.
pub fn expected_time_full_memory(inst: &LearnerInstance) -> f64 {
    0.5 * inst.gaps().iter().map(|&x| 1.0 / x).sum::<f64>()
}

/// Analytic full-memory threshold `n (1 - delta)^2 / (2 H)`, with `H` the
/// harmonic mean of the `n - 1` gaps.
pub fn n_delta_full_memory(inst: &LearnerInstance, delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    let h = spectral::harmonic_mean(inst.gaps())?;
    let nf = inst.n() as f64;
    Ok(nf * (1.0 - delta) * (1.0 - delta) / (2.0 * h))
}

/// Simulated full-memory threshold: the empirical `(1 - delta)` quantile of
/// the samples-to-adoption distribution.
pub fn simulated_n_delta_full_memory(
    inst: &LearnerInstance,
    delta: f64,
    trials: u64,
    seed: u64,
) -> Result<SimulatedNDelta> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut times = simulate_full_memory(inst, trials, seed).total_samples;
    Ok(quantile_with_ci(&mut times, 1.0 - delta, trials))
}
