//! Harmonic-mean statistics of heavy-tailed gap samples and their limit
//! behavior.
//!
//! For i.i.d. gaps `x_1..x_n` the reciprocal mean `X_n = (1/n) sum 1/x_i`
//! sits in the domain of attraction of a one-sided stable law whose exponent
//! is selected by the gap density exponent `beta` at zero:
//!
//! - `beta = 0`: `X_n - c log n` converges to a stable law of exponent 1
//!   (`c` is the density at zero), and `E(H_n log n) -> 1/c` for the
//!   harmonic mean `H_n = 1/X_n`.
//! - `beta > 0`: `1/x` has finite mean `mu`, `X_n` concentrates at `mu`,
//!   and `E(mu H_n) -> 1`.
//! - `-1 < beta < 0`: `n^(1 - 1/(1+beta)) X_n` converges to a one-sided
//!   stable law of exponent `1 + beta`, and `H_n / n^(1 - 1/(1+beta))`
//!   stabilizes in distribution.
//!
//! Distributional claims are tested by self-consistency (the statistic at
//! `n` against the statistic at `4n`) rather than against a parametrized
//! stable density, whose location and scale constants are not needed for
//! that purpose. A reference sampler for the one-sided stable laws with
//! exponent in (0, 1) is provided for overlays and tail checks.

use rayon::prelude::*;
use serde::Serialize;

use crate::distributions::OverlapDistribution;
use crate::error::{Error, Result};
use crate::seed::{derive_seed, unit_open_open};
use crate::stats::{ks_statistic_two_sample, mean_and_stderr};

/// Reciprocal mean `X_n = (1/n) sum_i 1/x_i`.
pub fn reciprocal_mean(gaps: &[f64]) -> Result<f64> {
    if gaps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut s = 0.0;
    for &x in gaps {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::GapOutOfRange(x));
        }
        s += 1.0 / x;
    }
    Ok(s / gaps.len() as f64)
}

/// Center/scale `X_n` according to the regime of `beta`:
/// `beta = 0` subtracts `c log n`; `beta > 0` leaves `X_n` (it concentrates);
/// `-1 < beta < 0` multiplies by `n^(1 - 1/(1+beta))`.
pub fn centered_statistic(x_n: f64, n: f64, beta: f64, c: f64) -> f64 {
    if beta == 0.0 {
        x_n - c * n.ln()
    } else if beta > 0.0 {
        x_n
    } else {
        n.powf(1.0 - 1.0 / (1.0 + beta)) * x_n
    }
}

/// Per-trial harmonic-mean statistics at sample size `n`.
#[derive(Debug, Clone)]
pub struct LimitSample {
    pub n: usize,
    pub beta: f64,
    /// Reciprocal means, one per trial.
    pub x: Vec<f64>,
    /// Harmonic means `1/X_n`, one per trial.
    pub h: Vec<f64>,
    /// Centered/scaled statistics per the regime of `beta`.
    pub y: Vec<f64>,
}

impl LimitSample {
    pub fn trials(&self) -> usize {
        self.x.len()
    }
}

/// Draw `trials` independent gap samples of size `n` and record the
/// per-trial statistics. Requires a power-law family (the regime machinery
/// is parametrized by `beta`).
pub fn collect_limit_sample(
    dist: &OverlapDistribution,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<LimitSample> {
    let beta = dist.beta().ok_or(Error::RequiresPowerGap)?;
    let c = dist
        .density_at_zero()
        .expect("power family has a density constant");
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let x: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let gaps = dist.sample_gaps(n, derive_seed(seed, t as u64));
            reciprocal_mean(&gaps).expect("sampled gaps are positive")
        })
        .collect();
    let h = x.iter().map(|&v| 1.0 / v).collect();
    let y = x
        .iter()
        .map(|&v| centered_statistic(v, n as f64, beta, c))
        .collect();
    Ok(LimitSample { n, beta, x, h, y })
}

/// Which normalized harmonic-mean statistic a regime tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeStatistic {
    /// `H_n log n` (beta = 0), limit `1/c`.
    HLogN,
    /// `mu H_n` (beta > 0), limit 1.
    MuH,
    /// `H_n / n^(1 - 1/(1+beta))` (beta < 0), limit constant unnamed.
    HScaled,
}

impl RegimeStatistic {
    pub fn for_beta(beta: f64) -> Self {
        if beta == 0.0 {
            RegimeStatistic::HLogN
        } else if beta > 0.0 {
            RegimeStatistic::MuH
        } else {
            RegimeStatistic::HScaled
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RegimeStatistic::HLogN => "h_log_n",
            RegimeStatistic::MuH => "mu_h",
            RegimeStatistic::HScaled => "h_scaled",
        }
    }
}

/// One grid point of a limit-constant estimate.
#[derive(Debug, Clone, Serialize)]
pub struct LimitConstantEstimate {
    pub n: usize,
    pub statistic: RegimeStatistic,
    pub estimate: f64,
    pub stderr: f64,
}

/// Estimate the regime constant along an increasing `n` grid: the mean of
/// `H_n log n` (beta = 0), `mu H_n` (beta > 0) or `H_n / n^(1-1/(1+beta))`
/// (beta < 0), with standard errors.
pub fn estimate_limit_constant(
    dist: &OverlapDistribution,
    n_grid: &[usize],
    trials: usize,
    seed: u64,
) -> Result<Vec<LimitConstantEstimate>> {
    let beta = dist.beta().ok_or(Error::RequiresPowerGap)?;
    if n_grid.is_empty() || n_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadGrid);
    }
    let statistic = RegimeStatistic::for_beta(beta);
    let mu = if statistic == RegimeStatistic::MuH {
        dist.mean_reciprocal()?
    } else {
        f64::NAN
    };
    n_grid
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            let sample = collect_limit_sample(dist, n, trials, derive_seed(seed, k as u64))?;
            let nf = n as f64;
            let values: Vec<f64> = sample
                .h
                .iter()
                .map(|&h| match statistic {
                    RegimeStatistic::HLogN => h * nf.ln(),
                    RegimeStatistic::MuH => mu * h,
                    RegimeStatistic::HScaled => h / nf.powf(1.0 - 1.0 / (1.0 + beta)),
                })
                .collect();
            let (estimate, stderr) = mean_and_stderr(&values);
            Ok(LimitConstantEstimate {
                n,
                statistic,
                estimate,
                stderr,
            })
        })
        .collect()
}

/// Empirical probability that the law-of-large-numbers statistic leaves the
/// band of half-width `tol` around its limit: `|H_n log n - 1/c| > tol` for
/// beta = 0, `|H_n - 1/mu| > tol` for beta > 0. Not defined for beta < 0.
pub fn lln_check(
    dist: &OverlapDistribution,
    n: usize,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<f64> {
    let beta = dist.beta().ok_or(Error::RequiresPowerGap)?;
    if beta < 0.0 {
        return Err(Error::UnsupportedRegime(beta));
    }
    let sample = collect_limit_sample(dist, n, trials, seed)?;
    let violations = if beta == 0.0 {
        let limit = 1.0 / dist.density_at_zero().expect("power family");
        let nf = n as f64;
        sample
            .h
            .iter()
            .filter(|&&h| (h * nf.ln() - limit).abs() > tol)
            .count()
    } else {
        let limit = 1.0 / dist.mean_reciprocal()?;
        sample
            .h
            .iter()
            .filter(|&&h| (h - limit).abs() > tol)
            .count()
    };
    Ok(violations as f64 / trials as f64)
}

/// Distributional self-consistency of the centered statistic.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SelfConsistency {
    /// Two-sample KS distance between `Y_n` and `Y_(4n)` samples.
    pub ks_n_vs_4n: f64,
    /// Largest gap between the empirical CDF of the harmonic-mean statistic
    /// and the exact transform of the reciprocal-mean statistic on the same
    /// trials. Zero up to tie-breaking round-off.
    pub transform_discrepancy: f64,
}

type ThresholdMap = Box<dyn Fn(f64) -> f64>;

/// The regime's harmonic-side statistic, its reciprocal-side statistic, and
/// the exact threshold map between them, evaluated on shared trials.
fn regime_pair(sample: &LimitSample, c: f64, mu: f64) -> (Vec<f64>, Vec<f64>, ThresholdMap) {
    let nf = sample.n as f64;
    let beta = sample.beta;
    if beta == 0.0 {
        // U = log n (H log n - C1) with C1 = 1/c, against Y = X - c log n.
        // U <= t iff X >= log n / (1/c + t/log n); expressed as a Y threshold.
        let c1 = 1.0 / c;
        let ln_n = nf.ln();
        let u = sample.h.iter().map(|&h| ln_n * (h * ln_n - c1)).collect();
        let y = sample.y.clone();
        let map = move |t: f64| ln_n / (1.0 / c + t / ln_n) - c * ln_n;
        (u, y, Box::new(map))
    } else if beta > 0.0 {
        // U = n^p (H - 1/mu) against W = n^p (X - mu), p = 1 - 1/(1+beta).
        let p = 1.0 - 1.0 / (1.0 + beta);
        let scale = nf.powf(p);
        let u = sample.h.iter().map(|&h| scale * (h - 1.0 / mu)).collect();
        let w = sample.x.iter().map(|&x| scale * (x - mu)).collect();
        let map = move |t: f64| scale * (1.0 / (1.0 / mu + t / scale) - mu);
        (u, w, Box::new(map))
    } else {
        // U = H n^q against S = X n^(-q), q = 1/(1+beta) - 1; U = 1/S.
        let q = 1.0 / (1.0 + beta) - 1.0;
        let scale = nf.powf(q);
        let u = sample.h.iter().map(|&h| h * scale).collect();
        let s = sample.x.iter().map(|&x| x / scale).collect();
        let map = move |t: f64| 1.0 / t;
        (u, s, Box::new(map))
    }
}

/// Sup over CDF evaluation points of |F_U(t) - (1 - F_S(map(t)))|, where the
/// points are midpoints between consecutive order statistics of `u`, so both
/// counts are unambiguous (outside the sample range both sides are 0 or 1).
fn transform_discrepancy(u: &[f64], s: &[f64], map: impl Fn(f64) -> f64) -> f64 {
    let mut su = u.to_vec();
    su.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite statistics"));
    let mut ss = s.to_vec();
    ss.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite statistics"));
    let m = su.len() as f64;
    let eval = |t: f64, below: f64| {
        let thr = map(t);
        // #{ S > thr } / m
        let above = ss.len() - ss.partition_point(|&v| v <= thr);
        (below / m - above as f64 / m).abs()
    };
    let mut worst = 0.0f64;
    for k in 0..su.len() - 1 {
        if su[k] < su[k + 1] {
            worst = worst.max(eval(0.5 * (su[k] + su[k + 1]), (k + 1) as f64));
        }
    }
    worst
}

/// Two-sample self-consistency of the centered statistic (`Y_n` vs
/// `Y_(4n)`, `trials` each) plus the exact harmonic-vs-reciprocal transform
/// identity on shared trials.
pub fn limit_law_selfconsistency(
    dist: &OverlapDistribution,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<SelfConsistency> {
    let small = collect_limit_sample(dist, n, trials, derive_seed(seed, 1))?;
    let large = collect_limit_sample(dist, 4 * n, trials, derive_seed(seed, 2))?;
    let ks = ks_statistic_two_sample(&small.y, &large.y);

    let c = dist.density_at_zero().expect("power family");
    let mu = dist.mean_reciprocal().unwrap_or(f64::NAN);
    let (u, s, map) = regime_pair(&small, c, mu);
    let disc = transform_discrepancy(&u, &s, map);
    Ok(SelfConsistency {
        ks_n_vs_4n: ks,
        transform_discrepancy: disc,
    })
}

/// Samples of the one-sided (totally skewed positive) stable law of exponent
/// `alpha` in (0, 1), in the standard parametrization whose Laplace
/// transform is `exp(-s^alpha / cos(pi alpha / 2))`. At `alpha = 1/2` this
/// is the unit Levy law with CDF `erfc(1/sqrt(2x))`.
///
/// Sampling uses Kanter's representation
/// `X = [sin(alpha V) / sin(V)^(1/alpha)] * [sin((1-alpha) V) / E]^((1-alpha)/alpha)`
/// with `V` uniform on (0, pi) and `E` unit exponential, rescaled by
/// `cos(pi alpha/2)^(-1/alpha)` into the standard parametrization.
pub fn sample_one_sided_stable(alpha: f64, count: usize, seed: u64) -> Result<Vec<f64>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let scale = (std::f64::consts::FRAC_PI_2 * alpha)
        .cos()
        .powf(-1.0 / alpha);
    let samples = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let stream = derive_seed(seed, i);
            let v = std::f64::consts::PI * unit_open_open(derive_seed(stream, 0));
            let e = -unit_open_open(derive_seed(stream, 1)).ln();
            let kanter = (alpha * v).sin() / v.sin().powf(1.0 / alpha)
                * (((1.0 - alpha) * v).sin() / e).powf((1.0 - alpha) / alpha);
            scale * kanter
        })
        .collect();
    Ok(samples)
}
