//! Scaling sweeps: how the sample-complexity threshold grows with the
//! number of sets, per gap-density regime.
//!
//! Thresholds in a sweep come from the closed routes (the spectral
//! prediction `|log delta| / mu_*` for the memoryless learner, the analytic
//! `n (1-delta)^2 / (2H)` for full memory); the learners module separately
//! validates those routes against exact and simulated values at moderate n.
//! Per grid point the sweep draws independent instances and reports the
//! median, since instance-to-instance variation is heavy-tailed for
//! negative density exponents.

use rayon::prelude::*;
use serde::Serialize;

use crate::distributions::OverlapDistribution;
use crate::error::{Error, Result};
use crate::learners;
use crate::seed::derive_seed;
use crate::spectral;
use crate::stats::{median_dispersion_sorted, median_sorted, ols_line};

/// Which learner a sweep measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Memoryless,
    FullMemory,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Memoryless => "memoryless",
            Algorithm::FullMemory => "fullmem",
        }
    }
}

/// How the per-instance threshold was estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimatorKind {
    SpectralExact,
    Simulated,
}

impl EstimatorKind {
    pub fn name(&self) -> &'static str {
        match self {
            EstimatorKind::SpectralExact => "spectral-exact",
            EstimatorKind::Simulated => "simulated",
        }
    }
}

/// One grid point of a sweep: the median threshold across instances plus an
/// order-statistic dispersion of that median.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub beta: f64,
    pub delta: f64,
    pub method: Algorithm,
    pub n_delta: f64,
    pub estimator: EstimatorKind,
    pub stderr: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalingTable {
    pub rows: Vec<ScalingRow>,
}

/// Per-instance thresholds at one grid point, in instance order.
pub fn scaling_point(
    dist: &OverlapDistribution,
    delta: f64,
    n: usize,
    instances: usize,
    method: Algorithm,
    seed: u64,
) -> Result<Vec<f64>> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    if instances == 0 {
        return Err(Error::ZeroTrials);
    }
    let log_delta = delta.ln().abs();
    (0..instances)
        .into_par_iter()
        .map(|i| {
            let inst = dist.instance(n, derive_seed(seed, i as u64))?;
            match method {
                Algorithm::Memoryless => {
                    let mu = spectral::smallest_derivative_root(inst.gaps())?;
                    Ok(log_delta / mu)
                }
                Algorithm::FullMemory => learners::n_delta_full_memory(&inst, delta),
            }
        })
        .collect()
}

/// Sweep the threshold across an increasing `n` grid, drawing `instances`
/// independent problems per point.
pub fn scaling_sweep(
    dist: &OverlapDistribution,
    delta: f64,
    n_grid: &[usize],
    instances: usize,
    method: Algorithm,
    seed: u64,
) -> Result<ScalingTable> {
    let beta = dist.beta().ok_or(Error::RequiresPowerGap)?;
    if n_grid.is_empty() || n_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadGrid);
    }
    let rows = n_grid
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            let point_seed = derive_seed(seed, k as u64);
            let mut values = scaling_point(dist, delta, n, instances, method, point_seed)?;
            values.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite thresholds"));
            Ok(ScalingRow {
                n,
                beta,
                delta,
                method,
                n_delta: median_sorted(&values),
                estimator: EstimatorKind::SpectralExact,
                stderr: median_dispersion_sorted(&values),
                seed: point_seed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScalingTable { rows })
}

/// Growth model fitted to a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitModel {
    /// Ratios against `n log n`.
    NLogN,
    /// Ratios against `n`.
    LinearN,
    /// Log-log least squares.
    PowerLaw,
}

/// Fit result: either the log-log line or the ratio band against a fixed
/// growth function.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScalingFit {
    PowerLaw {
        slope: f64,
        intercept: f64,
        r_squared: f64,
    },
    RatioBand {
        model: FitModel,
        ratios: Vec<f64>,
        max_over_min: f64,
    },
}

/// Fit the requested growth model to a sweep (at least 4 grid points).
pub fn fit_scaling(table: &ScalingTable, model: FitModel) -> Result<ScalingFit> {
    if table.rows.len() < 4 {
        return Err(Error::DegenerateGrid {
            need: 4,
            got: table.rows.len(),
        });
    }
    match model {
        FitModel::PowerLaw => {
            let xs: Vec<f64> = table.rows.iter().map(|r| (r.n as f64).ln()).collect();
            let ys: Vec<f64> = table.rows.iter().map(|r| r.n_delta.ln()).collect();
            let (slope, intercept, r_squared) = ols_line(&xs, &ys)?;
            Ok(ScalingFit::PowerLaw {
                slope,
                intercept,
                r_squared,
            })
        }
        FitModel::NLogN | FitModel::LinearN => {
            let ratios: Vec<f64> = table
                .rows
                .iter()
                .map(|r| {
                    let nf = r.n as f64;
                    let h = match model {
                        FitModel::NLogN => nf * nf.ln(),
                        _ => nf,
                    };
                    r.n_delta / h
                })
                .collect();
            let max = ratios.iter().copied().fold(f64::MIN, f64::max);
            let min = ratios.iter().copied().fold(f64::MAX, f64::min);
            Ok(ScalingFit::RatioBand {
                model,
                ratios,
                max_over_min: max / min,
            })
        }
    }
}
