//! Calibration pre-run for the acceptance thresholds.
//!
//! Prints the quantities the acceptance suite freezes as fixtures:
//!
//! - two-sample KS between the centered statistics at n = 1e4 and 4e4
//!   (5000 trials each); the acceptance ceiling for the n = 1e3 vs 4e3 test
//!   is this value plus the 1% two-sample critical value,
//! - the log-log slope of the median threshold for beta = -0.5 on a wide
//!   grid (up to 2^16, 100 instances per point),
//! - the uniform-family mean of H_n log n at n = 1e5.
//!
//! Run with: cargo run --release -p learnlab --example calibrate

use learnlab::distributions::OverlapDistribution;
use learnlab::experiments::{self, Algorithm, FitModel, ScalingFit};
use learnlab::harmonic;
use learnlab::stats;

const CALIBRATION_SEED: u64 = 20_240_817;

fn main() {
    let trials = 5_000;
    for beta in [0.0, -0.5] {
        let d = OverlapDistribution::power_gap(beta).unwrap();
        let sc = harmonic::limit_law_selfconsistency(&d, 10_000, trials, CALIBRATION_SEED).unwrap();
        let crit = stats::ks_two_sample_critical_1pct(trials, trials);
        println!(
            "beta={beta}: KS(Y_1e4, Y_4e4) = {:.5}, 1% crit = {:.5}, ceiling = {:.5}",
            sc.ks_n_vs_4n,
            crit,
            sc.ks_n_vs_4n + crit
        );
    }

    let d = OverlapDistribution::power_gap(-0.5).unwrap();
    let grid: Vec<usize> = (7..=16).map(|k| 1usize << k).collect();
    let table = experiments::scaling_sweep(
        &d,
        0.01,
        &grid,
        100,
        Algorithm::Memoryless,
        CALIBRATION_SEED,
    )
    .unwrap();
    if let ScalingFit::PowerLaw {
        slope, r_squared, ..
    } = experiments::fit_scaling(&table, FitModel::PowerLaw).unwrap()
    {
        println!("beta=-0.5 memoryless slope (to 2^16, 100/pt) = {slope:.4}, R^2 = {r_squared:.5}");
    }
    let table = experiments::scaling_sweep(
        &d,
        0.01,
        &grid,
        100,
        Algorithm::FullMemory,
        CALIBRATION_SEED,
    )
    .unwrap();
    if let ScalingFit::PowerLaw {
        slope, r_squared, ..
    } = experiments::fit_scaling(&table, FitModel::PowerLaw).unwrap()
    {
        println!(
            "beta=-0.5 full-memory slope (to 2^16, 100/pt) = {slope:.4}, R^2 = {r_squared:.5}"
        );
    }

    let uniform = OverlapDistribution::uniform();
    for (n, trials) in [
        (100, 20_000),
        (1_000, 8_000),
        (10_000, 3_000),
        (100_000, 1_200),
    ] {
        let est = harmonic::estimate_limit_constant(&uniform, &[n], trials, CALIBRATION_SEED)
            .unwrap()
            .remove(0);
        println!(
            "uniform mean(H log n) at n={n}: {:.4} +- {:.4}",
            est.estimate, est.stderr
        );
    }
}
