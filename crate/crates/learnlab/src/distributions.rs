//! Overlap-gap laws and reproducible sampling.
//!
//! The quantity that drives everything downstream is the gap `x = 1 - a`
//! between a wrong set's overlap `a` and 1. The in-scope laws put a power
//! density on the gap near zero: `f(x) = (1 + beta) x^beta` on [0, 1], with
//! `beta > -1` so the density is normalizable. `beta = 0` is the uniform
//! law. The density constant at zero is pinned to `c = 1 + beta` by the
//! normalization, so it is derived rather than a free parameter.
//!
//! An empirical family (uniform draws from a fixed gap list) exists so the
//! learner machinery can be driven by hand-chosen gap vectors.

use crate::error::{Error, Result};
use crate::instance::LearnerInstance;
use crate::seed::{derive_seed, unit_open_closed};

#[derive(Debug, Clone, PartialEq)]
enum Law {
    /// Gap density `(1 + beta) x^beta` on [0, 1].
    PowerGap { beta: f64 },
    /// Uniform draws (with replacement) from a fixed gap list, kept sorted.
    Empirical { gaps: Vec<f64> },
}

/// Law of a single overlap gap `x = 1 - a` on (0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapDistribution {
    law: Law,
}

impl OverlapDistribution {
    /// Uniform gap law: the power family with `beta = 0`, density constant 1.
    pub fn uniform() -> Self {
        Self {
            law: Law::PowerGap { beta: 0.0 },
        }
    }

    /// Power gap law with density `(1 + beta) x^beta` on [0, 1].
    pub fn power_gap(beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta <= -1.0 {
            return Err(Error::BetaOutOfRange(beta));
        }
        Ok(Self {
            law: Law::PowerGap { beta },
        })
    }

    /// Empirical gap law over a fixed list of gap values in (0, 1].
    pub fn empirical(mut gaps: Vec<f64>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::EmptyGaps);
        }
        for &x in &gaps {
            if !(x > 0.0 && x <= 1.0) {
                return Err(Error::GapOutOfRange(x));
            }
        }
        gaps.sort_unstable_by(|a, b| a.partial_cmp(b).expect("gaps are finite"));
        Ok(Self {
            law: Law::Empirical { gaps },
        })
    }

    /// Gap-density exponent; `None` for the empirical family.
    pub fn beta(&self) -> Option<f64> {
        match &self.law {
            Law::PowerGap { beta } => Some(*beta),
            Law::Empirical { .. } => None,
        }
    }

    /// Density constant at zero, `c = 1 + beta`; `None` for the empirical
    /// family (whose density at zero is not defined).
    pub fn density_at_zero(&self) -> Option<f64> {
        self.beta().map(|b| 1.0 + b)
    }

    /// True for the power family (including uniform).
    pub fn is_power_gap(&self) -> bool {
        matches!(self.law, Law::PowerGap { .. })
    }

    /// Quantile function of the gap law at `u` in (0, 1].
    ///
    /// For the power family this is the inverse CDF of `F(x) = x^(1+beta)`,
    /// i.e. `x = u^(1/(1+beta))`; for the empirical family it selects from
    /// the sorted gap list.
    pub fn gap_quantile(&self, u: f64) -> f64 {
        debug_assert!(u > 0.0 && u <= 1.0);
        match &self.law {
            Law::PowerGap { beta } => u.powf(1.0 / (1.0 + beta)),
            Law::Empirical { gaps } => {
                let idx = ((u * gaps.len() as f64) as usize).min(gaps.len() - 1);
                gaps[idx]
            }
        }
    }

    /// Mean reciprocal gap `E(1/x)`: `(1 + beta)/beta` for the power family
    /// with `beta > 0` (infinite otherwise), the list average of `1/x` for
    /// the empirical family.
    pub fn mean_reciprocal(&self) -> Result<f64> {
        match &self.law {
            Law::PowerGap { beta } if *beta > 0.0 => Ok((1.0 + beta) / beta),
            Law::PowerGap { .. } => Err(Error::InfiniteMeanReciprocal),
            Law::Empirical { gaps } => {
                Ok(gaps.iter().map(|x| 1.0 / x).sum::<f64>() / gaps.len() as f64)
            }
        }
    }

    /// Draw `count` i.i.d. gaps. Sample `i` is a pure function of
    /// `(seed, i)`, so batches may be generated in any order or in parallel.
    ///
    /// A gap that underflows to exactly zero (possible for beta close to -1)
    /// is redrawn from the same per-index stream; this changes the law only
    /// on a set of measure zero.
    pub fn sample_gaps(&self, count: usize, seed: u64) -> Vec<f64> {
        (0..count)
            .map(|i| self.sample_gap_at(seed, i as u64))
            .collect()
    }

    fn sample_gap_at(&self, seed: u64, index: u64) -> f64 {
        let stream = derive_seed(seed, index);
        for attempt in 0..u64::MAX {
            let u = unit_open_closed(derive_seed(stream, attempt));
            let x = self.gap_quantile(u);
            if x > 0.0 {
                return x;
            }
        }
        unreachable!("gap sampling cannot exhaust the attempt counter");
    }

    /// Realize a learning problem with `n` sets: the target plus `n - 1`
    /// wrong sets whose gaps are drawn from this law.
    pub fn instance(&self, n: usize, seed: u64) -> Result<LearnerInstance> {
        if n < 2 {
            return Err(Error::TooFewSets(n));
        }
        LearnerInstance::from_gaps(self.sample_gaps(n - 1, seed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::ks_statistic_one_sample;

    #[test]
    fn uniform_is_power_gap_zero() {
        let d = OverlapDistribution::uniform();
        assert_eq!(d.beta(), Some(0.0));
        assert_eq!(d.density_at_zero(), Some(1.0));
    }

    #[test]
    fn power_gap_density_constant_is_one_plus_beta() {
        let d = OverlapDistribution::power_gap(1.0).unwrap();
        assert_eq!(d.density_at_zero(), Some(2.0));
    }

    #[test]
    fn rejects_beta_at_or_below_minus_one() {
        assert_eq!(
            OverlapDistribution::power_gap(-1.0),
            Err(Error::BetaOutOfRange(-1.0))
        );
        assert!(OverlapDistribution::power_gap(-1.5).is_err());
        assert!(OverlapDistribution::power_gap(f64::NAN).is_err());
    }

    #[test]
    fn rejects_bad_empirical_gaps() {
        assert_eq!(
            OverlapDistribution::empirical(vec![]),
            Err(Error::EmptyGaps)
        );
        assert!(OverlapDistribution::empirical(vec![0.5, 0.0]).is_err());
        assert!(OverlapDistribution::empirical(vec![1.1]).is_err());
    }

    #[test]
    fn quantile_matches_closed_forms() {
        // beta = 0: identity inverse CDF.
        let u0 = OverlapDistribution::uniform();
        assert_eq!(u0.gap_quantile(0.25), 0.25);
        // beta = 1: x = sqrt(u).
        let u1 = OverlapDistribution::power_gap(1.0).unwrap();
        assert_eq!(u1.gap_quantile(0.25), 0.5);
        // beta = -0.5: x = u^2.
        let um = OverlapDistribution::power_gap(-0.5).unwrap();
        assert_eq!(um.gap_quantile(0.25), 0.0625);
    }

    #[test]
    fn sampling_is_reproducible_and_in_range() {
        let d = OverlapDistribution::power_gap(-0.5).unwrap();
        let a = d.sample_gaps(1000, 99);
        let b = d.sample_gaps(1000, 99);
        assert_eq!(a, b, "equal seeds must give bitwise-equal samples");
        assert!(a.iter().all(|&x| x > 0.0 && x <= 1.0));
        let c = d.sample_gaps(1000, 100);
        assert_ne!(a, c);
    }

    #[test]
    fn sample_prefix_is_stable_under_count() {
        // Per-index derivation: asking for more samples must not change the
        // earlier ones.
        let d = OverlapDistribution::uniform();
        let short = d.sample_gaps(10, 7);
        let long = d.sample_gaps(20, 7);
        assert_eq!(&long[..10], &short[..]);
    }

    #[test]
    fn instances_have_one_target_and_valid_gaps() {
        let d = OverlapDistribution::uniform();
        let inst = d.instance(4, 5).unwrap();
        assert_eq!(inst.n(), 4);
        assert_eq!(inst.overlaps()[0], 1.0);
        assert_eq!(
            inst.overlaps().iter().filter(|&&a| a == 1.0).count(),
            1,
            "exactly one overlap equal to 1"
        );
        assert!(inst.overlaps()[1..]
            .iter()
            .all(|&a| (0.0..1.0).contains(&a)));
        assert_eq!(d.instance(4, 5).unwrap(), inst, "determinism");
        assert_eq!(d.instance(1, 5), Err(Error::TooFewSets(1)));
    }

    #[test]
    fn empirical_samples_come_from_the_list() {
        let d = OverlapDistribution::empirical(vec![0.25, 0.5, 1.0]).unwrap();
        let xs = d.sample_gaps(300, 3);
        assert!(xs.iter().all(|x| [0.25, 0.5, 1.0].contains(x)));
        // All three values should actually appear.
        for v in [0.25, 0.5, 1.0] {
            assert!(xs.contains(&v), "value {v} never drawn");
        }
    }

    #[test]
    fn power_gap_cdf_matches_samples() {
        // One-sample KS against the exact CDF x^(1+beta) at 1e5 draws; the
        // 1% critical value is ~0.0052, so 0.01 has margin.
        for beta in [-0.5, 0.0, 1.0, 2.0] {
            let d = OverlapDistribution::power_gap(beta).unwrap();
            let xs = d.sample_gaps(100_000, 2024);
            let ks = ks_statistic_one_sample(&xs, |x| x.powf(1.0 + beta));
            assert!(ks < 0.01, "beta={beta}: KS={ks}");
        }
    }
}
