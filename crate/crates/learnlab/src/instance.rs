//! A single realized learning problem.

use crate::error::{Error, Result};

/// One learning problem: `n` candidate sets with overlap vector `a`, where
/// `a[0] = 1` marks the target set and `a[i] < 1` for every other set, plus
/// the derived gaps `x_i = 1 - a_i` in (0, 1].
///
/// Gaps are the primary representation (they are what gets sampled); the
/// overlaps are the rounded complements, so `gaps()` should be preferred in
/// numerical work on small gaps.
#[derive(Debug, Clone, PartialEq)]
pub struct LearnerInstance {
    overlaps: Vec<f64>,
    gaps: Vec<f64>,
}

impl LearnerInstance {
    /// Build from the overlap vector `a` (target first, `a[0]` must be
    /// exactly 1, the rest in [0, 1)).
    pub fn from_overlaps(overlaps: Vec<f64>) -> Result<Self> {
        if overlaps.len() < 2 {
            return Err(Error::TooFewSets(overlaps.len()));
        }
        if overlaps[0] != 1.0 {
            return Err(Error::MalformedOverlaps);
        }
        for &a in &overlaps[1..] {
            if !(0.0..1.0).contains(&a) {
                return Err(Error::MalformedOverlaps);
            }
        }
        let gaps = overlaps[1..].iter().map(|&a| 1.0 - a).collect();
        Ok(Self { overlaps, gaps })
    }

    /// Build from the gap vector `x` of the wrong sets (all in (0, 1]).
    pub fn from_gaps(gaps: Vec<f64>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::TooFewSets(1));
        }
        let mut overlaps = Vec::with_capacity(gaps.len() + 1);
        overlaps.push(1.0);
        for &x in &gaps {
            if !(x > 0.0 && x <= 1.0) {
                return Err(Error::GapOutOfRange(x));
            }
            overlaps.push(1.0 - x);
        }
        Ok(Self { overlaps, gaps })
    }

    /// Number of candidate sets.
    pub fn n(&self) -> usize {
        self.overlaps.len()
    }

    /// Overlap vector `a`, length `n`, target first.
    pub fn overlaps(&self) -> &[f64] {
        &self.overlaps
    }

    /// Gap vector `x = 1 - a` over the wrong sets, length `n - 1`.
    pub fn gaps(&self) -> &[f64] {
        &self.gaps
    }

    /// Smallest gap.
    pub fn min_gap(&self) -> f64 {
        self.gaps.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_overlaps_round_trip() {
        let inst = LearnerInstance::from_overlaps(vec![1.0, 0.5, 0.25]).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.gaps(), &[0.5, 0.75]);
        assert_eq!(inst.min_gap(), 0.5);
    }

    #[test]
    fn from_gaps_keeps_exact_gap_values() {
        // 1 - (1 - 0.7) rounds away from 0.7; the stored gap must not.
        let inst = LearnerInstance::from_gaps(vec![0.7]).unwrap();
        assert_eq!(inst.gaps()[0], 0.7);
        assert_eq!(inst.n(), 2);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            LearnerInstance::from_overlaps(vec![1.0]),
            Err(Error::TooFewSets(1))
        );
        assert_eq!(
            LearnerInstance::from_overlaps(vec![0.9, 0.5]),
            Err(Error::MalformedOverlaps)
        );
        assert_eq!(
            LearnerInstance::from_overlaps(vec![1.0, 1.0]),
            Err(Error::MalformedOverlaps)
        );
        assert!(LearnerInstance::from_gaps(vec![0.0]).is_err());
        assert!(LearnerInstance::from_gaps(vec![1.5]).is_err());
        assert!(LearnerInstance::from_gaps(vec![]).is_err());
    }

    #[test]
    fn gap_one_means_disjoint_set() {
        let inst = LearnerInstance::from_gaps(vec![1.0]).unwrap();
        assert_eq!(inst.overlaps(), &[1.0, 0.0]);
    }
}
