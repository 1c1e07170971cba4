//! Small statistical toolbox: empirical CDFs, Kolmogorov-Smirnov statistics,
//! a Hill tail-index estimator, quantiles, and ordinary least squares.

use crate::error::{Error, Result};

fn sorted_copy(xs: &[f64]) -> Vec<f64> {
    let mut s = xs.to_vec();
    s.sort_unstable_by(|a, b| a.partial_cmp(b).expect("samples must not contain NaN"));
    s
}

/// One-sample KS statistic: sup distance between the empirical CDF of
/// `samples` and the reference CDF.
pub fn ks_statistic_one_sample<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> f64 {
    let s = sorted_copy(samples);
    let m = s.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in s.iter().enumerate() {
        let f = cdf(x);
        d = d.max(f - i as f64 / m).max((i + 1) as f64 / m - f);
    }
    d
}

/// Two-sample KS statistic: sup distance between the empirical CDFs.
pub fn ks_statistic_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let sa = sorted_copy(a);
    let sb = sorted_copy(b);
    let (na, nb) = (sa.len() as f64, sb.len() as f64);
    let mut i = 0usize;
    let mut j = 0usize;
    let mut d = 0.0f64;
    while i < sa.len() && j < sb.len() {
        let x = sa[i].min(sb[j]);
        while i < sa.len() && sa[i] <= x {
            i += 1;
        }
        while j < sb.len() && sb[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Asymptotic two-sample KS critical value at the 1% level for sample sizes
/// `m` and `n`: `c(0.01) * sqrt((m + n)/(m n))` with `c(0.01) =
/// sqrt(-ln(0.005)/2)`.
pub fn ks_two_sample_critical_1pct(m: usize, n: usize) -> f64 {
    let c = (-(0.005f64).ln() / 2.0).sqrt();
    c * ((m + n) as f64 / (m as f64 * n as f64)).sqrt()
}

/// Pearson chi-square statistic over observed counts against expected counts.
pub fn chi_square_statistic(observed: &[u64], expected: &[f64]) -> f64 {
    assert_eq!(observed.len(), expected.len());
    observed
        .iter()
        .zip(expected)
        .map(|(&o, &e)| {
            let d = o as f64 - e;
            d * d / e
        })
        .sum()
}

/// Hill estimator of the tail exponent from the largest `top_fraction` of the
/// sample: `alpha_hat = k / sum_{i<k} ln(x_(i) / x_(k))` with order
/// statistics sorted descending.
pub fn hill_tail_exponent(samples: &[f64], top_fraction: f64) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut s = sorted_copy(samples);
    s.reverse();
    let k = ((samples.len() as f64 * top_fraction).ceil() as usize).clamp(1, samples.len() - 1);
    let x_k = s[k];
    if x_k <= 0.0 {
        return Err(Error::EmptyInput);
    }
    let sum_log: f64 = s[..k].iter().map(|&x| (x / x_k).ln()).sum();
    Ok(k as f64 / sum_log)
}

/// Smallest sample value whose empirical CDF reaches `q`.
pub fn empirical_quantile(sorted: &[f64], q: f64) -> f64 {
    debug_assert!(q > 0.0 && q <= 1.0);
    let m = sorted.len();
    let rank = (q * m as f64).ceil() as usize;
    sorted[rank.clamp(1, m) - 1]
}

/// Sample mean and its standard error.
pub fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let m = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / m;
    if xs.len() < 2 {
        return (mean, f64::NAN);
    }
    let var = xs.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>() / (m - 1.0);
    (mean, (var / m).sqrt())
}

/// Median of a sorted slice (average of the two middles for even length).
pub fn median_sorted(sorted: &[f64]) -> f64 {
    let m = sorted.len();
    if m % 2 == 1 {
        sorted[m / 2]
    } else {
        0.5 * (sorted[m / 2 - 1] + sorted[m / 2])
    }
}

/// Distribution-free dispersion of the sample median: half the spread
/// between the order statistics sqrt(m)/2 ranks either side of the middle
/// (roughly a 68% confidence half-width).
pub fn median_dispersion_sorted(sorted: &[f64]) -> f64 {
    let m = sorted.len();
    let half = ((m as f64).sqrt() * 0.5).ceil() as usize;
    let mid = m / 2;
    let lo = mid.saturating_sub(half);
    let hi = (mid + half).min(m - 1);
    0.5 * (sorted[hi] - sorted[lo])
}

/// Ordinary least squares line `y = slope * x + intercept`; returns
/// `(slope, intercept, r_squared)`.
pub fn ols_line(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return Err(Error::EmptyInput);
    }
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|&x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(&x, &y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateGrid { need: 2, got: 1 });
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = ys.iter().map(|&y| (y - my) * (y - my)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    let r2 = if ss_tot == 0.0 {
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };
    Ok((slope, intercept, r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ks_two_sample_identical_is_zero() {
        let xs = vec![1.0, 2.0, 3.0, 4.0];
        let ys = vec![2.0, 1.0, 4.0, 3.0];
        assert_eq!(ks_statistic_two_sample(&xs, &ys), 0.0);
    }

    #[test]
    fn ks_two_sample_known_values() {
        let xs = vec![1.0, 1.0, 4.0, 4.0];
        let ys = vec![1.0, 1.0, 1.0, 4.0];
        assert_relative_eq!(ks_statistic_two_sample(&xs, &ys), 0.25, epsilon = 1e-12);

        let xs = vec![0.42, 0.24, 0.86, 0.85, 0.82, 0.82, 0.25, 0.78, 0.13, 0.27];
        let ys = vec![0.24, 0.27, 0.87, 0.29, 0.57, 0.44, 0.5, 0.00, 0.56, 0.03];
        assert_relative_eq!(ks_statistic_two_sample(&xs, &ys), 0.4, epsilon = 1e-12);
    }

    #[test]
    fn ks_one_sample_exact_uniform_grid() {
        // Samples at 0.25, 0.5, 0.75, 1.0 against U(0,1): the empirical CDF
        // equals the true CDF at every sample point, so D = 1/m.
        let xs = vec![0.25, 0.5, 0.75, 1.0];
        assert_relative_eq!(ks_statistic_one_sample(&xs, |x| x), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn quantile_picks_smallest_rank() {
        let s = vec![1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(empirical_quantile(&s, 0.2), 1.0);
        assert_eq!(empirical_quantile(&s, 0.21), 2.0);
        assert_eq!(empirical_quantile(&s, 1.0), 5.0);
    }

    #[test]
    fn median_handles_even_and_odd() {
        assert_eq!(median_sorted(&[1.0, 2.0, 3.0]), 2.0);
        assert_eq!(median_sorted(&[1.0, 2.0, 3.0, 4.0]), 2.5);
    }

    #[test]
    fn ols_recovers_exact_line() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| 3.0 * x - 2.0).collect();
        let (slope, intercept, r2) = ols_line(&xs, &ys).unwrap();
        assert_relative_eq!(slope, 3.0, epsilon = 1e-12);
        assert_relative_eq!(intercept, -2.0, epsilon = 1e-12);
        assert_relative_eq!(r2, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn hill_estimates_pareto_tail() {
        // Pareto(alpha): x = u^(-1/alpha) for u uniform in (0, 1].
        let alpha = 2.0;
        let xs: Vec<f64> = (0..50_000)
            .map(|i| {
                let u = crate::seed::unit_open_closed(crate::seed::derive_seed(11, i));
                u.powf(-1.0 / alpha)
            })
            .collect();
        let est = hill_tail_exponent(&xs, 0.01).unwrap();
        assert!((est - alpha).abs() < 0.2, "Hill estimate {est} vs {alpha}");
    }

    #[test]
    fn chi_square_zero_for_exact_match() {
        assert_eq!(chi_square_statistic(&[10, 10], &[10.0, 10.0]), 0.0);
        assert_relative_eq!(
            chi_square_statistic(&[12, 8], &[10.0, 10.0]),
            0.8,
            epsilon = 1e-12
        );
    }
}
