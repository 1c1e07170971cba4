//! Spectral analysis of the memoryless-learner transition matrix.
//!
//! The transition matrix has diagonal entries `a_i` and constant
//! off-diagonal entries `(1 - a_i)/(n - 1)` per row, with row 0 absorbing.
//! Writing `p(x) = x * prod_i (x - x_i)` for the polynomial whose roots are
//! 0 and the gaps, the characteristic polynomial of
//! `B = ((n-1)/n) (I - T)` equals `x p'(x) / n`, so the second-largest
//! eigenvalue of `T` is
//!
//! ```text
//! lambda_* = 1 - n/(n-1) * mu_*
//! ```
//!
//! where `mu_*` is the smallest root of `p'`. That root is bracketed by the
//! harmonic mean `H` of the gaps:
//!
//! ```text
//! H/2 <= (n-1) mu_* <= H
//! ```
//!
//! `mu_*` is found by bisecting the logarithmic derivative
//! `p'/p = 1/mu + sum_i 1/(mu - x_i)`, which is strictly decreasing between
//! consecutive poles. This is O(n) per evaluation and stays stable for n in
//! the millions, unlike coefficient expansion of `p'`.
//!
//! The eigen constant `C` in the success-probability expansion
//! `Q_11(N) = 1 - C lambda_*^N + ...` comes from the left/right eigenvector
//! pair of `lambda_*`, computed by inverse iteration. All linear solves
//! exploit the diagonal-plus-rank-one structure `T = D + u 1^T`, so one
//! iteration costs O(n).

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::LearnerInstance;
use crate::seed::{derive_seed, unit_open_closed};

/// Size cap for the characteristic-polynomial residual check; coefficient
/// expansion beyond this is not numerically trustworthy.
pub const CHAR_POLY_SIZE_CAP: usize = 64;

/// Bisection width for derivative roots, relative to the bracket scale.
const ROOT_TOL_REL: f64 = 1e-14;

/// Minimum eigenvalue separation for the eigen constant to be well defined.
const DEGENERACY_GAP: f64 = 1e-8;

const INVERSE_ITERATION_SHIFT: f64 = 1e-12;
const INVERSE_ITERATION_TOL: f64 = 1e-12;
const INVERSE_ITERATION_MAX: usize = 100;

/// Harmonic mean `(n-1) / sum_i 1/x_i` of the gaps.
pub fn harmonic_mean(gaps: &[f64]) -> Result<f64> {
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
    Ok(gaps.len() as f64 / s)
}

/// Logarithmic derivative `p'/p` at `mu` for `p(x) = x * prod_i (x - x_i)`.
fn log_derivative(gaps: &[f64], mu: f64) -> f64 {
    let mut s = 1.0 / mu;
    for &x in gaps {
        s += 1.0 / (mu - x);
    }
    s
}

/// Bisect the unique zero of the log-derivative inside `(lo, hi)`. The
/// caller guarantees `(lo, hi)` contains no pole, the sign is positive just
/// above `lo` and negative just below `hi`; strict monotonicity between
/// poles then makes plain bisection safe.
fn bisect_log_derivative(gaps: &[f64], mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    debug_assert!(lo < hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // float resolution exhausted
        }
        if log_derivative(gaps, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest root `mu_*` of `p'` for `p(x) = x * prod_i (x - x_i)`.
///
/// The root lies in `(0, min x_i)`: the log-derivative falls from +inf at 0+
/// to -inf at the first pole, so it crosses zero exactly once there.
pub fn smallest_derivative_root(gaps: &[f64]) -> Result<f64> {
    if gaps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut x_min = f64::INFINITY;
    for &x in gaps {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::GapOutOfRange(x));
        }
        x_min = x_min.min(x);
    }
    Ok(bisect_log_derivative(
        gaps,
        0.0,
        x_min,
        ROOT_TOL_REL * x_min,
    ))
}

/// Second-smallest root of `p'`, or `None` when `p'` has a single root
/// (one gap). With `x_(1) <= x_(2)` the two smallest sorted gaps: a tie
/// makes `x_(1)` itself a root of `p'`; otherwise the root sits in
/// `(x_(1), x_(2))`.
pub fn second_smallest_derivative_root(gaps: &[f64]) -> Result<Option<f64>> {
    if gaps.is_empty() {
        return Err(Error::EmptyInput);
    }
    if gaps.len() == 1 {
        return Ok(None);
    }
    let mut sorted = gaps.to_vec();
    for &x in gaps {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::GapOutOfRange(x));
        }
    }
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("gaps are finite"));
    let (x1, x2) = (sorted[0], sorted[1]);
    if x1 == x2 {
        Ok(Some(x1))
    } else {
        Ok(Some(bisect_log_derivative(gaps, x1, x2, ROOT_TOL_REL * x2)))
    }
}

/// Second-largest eigenvalue of the transition matrix, via
/// `lambda_* = 1 - n/(n-1) mu_*`.
pub fn second_eigenvalue(inst: &LearnerInstance) -> f64 {
    let n = inst.n() as f64;
    let mu = smallest_derivative_root(inst.gaps()).expect("instance gaps are validated");
    1.0 - n / (n - 1.0) * mu
}

/// Third-largest eigenvalue (None for n = 2, where the spectrum is
/// `{1, lambda_*}`).
pub fn third_eigenvalue(inst: &LearnerInstance) -> Option<f64> {
    let n = inst.n() as f64;
    second_smallest_derivative_root(inst.gaps())
        .expect("instance gaps are validated")
        .map(|mu2| 1.0 - n / (n - 1.0) * mu2)
}

/// Dense row-stochastic transition matrix of the memoryless learner.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    m: DMatrix<f64>,
}

impl TransitionMatrix {
    pub fn n(&self) -> usize {
        self.m.nrows()
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    /// Largest deviation of a row sum from 1.
    pub fn row_sum_defect(&self) -> f64 {
        (0..self.n())
            .map(|i| (self.m.row(i).sum() - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// Build the transition matrix: `T[i][i] = a_i`, `T[i][j] = (1 - a_i)/(n-1)`
/// off the diagonal. Row 0 is the indicator of the target state.
pub fn build_transition_matrix(inst: &LearnerInstance) -> TransitionMatrix {
    let n = inst.n();
    let a = inst.overlaps();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        let off = (1.0 - a[i]) / (n as f64 - 1.0);
        for j in 0..n {
            m[(i, j)] = if i == j { a[i] } else { off };
        }
    }
    TransitionMatrix { m }
}

/// Coefficients (ascending degree) of `prod_i (x - r_i)`.
///
/// Successive multiplication by monomials: with all roots non-negative the
/// updated terms share a sign, so no cancellation occurs.
fn poly_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![0.0; roots.len() + 1];
    c[0] = 1.0;
    let mut deg = 0;
    for &r in roots {
        deg += 1;
        c[deg] = c[deg - 1];
        for k in (1..deg).rev() {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] *= -r;
    }
    c
}

/// Characteristic polynomial `det(xI - B)` by the Faddeev-LeVerrier
/// recurrence, coefficients ascending.
fn char_poly(b: &DMatrix<f64>) -> Vec<f64> {
    let n = b.nrows();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = DMatrix::<f64>::identity(n, n);
    for k in 1..=n {
        let bm = b * &m;
        let a_k = -bm.trace() / k as f64;
        coeffs[n - k] = a_k;
        if k < n {
            m = bm;
            for i in 0..n {
                m[(i, i)] += a_k;
            }
        }
    }
    coeffs
}

/// Residual of the characteristic-polynomial identity
/// `p_B(x) = x p'(x) / n` with `B = ((n-1)/n)(I - T)`: the largest absolute
/// coefficient difference normalized by the largest coefficient magnitude.
pub fn char_poly_identity_residual(inst: &LearnerInstance) -> Result<f64> {
    let n = inst.n();
    if n > CHAR_POLY_SIZE_CAP {
        return Err(Error::SizeCapExceeded {
            n,
            cap: CHAR_POLY_SIZE_CAP,
        });
    }
    let nf = n as f64;
    let t = build_transition_matrix(inst);
    let scale = (nf - 1.0) / nf;
    let b = (DMatrix::<f64>::identity(n, n) - t.as_matrix()) * scale;
    let p_b = char_poly(&b);

    // x p'(x)/n from the gap roots: coefficient k of x p' is k * p_k.
    let mut roots = vec![0.0];
    roots.extend_from_slice(inst.gaps());
    let p = poly_from_roots(&roots);
    let target: Vec<f64> = (0..=n).map(|k| k as f64 * p[k] / nf).collect();

    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for k in 0..=n {
        num = num.max((p_b[k] - target[k]).abs());
        den = den.max(p_b[k].abs()).max(target[k].abs());
    }
    Ok(num / den)
}

/// Shifted resolvent solves for `T = D + u 1^T` via Sherman-Morrison; both
/// solves are O(n).
struct RankOneResolvent {
    /// 1 / (d_i - sigma)
    inv_diag: Vec<f64>,
    u: Vec<f64>,
}

impl RankOneResolvent {
    /// Solve `(D - sigma I + u 1^T) y = b`.
    fn solve_right(&self, b: &[f64], y: &mut [f64]) {
        let mut s = 0.0;
        let mut denom = 1.0;
        for ((&id, &bi), &ui) in self.inv_diag.iter().zip(b).zip(&self.u) {
            s += id * bi;
            denom += id * ui;
        }
        let f = s / denom;
        for (yi, ((&id, &bi), &ui)) in y.iter_mut().zip(self.inv_diag.iter().zip(b).zip(&self.u)) {
            *yi = id * (bi - ui * f);
        }
    }

    /// Solve `(D - sigma I + 1 u^T) y = b` (the transposed system).
    fn solve_left(&self, b: &[f64], y: &mut [f64]) {
        let mut num = 0.0;
        let mut denom = 1.0;
        for ((&id, &bi), &ui) in self.inv_diag.iter().zip(b).zip(&self.u) {
            num += ui * id * bi;
            denom += ui * id;
        }
        let f = num / denom;
        for (yi, (&id, &bi)) in y.iter_mut().zip(self.inv_diag.iter().zip(b)) {
            *yi = id * (bi - f);
        }
    }
}

/// Normalize in place so the entry of largest magnitude becomes +1.
/// Canonical orientation keeps the iteration deterministic.
fn normalize_inf(v: &mut [f64]) {
    let mut pivot = 0usize;
    for (i, &x) in v.iter().enumerate() {
        if x.abs() > v[pivot].abs() {
            pivot = i;
        }
    }
    let s = v[pivot];
    for x in v.iter_mut() {
        *x /= s;
    }
}

struct StructuredT {
    d: Vec<f64>,
    u: Vec<f64>,
}

impl StructuredT {
    fn from_instance(inst: &LearnerInstance) -> Self {
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

    /// `y = T v`.
    fn apply_right(&self, v: &[f64], y: &mut [f64]) {
        let s: f64 = v.iter().sum();
        for i in 0..v.len() {
            y[i] = self.d[i] * v[i] + self.u[i] * s;
        }
    }

    /// `y = v^T T` viewed as a vector.
    fn apply_left(&self, v: &[f64], y: &mut [f64]) {
        let s: f64 = v.iter().zip(&self.u).map(|(a, b)| a * b).sum();
        for j in 0..v.len() {
            y[j] = self.d[j] * v[j] + s;
        }
    }
}

fn inverse_iterate(
    resolvent: &RankOneResolvent,
    t: &StructuredT,
    lambda: f64,
    left: bool,
) -> Result<Vec<f64>> {
    let n = t.d.len();
    // Generic deterministic start vector.
    let mut v: Vec<f64> = (0..n)
        .map(|i| unit_open_closed(derive_seed(0x001f_1e33_u64, i as u64)) - 0.5)
        .collect();
    normalize_inf(&mut v);
    let mut y = vec![0.0; n];
    // Each iteration shrinks the off-eigenvector error by roughly
    // shift/separation; after the residual tolerance is reached, two more
    // polish steps push the vector to its rounding floor.
    let mut polish = 0u32;
    for _ in 0..INVERSE_ITERATION_MAX {
        if left {
            resolvent.solve_left(&v, &mut y);
        } else {
            resolvent.solve_right(&v, &mut y);
        }
        normalize_inf(&mut y);
        std::mem::swap(&mut v, &mut y);
        // Residual with the canonical inf-norm scaling: |T v - lambda v|.
        if left {
            t.apply_left(&v, &mut y);
        } else {
            t.apply_right(&v, &mut y);
        }
        let resid = v
            .iter()
            .zip(&y)
            .map(|(&vi, &yi)| (yi - lambda * vi).abs())
            .fold(0.0, f64::max);
        if resid <= INVERSE_ITERATION_TOL {
            polish += 1;
            if polish >= 3 {
                return Ok(v);
            }
        }
    }
    Err(Error::EigenvectorNotConverged)
}

/// Eigen constant `C` of the success-probability expansion
/// `Q_11(N) = 1 - C lambda_*^N + O(lambda_3^N)`:
/// `C = -(sum_j v_j) w_1 / n` where `v`, `w` are the right and left
/// eigenvectors of `lambda_*` normalized to `<w, v> = 1`.
///
/// Requires `lambda_*` to be separated from the rest of the spectrum; a
/// near-degenerate pair is reported as an error rather than a garbage value.
pub fn eigen_constant(inst: &LearnerInstance) -> Result<f64> {
    let n = inst.n();
    let nf = n as f64;
    let mu_star = smallest_derivative_root(inst.gaps()).expect("instance gaps are validated");
    let lambda = 1.0 - nf / (nf - 1.0) * mu_star;

    let gap_to_unit = nf / (nf - 1.0) * mu_star;
    let gap_to_third = match second_smallest_derivative_root(inst.gaps())? {
        Some(mu2) => nf / (nf - 1.0) * (mu2 - mu_star),
        None => f64::INFINITY,
    };
    let sep = gap_to_unit.min(gap_to_third);
    if sep < DEGENERACY_GAP {
        return Err(Error::NearDegenerateEigenvalue(sep));
    }

    let t = StructuredT::from_instance(inst);
    let sigma = lambda + INVERSE_ITERATION_SHIFT;
    let resolvent = RankOneResolvent {
        inv_diag: t.d.iter().map(|&d| 1.0 / (d - sigma)).collect(),
        u: t.u.clone(),
    };
    let v = inverse_iterate(&resolvent, &t, lambda, false)?;
    let w = inverse_iterate(&resolvent, &t, lambda, true)?;

    let s: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
    let c = -v.iter().sum::<f64>() * (w[0] / s) / nf;
    if !c.is_finite() {
        return Err(Error::NearDegenerateEigenvalue(sep));
    }
    Ok(c)
}

/// Spectral quantities of one instance, plus the harmonic-mean sandwich
/// checks `H/2 <= (n-1) mu_* <= H` (evaluated with root-finder slack).
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub n: usize,
    pub lambda_star: f64,
    pub mu_star: f64,
    pub harmonic_mean: f64,
    /// None when the second eigenvalue is too close to the rest of the
    /// spectrum for the eigenvector pair to be meaningful.
    pub eigen_constant: Option<f64>,
    pub bound_lo_ok: bool,
    pub bound_hi_ok: bool,
}

pub fn summarize(inst: &LearnerInstance) -> SpectralSummary {
    let n = inst.n();
    let nf = n as f64;
    let mu_star = smallest_derivative_root(inst.gaps()).expect("instance gaps are validated");
    let lambda_star = 1.0 - nf / (nf - 1.0) * mu_star;
    let h = harmonic_mean(inst.gaps()).expect("instance gaps are validated");
    let scaled = (nf - 1.0) * mu_star;
    let slack = (nf - 1.0) * ROOT_TOL_REL * inst.min_gap() + 1e-12 * h;
    SpectralSummary {
        n,
        lambda_star,
        mu_star,
        harmonic_mean: h,
        eigen_constant: eigen_constant(inst).ok(),
        bound_lo_ok: scaled >= 0.5 * h - slack,
        bound_hi_ok: scaled <= h + slack,
    }
}
