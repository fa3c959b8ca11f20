use alloc::vec::Vec;

use crate::entropy::RankDistribution;
use crate::numeric::{least_squares, LineFit};
use crate::{Error, Result};

/// Ranges spanning at least this many ranks are fitted on a log-spaced
/// subsample rather than every rank.
pub const SUBSAMPLE_THRESHOLD: u64 = 100_000;
/// Subsample size used above [`SUBSAMPLE_THRESHOLD`].
pub const SUBSAMPLE_POINTS: usize = 1000;

/// Inclusive rank interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FitRange {
    pub min_rank: u64,
    pub max_rank: u64,
}

impl FitRange {
    pub fn new(min_rank: u64, max_rank: u64) -> Self {
        Self { min_rank, max_rank }
    }

    pub fn span(&self) -> u64 {
        self.max_rank.saturating_sub(self.min_rank) + 1
    }
}

/// Least-squares line through `(ln r, ln f(r))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub fit_range: FitRange,
    /// Number of ranks that entered the regression.
    pub points: usize,
}

/// Up to `count` distinct integers from `min..=max`, spaced evenly in
/// `ln r` and always including both ends.
pub fn log_spaced_ranks(min: u64, max: u64, count: usize) -> Vec<u64> {
    if min > max || count == 0 {
        return Vec::new();
    }
    if count == 1 || min == max {
        return alloc::vec![min];
    }
    let lo = libm::log(min as f64);
    let hi = libm::log(max as f64);
    let mut out: Vec<u64> = (0..count)
        .map(|i| {
            let t = lo + (hi - lo) * i as f64 / (count - 1) as f64;
            (libm::round(libm::exp(t)) as u64).clamp(min, max)
        })
        .collect();
    out[0] = min;
    out[count - 1] = max;
    out.dedup();
    out
}

/// Picks up to `count` points from `points` (sorted by ascending positive
/// `x`) nearest to log-spaced targets, without repeats.
pub fn log_spaced_subsample(points: &[(f64, f64)], count: usize) -> Vec<(f64, f64)> {
    if points.len() <= count || count < 2 {
        return points.to_vec();
    }
    let lo = libm::log(points[0].0);
    let hi = libm::log(points[points.len() - 1].0);
    let mut out = Vec::with_capacity(count);
    let mut last: Option<usize> = None;
    for i in 0..count {
        let target = libm::exp(lo + (hi - lo) * i as f64 / (count - 1) as f64);
        let idx = points
            .partition_point(|p| p.0 < target)
            .min(points.len() - 1);
        if last != Some(idx) {
            out.push(points[idx]);
            last = Some(idx);
        }
    }
    out
}

/// Regresses `ln y` on `ln x`. Every point needs `x > 0` and `y > 0`, and
/// at least three points are required.
pub fn loglog_fit_points(points: &[(f64, f64)]) -> Result<LineFit> {
    if points.len() < 3 {
        return Err(Error::TooFewValues {
            got: points.len() as u64,
            need: 3,
        });
    }
    let logs: Vec<(f64, f64)> = points
        .iter()
        .map(|&(x, y)| {
            if !(x > 0.0) {
                return Err(Error::domain("x", "positive", x));
            }
            if !(y > 0.0) {
                return Err(Error::domain("frequency", "positive", y));
            }
            Ok((libm::log(x), libm::log(y)))
        })
        .collect::<Result<_>>()?;
    least_squares(&logs)
}

/// Upper-half slope minus lower-half slope (halves split at the median of
/// `ln x`). Near zero for a straight log-log line; `None` when either half
/// has fewer than three points.
pub fn loglog_curvature(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 6 {
        return None;
    }
    let mid = points.len() / 2;
    let lower = loglog_fit_points(&points[..mid]).ok()?;
    let upper = loglog_fit_points(&points[mid..]).ok()?;
    Some(upper.slope - lower.slope)
}

/// Fits `ln f(r)` against `ln r` over `range`. Spans of at least
/// [`SUBSAMPLE_THRESHOLD`] ranks use [`SUBSAMPLE_POINTS`] log-spaced ranks.
pub fn loglog_slope_fit(dist: &RankDistribution, range: FitRange) -> Result<SlopeFit> {
    if range.min_rank == 0 || range.min_rank > range.max_rank || range.max_rank > dist.max_rank() {
        return Err(Error::Invalid(alloc::format!(
            "fit range {}..={} is not inside ranks 1..={}",
            range.min_rank,
            range.max_rank,
            dist.max_rank()
        )));
    }
    let ranks: Vec<u64> = if range.span() >= SUBSAMPLE_THRESHOLD {
        log_spaced_ranks(range.min_rank, range.max_rank, SUBSAMPLE_POINTS)
    } else {
        (range.min_rank..=range.max_rank).collect()
    };
    let points: Vec<(f64, f64)> = ranks
        .iter()
        .map(|&r| (r as f64, dist.frequency(r).unwrap_or(0.0)))
        .collect();
    let fit = loglog_fit_points(&points)?;
    Ok(SlopeFit {
        slope: fit.slope,
        intercept: fit.intercept,
        r_squared: fit.r_squared,
        fit_range: range,
        points: points.len(),
    })
}

/// `f(n) / f(2n)`; equals 2 under an exact `1/r` law.
pub fn zipf_check(dist: &RankDistribution, n: u64) -> Result<f64> {
    let double = n
        .checked_mul(2)
        .ok_or_else(|| Error::Invalid("rank overflow".into()))?;
    let (Some(f_n), Some(f_2n)) = (dist.frequency(n), dist.frequency(double)) else {
        return Err(Error::Invalid(alloc::format!(
            "ranks {n} and {double} must lie in 1..={}",
            dist.max_rank()
        )));
    };
    if f_2n <= 0.0 {
        return Err(Error::domain("f(2n)", "positive", f_2n));
    }
    Ok(f_n / f_2n)
}
