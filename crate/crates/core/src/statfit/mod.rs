//! Empirical checks against the closed forms: first-digit histograms with
//! chi-square / MAD conformance tests, token rank-frequency tables, and
//! log-log slope fits.

mod benford;
mod digits;
mod slope;
mod tokens;

pub use benford::{
    benford_expected, benford_test, BenfordCriterion, FitReport, StatisticKind, BENFORD_DOF,
    MIN_BENFORD_SAMPLE,
};
pub use digits::{
    digit_histogram, first_significant_digit, first_significant_digit_str, parse_number,
    DigitHistogram, ParsedNumber,
};
pub use slope::{
    log_spaced_ranks, log_spaced_subsample, loglog_curvature, loglog_fit_points, loglog_slope_fit,
    zipf_check, FitRange, SlopeFit, SUBSAMPLE_POINTS, SUBSAMPLE_THRESHOLD,
};
pub use tokens::{rank_frequency_of_tokens, TokenCounts, TokenRanking};
