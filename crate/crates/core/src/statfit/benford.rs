use super::DigitHistogram;
use crate::entropy::benford_frequency;
use crate::numeric::{chi_square_critical, chi_square_sf, CompensatedSum};
use crate::{Error, Result};

/// Smallest number of counted values a conformance test accepts.
pub const MIN_BENFORD_SAMPLE: u64 = 50;

/// Nine digit classes minus one constraint.
pub const BENFORD_DOF: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatisticKind {
    ChiSquare,
    Mad,
}

/// How a digit histogram is judged against the first-digit law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BenfordCriterion {
    /// Pearson chi-square, conforming when the statistic does not exceed the
    /// critical value at `significance`.
    ChiSquare { significance: f64 },
    /// Mean absolute deviation of digit frequencies, conforming when at most
    /// `threshold`.
    Mad { threshold: f64 },
}

impl BenfordCriterion {
    pub const DEFAULT_SIGNIFICANCE: f64 = 0.01;
    pub const DEFAULT_MAD_THRESHOLD: f64 = 0.012;

    pub fn chi_square() -> Self {
        BenfordCriterion::ChiSquare {
            significance: Self::DEFAULT_SIGNIFICANCE,
        }
    }

    pub fn mad() -> Self {
        BenfordCriterion::Mad {
            threshold: Self::DEFAULT_MAD_THRESHOLD,
        }
    }

    pub fn kind(&self) -> StatisticKind {
        match self {
            BenfordCriterion::ChiSquare { .. } => StatisticKind::ChiSquare,
            BenfordCriterion::Mad { .. } => StatisticKind::Mad,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitReport {
    pub statistic_kind: StatisticKind,
    pub statistic: f64,
    /// Chi-square only.
    pub degrees_of_freedom: Option<u32>,
    /// Critical value (chi-square) or MAD cut-off.
    pub threshold: f64,
    pub significance: Option<f64>,
    pub p_value: Option<f64>,
    pub conforms: bool,
}

/// Expected first-digit frequencies, digit 1 first.
pub fn benford_expected() -> [f64; 9] {
    let mut out = [0.0; 9];
    for (d, o) in (1u8..=9).zip(out.iter_mut()) {
        *o = benford_frequency(d).expect("digit in range");
    }
    out
}

/// Tests a digit histogram against `log10(1 + 1/d)`.
pub fn benford_test(hist: &DigitHistogram, criterion: BenfordCriterion) -> Result<FitReport> {
    let total = hist.total();
    if total < MIN_BENFORD_SAMPLE {
        return Err(Error::TooFewValues {
            got: total,
            need: MIN_BENFORD_SAMPLE,
        });
    }
    let expected = benford_expected();
    let counts = hist.counts();
    let n = total as f64;
    match criterion {
        BenfordCriterion::ChiSquare { significance } => {
            let critical = chi_square_critical(significance, BENFORD_DOF)?;
            let mut stat = CompensatedSum::new();
            for (&c, &p) in counts.iter().zip(&expected) {
                let e = n * p;
                let d = c as f64 - e;
                stat.add(d * d / e);
            }
            let statistic = stat.value();
            Ok(FitReport {
                statistic_kind: StatisticKind::ChiSquare,
                statistic,
                degrees_of_freedom: Some(BENFORD_DOF),
                threshold: critical,
                significance: Some(significance),
                p_value: Some(chi_square_sf(statistic, BENFORD_DOF)),
                conforms: statistic <= critical,
            })
        }
        BenfordCriterion::Mad { threshold } => {
            if !(threshold > 0.0 && threshold.is_finite()) {
                return Err(Error::domain("MAD threshold", "positive", threshold));
            }
            let mut sum = CompensatedSum::new();
            for (&c, &p) in counts.iter().zip(&expected) {
                sum.add((c as f64 / n - p).abs());
            }
            let statistic = sum.value() / 9.0;
            Ok(FitReport {
                statistic_kind: StatisticKind::Mad,
                statistic,
                degrees_of_freedom: None,
                threshold,
                significance: None,
                p_value: None,
                conforms: statistic <= threshold,
            })
        }
    }
}
