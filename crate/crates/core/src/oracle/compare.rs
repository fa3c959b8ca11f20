use alloc::vec::Vec;

use crate::entropy::OccupancySpectrum;
use crate::numeric::CompensatedSum;
use crate::{Error, Result};

/// Observed and expected frequency of one occupancy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OccupancyDeviation {
    pub occupancy: u64,
    pub empirical: f64,
    pub expected: f64,
    /// `empirical - expected`.
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivergenceReport {
    pub deviations: Vec<OccupancyDeviation>,
    pub max_abs_deviation: f64,
    /// `W * sum (f_obs - f_exp)^2 / f_exp` where `W` is the empirical
    /// spectrum's normalizer (its total count).
    pub chi_square: f64,
}

/// Aligns two normalized spectra on the union of their supports and reports
/// how far the empirical one sits from the theoretical one.
///
/// Occupancies present in `empirical` but absent from `theory` are rejected,
/// since the expected frequency there is zero.
pub fn compare_to_theory(
    empirical: &OccupancySpectrum,
    theory: &OccupancySpectrum,
) -> Result<DivergenceReport> {
    let mut support: Vec<u64> = empirical
        .entries()
        .iter()
        .chain(theory.entries())
        .map(|&(n, _)| n)
        .collect();
    support.sort_unstable();
    support.dedup();
    if support.is_empty() {
        return Err(Error::Empty);
    }

    let mut deviations = Vec::with_capacity(support.len());
    let mut max_abs = 0.0f64;
    let mut chi = CompensatedSum::new();
    for n in support {
        let observed = empirical.frequency(n);
        let expected = theory.frequency(n);
        if expected <= 0.0 {
            return Err(Error::Invalid(alloc::format!(
                "occupancy {n} is observed but has zero expected frequency"
            )));
        }
        let deviation = observed - expected;
        max_abs = max_abs.max(deviation.abs());
        chi.add(deviation * deviation / expected);
        deviations.push(OccupancyDeviation {
            occupancy: n,
            empirical: observed,
            expected,
            deviation,
        });
    }
    Ok(DivergenceReport {
        deviations,
        max_abs_deviation: max_abs,
        chi_square: empirical.normalizer() * chi.value(),
    })
}
